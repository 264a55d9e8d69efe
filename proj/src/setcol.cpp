#include <map>
#include <set>

#include "solver_util.hpp"
#include "tww/errors.hpp"
#include "tww/oracles.hpp"
#include "tww/solvers.hpp"

namespace tww {

using detail::Level;
using detail::rmax;

namespace {

// Renumbers colours to 0..k-1 in increasing order of their ids.
int compact(PaletteAssignment& palettes) {
  std::map<int, int> index;
  for (const auto& p : palettes)
    for (int c : p) index.emplace(c, 0);
  int next = 0;
  for (auto& [c, id] : index) id = next++;
  for (auto& p : palettes)
    for (int& c : p) c = index[c];
  return next;
}

}  // namespace

PaletteAssignment lift_coloring(const VertexPartition& partition, const PaletteAssignment& part_palettes,
                                const std::vector<PaletteAssignment>& local) {
  int n = 0;
  for (const auto& part : partition.parts) n += static_cast<int>(part.size());
  PaletteAssignment out(n);
  for (int i = 0; i < partition.size(); ++i) {
    const auto& target = part_palettes[i];  // sorted
    const auto& part = partition.parts[i];
    for (std::size_t j = 0; j < part.size(); ++j) {
      std::vector<int> lifted;
      for (int x : local[i][j]) {
        if (x < 0 || x >= static_cast<int>(target.size()))
          throw CertificateViolation("lift_coloring: part palette smaller than the local colour count");
        lifted.push_back(target[x]);
      }
      std::sort(lifted.begin(), lifted.end());
      out[part[j]] = std::move(lifted);
    }
  }
  return out;
}

ColoringOut solve_set_coloring(Driver& drv, const SetColoringInstance& inst, const Source& src, int depth) {
  const Graph& g = inst.graph;
  const int n = g.n();
  drv.enter(depth, n, src);
  if (n == 0) return {};
  if (drv.is_base(n, depth)) {
    drv.record_base(depth, n);
    auto sol = exact_set_coloring(inst, drv.config().oracle);
    return {std::move(sol.palettes), sol.colors, 1};
  }
  const Level lv = detail::make_level(drv, g, src, depth);
  const int k = lv.bp.partition.size();

  std::vector<PaletteAssignment> local(k);
  std::vector<int> used(k);
  Rational r_parts = 1, r_quot = 1;
  for (int i = 0; i < k; ++i) {
    const auto& part = lv.bp.partition.parts[i];
    auto sub = induced_subtrigraph(g, part);
    SetColoringInstance child{std::move(sub.graph), {}};
    for (int v : part) child.demand.push_back(inst.demand[v]);
    ColoringOut c = solve_set_coloring(drv, child, induced_source(lv.bp, part, n), depth + 1);
    r_parts = rmax(r_parts, c.bound);
    used[i] = compact(c.palettes);
    local[i] = std::move(c.palettes);
  }

  PaletteAssignment part_palettes(k);
  int offset = 0;
  for (const auto& cls : lv.classes) {
    auto h = induced_subtrigraph(lv.quotient, cls);
    SetColoringInstance hj{std::move(h.graph), {}};
    for (int p : cls) hj.demand.push_back(used[p]);
    ColoringOut c = solve_set_coloring(drv, hj, quotient_source(lv.bp, cls, n), depth + 1);
    r_quot = rmax(r_quot, c.bound);
    const int span = compact(c.palettes);
    for (std::size_t j = 0; j < cls.size(); ++j) {
      for (int& x : c.palettes[j]) x += offset;
      part_palettes[cls[j]] = std::move(c.palettes[j]);
    }
    offset += span;
  }

  ColoringOut out;
  out.palettes = lift_coloring(lv.bp.partition, part_palettes, local);
  out.colors = color_count(out.palettes);
  // Part ratio rounded up.
  const BigInt ceil_parts = (numerator(r_parts) + denominator(r_parts) - 1) / denominator(r_parts);
  out.bound = Rational(static_cast<int>(lv.classes.size())) * Rational(ceil_parts) * r_quot;
  return out;
}

ApproxResult approx_set_coloring(const SetColoringInstance& inst, const ContractionSequence& seq,
                                 const SolverConfig& cfg) {
  detail::require_graph_input(inst.graph, seq);
  if (static_cast<int>(inst.demand.size()) != inst.graph.n()) throw InputError("demand vector does not match n");
  for (int b : inst.demand)
    if (b < 1) throw InputError("demands must be positive");
  Driver drv(cfg);
  Source root;
  root.seq = &seq;
  drv.select_depth(inst.graph, root, [](int d) { return Rational(d + 1); });
  ColoringOut out = solve_set_coloring(drv, inst, root, 0);
  if (auto err = check_set_coloring(inst.graph, inst.demand, out.palettes); !err.empty())
    throw CertificateViolation("set colouring infeasible: " + err);
  drv.finish();
  ApproxResult res;
  res.problem = "setcol";
  res.n = inst.graph.n();
  res.value = color_count(out.palettes);
  res.solution = std::move(out.palettes);
  res.certified_bound = out.bound;
  res.trace = drv.trace();
  return res;
}

}  // namespace tww
