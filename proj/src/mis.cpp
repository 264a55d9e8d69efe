#include <map>

#include "solver_util.hpp"
#include "tww/errors.hpp"
#include "tww/oracles.hpp"
#include "tww/solvers.hpp"

namespace tww {

using detail::Level;
using detail::lift_ids;
using detail::rmax;
using detail::union_of;

namespace {

MisOut solve_sub(Driver& drv, const WmisInstance& inst, const std::vector<int>& vertices, Source src, int depth) {
  auto sub = induced_subtrigraph(inst.graph, vertices);
  WmisInstance child{std::move(sub.graph), {}};
  for (int v : vertices) child.weight.push_back(inst.weight[v]);
  MisOut out = solve_mis(drv, child, src, depth);
  out.set = lift_ids(out.set, vertices);
  return out;
}

// Clustered variant: few colours, small monochromatic components, exact packing per class.
std::optional<MisOut> clustered(Driver& drv, const WmisInstance& inst, const Level& lv, int depth) {
  const Graph& g = inst.graph;
  const auto& cfg = drv.config();
  const Trigraph red = red_graph(lv.quotient);
  const int colors = (red.max_degree() + 2 + 2) / 3;
  const auto coloring = clustered_coloring(red, std::max(1, colors), cfg.cluster_cap);
  if (!coloring) return std::nullopt;

  MisOut best;
  Rational r_sub = 1;
  const auto classes = color_classes(*coloring);
  for (const auto& cls : classes) {
    // Components of the class inside the red graph.
    std::vector<std::vector<int>> comps;
    std::vector<int> seen(lv.quotient.n(), 0);
    for (int p : cls) {
      if (seen[p]) continue;
      std::vector<int> comp, stack{p};
      seen[p] = 1;
      while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        comp.push_back(x);
        for (int y : cls)
          if (!seen[y] && red.adjacent(x, y)) {
            seen[y] = 1;
            stack.push_back(y);
          }
      }
      std::sort(comp.begin(), comp.end());
      comps.push_back(comp);
    }
    struct Item {
      int comp;
      std::vector<int> parts;
      std::vector<int> set;
      Rational value;
    };
    std::vector<Item> items;
    for (int c = 0; c < static_cast<int>(comps.size()); ++c) {
      const auto& comp = comps[c];
      for (unsigned mask = 1; mask < (1u << comp.size()); ++mask) {
        std::vector<int> parts;
        for (std::size_t i = 0; i < comp.size(); ++i)
          if (mask >> i & 1) parts.push_back(comp[i]);
        const auto vertices = union_of(lv.bp.partition, parts);
        auto sub = solve_sub(drv, inst, vertices, induced_source(lv.bp, vertices, g.n()), depth + 1);
        r_sub = rmax(r_sub, sub.bound);
        items.push_back({c, parts, std::move(sub.set), sub.value});
      }
    }
    const int m = static_cast<int>(items.size());
    std::vector<Bits> adj(m, Bits(m));
    std::vector<Rational> w(m);
    for (int a = 0; a < m; ++a) {
      w[a] = items[a].value;
      for (int b = a + 1; b < m; ++b) {
        bool conflict = items[a].comp == items[b].comp;
        for (int x : items[a].parts)
          for (int y : items[b].parts) conflict = conflict || lv.quotient.black(x, y);
        if (conflict) {
          adj[a].set(b);
          adj[b].set(a);
        }
      }
    }
    const auto pick = max_weight_independent_set(adj, w, cfg.oracle.budget);
    MisOut cand;
    for (int a : pick.set) cand.set.insert(cand.set.end(), items[a].set.begin(), items[a].set.end());
    std::sort(cand.set.begin(), cand.set.end());
    cand.value = mis_value(inst, cand.set);
    if (cand.value > best.value || best.set.empty()) best = std::move(cand);
  }
  best.bound = Rational(static_cast<int>(classes.size())) * r_sub;
  return best;
}

}  // namespace

MisOut solve_mis(Driver& drv, const WmisInstance& inst, const Source& src, int depth) {
  const Graph& g = inst.graph;
  const int n = g.n();
  drv.enter(depth, n, src);
  if (n == 0) return {};
  if (drv.is_base(n, depth)) {
    drv.record_base(depth, n);
    auto sol = exact_mis(inst, drv.config().oracle);
    return {std::move(sol.set), sol.value, 1};
  }
  const Level lv = detail::make_level(drv, g, src, depth);

  if (drv.config().clustered) {
    if (auto out = clustered(drv, inst, lv, depth)) return *out;
    drv.record_clustered_fallback();
  }

  const int k = lv.bp.partition.size();
  std::vector<MisOut> part_sol(k);
  Rational r_parts = 1, r_quot = 1;
  for (int i = 0; i < k; ++i) {
    const auto& part = lv.bp.partition.parts[i];
    part_sol[i] = solve_sub(drv, inst, part, induced_source(lv.bp, part, n), depth + 1);
    r_parts = rmax(r_parts, part_sol[i].bound);
  }

  MisOut best;
  bool have = false;
  for (const auto& cls : lv.classes) {
    auto h = induced_subtrigraph(lv.quotient, cls);
    WmisInstance hj{std::move(h.graph), {}};
    for (int p : cls) hj.weight.push_back(part_sol[p].value);
    const MisOut pick = solve_mis(drv, hj, quotient_source(lv.bp, cls, n), depth + 1);
    r_quot = rmax(r_quot, pick.bound);
    MisOut cand;
    for (int local : pick.set) {
      const auto& s = part_sol[cls[local]].set;
      cand.set.insert(cand.set.end(), s.begin(), s.end());
    }
    std::sort(cand.set.begin(), cand.set.end());
    cand.value = mis_value(inst, cand.set);
    if (!have || cand.value > best.value) {
      best = std::move(cand);
      have = true;
    }
  }
  best.bound = Rational(static_cast<int>(lv.classes.size())) * r_parts * r_quot;
  return best;
}

ApproxResult approx_mis(const WmisInstance& inst, const ContractionSequence& seq, const SolverConfig& cfg) {
  detail::require_graph_input(inst.graph, seq);
  if (static_cast<int>(inst.weight.size()) != inst.graph.n()) throw InputError("weight vector does not match n");
  Driver drv(cfg);
  Source root;
  root.seq = &seq;
  drv.select_depth(inst.graph, root, [&](int d) {
    return cfg.clustered ? Rational((d + 4) / 3) : Rational(d + 1);
  });
  MisOut out = solve_mis(drv, inst, root, 0);
  if (auto err = check_independent(inst.graph, out.set); !err.empty())
    throw CertificateViolation("mis solution infeasible: " + err);
  drv.finish();
  ApproxResult res;
  res.problem = "mis";
  res.n = inst.graph.n();
  res.value = mis_value(inst, out.set);
  res.solution = std::move(out.set);
  res.certified_bound = out.bound;
  res.trace = drv.trace();
  return res;
}

}  // namespace tww
