#include <functional>
#include <map>

#include "solver_util.hpp"
#include "tww/errors.hpp"
#include "tww/oracles.hpp"
#include "tww/solvers.hpp"

namespace tww {

using detail::Level;
using detail::rmax;
using detail::union_of;

namespace {

StarsOut sub_call(Driver& drv, const StarForestInstance& inst, const std::vector<int>& vertices,
                  const std::function<bool(const Edge&)>& keep, Source src, int depth) {
  auto sub = induced_subtrigraph(inst.graph, vertices);
  std::vector<int> local(inst.graph.n(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<int>(i);
  StarForestInstance child{std::move(sub.graph), {}, {}};
  for (int v : vertices) child.weight.push_back(inst.weight[v]);
  for (const auto& e : inst.y)
    if (local[e.first] >= 0 && local[e.second] >= 0 && keep(e)) child.y.insert(normalized(local[e.first], local[e.second]));
  if (child.y.empty()) return {{}, 0, 1};
  StarsOut out = solve_mlisf(drv, child, src, depth);
  for (auto& s : out.stars) {
    s.root = vertices[s.root];
    for (int& l : s.leaves) l = vertices[l];
    std::sort(s.leaves.begin(), s.leaves.end());
  }
  return out;
}

void append(std::vector<Star>& into, const std::vector<Star>& from) { into.insert(into.end(), from.begin(), from.end()); }

struct Branch {
  std::vector<Star> stars;
  Rational factor = 1;
};

}  // namespace

StarsOut solve_mlisf(Driver& drv, const StarForestInstance& inst, const Source& src, int depth) {
  const Graph& g = inst.graph;
  const int n = g.n();
  drv.enter(depth, n, src);
  if (n == 0 || inst.y.empty()) return {{}, 0, 1};
  if (drv.is_base(n, depth)) {
    drv.record_base(depth, n);
    auto sol = exact_mlisf(inst, drv.config().oracle);
    return {std::move(sol.stars), sol.value, 1};
  }
  const Level lv = detail::make_level(drv, g, src, depth);
  const auto& part_of = lv.bp.partition.part_of;
  const auto& parts = lv.bp.partition.parts;
  const Trigraph& quo = lv.quotient;
  const int k = lv.bp.partition.size();

  // Prescribed cross edges per part pair.
  std::map<Edge, int> cross_y;
  for (const auto& e : inst.y) {
    const int a = part_of[e.first], b = part_of[e.second];
    if (a != b) ++cross_y[normalized(a, b)];
  }
  auto y_complete = [&](int a, int b) {
    auto it = cross_y.find(normalized(a, b));
    const long long full = static_cast<long long>(parts[a].size()) * static_cast<long long>(parts[b].size());
    return it != cross_y.end() && it->second == full;
  };

  // Stars inside parts.
  Branch av;
  {
    std::vector<StarsOut> inside(k);
    Rational r1 = 1, r_pack = 1;
    bool any = false;
    for (int i = 0; i < k; ++i) {
      inside[i] = sub_call(drv, inst, parts[i], [&](const Edge& e) { return part_of[e.first] == i && part_of[e.second] == i; },
                           induced_source(lv.bp, parts[i], n), depth + 1);
      r1 = rmax(r1, inside[i].bound);
      any = any || !inside[i].stars.empty();
    }
    if (any) {
      Rational best = -1;
      for (const auto& cls : lv.classes) {
        auto h = induced_subtrigraph(quo, cls);
        WmisInstance hj{std::move(h.graph), {}};
        for (int p : cls) hj.weight.push_back(inside[p].value);
        const MisOut pick = solve_mis(drv, hj, quotient_source(lv.bp, cls, n), depth + 1);
        r_pack = rmax(r_pack, pick.bound);
        std::vector<Star> cand;
        for (int local : pick.set) append(cand, inside[cls[local]].stars);
        const Rational val = star_forest_value(inst, cand);
        if (val > best) {
          best = val;
          av.stars = std::move(cand);
        }
      }
      av.factor = Rational(static_cast<int>(lv.classes.size())) * r1 * r_pack;
    }
  }

  // Stars across red pairs and across black pairs that are not fully prescribed.
  Branch ar;
  {
    Trigraph augmented(k);
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b)
        if (quo.red(a, b) || (quo.black(a, b) && !y_complete(a, b))) augmented.add_black(a, b);
    const EdgeColoring ec = distance2_edge_coloring(augmented);
    std::map<Edge, StarsOut> cross;
    Rational r_b = 1, r_m = 1;
    for (const auto& e : ec.edges) {
      const auto [i, j] = e;
      if (!cross_y.count(e)) continue;
      const auto vertices = union_of(lv.bp.partition, {i, j});
      auto s = sub_call(drv, inst, vertices,
                        [&](const Edge& f) {
                          const int a = part_of[f.first], b = part_of[f.second];
                          return (a == i && b == j) || (a == j && b == i);
                        },
                        induced_source(lv.bp, vertices, n), depth + 1);
      r_b = rmax(r_b, s.bound);
      if (!s.stars.empty()) cross.emplace(e, std::move(s));
    }
    if (!cross.empty()) {
      Rational best = -1;
      for (int h = 0; h < ec.colors; ++h) {
        std::vector<Edge> class_pairs;
        std::vector<int> xs;
        for (std::size_t t = 0; t < ec.edges.size(); ++t)
          if (ec.color[t] == h && cross.count(ec.edges[t])) {
            class_pairs.push_back(ec.edges[t]);
            xs.push_back(ec.edges[t].first);
            xs.push_back(ec.edges[t].second);
          }
        if (class_pairs.empty()) continue;
        std::sort(xs.begin(), xs.end());
        auto sub = induced_subtrigraph(quo, xs);
        std::vector<int> local(k, -1);
        for (std::size_t t = 0; t < xs.size(); ++t) local[xs[t]] = static_cast<int>(t);
        MsimInstance hh{total_graph(sub.graph), {}};
        for (const auto& e : class_pairs) hh.y_weight[normalized(local[e.first], local[e.second])] = cross.at(e).value;
        const MatchingOut pick = solve_msim(drv, hh, quotient_source(lv.bp, xs, n), depth + 1);
        r_m = rmax(r_m, pick.bound);
        std::vector<Star> cand;
        for (const auto& e : pick.edges) append(cand, cross.at(normalized(xs[e.first], xs[e.second])).stars);
        const Rational val = star_forest_value(inst, cand);
        if (val > best) {
          best = val;
          ar.stars = std::move(cand);
        }
      }
      ar.factor = Rational(ec.colors) * r_b * r_m;
    }
  }

  // Stars across fully prescribed black pairs: a star forest of parts, leaves realised by independent sets.
  Branch ab;
  {
    StarForestInstance gq{black_graph(quo), {}, {}};
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b)
        if (quo.black(a, b) && y_complete(a, b)) gq.y.insert({a, b});
    if (!gq.y.empty()) {
      std::vector<MisOut> indep(k);
      Rational r_i = 1;
      for (int i = 0; i < k; ++i) {
        auto sub = induced_subtrigraph(g, parts[i]);
        WmisInstance child{std::move(sub.graph), {}};
        for (int v : parts[i]) child.weight.push_back(inst.weight[v]);
        indep[i] = solve_mis(drv, child, induced_source(lv.bp, parts[i], n), depth + 1);
        indep[i].set = detail::lift_ids(indep[i].set, parts[i]);
        r_i = rmax(r_i, indep[i].bound);
        gq.weight.push_back(indep[i].value);
      }
      const StarsOut sel = solve_mlisf(drv, gq, quotient_source(lv.bp, detail::iota_vec(k), n), depth + 1);
      std::vector<Edge> items;  // (root part, leaf part)
      for (const auto& s : sel.stars)
        for (int l : s.leaves) items.push_back({s.root, l});
      const int m = static_cast<int>(items.size());
      Trigraph conflict(m);
      for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
          bool hit = false;
          for (int x : {items[a].first, items[a].second})
            for (int y : {items[b].first, items[b].second}) hit = hit || quo.red(x, y);
          if (hit) conflict.add_black(a, b);
        }
      const auto classes = color_classes(greedy_degeneracy_coloring(conflict));
      Rational best = -1;
      for (const auto& cls : classes) {
        std::map<int, std::vector<int>> leaves;
        for (int a : cls) {
          const auto& s = indep[items[a].second].set;
          auto& into = leaves[items[a].first];
          into.insert(into.end(), s.begin(), s.end());
        }
        std::vector<Star> cand;
        for (auto& [root_part, ls] : leaves) {
          if (ls.empty()) continue;
          std::sort(ls.begin(), ls.end());
          cand.push_back({parts[root_part].front(), ls});
        }
        const Rational val = star_forest_value(inst, cand);
        if (val > best) {
          best = val;
          ab.stars = std::move(cand);
        }
      }
      ab.factor = Rational(std::max<int>(1, static_cast<int>(classes.size()))) * r_i * sel.bound;
    }
  }

  StarsOut out;
  Rational worst = 1;
  bool have = false;
  for (Branch* b : {&av, &ar, &ab}) {
    worst = rmax(worst, b->factor);
    std::sort(b->stars.begin(), b->stars.end(), [](const Star& x, const Star& y) { return x.root < y.root; });
    const Rational val = star_forest_value(inst, b->stars);
    if (!have || val > out.value) {
      out.stars = b->stars;
      out.value = val;
      have = true;
    }
  }
  out.bound = 3 * worst;
  return out;
}

namespace {

void validate(const StarForestInstance& inst) {
  if (static_cast<int>(inst.weight.size()) != inst.graph.n()) throw InputError("weight vector does not match n");
  for (const auto& e : inst.y)
    if (!inst.graph.adjacent(e.first, e.second)) throw InputError("prescribed pair is not an edge");
}

Rational level_factor(int d) { return Rational(3 * std::max({d + 1, 2 * (d - 1) * d + 1, 2 * d + 1})); }

}  // namespace

ApproxResult approx_mlisf(const StarForestInstance& inst, const ContractionSequence& seq, const SolverConfig& cfg) {
  validate(inst);
  detail::require_graph_input(inst.graph, seq);
  Driver drv(cfg);
  Source root;
  root.seq = &seq;
  drv.select_depth(inst.graph, root, level_factor);
  StarsOut out = solve_mlisf(drv, inst, root, 0);
  if (auto err = check_star_forest(inst, out.stars); !err.empty())
    throw CertificateViolation("star forest infeasible: " + err);
  drv.finish();
  ApproxResult res;
  res.problem = "mlisf";
  res.n = inst.graph.n();
  res.value = star_forest_value(inst, out.stars);
  res.solution = std::move(out.stars);
  res.certified_bound = out.bound;
  res.trace = drv.trace();
  return res;
}

ApproxResult approx_mief(const StarForestInstance& inst, const ContractionSequence& seq, const SolverConfig& cfg) {
  validate(inst);
  detail::require_graph_input(inst.graph, seq);
  StarForestInstance unit = inst;
  unit.weight.assign(inst.graph.n(), 1);
  Driver drv(cfg);
  Source root;
  root.seq = &seq;
  drv.select_depth(unit.graph, root, [](int d) { return 3 * level_factor(d); });
  const int n = inst.graph.n();
  std::vector<int> vertices;
  Rational bound = 1;
  if (drv.is_base(n, 0)) {
    drv.enter(0, n, root);
    drv.record_base(0, n);
    vertices = exact_mief(inst, cfg.oracle).vertices;
  } else {
    StarsOut out = solve_mlisf(drv, unit, root, 0);
    for (const auto& s : out.stars) {
      vertices.push_back(s.root);
      vertices.insert(vertices.end(), s.leaves.begin(), s.leaves.end());
    }
    bound = 3 * out.bound;
  }
  std::sort(vertices.begin(), vertices.end());
  if (auto err = check_induced_forest(inst, vertices); !err.empty())
    throw CertificateViolation("induced forest infeasible: " + err);
  drv.finish();
  ApproxResult res;
  res.problem = "mief";
  res.n = n;
  res.value = induced_edge_count(inst.graph, vertices);
  res.solution = std::move(vertices);
  res.certified_bound = bound;
  res.trace = drv.trace();
  return res;
}

}  // namespace tww
