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

MatchingOut lift(MatchingOut out, const std::vector<int>& vertices) {
  for (auto& e : out.edges) e = normalized(vertices[e.first], vertices[e.second]);
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

// Matching subcall on G[vertices] keeping the prescribed edges accepted by `keep`.
MatchingOut sub_call(Driver& drv, const MsimInstance& inst, const std::vector<int>& vertices,
                     const std::function<bool(const Edge&)>& keep, Source src, int depth) {
  auto sub = induced_subtrigraph(inst.graph, vertices);
  std::vector<int> local(inst.graph.n(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<int>(i);
  MsimInstance child{std::move(sub.graph), {}};
  for (const auto& [e, w] : inst.y_weight)
    if (local[e.first] >= 0 && local[e.second] >= 0 && keep(e))
      child.y_weight[normalized(local[e.first], local[e.second])] = w;
  if (child.y_weight.empty()) return {{}, 0, 1};
  return lift(solve_msim(drv, child, src, depth), vertices);
}

struct Branch {
  std::vector<Edge> edges;
  Rational factor = 1;
};

}  // namespace

MatchingOut solve_msim(Driver& drv, const MsimInstance& inst, const Source& src, int depth) {
  const Graph& g = inst.graph;
  const int n = g.n();
  drv.enter(depth, n, src);
  if (n == 0 || inst.y_weight.empty()) return {{}, 0, 1};
  if (drv.is_base(n, depth)) {
    drv.record_base(depth, n);
    auto sol = exact_msim(inst, drv.config().oracle);
    return {std::move(sol.edges), sol.value, 1};
  }
  const Level lv = detail::make_level(drv, g, src, depth);
  const auto& part_of = lv.bp.partition.part_of;
  const auto& parts = lv.bp.partition.parts;
  const Trigraph& quo = lv.quotient;
  const int k = lv.bp.partition.size();

  // Vertex branch: matchings inside parts, packed per colour class.
  Branch nv;
  {
    std::vector<MatchingOut> inside(k);
    Rational r1 = 1, r_pack = 1;
    bool any = false;
    for (int i = 0; i < k; ++i) {
      inside[i] = sub_call(drv, inst, parts[i], [&](const Edge& e) { return part_of[e.first] == i && part_of[e.second] == i; },
                           induced_source(lv.bp, parts[i], n), depth + 1);
      r1 = rmax(r1, inside[i].bound);
      any = any || !inside[i].edges.empty();
    }
    if (any) {
      Rational best = -1;
      for (const auto& cls : lv.classes) {
        auto h = induced_subtrigraph(quo, cls);
        WmisInstance hj{std::move(h.graph), {}};
        for (int p : cls) hj.weight.push_back(inside[p].value);
        const MisOut pick = solve_mis(drv, hj, quotient_source(lv.bp, cls, n), depth + 1);
        r_pack = rmax(r_pack, pick.bound);
        std::vector<Edge> cand;
        for (int local : pick.set) cand.insert(cand.end(), inside[cls[local]].edges.begin(), inside[cls[local]].edges.end());
        const Rational val = matching_value(inst, cand);
        if (val > best) {
          best = val;
          nv.edges = std::move(cand);
        }
      }
      nv.factor = Rational(static_cast<int>(lv.classes.size())) * r1 * r_pack;
    }
  }

  // Red branch: cross matchings of red pairs, packed per distance-2 colour class.
  Branch nr;
  {
    const Trigraph red = red_graph(quo);
    const EdgeColoring ec = distance2_edge_coloring(red);
    std::map<Edge, MatchingOut> cross;
    Rational r2 = 1, r3 = 1;
    for (const auto& e : ec.edges) {
      const auto [i, j] = e;
      const auto vertices = union_of(lv.bp.partition, {i, j});
      auto m = sub_call(drv, inst, vertices,
                        [&](const Edge& f) {
                          const int a = part_of[f.first], b = part_of[f.second];
                          return (a == i && b == j) || (a == j && b == i);
                        },
                        induced_source(lv.bp, vertices, n), depth + 1);
      r2 = rmax(r2, m.bound);
      if (!m.edges.empty()) cross.emplace(e, std::move(m));
    }
    if (!cross.empty()) {
      Rational best = -1;
      for (int h = 0; h < ec.colors; ++h) {
        std::vector<Edge> class_edges;
        std::vector<int> xs;
        for (std::size_t t = 0; t < ec.edges.size(); ++t)
          if (ec.color[t] == h && cross.count(ec.edges[t])) {
            class_edges.push_back(ec.edges[t]);
            xs.push_back(ec.edges[t].first);
            xs.push_back(ec.edges[t].second);
          }
        if (class_edges.empty()) continue;
        std::sort(xs.begin(), xs.end());
        auto sub = induced_subtrigraph(quo, xs);
        std::vector<int> local(k, -1);
        for (std::size_t t = 0; t < xs.size(); ++t) local[xs[t]] = static_cast<int>(t);
        MsimInstance hh{total_graph(sub.graph), {}};
        for (const auto& e : class_edges) hh.y_weight[normalized(local[e.first], local[e.second])] = cross.at(e).value;
        const MatchingOut pick = solve_msim(drv, hh, quotient_source(lv.bp, xs, n), depth + 1);
        r3 = rmax(r3, pick.bound);
        std::vector<Edge> cand;
        for (const auto& e : pick.edges) {
          const auto& s = cross.at(normalized(xs[e.first], xs[e.second])).edges;
          cand.insert(cand.end(), s.begin(), s.end());
        }
        const Rational val = matching_value(inst, cand);
        if (val > best) {
          best = val;
          nr.edges = std::move(cand);
        }
      }
      nr.factor = Rational(ec.colors) * r2 * r3;
    }
  }

  // Black branch: one edge per black pair, chosen on the black quotient and thinned by red conflicts.
  Branch nb;
  {
    std::map<Edge, Edge> heaviest;  // part pair -> its heaviest prescribed cross edge
    for (const auto& [e, w] : inst.y_weight) {
      const int a = part_of[e.first], b = part_of[e.second];
      if (a == b || !quo.black(a, b)) continue;
      const Edge pair = normalized(a, b);
      auto it = heaviest.find(pair);
      if (it == heaviest.end() || inst.y_weight.at(it->second) < w) heaviest[pair] = e;
    }
    if (!heaviest.empty()) {
      MsimInstance gq{black_graph(quo), {}};
      for (const auto& [pair, e] : heaviest) gq.y_weight[pair] = inst.y_weight.at(e);
      const MatchingOut sel = solve_msim(drv, gq, quotient_source(lv.bp, detail::iota_vec(k), n), depth + 1);
      const int m = static_cast<int>(sel.edges.size());
      Trigraph conflict(m);
      for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
          bool hit = false;
          for (int x : {sel.edges[a].first, sel.edges[a].second})
            for (int y : {sel.edges[b].first, sel.edges[b].second}) hit = hit || quo.red(x, y);
          if (hit) conflict.add_black(a, b);
        }
      const auto classes = color_classes(greedy_degeneracy_coloring(conflict));
      Rational best = -1;
      for (const auto& cls : classes) {
        std::vector<Edge> cand;
        for (int a : cls) cand.push_back(heaviest.at(sel.edges[a]));
        std::sort(cand.begin(), cand.end());
        const Rational val = matching_value(inst, cand);
        if (val > best) {
          best = val;
          nb.edges = std::move(cand);
        }
      }
      nb.factor = Rational(std::max<int>(1, static_cast<int>(classes.size()))) * sel.bound;
    }
  }

  MatchingOut out;
  Rational worst = 1;
  for (Branch* b : {&nv, &nr, &nb}) {
    worst = rmax(worst, b->factor);
    std::sort(b->edges.begin(), b->edges.end());
    const Rational val = matching_value(inst, b->edges);
    if (out.edges.empty() || val > out.value) {
      out.edges = b->edges;
      out.value = val;
    }
  }
  out.bound = 3 * worst;
  return out;
}

ApproxResult approx_msim(const MsimInstance& inst, const ContractionSequence& seq, const SolverConfig& cfg) {
  detail::require_graph_input(inst.graph, seq);
  for (const auto& [e, w] : inst.y_weight) {
    if (!inst.graph.adjacent(e.first, e.second)) throw InputError("prescribed pair is not an edge");
    if (w < 0) throw InputError("edge weights must be non-negative");
  }
  Driver drv(cfg);
  Source root;
  root.seq = &seq;
  drv.select_depth(inst.graph, root, [](int d) {
    return Rational(3 * std::max({d + 1, 2 * (d - 1) * d + 1, 2 * d + 1}));
  });
  MatchingOut out = solve_msim(drv, inst, root, 0);
  if (auto err = check_induced_matching(inst, out.edges); !err.empty())
    throw CertificateViolation("induced matching infeasible: " + err);
  drv.finish();
  ApproxResult res;
  res.problem = "msim";
  res.n = inst.graph.n();
  res.value = matching_value(inst, out.edges);
  res.solution = std::move(out.edges);
  res.certified_bound = out.bound;
  res.trace = drv.trace();
  return res;
}

}  // namespace tww
