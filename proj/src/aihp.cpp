#include "tww/aihp.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "solver_util.hpp"
#include "tww/errors.hpp"
#include "tww/oracles.hpp"
#include "tww/solvers.hpp"

namespace tww {

using detail::rmax;
using detail::union_of;

namespace {

std::vector<std::vector<int>> restricted_growth_strings(int h) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(h, 0);
  std::function<void(int, int)> rec = [&](int i, int used) {
    if (i == h) {
      out.push_back(cur);
      return;
    }
    for (int p = 0; p <= used && p < h; ++p) {
      cur[i] = p;
      rec(i + 1, std::max(used, p + 1));
    }
  };
  if (h == 0) return {{}};
  cur[0] = 0;
  rec(1, 1);
  return out;
}

std::vector<std::vector<int>> label_automorphisms(const Graph& g, const std::vector<int>& label) {
  const int h = g.n();
  std::vector<int> perm(h);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (int x = 0; x < h && ok; ++x) ok = label[x] == label[perm[x]];
    for (int x = 0; x < h && ok; ++x)
      for (int y = x + 1; y < h && ok; ++y) ok = g.adjacent(x, y) == g.adjacent(perm[x], perm[y]);
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

using Key = std::pair<std::vector<int>, std::vector<int>>;

Key encode(const std::vector<int>& part_of, const Trigraph& t) {
  std::vector<int> rels;
  for (int a = 0; a < t.n(); ++a)
    for (int b = a + 1; b < t.n(); ++b) rels.push_back(static_cast<int>(t.rel(a, b)));
  return {part_of, rels};
}

// Smallest encoding over the automorphism orbit.
Key canonical(const std::vector<int>& part_of, const Trigraph& t, const std::vector<std::vector<int>>& autos) {
  Key best;
  bool have = false;
  const int h = static_cast<int>(part_of.size());
  for (const auto& sigma : autos) {
    std::vector<int> moved(h), rename(t.n(), -1), q(h);
    int next = 0;
    for (int y = 0; y < h; ++y) {
      moved[y] = part_of[sigma[y]];
      if (rename[moved[y]] < 0) rename[moved[y]] = next++;
      q[y] = rename[moved[y]];
    }
    Trigraph r(t.n());
    for (int a = 0; a < t.n(); ++a)
      for (int b = a + 1; b < t.n(); ++b) r.set(rename[a], rename[b], t.rel(a, b));
    Key key = encode(q, r);
    if (!have || key < best) {
      best = std::move(key);
      have = true;
    }
  }
  return best;
}

bool connected(const Graph& g) {
  if (g.n() == 0) return true;
  return components_of(g, detail::iota_vec(g.n())).size() == 1;
}

}  // namespace

std::vector<CompatibleTrigraph> compatible_trigraphs(const Graph& pattern, const std::vector<int>& pattern_label,
                                                     int cap) {
  const int h = pattern.n();
  if (h > cap) throw InputError("pattern has " + std::to_string(h) + " vertices, above the cap " + std::to_string(cap));
  std::vector<int> label = pattern_label;
  label.resize(h, 0);
  const auto autos = label_automorphisms(pattern, label);
  std::set<Key> seen;
  std::vector<CompatibleTrigraph> out;
  for (const auto& rgs : restricted_growth_strings(h)) {
    const Trigraph witness = quotient(pattern, VertexPartition::from_labels(rgs));
    std::vector<Edge> free;
    for (int a = 0; a < witness.n(); ++a)
      for (int b = a + 1; b < witness.n(); ++b)
        if (!witness.red(a, b)) free.push_back({a, b});
    for (unsigned mask = 0; mask < (1u << free.size()); ++mask) {
      CompatibleTrigraph ct{witness, rgs, witness, {}};
      for (std::size_t i = 0; i < free.size(); ++i)
        if (mask >> i & 1) {
          ct.trigraph.add_red(free[i].first, free[i].second);
          ct.added_red.push_back(free[i]);
        }
      if (seen.insert(canonical(rgs, ct.trigraph, autos)).second) out.push_back(std::move(ct));
    }
  }
  return out;
}

bool witness_holds(const CompatibleTrigraph& ct) {
  ResolutionMap res;
  for (const auto& e : ct.added_red)
    res[e] = ct.witness.black(e.first, e.second) ? Resolution::Black : Resolution::Absent;
  return cleanup(ct.trigraph, res) == ct.witness;
}

std::vector<std::vector<int>> compatible_maps(const Trigraph& quo, const VertexPartition& partition,
                                              const std::vector<int>& host_label,
                                              const std::vector<int>& pattern_label, const CompatibleTrigraph& ct) {
  const int k = quo.n(), hp = ct.trigraph.n();
  std::vector<std::set<int>> part_labels(k), need(hp);
  for (int p = 0; p < k; ++p)
    for (int v : partition.parts[p]) part_labels[p].insert(host_label[v]);
  for (std::size_t x = 0; x < ct.part_of.size(); ++x)
    need[ct.part_of[x]].insert(x < pattern_label.size() ? pattern_label[x] : 0);
  std::vector<std::vector<int>> out;
  std::vector<int> iota(hp, -1);
  std::vector<bool> used(k, false);
  std::function<void(int)> rec = [&](int a) {
    if (a == hp) {
      out.push_back(iota);
      return;
    }
    for (int p = 0; p < k; ++p) {
      if (used[p] || !std::includes(part_labels[p].begin(), part_labels[p].end(), need[a].begin(), need[a].end()))
        continue;
      bool ok = true;
      for (int b = 0; b < a && ok; ++b) ok = quo.rel(p, iota[b]) == ct.trigraph.rel(a, b);
      if (!ok) continue;
      used[p] = true;
      iota[a] = p;
      rec(a + 1);
      used[p] = false;
    }
  };
  rec(0);
  return out;
}

void for_each_embedding(const Graph& host, const Graph& pattern, const std::function<bool(int, int)>& allowed,
                        const std::function<void(const std::vector<int>&)>& visit) {
  const int h = pattern.n(), n = host.n();
  if (h == 0 || h > n) return;
  // Breadth-first order so that every later vertex has an earlier neighbour.
  std::vector<int> order{0};
  std::vector<bool> in(h, false);
  in[0] = true;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int y = 0; y < h; ++y)
      if (!in[y] && pattern.adjacent(order[i], y)) {
        in[y] = true;
        order.push_back(y);
      }
  for (int y = 0; y < h; ++y)
    if (!in[y]) order.push_back(y);
  std::vector<int> phi(h, -1);
  std::vector<bool> taken(n, false);
  std::function<void(int)> rec = [&](int t) {
    if (t == h) {
      visit(phi);
      return;
    }
    const int x = order[t];
    for (int v = 0; v < n; ++v) {
      if (taken[v] || !allowed(x, v)) continue;
      bool ok = true;
      for (int s = 0; s < t && ok; ++s) ok = pattern.adjacent(x, order[s]) == host.adjacent(v, phi[order[s]]);
      if (!ok) continue;
      taken[v] = true;
      phi[x] = v;
      rec(t + 1);
      taken[v] = false;
    }
    phi[x] = -1;
  };
  rec(0);
}

std::optional<std::pair<std::vector<int>, Rational>> best_tuple(const AihpInstance& inst, const std::vector<int>& copy) {
  const int h = inst.pattern.n();
  if (static_cast<int>(copy.size()) != h) return std::nullopt;
  std::vector<int> image = copy;
  std::sort(image.begin(), image.end());
  std::optional<std::pair<std::vector<int>, Rational>> best;
  do {
    bool ok = true;
    for (int i = 0; i < h && ok; ++i) {
      const int pl = i < static_cast<int>(inst.pattern_label.size()) ? inst.pattern_label[i] : 0;
      ok = inst.host_label[image[i]] == pl;
    }
    for (int i = 0; i < h && ok; ++i)
      for (int j = i + 1; j < h && ok; ++j) ok = inst.pattern.adjacent(i, j) == inst.host.adjacent(image[i], image[j]);
    if (!ok) continue;
    Rational w = inst.weights.indicator_default ? 1 : 0;
    if (auto it = inst.weights.table.find(image); it != inst.weights.table.end()) w = it->second;
    if (!best || w > best->second) best = std::make_pair(image, w);
  } while (std::next_permutation(image.begin(), image.end()));
  return best;
}

namespace {

Rational tuple_weight(const AihpInstance& inst, const std::vector<int>& tuple) {
  if (auto it = inst.weights.table.find(tuple); it != inst.weights.table.end()) return it->second;
  return inst.weights.indicator_default ? 1 : 0;
}

// Greedy colouring of candidate part sets: sets sharing a part or joined by a red pair conflict.
std::vector<int> color_part_sets(const Trigraph& quo, const std::vector<std::vector<int>>& sets) {
  const int m = static_cast<int>(sets.size());
  Trigraph conflict(m);
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      bool hit = false;
      for (int x : sets[a])
        for (int y : sets[b]) hit = hit || x == y || quo.red(x, y);
      if (hit) conflict.add_black(a, b);
    }
  return greedy_degeneracy_coloring(conflict);
}

}  // namespace

PackingOut solve_aihp(Driver& drv, const AihpInstance& inst, const Source& src, int depth) {
  const Graph& g = inst.host;
  const int n = g.n(), h = inst.pattern.n();
  drv.enter(depth, n, src);
  if (n == 0 || h == 0 || h > n) return {{}, 0, 1};
  if (drv.is_base(n, depth)) {
    drv.record_base(depth, n);
    auto sol = exact_aihp(inst, drv.config().oracle);
    return {std::move(sol.vertices), sol.value, 1};
  }
  const detail::Level lv = detail::make_level(drv, g, src, depth);
  const Trigraph& quo = lv.quotient;
  const auto& partition = lv.bp.partition;
  const int k = partition.size();
  std::vector<int> plabel = inst.pattern_label;
  plabel.resize(h, 0);

  const auto cts = compatible_trigraphs(inst.pattern, plabel, drv.config().pattern_cap);
  const Trigraph total_quo = total_graph(quo);

  PackingOut best;
  bool have = false;
  Rational worst_run = 1;
  auto offer = [&](std::vector<int> vertices) {
    std::sort(vertices.begin(), vertices.end());
    const Rational val = packing_value(inst, vertices);
    if (!have || val > best.value) {
      best.vertices = std::move(vertices);
      best.value = val;
      have = true;
    }
  };

  for (const auto& ct : cts) {
    const auto maps = compatible_maps(quo, partition, inst.host_label, plabel, ct);
    if (maps.empty()) continue;
    const int hp = ct.trigraph.n();

    // Distinct part sets and their colouring.
    std::map<std::vector<int>, int> set_index;
    std::vector<std::vector<int>> sets;
    std::vector<int> set_of(maps.size());
    for (std::size_t t = 0; t < maps.size(); ++t) {
      std::vector<int> s = maps[t];
      std::sort(s.begin(), s.end());
      auto [it, fresh] = set_index.emplace(s, static_cast<int>(sets.size()));
      if (fresh) sets.push_back(s);
      set_of[t] = it->second;
    }
    const std::vector<int> set_color = color_part_sets(quo, sets);
    const int colors = colors_used(set_color);

    // Per map: value and the vertices that realise it.
    std::vector<Rational> value(maps.size(), 0);
    std::vector<std::vector<int>> realised(maps.size());
    Rational r_inner = 1;
    if (ct.trigraph.black_count() > 0) {
      for (std::size_t t = 0; t < maps.size(); ++t) {
        const auto& iota = maps[t];
        bool found = false;
        for_each_embedding(
            g, inst.pattern,
            [&](int x, int v) { return partition.part_of[v] == iota[ct.part_of[x]] && inst.host_label[v] == plabel[x]; },
            [&](const std::vector<int>& phi) {
              const Rational w = tuple_weight(inst, phi);
              if (!found || w > value[t]) {
                value[t] = w;
                realised[t] = phi;
                found = true;
              }
            });
      }
    } else {
      for (std::size_t t = 0; t < maps.size(); ++t) {
        const auto& iota = maps[t];
        std::vector<int> pos(k, -1);
        for (int a = 0; a < hp; ++a) pos[iota[a]] = a;
        const auto vertices = union_of(partition, iota);
        auto sub = induced_subtrigraph(g, vertices);
        AihpInstance child{std::move(sub.graph), inst.pattern, {}, {}, {inst.weights.indicator_default, {}}};
        std::vector<int> local(n, -1);
        for (std::size_t i = 0; i < vertices.size(); ++i) {
          const int v = vertices[i];
          local[v] = static_cast<int>(i);
          child.host_label.push_back(inst.host_label[v] * (h + 1) + pos[partition.part_of[v]]);
        }
        for (int x = 0; x < h; ++x) child.pattern_label.push_back(plabel[x] * (h + 1) + ct.part_of[x]);
        for (const auto& [tuple, w] : inst.weights.table) {
          std::vector<int> mapped;
          for (int v : tuple)
            if (v >= 0 && v < n && local[v] >= 0) mapped.push_back(local[v]);
          if (mapped.size() == tuple.size()) child.weights.table[mapped] = w;
        }
        PackingOut res = solve_aihp(drv, child, induced_source(lv.bp, vertices, n), depth + 1);
        r_inner = rmax(r_inner, res.bound);
        value[t] = res.value;
        realised[t] = detail::lift_ids(res.vertices, vertices);
      }
    }

    // One packing call on the total quotient per colour class.
    AihpInstance shape{total_quo, total_graph(ct.trigraph), std::vector<int>(k, 0), std::vector<int>(hp, 0),
                       {false, {}}};
    Rational r_outer = 1;
    for (int c = 0; c < colors; ++c) {
      AihpInstance cls = shape;
      std::map<std::vector<int>, std::size_t> owner;
      for (std::size_t t = 0; t < maps.size(); ++t)
        if (set_color[set_of[t]] == c && value[t] > 0) {
          cls.weights.table[maps[t]] = value[t];
          owner[maps[t]] = t;
        }
      if (cls.weights.table.empty()) continue;
      const PackingOut pick = solve_aihp(drv, cls, quotient_source(lv.bp, detail::iota_vec(k), n), depth + 1);
      r_outer = rmax(r_outer, pick.bound);
      std::vector<int> cand;
      for (const auto& comp : components_of(cls.host, pick.vertices)) {
        const auto tuple = best_tuple(cls, comp);
        if (!tuple || tuple->second <= 0) continue;
        const auto& r = realised[owner.at(tuple->first)];
        cand.insert(cand.end(), r.begin(), r.end());
      }
      offer(std::move(cand));
    }
    worst_run = rmax(worst_run, Rational(std::max(1, colors)) * r_inner * r_outer);
  }

  if (!have) best = {{}, 0, 1};
  best.bound = Rational(static_cast<int>(cts.size())) * worst_run;
  return best;
}

ApproxResult approx_aihp(const AihpInstance& inst_in, const ContractionSequence& seq, const SolverConfig& cfg) {
  AihpInstance inst = inst_in;
  const int n = inst.host.n(), h = inst.pattern.n();
  if (h > cfg.pattern_cap) throw InputError("pattern above the size cap");
  if (h == 0 || !connected(inst.pattern)) throw InputError("pattern must be connected and nonempty");
  if (!inst.host.is_graph() || !inst.pattern.is_graph()) throw InputError("host and pattern must be graphs");
  if (seq.origin != n) throw InputError("sequence origin does not match the graph");
  inst.host_label.resize(n, 0);
  inst.pattern_label.resize(h, 0);
  for (const auto& [tuple, w] : inst.weights.table) {
    if (static_cast<int>(tuple.size()) != h) throw InputError("tuple weight of the wrong length");
    std::vector<int> s = tuple;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw InputError("tuple weight repeats a vertex");
    for (int v : tuple)
      if (v < 0 || v >= n) throw InputError("tuple weight references a vertex out of range");
    if (w < 0) throw InputError("tuple weights must be non-negative");
  }
  const int runs = static_cast<int>(compatible_trigraphs(inst.pattern, inst.pattern_label, cfg.pattern_cap).size());
  Driver drv(cfg);
  Source root;
  root.seq = &seq;
  drv.select_depth(inst.host, root, [&](int d) { return Rational(runs * (d + 1)); });
  PackingOut out = solve_aihp(drv, inst, root, 0);
  if (auto err = check_packing(inst, out.vertices); !err.empty()) throw CertificateViolation("packing infeasible: " + err);
  drv.finish();
  ApproxResult res;
  res.problem = "aihp";
  res.n = n;
  res.value = packing_value(inst, out.vertices);
  res.solution = std::move(out.vertices);
  res.certified_bound = out.bound;
  res.trace = drv.trace();
  return res;
}

}  // namespace tww
