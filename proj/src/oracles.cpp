#include "tww/oracles.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>

#include "tww/errors.hpp"

namespace tww {

OracleLimits OracleLimits::desk() {
  OracleLimits l;
  l.mis_n = 64;
  l.setcol_n = 24;
  l.setcol_b = 24;
  l.msim_n = 24;
  l.msim_y = 128;
  l.mlisf_n = 24;
  l.mief_n = 18;
  l.aihp_n = 24;
  return l;
}

OracleLimits OracleLimits::uniform(int n) {
  OracleLimits l;
  l.mis_n = l.setcol_n = l.msim_n = l.mlisf_n = l.mief_n = l.aihp_n = n;
  l.msim_y = n * n;
  return l;
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InputError(what);
}

std::vector<Bits> adjacency_rows(const Graph& g) {
  std::vector<Bits> adj(g.n());
  for (int v = 0; v < g.n(); ++v) adj[v] = g.total_row(v);
  return adj;
}

class Clock {
 public:
  explicit Clock(const OracleBudget& b) : budget_(b), start_(std::chrono::steady_clock::now()) {}
  void tick() {
    if (++nodes_ > budget_.node_limit) throw BudgetExceeded("exact oracle exceeded its node budget");
    if ((nodes_ & 4095) == 0 &&
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count() >
            budget_.time_limit_ms) {
      throw BudgetExceeded("exact oracle exceeded its time budget");
    }
  }

 private:
  OracleBudget budget_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

MisSolution exact_mis(const WmisInstance& inst, const OracleConfig& cfg) {
  require(inst.graph.n() <= cfg.limits.mis_n, "exact_mis: n above the oracle limit");
  auto res = max_weight_independent_set(adjacency_rows(inst.graph), inst.weight, cfg.budget);
  return {res.set, res.value};
}

// Branch and bound over whole palettes: the most constrained vertex takes b(v) colours, reusing
// free colours already opened and opening fresh ones in order (fresh colours are interchangeable).
SetColoringSolution exact_set_coloring(const SetColoringInstance& inst, const OracleConfig& cfg) {
  const Graph& g = inst.graph;
  const int n = g.n();
  require(n <= cfg.limits.setcol_n, "exact_set_coloring: n above the oracle limit");
  require(static_cast<int>(inst.demand.size()) == n, "exact_set_coloring: demand vector does not match n");
  int total = 0;
  for (int v = 0; v < n; ++v) {
    require(inst.demand[v] >= 1 && inst.demand[v] <= cfg.limits.setcol_b, "exact_set_coloring: demand out of range");
    total += inst.demand[v];
  }
  SetColoringSolution sol;
  sol.palettes.assign(n, {});
  if (n == 0) return sol;
  const auto& b = inst.demand;

  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return g.degree(x) > g.degree(y); });

  std::vector<Bits> pal(n, Bits(total)), best_pal;
  int best = 0;
  for (int v : order) {  // greedy upper bound
    Bits blocked(total);
    for (int u = 0; u < n; ++u)
      if (g.adjacent(u, v)) blocked |= pal[u];
    for (int c = 0, need = b[v]; need > 0; ++c)
      if (!blocked[c]) {
        pal[v].set(c);
        --need;
        best = std::max(best, c + 1);
      }
  }
  best_pal = pal;

  std::vector<Bits> co_adj(n, Bits(n));  // heaviest clique by demand
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && !g.adjacent(u, v)) co_adj[u].set(v);
  const int lower = static_cast<int>(
      max_weight_independent_set(co_adj, std::vector<Rational>(b.begin(), b.end()), cfg.budget).value);

  for (auto& p : pal) p.reset();
  std::vector<char> done(n, 0);
  Clock clock(cfg.budget);
  std::function<void(int, int)> search = [&](int assigned, int used) {
    clock.tick();
    if (assigned == n) {
      if (used < best) {
        best = used;
        best_pal = pal;
      }
      return;
    }
    int pick = -1, pick_new = -1, pick_free = 0;
    std::vector<int> free_colors;
    for (int v = 0; v < n; ++v) {
      if (done[v]) continue;
      Bits blocked(total);
      for (int u = 0; u < n; ++u)
        if (done[u] && g.adjacent(u, v)) blocked |= pal[u];
      int free = 0;
      for (int c = 0; c < used; ++c) free += !blocked[c];
      const int need_new = std::max(0, b[v] - free);
      if (used + need_new >= best) return;
      if (pick < 0 || need_new > pick_new || (need_new == pick_new && free < pick_free)) {
        pick = v;
        pick_new = need_new;
        pick_free = free;
        free_colors.clear();
        for (int c = 0; c < used; ++c)
          if (!blocked[c]) free_colors.push_back(c);
      }
    }
    const int v = pick;
    done[v] = 1;
    std::vector<int> chosen;
    for (int fresh = pick_new; fresh <= b[v] && used + fresh < best; ++fresh) {
      const int reuse = b[v] - fresh;
      std::function<void(std::size_t)> choose = [&](std::size_t from) {
        if (static_cast<int>(chosen.size()) == reuse) {
          pal[v].reset();
          for (int c : chosen) pal[v].set(c);
          for (int c = used; c < used + fresh; ++c) pal[v].set(c);
          search(assigned + 1, used + fresh);
          return;
        }
        for (std::size_t i = from; i < free_colors.size() && best > lower; ++i) {
          if (free_colors.size() - i < static_cast<std::size_t>(reuse) - chosen.size()) break;
          chosen.push_back(free_colors[i]);
          choose(i + 1);
          chosen.pop_back();
        }
      };
      choose(0);
      if (best == lower) break;
    }
    pal[v].reset();
    done[v] = 0;
  };
  if (best > lower) search(0, 0);

  sol.colors = best;
  for (int v = 0; v < n; ++v)
    for (auto c = best_pal[v].find_first(); c != Bits::npos; c = best_pal[v].find_next(c))
      sol.palettes[v].push_back(static_cast<int>(c));
  return sol;
}

MatchingSolution exact_msim(const MsimInstance& inst, const OracleConfig& cfg) {
  const Graph& g = inst.graph;
  require(g.n() <= cfg.limits.msim_n || static_cast<int>(inst.y_weight.size()) <= cfg.limits.msim_y,
          "exact_msim: instance above the oracle limit");
  std::vector<Edge> items;
  std::vector<Rational> w;
  for (const auto& [e, q] : inst.y_weight) {
    require(g.adjacent(e.first, e.second), "exact_msim: prescribed pair is not an edge");
    items.push_back(e);
    w.push_back(q);
  }
  const int m = static_cast<int>(items.size());
  std::vector<Bits> adj(m, Bits(m));
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      bool conflict = false;
      for (int x : {items[a].first, items[a].second})
        for (int y : {items[b].first, items[b].second}) conflict = conflict || x == y || g.adjacent(x, y);
      if (conflict) {
        adj[a].set(b);
        adj[b].set(a);
      }
    }
  auto res = max_weight_independent_set(adj, w, cfg.budget);
  MatchingSolution sol;
  for (int i : res.set) sol.edges.push_back(items[i]);
  sol.value = res.value;
  return sol;
}

StarForestSolution exact_mlisf(const StarForestInstance& inst, const OracleConfig& cfg) {
  const Graph& g = inst.graph;
  require(g.n() <= cfg.limits.mlisf_n, "exact_mlisf: n above the oracle limit");
  struct Item {
    int leaf, root;
  };
  std::vector<Item> items;
  std::vector<Rational> w;
  for (const auto& e : inst.y) {
    require(g.adjacent(e.first, e.second), "exact_mlisf: prescribed pair is not an edge");
    items.push_back({e.second, e.first});
    w.push_back(inst.weight[e.second]);
    items.push_back({e.first, e.second});
    w.push_back(inst.weight[e.first]);
  }
  const int m = static_cast<int>(items.size());
  std::vector<Bits> adj(m, Bits(m));
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      const auto& x = items[a];
      const auto& y = items[b];
      bool conflict;
      if (x.leaf == y.leaf || x.leaf == y.root || x.root == y.leaf) {
        conflict = true;
      } else if (x.root == y.root) {
        conflict = g.adjacent(x.leaf, y.leaf);
      } else {
        conflict = g.adjacent(x.root, y.root) || g.adjacent(x.leaf, y.leaf) || g.adjacent(x.leaf, y.root) ||
                   g.adjacent(x.root, y.leaf);
      }
      if (conflict) {
        adj[a].set(b);
        adj[b].set(a);
      }
    }
  auto res = max_weight_independent_set(adj, w, cfg.budget);
  std::map<int, std::vector<int>> by_root;
  for (int i : res.set) by_root[items[i].root].push_back(items[i].leaf);
  StarForestSolution sol;
  for (auto& [root, leaves] : by_root) {
    std::sort(leaves.begin(), leaves.end());
    sol.stars.push_back({root, leaves});
  }
  sol.value = res.value;
  return sol;
}

VertexSetSolution exact_mief(const StarForestInstance& inst, const OracleConfig& cfg) {
  const Graph& g = inst.graph;
  const int n = g.n();
  require(n <= cfg.limits.mief_n, "exact_mief: n above the oracle limit");
  Clock clock(cfg.budget);
  VertexSetSolution best{{}, 0};
  std::vector<int> chosen;
  // Depth-first over vertices; a vertex may join if its edges into the chosen set are prescribed
  // and it touches every current component at most once (acyclicity).
  std::vector<int> comp_of(n, -1);
  std::function<void(int, int)> rec = [&](int v, int edges) {
    clock.tick();
    const int reachable = static_cast<int>(chosen.size()) + (n - v) - 1;
    if (reachable <= best.value) return;
    if (v == n) {
      if (edges > best.value) best = {chosen, edges};
      return;
    }
    std::vector<int> touched;
    bool ok = true;
    for (int u : chosen) {
      if (!g.adjacent(u, v)) continue;
      if (!inst.y.count(normalized(u, v))) {
        ok = false;
        break;
      }
      touched.push_back(comp_of[u]);
    }
    if (ok) {
      std::vector<int> sorted = touched;
      std::sort(sorted.begin(), sorted.end());
      ok = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    }
    if (ok) {
      std::vector<int> saved = comp_of;
      const int id = v;
      for (int u : chosen)
        if (std::find(touched.begin(), touched.end(), comp_of[u]) != touched.end()) comp_of[u] = id;
      comp_of[v] = id;
      chosen.push_back(v);
      rec(v + 1, edges + static_cast<int>(touched.size()));
      chosen.pop_back();
      comp_of = saved;
    }
    rec(v + 1, edges);
  };
  rec(0, 0);
  return best;
}

std::vector<WeightedCopy> enumerate_copies(const AihpInstance& inst) {
  const int n = inst.host.n(), h = inst.pattern.n();
  std::vector<WeightedCopy> out;
  if (h == 0 || h > n) return out;
  std::vector<int> pick;
  std::function<void(int)> rec = [&](int from) {
    if (static_cast<int>(pick.size()) == h) {
      const Rational w = copy_weight(inst, pick);
      if (w >= 0) out.push_back({pick, w});
      return;
    }
    for (int v = from; v < n; ++v) {
      pick.push_back(v);
      rec(v + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return out;
}

VertexSetSolution exact_aihp(const AihpInstance& inst, const OracleConfig& cfg) {
  require(inst.host.n() <= cfg.limits.aihp_n, "exact_aihp: n above the oracle limit");
  require(inst.pattern.n() <= cfg.limits.aihp_h, "exact_aihp: pattern above the size cap");
  const auto copies = enumerate_copies(inst);
  const int m = static_cast<int>(copies.size());
  std::vector<Bits> adj(m, Bits(m));
  std::vector<Rational> w(m);
  std::vector<Bits> mask(m, Bits(inst.host.n()));
  std::vector<Bits> closed(m, Bits(inst.host.n()));
  for (int a = 0; a < m; ++a) {
    w[a] = copies[a].weight;
    for (int v : copies[a].vertices) {
      mask[a].set(v);
      closed[a] |= inst.host.total_row(v);
      closed[a].set(v);
    }
  }
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      if (closed[a].intersects(mask[b])) {
        adj[a].set(b);
        adj[b].set(a);
      }
  auto res = max_weight_independent_set(adj, w, cfg.budget);
  VertexSetSolution sol;
  for (int i : res.set) sol.vertices.insert(sol.vertices.end(), copies[i].vertices.begin(), copies[i].vertices.end());
  std::sort(sol.vertices.begin(), sol.vertices.end());
  sol.value = res.value;
  return sol;
}

}  // namespace tww
