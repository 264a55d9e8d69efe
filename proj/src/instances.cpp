#include "tww/instances.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <tuple>

namespace tww {

GeneratedInstance gen_figure1() {
  enum { a, b, c, d, e, f, g };
  GeneratedInstance out{Graph(7), {}};
  const int edges[][2] = {{a, b}, {a, d}, {a, f}, {b, c}, {b, d}, {b, e}, {b, f},
                          {c, e}, {c, f}, {d, e}, {d, g}, {e, g}, {f, g}};
  for (const auto& [u, v] : edges) out.graph.add_black(u, v);
  out.graph.labels = {"a", "b", "c", "d", "e", "f", "g"};
  out.seq.origin = 7;
  out.seq.steps = {{e, f, 7}, {a, d, 8}, {b, 7, 9}, {8, g, 10}, {9, c, 11}, {10, 11, 12}};
  return out;
}

GeneratedInstance gen_cograph(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("gen_cograph: n must be positive");
  std::mt19937_64 rng(seed);
  GeneratedInstance out{Graph(n), {}};
  out.seq.origin = n;
  int next = n;
  std::function<int(int, int)> build = [&](int lo, int hi) {
    if (hi - lo == 1) return lo;
    const int mid = std::uniform_int_distribution<int>(lo + 1, hi - 1)(rng);
    const int left = build(lo, mid);
    const int right = build(mid, hi);
    if (rng() & 1)
      for (int u = lo; u < mid; ++u)
        for (int v = mid; v < hi; ++v) out.graph.add_black(u, v);
    out.seq.steps.push_back({left, right, next});
    return next++;
  };
  build(0, n);
  return out;
}

namespace {

struct Split {
  int parent, first, second;
};

std::optional<GeneratedInstance> try_uncontract(int n, int d, std::mt19937_64& rng) {
  const int cap = 2 * n;
  std::vector<std::vector<Rel>> rel(cap, std::vector<Rel>(cap, Rel::None));
  std::vector<int> red_deg(cap, 0);
  std::vector<int> live{0};
  std::vector<Split> splits;
  int next = 1;
  auto pick = [&](int k) { return std::uniform_int_distribution<int>(0, k - 1)(rng); };

  while (static_cast<int>(live.size()) < n) {
    std::vector<int> red_live;
    for (int x : live)
      if (red_deg[x] > 0) red_live.push_back(x);
    const int remaining = n - static_cast<int>(live.size());
    const bool final_phase = static_cast<int>(red_live.size()) >= remaining;
    bool accepted = false;
    for (int attempt = 0; attempt < 64 && !accepted; ++attempt) {
      const int x = final_phase ? red_live[pick(static_cast<int>(red_live.size()))] : live[pick(static_cast<int>(live.size()))];
      const int y = next, z = next + 1;
      std::vector<std::pair<Rel, Rel>> choice(live.size());
      for (std::size_t i = 0; i < live.size(); ++i) {
        const int u = live[i];
        if (u == x) continue;
        switch (rel[x][u]) {
          case Rel::Black: choice[i] = {Rel::Black, Rel::Black}; break;
          case Rel::None: choice[i] = {Rel::None, Rel::None}; break;
          case Rel::Red: {
            static const std::pair<Rel, Rel> opts[] = {{Rel::Black, Rel::None}, {Rel::None, Rel::Black},
                                                        {Rel::Red, Rel::Black}, {Rel::Black, Rel::Red},
                                                        {Rel::Red, Rel::None},  {Rel::None, Rel::Red},
                                                        {Rel::Red, Rel::Red}};
            choice[i] = opts[final_phase ? pick(2) : pick(7)];
            break;
          }
        }
      }
      Rel inner = (rng() & 1) ? Rel::Black : Rel::None;
      if (!final_phase && d >= 1 && pick(4) == 0) inner = Rel::Red;

      // Red degrees after the split.
      int deg_y = inner == Rel::Red, deg_z = inner == Rel::Red;
      bool ok = true;
      std::vector<int> new_deg(live.size());
      int red_count_after = 0;
      for (std::size_t i = 0; i < live.size(); ++i) {
        const int u = live[i];
        if (u == x) continue;
        const bool ry = choice[i].first == Rel::Red, rz = choice[i].second == Rel::Red;
        deg_y += ry;
        deg_z += rz;
        new_deg[i] = red_deg[u] - (rel[x][u] == Rel::Red) + ry + rz;
        if (new_deg[i] > d) ok = false;
        if (new_deg[i] > 0) ++red_count_after;
      }
      if (deg_y > d || deg_z > d) ok = false;
      red_count_after += (deg_y > 0) + (deg_z > 0);
      if (ok && red_count_after > remaining - 1) ok = false;
      if (!ok) continue;

      for (std::size_t i = 0; i < live.size(); ++i) {
        const int u = live[i];
        if (u == x) continue;
        rel[y][u] = rel[u][y] = choice[i].first;
        rel[z][u] = rel[u][z] = choice[i].second;
        red_deg[u] = new_deg[i];
      }
      rel[y][z] = rel[z][y] = inner;
      red_deg[y] = deg_y;
      red_deg[z] = deg_z;
      live.erase(std::find(live.begin(), live.end(), x));
      live.push_back(y);
      live.push_back(z);
      splits.push_back({x, y, z});
      next += 2;
      accepted = true;
    }
    if (!accepted) return std::nullopt;
  }
  for (int x : live)
    if (red_deg[x] > 0) return std::nullopt;

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<int> id(cap, -1);
  for (int i = 0; i < n; ++i) id[live[i]] = order[i];

  GeneratedInstance out{Graph(n), {}};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rel[live[i]][live[j]] == Rel::Black) out.graph.add_black(id[live[i]], id[live[j]]);
  out.seq.origin = n;
  int fresh = n;
  for (auto it = splits.rbegin(); it != splits.rend(); ++it) {
    out.seq.steps.push_back({id[it->first], id[it->second], fresh});
    id[it->parent] = fresh++;
  }
  return out;
}

}  // namespace

GeneratedInstance gen_by_uncontraction(int n, int d, std::uint64_t seed) {
  if (n < 1 || d < 0) throw std::invalid_argument("gen_by_uncontraction: need n >= 1 and d >= 0");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 64; ++attempt) {
    if (auto out = try_uncontract(n, d, rng)) {
      if (verify_sequence(out->graph, out->seq).width > d)
        throw std::logic_error("gen_by_uncontraction: replay exceeds the requested width");
      return *out;
    }
  }
  throw std::runtime_error("gen_by_uncontraction: retry budget exhausted (n=" + std::to_string(n) +
                           ", d=" + std::to_string(d) + ", seed=" + std::to_string(seed) + ")");
}

GreedyResult greedy_sequence(const Graph& g, int d_cap) {
  const int n = g.n();
  GreedyResult res;
  res.attempted.origin = n;
  if (n == 0) {
    res.seq = res.attempted;
    return res;
  }
  std::vector<Bits> black(n, Bits(n)), red(n, Bits(n));
  for (int u = 0; u < n; ++u) {
    black[u] = g.black_row(u);
    red[u] = g.red_row(u);
  }
  Bits alive(n);
  alive.set();
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  std::vector<int> deg(n);
  long long red_total = 0;
  for (int u = 0; u < n; ++u) {
    deg[u] = static_cast<int>(red[u].count());
    red_total += deg[u];
  }
  red_total /= 2;
  int fresh = n;

  for (int step = 0; step + 1 < n; ++step) {
    std::vector<int> by_deg;
    for (auto u = alive.find_first(); u != Bits::npos; u = alive.find_next(u)) by_deg.push_back(static_cast<int>(u));
    std::stable_sort(by_deg.begin(), by_deg.end(), [&](int x, int y) { return deg[x] > deg[y]; });

    std::tuple<int, long long, int, int> best{INT32_MAX, 0, 0, 0};
    Bits best_row;
    for (auto u = alive.find_first(); u != Bits::npos; u = alive.find_next(u))
      for (auto v = alive.find_next(u); v != Bits::npos; v = alive.find_next(v)) {
        Bits row = ((black[u] ^ black[v]) | red[u] | red[v]) & alive;
        row.reset(u);
        row.reset(v);
        const int deg_w = static_cast<int>(row.count());
        int worst = deg_w;
        const Bits changed = red[u] | red[v] | row;
        for (int z : by_deg) {
          if (z == static_cast<int>(u) || z == static_cast<int>(v) || changed[z]) continue;
          worst = std::max(worst, deg[z]);
          break;
        }
        for (auto z = changed.find_first(); z != Bits::npos; z = changed.find_next(z)) {
          if (z == u || z == v) continue;
          worst = std::max(worst, deg[z] - red[u][z] - red[v][z] + row[z]);
        }
        const long long after = red_total - deg[u] - deg[v] + red[u][v] + deg_w;
        const auto key = std::make_tuple(worst, after, static_cast<int>(u), static_cast<int>(v));
        if (key < best) {
          best = key;
          best_row = row;
        }
      }
    const auto [worst, after, u, v] = best;
    // Slot u now holds the merged vertex.
    for (auto z = alive.find_first(); z != Bits::npos; z = alive.find_next(z)) {
      if (static_cast<int>(z) == u || static_cast<int>(z) == v) continue;
      const bool both_black = black[u][z] && black[v][z];
      const bool now_red = best_row[z];
      if (red[z][u] || red[z][v]) deg[z] -= red[z][u] + red[z][v];
      black[z][u] = black[u][z] = both_black;
      red[z][u] = red[u][z] = now_red;
      deg[z] += now_red;
      black[z][v] = black[v][z] = false;
      red[z][v] = red[v][z] = false;
    }
    black[u].reset(v);
    red[u].reset(v);
    black[v].reset();
    red[v].reset();
    alive.reset(v);
    deg[u] = static_cast<int>(best_row.count());
    deg[v] = 0;
    red_total = after;
    res.attempted.steps.push_back({id[u], id[v], fresh});
    id[u] = fresh++;
    (void)worst;
  }
  res.width = verify_sequence(g, res.attempted).width;
  if (res.width <= d_cap) res.seq = res.attempted;
  return res;
}

}  // namespace tww
