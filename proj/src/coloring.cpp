#include "tww/coloring.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace tww {

std::vector<int> greedy_degeneracy_coloring(const Trigraph& g) {
  const int n = g.n();
  std::vector<int> deg(n), removal;
  std::vector<bool> gone(n, false);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v)
      if (!gone[v] && (pick < 0 || deg[v] < deg[pick])) pick = v;
    gone[pick] = true;
    removal.push_back(pick);
    const Bits row = g.total_row(pick);
    for (auto u = row.find_first(); u != Bits::npos; u = row.find_next(u))
      if (!gone[u]) --deg[u];
  }
  std::vector<int> color(n, -1);
  for (auto it = removal.rbegin(); it != removal.rend(); ++it) {
    const int v = *it;
    std::vector<bool> taken(n + 1, false);
    const Bits row = g.total_row(v);
    for (auto u = row.find_first(); u != Bits::npos; u = row.find_next(u))
      if (color[u] >= 0) taken[color[u]] = true;
    int c = 0;
    while (taken[c]) ++c;
    color[v] = c;
  }
  return color;
}

int colors_used(const std::vector<int>& coloring) {
  int best = 0;
  for (int c : coloring) best = std::max(best, c + 1);
  return best;
}

std::vector<std::vector<int>> color_classes(const std::vector<int>& coloring) {
  std::vector<std::vector<int>> out(colors_used(coloring));
  for (int v = 0; v < static_cast<int>(coloring.size()); ++v) out[coloring[v]].push_back(v);
  return out;
}

EdgeColoring distance2_edge_coloring(const Trigraph& g) {
  EdgeColoring out;
  out.edges = g.edges();
  const int m = static_cast<int>(out.edges.size());
  out.color.assign(m, -1);
  std::map<Edge, int> index;
  for (int i = 0; i < m; ++i) index[out.edges[i]] = i;
  for (int i = 0; i < m; ++i) {
    const auto [u, v] = out.edges[i];
    Bits near = g.total_row(u) | g.total_row(v);
    near.set(u);
    near.set(v);
    std::vector<bool> taken(m + 1, false);
    for (auto x = near.find_first(); x != Bits::npos; x = near.find_next(x)) {
      const Bits row = g.total_row(x);
      for (auto y = row.find_first(); y != Bits::npos; y = row.find_next(y)) {
        const int j = index[normalized(static_cast<int>(x), static_cast<int>(y))];
        if (j != i && out.color[j] >= 0) taken[out.color[j]] = true;
      }
    }
    int c = 0;
    while (taken[c]) ++c;
    out.color[i] = c;
    out.colors = std::max(out.colors, c + 1);
  }
  return out;
}

bool is_distance2_coloring(const Trigraph& g, const EdgeColoring& c) {
  const int m = static_cast<int>(c.edges.size());
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      if (c.color[i] != c.color[j]) continue;
      for (int a : {c.edges[i].first, c.edges[i].second})
        for (int b : {c.edges[j].first, c.edges[j].second})
          if (a == b || g.adjacent(a, b)) return false;
    }
  return true;
}

std::optional<std::vector<int>> clustered_coloring(const Trigraph& g, int colors, int cap, std::uint64_t node_limit) {
  const int n = g.n();
  std::vector<int> color(n, -1);
  std::uint64_t nodes = 0;
  auto component_size = [&](int v) {
    std::vector<int> stack{v};
    std::vector<bool> seen(n, false);
    seen[v] = true;
    int size = 0;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      ++size;
      const Bits row = g.total_row(x);
      for (auto y = row.find_first(); y != Bits::npos; y = row.find_next(y))
        if (!seen[y] && color[y] == color[v]) {
          seen[y] = true;
          stack.push_back(static_cast<int>(y));
        }
    }
    return size;
  };
  std::function<bool(int)> rec = [&](int v) {
    if (v == n) return true;
    if (++nodes > node_limit) return false;
    for (int c = 0; c < colors; ++c) {
      color[v] = c;
      if (component_size(v) <= cap && rec(v + 1)) return true;
    }
    color[v] = -1;
    return false;
  };
  if (colors < 1 || cap < 1) return std::nullopt;
  if (!rec(0)) return std::nullopt;
  return color;
}

}  // namespace tww
