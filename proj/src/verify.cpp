#include <algorithm>
#include <numeric>

#include "tww/errors.hpp"
#include "tww/problems.hpp"

namespace tww {

namespace {

std::string check_vertices(const Graph& g, const std::vector<int>& vs) {
  std::vector<bool> seen(g.n(), false);
  for (int v : vs) {
    if (v < 0 || v >= g.n()) return "vertex " + std::to_string(v) + " out of range";
    if (seen[v]) return "vertex " + std::to_string(v) + " repeated";
    seen[v] = true;
  }
  return {};
}

std::string edge_name(int u, int v) { return std::to_string(u) + "-" + std::to_string(v); }

}  // namespace

std::string check_independent(const Graph& g, const std::vector<int>& set) {
  if (auto err = check_vertices(g, set); !err.empty()) return err;
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i + 1; j < set.size(); ++j)
      if (g.adjacent(set[i], set[j])) return "edge " + edge_name(set[i], set[j]) + " inside the set";
  return {};
}

std::string check_set_coloring(const Graph& g, const std::vector<int>& demand, const PaletteAssignment& colors) {
  if (static_cast<int>(colors.size()) != g.n()) return "palette count differs from n";
  for (int v = 0; v < g.n(); ++v) {
    std::vector<int> c = colors[v];
    std::sort(c.begin(), c.end());
    if (std::adjacent_find(c.begin(), c.end()) != c.end()) return "repeated colour at vertex " + std::to_string(v);
    if (static_cast<int>(c.size()) < demand[v]) return "vertex " + std::to_string(v) + " gets too few colours";
  }
  for (const auto& [u, v] : g.edges()) {
    std::vector<int> a = colors[u], b = colors[v], both;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
    if (!both.empty()) return "edge " + edge_name(u, v) + " shares a colour";
  }
  return {};
}

int color_count(const PaletteAssignment& colors) {
  std::set<int> all;
  for (const auto& c : colors) all.insert(c.begin(), c.end());
  return static_cast<int>(all.size());
}

std::string check_induced_matching(const MsimInstance& inst, const std::vector<Edge>& edges) {
  const Graph& g = inst.graph;
  std::vector<int> ends;
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= g.n() || v >= g.n() || !g.adjacent(u, v)) return "pair " + edge_name(u, v) + " is not an edge";
    if (!inst.y_weight.count(normalized(u, v))) return "edge " + edge_name(u, v) + " not prescribed";
    ends.push_back(u);
    ends.push_back(v);
  }
  if (auto err = check_vertices(g, ends); !err.empty()) return "edges share " + err;
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j)
      for (int a : {edges[i].first, edges[i].second})
        for (int b : {edges[j].first, edges[j].second})
          if (g.adjacent(a, b)) return "edges " + edge_name(edges[i].first, edges[i].second) + " and " +
                                       edge_name(edges[j].first, edges[j].second) + " are joined";
  return {};
}

Rational matching_value(const MsimInstance& inst, const std::vector<Edge>& edges) {
  Rational total = 0;
  for (const auto& [u, v] : edges) total += inst.y_weight.at(normalized(u, v));
  return total;
}

std::string check_star_forest(const StarForestInstance& inst, const std::vector<Star>& stars) {
  const Graph& g = inst.graph;
  std::vector<int> all;
  std::vector<int> owner(g.n(), -1);
  for (std::size_t s = 0; s < stars.size(); ++s) {
    if (stars[s].leaves.empty()) return "star without leaves";
    all.push_back(stars[s].root);
    all.insert(all.end(), stars[s].leaves.begin(), stars[s].leaves.end());
  }
  if (auto err = check_vertices(g, all); !err.empty()) return err;
  for (std::size_t s = 0; s < stars.size(); ++s) {
    owner[stars[s].root] = static_cast<int>(s);
    for (int l : stars[s].leaves) {
      owner[l] = static_cast<int>(s);
      if (!g.adjacent(l, stars[s].root)) return "leaf " + std::to_string(l) + " not adjacent to its root";
      if (!inst.y.count(normalized(l, stars[s].root))) return "edge " + edge_name(l, stars[s].root) + " not prescribed";
    }
  }
  auto is_root = [&](int v) { return stars[owner[v]].root == v; };
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      const int a = all[i], b = all[j];
      if (!g.adjacent(a, b)) continue;
      if (owner[a] != owner[b]) return "stars joined by edge " + edge_name(a, b);
      if (!is_root(a) && !is_root(b)) return "leaves " + edge_name(a, b) + " adjacent";
    }
  return {};
}

Rational star_forest_value(const StarForestInstance& inst, const std::vector<Star>& stars) {
  Rational total = 0;
  for (const auto& s : stars)
    for (int l : s.leaves) total += inst.weight[l];
  return total;
}

std::vector<std::vector<int>> components_of(const Graph& g, const std::vector<int>& vertices) {
  std::vector<int> idx(g.n(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) idx[vertices[i]] = static_cast<int>(i);
  std::vector<int> comp(vertices.size(), -1);
  std::vector<std::vector<int>> out;
  for (std::size_t s = 0; s < vertices.size(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> cur{vertices[s]}, stack{vertices[s]};
    comp[s] = static_cast<int>(out.size());
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int y : vertices) {
        if (comp[idx[y]] >= 0 || !g.adjacent(x, y)) continue;
        comp[idx[y]] = comp[s];
        cur.push_back(y);
        stack.push_back(y);
      }
    }
    std::sort(cur.begin(), cur.end());
    out.push_back(std::move(cur));
  }
  return out;
}

Rational induced_edge_count(const Graph& g, const std::vector<int>& vertices) {
  int count = 0;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j) count += g.adjacent(vertices[i], vertices[j]);
  return count;
}

std::string check_induced_forest(const StarForestInstance& inst, const std::vector<int>& vertices) {
  if (auto err = check_vertices(inst.graph, vertices); !err.empty()) return err;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (inst.graph.adjacent(vertices[i], vertices[j]) && !inst.y.count(normalized(vertices[i], vertices[j])))
        return "edge " + edge_name(vertices[i], vertices[j]) + " not prescribed";
  const auto comps = components_of(inst.graph, vertices);
  const Rational edges = induced_edge_count(inst.graph, vertices);
  if (edges != Rational(static_cast<int>(vertices.size() - comps.size()))) return "induced subgraph has a cycle";
  return {};
}

Rational copy_weight(const AihpInstance& inst, const std::vector<int>& copy) {
  const int h = inst.pattern.n();
  if (static_cast<int>(copy.size()) != h) return -1;
  std::vector<int> image = copy;
  std::sort(image.begin(), image.end());
  Rational best = -1;
  do {
    bool ok = true;
    for (int i = 0; i < h && ok; ++i) {
      const int pl = i < static_cast<int>(inst.pattern_label.size()) ? inst.pattern_label[i] : 0;
      ok = inst.host_label[image[i]] == pl;
    }
    for (int i = 0; i < h && ok; ++i)
      for (int j = i + 1; j < h && ok; ++j) ok = inst.pattern.adjacent(i, j) == inst.host.adjacent(image[i], image[j]);
    if (!ok) continue;
    Rational w;
    if (auto it = inst.weights.table.find(image); it != inst.weights.table.end()) {
      w = it->second;
    } else {
      w = inst.weights.indicator_default ? 1 : 0;
    }
    best = max_rational(best, w);
  } while (std::next_permutation(image.begin(), image.end()));
  return best;
}

std::string check_packing(const AihpInstance& inst, const std::vector<int>& vertices) {
  if (auto err = check_vertices(inst.host, vertices); !err.empty()) return err;
  for (const auto& comp : components_of(inst.host, vertices))
    if (copy_weight(inst, comp) < 0) return "component starting at " + std::to_string(comp.front()) + " is not a labelled copy";
  return {};
}

Rational packing_value(const AihpInstance& inst, const std::vector<int>& vertices) {
  Rational total = 0;
  for (const auto& comp : components_of(inst.host, vertices)) {
    const Rational w = copy_weight(inst, comp);
    if (w < 0) throw InputError("packing component is not a labelled copy");
    total += w;
  }
  return total;
}

Rational mis_value(const WmisInstance& inst, const std::vector<int>& set) {
  Rational total = 0;
  for (int v : set) total += inst.weight[v];
  return total;
}

}  // namespace tww
