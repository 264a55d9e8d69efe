#pragma once
#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "tww/instances.hpp"
#include "tww/problems.hpp"
#include "tww/rational.hpp"
#include "tww/trigraph.hpp"

namespace tww::testing {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

inline Graph random_graph(Rng& rng, int n, double p) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng, p)) g.add_black(u, v);
  return g;
}

inline Trigraph random_trigraph(Rng& rng, int n, double p_black, double p_red) {
  Trigraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const double x = std::uniform_real_distribution<double>(0, 1)(rng);
      if (x < p_red) g.add_red(u, v);
      else if (x < p_red + p_black) g.add_black(u, v);
    }
  return g;
}

// Random graph with every vertex degree at most `max_deg`.
inline Graph random_bounded_degree(Rng& rng, int n, int max_deg, int attempts) {
  Graph g(n);
  for (int i = 0; i < attempts; ++i) {
    const int u = uniform(rng, 0, n - 1), v = uniform(rng, 0, n - 1);
    if (u == v || g.adjacent(u, v) || g.degree(u) >= max_deg || g.degree(v) >= max_deg) continue;
    g.add_black(u, v);
  }
  return g;
}

inline std::vector<Rational> random_weights(Rng& rng, int n, int max_num = 9, int max_den = 3) {
  std::vector<Rational> w(n);
  for (auto& x : w) x = Rational(uniform(rng, 1, max_num), uniform(rng, 1, max_den));
  return w;
}

inline std::vector<int> random_demand(Rng& rng, int n, int max_b) {
  std::vector<int> b(n);
  for (auto& x : b) x = uniform(rng, 1, max_b);
  return b;
}

// Roughly half of the edges, each with a small rational weight.
inline std::map<Edge, Rational> random_y(Rng& rng, const Graph& g, double keep = 0.6) {
  std::map<Edge, Rational> y;
  for (const auto& e : g.edges())
    if (coin(rng, keep)) y[e] = Rational(uniform(rng, 1, 5), uniform(rng, 1, 2));
  return y;
}

inline std::set<Edge> random_y_set(Rng& rng, const Graph& g, double keep = 0.7) {
  std::set<Edge> y;
  for (const auto& e : g.edges())
    if (coin(rng, keep)) y.insert(e);
  return y;
}

// All subsets of [0, n) as sorted vectors.
inline std::vector<std::vector<int>> all_subsets(int n) {
  std::vector<std::vector<int>> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> s;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1u) s.push_back(v);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace tww::testing
