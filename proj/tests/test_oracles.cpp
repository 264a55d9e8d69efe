#include <doctest.h>

#include "brute.hpp"
#include "support.hpp"
#include "tww/coloring.hpp"
#include "tww/errors.hpp"
#include "tww/instances.hpp"
#include "tww/mis_bb.hpp"
#include "tww/oracles.hpp"

using namespace tww;
using namespace tww::testing;

namespace {

Graph complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_black(u, v);
  return g;
}

std::vector<Rational> ones(int n) { return std::vector<Rational>(n, 1); }

std::map<Edge, Rational> all_unit(const Graph& g) {
  std::map<Edge, Rational> y;
  for (const auto& e : g.edges()) y[e] = 1;
  return y;
}

std::set<Edge> all_edges(const Graph& g) {
  const auto e = g.edges();
  return {e.begin(), e.end()};
}

Graph path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_black(i, i + 1);
  return g;
}

}  // namespace

TEST_CASE("oracle values on named graphs") {
  CHECK(exact_mis({complete(5), ones(5)}).value == 1);
  CHECK(exact_mis({Graph(6), ones(6)}).value == 6);
  const auto fig = gen_figure1().graph;
  const auto mis = exact_mis({fig, ones(7)});
  CHECK(mis.value == 3);
  CHECK(check_independent(fig, mis.set).empty());

  CHECK(exact_set_coloring({complete(3), {1, 1, 1}}).colors == 3);
  CHECK(exact_set_coloring({complete(2), {2, 2}}).colors == 4);
  const auto col = exact_set_coloring({fig, std::vector<int>(7, 1)});
  CHECK(col.colors == 4);
  CHECK(check_set_coloring(fig, std::vector<int>(7, 1), col.palettes).empty());

  CHECK(exact_msim({complete(2), all_unit(complete(2))}).value == 1);
  Graph two_k2(4);
  two_k2.add_black(0, 1);
  two_k2.add_black(2, 3);
  CHECK(exact_msim({two_k2, all_unit(two_k2)}).value == 2);
  CHECK(exact_msim({fig, all_unit(fig)}).value == 1);

  Graph star(4);
  for (int l = 1; l < 4; ++l) star.add_black(0, l);
  CHECK(exact_mlisf({star, ones(4), all_edges(star)}).value == 3);
  Graph star4(5);
  for (int l = 1; l < 5; ++l) star4.add_black(0, l);
  CHECK(exact_mlisf({star4, ones(5), all_edges(star4)}).value == 4);
  CHECK(exact_mlisf({Graph(5), ones(5), {}}).value == 0);
  CHECK(exact_mief({path(5), ones(5), all_edges(path(5))}).value == 4);
  CHECK(exact_mief({Graph(4), ones(4), {}}).value == 0);

  AihpInstance k2_on_2k2{two_k2, complete(2), std::vector<int>(4, 0), {0, 0}, {}};
  CHECK(exact_aihp(k2_on_2k2).value == 2);
  Graph triangles(6);
  for (int base : {0, 3}) {
    triangles.add_black(base, base + 1);
    triangles.add_black(base + 1, base + 2);
    triangles.add_black(base, base + 2);
  }
  CHECK(exact_aihp({triangles, complete(3), std::vector<int>(6, 0), {0, 0, 0}, {}}).value == 2);
}

TEST_CASE("the figure-1 star forest optimum") {
  const auto fig = gen_figure1().graph;
  const StarForestInstance inst{fig, ones(7), all_edges(fig)};
  const auto s = exact_mlisf(inst);
  CHECK(check_star_forest(inst, s.stars).empty());
  CHECK(s.value == brute::star_forest(fig, ones(7), all_edges(fig)));
  CHECK(s.value == 3);
}

TEST_CASE("oracles agree with subset enumeration") {
  Rng rng(101);
  for (int it = 0; it < 120; ++it) {
    const int n = uniform(rng, 1, 9);
    const auto g = random_graph(rng, n, std::uniform_real_distribution<double>(0.1, 0.8)(rng));
    const auto w = random_weights(rng, n);

    const auto mis = exact_mis({g, w});
    CHECK(mis.value == brute::mis(g, w));
    CHECK(check_independent(g, mis.set).empty());
    CHECK(mis_value({g, w}, mis.set) == mis.value);

    if (n <= 6) {
      const auto b = random_demand(rng, n, 2);
      const auto col = exact_set_coloring({g, b});
      CHECK(col.colors == brute::set_chromatic(g, b));
      CHECK(check_set_coloring(g, b, col.palettes).empty());
    }

    const MsimInstance mi{g, random_y(rng, g)};
    if (mi.y_weight.size() <= 16) {
      const auto m = exact_msim(mi);
      CHECK(m.value == brute::induced_matching(g, mi.y_weight));
      CHECK(check_induced_matching(mi, m.edges).empty());
    }

    const StarForestInstance sf{g, w, random_y_set(rng, g)};
    const auto s = exact_mlisf(sf);
    CHECK(s.value == brute::star_forest(g, w, sf.y));
    CHECK(check_star_forest(sf, s.stars).empty());
    CHECK(star_forest_value(sf, s.stars) == s.value);

    const auto f = exact_mief(sf);
    CHECK(f.value == brute::induced_forest_edges(g, sf.y));
    CHECK(check_induced_forest(sf, f.vertices).empty());

    const std::vector<std::pair<int, int>> patterns{{1, 0}, {2, 1}, {3, 2}, {3, 3}};
    const auto [h, e] = patterns[it % patterns.size()];
    Graph pat = h == 1 ? Graph(1) : h == 2 ? complete(2) : e == 3 ? complete(3) : path(3);
    const AihpInstance ai{g, pat, std::vector<int>(n, 0), std::vector<int>(h, 0), {}};
    const auto a = exact_aihp(ai);
    CHECK(a.value == brute::small_pattern_packing(g, h, e));
    CHECK(check_packing(ai, a.vertices).empty());
  }
}

TEST_CASE("feasibility checkers reject bad solutions") {
  const auto fig = gen_figure1().graph;
  CHECK_FALSE(check_independent(fig, {0, 1}).empty());
  CHECK_FALSE(check_independent(fig, {0, 0}).empty());
  CHECK_FALSE(check_independent(fig, {9}).empty());
  CHECK_FALSE(check_set_coloring(fig, std::vector<int>(7, 1), PaletteAssignment(7, {0})).empty());
  CHECK_FALSE(check_set_coloring(complete(2), {2, 1}, {{0}, {1}}).empty());
  Graph p3 = path(3);
  const MsimInstance mi{p3, all_unit(p3)};
  CHECK_FALSE(check_induced_matching(mi, {{0, 1}, {1, 2}}).empty());
  const MsimInstance partial{p3, {{Edge{0, 1}, 1}}};
  CHECK_FALSE(check_induced_matching(partial, {{1, 2}}).empty());
  const StarForestInstance sf{path(4), ones(4), all_edges(path(4))};
  CHECK_FALSE(check_star_forest(sf, {{0, {1}}, {2, {3}}}).empty());
  CHECK(check_star_forest(sf, {{1, {0, 2}}}).empty());
  CHECK_FALSE(check_induced_forest({complete(3), ones(3), all_edges(complete(3))}, {0, 1, 2}).empty());
}

TEST_CASE("oracle limits and budgets") {
  OracleConfig tight;
  tight.limits.mis_n = 3;
  CHECK_THROWS_AS(exact_mis({Graph(4), ones(4)}, tight), InputError);
  std::vector<Bits> adj(40, Bits(40));
  Rng rng(4);
  for (int u = 0; u < 40; ++u)
    for (int v = u + 1; v < 40; ++v)
      if (coin(rng, 0.3)) {
        adj[u].set(v);
        adj[v].set(u);
      }
  OracleBudget budget;
  budget.node_limit = 5;
  CHECK_THROWS_AS(max_weight_independent_set(adj, ones(40), budget), BudgetExceeded);
  CHECK(OracleLimits::desk().mis_n >= 24);
  CHECK(OracleLimits::uniform(9).aihp_n == 9);
}

TEST_CASE("set chromatic number scales at most linearly with the demand") {
  Rng rng(77);
  for (int it = 0; it < 60; ++it) {
    const int n = uniform(rng, 1, 5);
    const auto g = random_graph(rng, n, 0.5);
    const auto b = random_demand(rng, n, 2);
    const OracleConfig desk{OracleBudget::from_env(), OracleLimits::desk()};
    const int base = exact_set_coloring({g, b}, desk).colors;
    for (int r : {2, 3}) {
      auto rb = b;
      for (auto& x : rb) x *= r;
      CHECK(exact_set_coloring({g, rb}, desk).colors <= r * base);
    }
  }
}

TEST_CASE("greedy colouring stays within max degree plus one") {
  Rng rng(31);
  for (int it = 0; it < 100; ++it) {
    const int n = uniform(rng, 1, 40);
    const auto g = random_bounded_degree(rng, n, uniform(rng, 0, 6), 4 * n);
    const auto c = greedy_degeneracy_coloring(g);
    CHECK(colors_used(c) <= g.max_degree() + 1);
    for (const auto& [u, v] : g.edges()) CHECK(c[u] != c[v]);
    int total = 0;
    for (const auto& cls : color_classes(c)) total += static_cast<int>(cls.size());
    CHECK(total == n);
  }
}

TEST_CASE("distance-2 edge colouring") {
  Graph pm(6);
  pm.add_black(0, 1);
  pm.add_black(2, 3);
  pm.add_black(4, 5);
  CHECK(distance2_edge_coloring(pm).colors == 1);
  CHECK(distance2_edge_coloring(complete(3)).colors == 3);
  const auto p5 = path(5);
  const auto c = distance2_edge_coloring(p5);
  CHECK(is_distance2_coloring(p5, c));
  CHECK(c.colors <= 5);
  CHECK(c.colors >= 3);  // edges 0-1, 1-2, 2-3 are pairwise within distance 2

  Rng rng(32);
  for (int it = 0; it < 100; ++it) {
    const int n = uniform(rng, 2, 30);
    const auto g = random_bounded_degree(rng, n, uniform(rng, 1, 5), 4 * n);
    const int delta = g.max_degree();
    const auto ec = distance2_edge_coloring(g);
    CHECK(is_distance2_coloring(g, ec));
    CHECK(ec.colors <= std::max(1, 2 * delta * (delta - 1) + 1));
  }
}

TEST_CASE("clustered colouring of small red graphs") {
  Graph c5(5);
  for (int i = 0; i < 5; ++i) c5.add_black(i, (i + 1) % 5);
  const auto col = clustered_coloring(c5, 2, 2);
  REQUIRE(col);
  for (const auto& cls : color_classes(*col))
    for (const auto& comp : brute::components(c5, cls)) CHECK(comp.size() <= 2);
  CHECK(clustered_coloring(Graph(4), 1, 1));
  CHECK_FALSE(clustered_coloring(complete(4), 1, 3));
  const auto edge = clustered_coloring(complete(2), 1, 2);
  REQUIRE(edge);
  CHECK(colors_used(*edge) == 1);
}
