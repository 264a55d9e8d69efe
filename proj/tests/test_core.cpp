#include <doctest.h>

#include <algorithm>

#include "support.hpp"
#include "tww/contraction.hpp"
#include "tww/errors.hpp"
#include "tww/instances.hpp"
#include "tww/trigraph.hpp"

using namespace tww;
using namespace tww::testing;

namespace {

enum { A, B, C, D, E, F, G };

std::vector<std::vector<int>> sorted_parts(const VertexPartition& p) {
  auto parts = p.parts;
  for (auto& q : parts) std::sort(q.begin(), q.end());
  std::sort(parts.begin(), parts.end());
  return parts;
}

// Quotient relation recomputed from the definition: homogeneous black, homogeneous absent, else red.
Rel brute_quotient_rel(const Trigraph& g, const std::vector<int>& x, const std::vector<int>& y) {
  bool all_black = true, none = true;
  for (int u : x)
    for (int v : y) {
      if (g.red(u, v)) return Rel::Red;
      if (g.black(u, v)) none = false; else all_black = false;
    }
  if (all_black) return Rel::Black;
  if (none) return Rel::None;
  return Rel::Red;
}

}  // namespace

TEST_CASE("figure-1 graph has 13 edges and the labels a..g") {
  const auto fig = gen_figure1();
  CHECK(fig.graph.n() == 7);
  CHECK(fig.graph.black_count() == 13);
  CHECK(fig.graph.is_graph());
  REQUIRE(fig.graph.labels.size() == 7);
  CHECK(fig.graph.labels[A] == "a");
  CHECK(fig.graph.labels[G] == "g");
}

TEST_CASE("quotient of figure 1 at {e,f}") {
  const auto g = gen_figure1().graph;
  const auto p = VertexPartition::from_parts(7, {{A}, {B}, {C}, {D}, {E, F}, {G}});
  const auto q = quotient(g, p);
  const int ef = p.part_of[E];
  CHECK(q.red(p.part_of[A], ef));
  CHECK(q.red(p.part_of[D], ef));
  CHECK(q.black(p.part_of[B], ef));
  CHECK(q.black(p.part_of[C], ef));
  CHECK(q.black(p.part_of[G], ef));
  CHECK(q.red_count() == 2);
  for (int u : {A, B, C, D, G})
    for (int v : {A, B, C, D, G})
      if (u < v) CHECK(q.black(p.part_of[u], p.part_of[v]) == g.black(u, v));
}

TEST_CASE("quotient by singletons is the identity and K4 by pairs is one black edge") {
  Rng rng(11);
  for (int it = 0; it < 20; ++it) {
    const auto g = random_trigraph(rng, uniform(rng, 1, 9), 0.4, 0.2);
    CHECK(quotient(g, VertexPartition::singletons(g.n())) == g);
  }
  Graph k4(4);
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) k4.add_black(u, v);
  const auto q = quotient(k4, VertexPartition::from_parts(4, {{0, 1}, {2, 3}}));
  CHECK(q.n() == 2);
  CHECK(q.black(0, 1));
  CHECK(q.red_count() == 0);
}

TEST_CASE("quotient matches the definition on random trigraphs") {
  Rng rng(12);
  for (int it = 0; it < 200; ++it) {
    const int n = uniform(rng, 1, 10);
    const auto g = random_trigraph(rng, n, 0.4, 0.15);
    std::vector<int> label(n);
    const int k = uniform(rng, 1, n);
    for (auto& x : label) x = uniform(rng, 0, k - 1);
    const auto p = VertexPartition::from_labels(label);
    const auto q = quotient(g, p);
    REQUIRE(q.n() == p.size());
    for (int x = 0; x < p.size(); ++x)
      for (int y = x + 1; y < p.size(); ++y) CHECK(q.rel(x, y) == brute_quotient_rel(g, p.parts[x], p.parts[y]));
  }
}

TEST_CASE("partition validation rejects overlaps and gaps") {
  CHECK_THROWS_AS(VertexPartition::from_parts(3, {{0, 1}, {1, 2}}), InputError);
  CHECK_THROWS_AS(VertexPartition::from_parts(3, {{0, 1}}), InputError);
  CHECK_THROWS_AS(VertexPartition::from_parts(2, {{0}, {}, {1}}), InputError);
}

TEST_CASE("cleanup and the three views") {
  Trigraph g(3);
  g.add_red(0, 1);
  g.add_black(1, 2);
  const auto c = cleanup(g, {{Edge{0, 1}, Resolution::Black}});
  CHECK(c.is_graph());
  CHECK(c.black(0, 1));
  CHECK(c.black(1, 2));
  const auto v = views(g);
  CHECK(v.total_graph.black_count() == 2);
  CHECK(v.red_graph.black_count() + v.red_graph.red_count() == 1);
  CHECK(v.black_graph.black_count() == 1);
  CHECK(cleanup(g, {{Edge{0, 1}, Resolution::Absent}}).black_count() == 1);
  CHECK(cleanup(g, {}) == g);
  CHECK_THROWS(cleanup(g, {{Edge{1, 2}, Resolution::Absent}}));

  Graph k(3);
  k.add_black(0, 2);
  CHECK(cleanup(k, {}) == k);
  CHECK(red_graph(k).edges().empty());
}

TEST_CASE("views of the three-part quotient of figure 1") {
  const auto fig = gen_figure1();
  const auto p = partition_at(fig.graph, fig.seq, 3);
  const auto q = quotient(fig.graph, p);
  const int adg = p.part_of[A], bef = p.part_of[B], c = p.part_of[C];
  const auto rg = red_graph(q), bg = black_graph(q);
  CHECK(rg.edges() == std::vector<Edge>{normalized(adg, bef)});
  CHECK(bg.edges() == std::vector<Edge>{normalized(c, bef)});
  CHECK(total_graph(q).edges().size() == 2);
}

TEST_CASE("induced subtrigraph") {
  const auto g = gen_figure1().graph;
  const auto s = induced_subtrigraph(g, {B, D, E});
  CHECK(s.graph.black_count() == 3);
  CHECK(s.vertices == std::vector<int>{B, D, E});
  CHECK(induced_subtrigraph(g, {}).graph.n() == 0);
  std::vector<int> all(7);
  for (int i = 0; i < 7; ++i) all[i] = i;
  CHECK(induced_subtrigraph(g, all).graph == g);
  CHECK_THROWS_AS(induced_subtrigraph(g, {1, 1}), InputError);
  CHECK_THROWS_AS(induced_subtrigraph(g, {9}), InputError);
}

TEST_CASE("contracting e and f in figure 1") {
  const auto g = gen_figure1().graph;
  const auto h = apply_contraction(g, E, F);
  REQUIRE(h.n() == 6);
  const int w = 5;  // merged vertex last; a,b,c,d,g keep their order
  CHECK(h.red_count() == 2);
  CHECK(h.red(0, w));  // a
  CHECK(h.red(3, w));  // d
  CHECK(h.black(1, w));
  CHECK(h.black(2, w));
  CHECK(h.black(4, w));  // g
}

TEST_CASE("twin contraction creates no red edge") {
  Rng rng(5);
  for (int it = 0; it < 50; ++it) {
    auto g = random_graph(rng, uniform(rng, 3, 9), 0.5);
    const int n = g.n();
    // Make vertex n-1 a false twin of vertex 0.
    for (int v = 1; v < n - 1; ++v) g.set(n - 1, v, g.black(0, v) ? Rel::Black : Rel::None);
    g.set(0, n - 1, Rel::None);
    CHECK(apply_contraction(g, 0, n - 1).red_count() == 0);
  }
  Graph h(3);
  h.add_black(0, 1);
  const auto c = apply_contraction(h, 0, 1);
  CHECK(c.n() == 2);
  CHECK(c.edges().empty());
}

TEST_CASE("figure-1 sequence has width 2 and the panel partitions") {
  const auto fig = gen_figure1();
  const auto rep = verify_sequence(fig.graph, fig.seq);
  CHECK(rep.width == 2);
  CHECK(fig.seq.full());
  CHECK(rep.per_step.size() == 6);
  CHECK(sorted_parts(partition_at(fig.graph, fig.seq, 7)) == sorted_parts(VertexPartition::singletons(7)));
  CHECK(sorted_parts(partition_at(fig.graph, fig.seq, 5)) ==
        std::vector<std::vector<int>>{{A, D}, {B}, {C}, {E, F}, {G}});
  CHECK(sorted_parts(partition_at(fig.graph, fig.seq, 3)) ==
        std::vector<std::vector<int>>{{A, D, G}, {B, E, F}, {C}});
  CHECK(partition_at(fig.graph, fig.seq, 1).size() == 1);
}

TEST_CASE("P4 replay and complete graphs") {
  Graph p4(4);
  p4.add_black(0, 1);
  p4.add_black(1, 2);
  p4.add_black(2, 3);
  const ContractionSequence seq{4, {{0, 1, 4}, {2, 3, 5}, {4, 5, 6}}};
  const auto rep = verify_sequence(p4, seq);
  CHECK(rep.per_step == std::vector<int>{1, 1, 0});
  CHECK(rep.width == 1);

  for (int n = 1; n <= 8; ++n) {
    Graph k(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) k.add_black(u, v);
    ContractionSequence s{n, {}};
    int last = 0;
    for (int i = 1; i < n; ++i) {
      s.steps.push_back({last, i, n + i - 1});
      last = n + i - 1;
    }
    CHECK(verify_sequence(k, s).width == 0);
  }
}

TEST_CASE("sequence errors carry the step index") {
  const auto fig = gen_figure1();
  auto bad = fig.seq;
  bad.steps[2].u = 4;  // already merged at step 0
  try {
    verify_sequence(fig.graph, bad);
    FAIL("expected SequenceError");
  } catch (const SequenceError& e) {
    CHECK(e.step == 2);
  }
  auto fresh = fig.seq;
  fresh.steps[1].w = 20;
  CHECK_THROWS_AS(verify_sequence(fig.graph, fresh), SequenceError);
}

TEST_CASE("width equals the recomputed red degree of every intermediate quotient") {
  Rng rng(21);
  for (int it = 0; it < 40; ++it) {
    const int n = uniform(rng, 2, 14), d = uniform(rng, 0, 3);
    const auto inst = gen_by_uncontraction(n, d, rng());
    const auto rep = verify_sequence(inst.graph, inst.seq);
    CHECK(rep.width <= d);
    int worst = 0;
    for (int parts = n - 1; parts >= 1; --parts)
      worst = std::max(worst, quotient(inst.graph, partition_at(inst.graph, inst.seq, parts)).max_red_degree());
    CHECK(worst == rep.width);
  }
}

TEST_CASE("generators") {
  CHECK(gen_cograph(1, 0).graph.n() == 1);
  CHECK(gen_cograph(1, 0).seq.steps.empty());
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto c = gen_cograph(10, seed);
    CHECK(c.graph.n() == 10);
    CHECK(verify_sequence(c.graph, c.seq).width == 0);
  }
  CHECK(verify_sequence(gen_cograph(10, 7).graph, gen_cograph(10, 7).seq).width == 0);
  CHECK(gen_by_uncontraction(1, 2, 0).graph.n() == 1);
  const auto u = gen_by_uncontraction(20, 2, 3);
  CHECK(u.graph.n() == 20);
  CHECK(u.graph.is_graph());
  CHECK(verify_sequence(u.graph, u.seq).width <= 2);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto z = gen_by_uncontraction(12, 0, seed);
    CHECK(verify_sequence(z.graph, z.seq).width == 0);
  }
  const auto again = gen_by_uncontraction(20, 2, 3);
  CHECK(again.graph == u.graph);
  CHECK(again.seq == u.seq);
}

TEST_CASE("greedy sequences") {
  Graph k(6);
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b) k.add_black(a, b);
  auto res = greedy_sequence(k, 0);
  REQUIRE(res.seq);
  CHECK(verify_sequence(k, *res.seq).width == 0);
  res = greedy_sequence(Graph(5), 0);
  REQUIRE(res.seq);
  CHECK(res.width == 0);
  const auto fig = gen_figure1();
  res = greedy_sequence(fig.graph, 2);
  REQUIRE(res.seq);
  CHECK(verify_sequence(fig.graph, *res.seq).width <= 2);

  Rng rng(3);
  for (int it = 0; it < 60; ++it) {
    const auto g = random_graph(rng, uniform(rng, 1, 16), 0.4);
    const auto r = greedy_sequence(g, 2);
    const int replay = verify_sequence(g, r.attempted).width;
    CHECK(r.width >= replay);
    CHECK(r.attempted.full());
    if (r.seq) CHECK(replay <= 2);
  }
}
