#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "support.hpp"
#include "tww/balance.hpp"
#include "tww/contraction.hpp"
#include "tww/errors.hpp"
#include "tww/instances.hpp"
#include "tww/matrix.hpp"

using namespace tww;
using namespace tww::testing;

namespace {

bool rows_constant(const NeatlyDividedMatrix& m, int r0, int r1, int c0, int c1) {
  for (int i = r0; i < r1; ++i)
    for (int j = c0; j < c1; ++j)
      if (m.at(i, j) != m.at(i, c0)) return false;
  return true;
}

bool cols_constant(const NeatlyDividedMatrix& m, int r0, int r1, int c0, int c1) {
  for (int i = r0; i < r1; ++i)
    for (int j = c0; j < c1; ++j)
      if (m.at(i, j) != m.at(r0, j)) return false;
  return true;
}

// Mixed value straight from the definition, scanning every 2x2 window across each boundary.
int brute_mixed_value(const NeatlyDividedMatrix& m) {
  const int k = m.parts();
  auto mixed = [&](int p, int q) {
    for (int i = m.part_begin(p); i < m.part_end(p); ++i)
      for (int j = m.part_begin(q); j < m.part_end(q); ++j)
        if (m.at(i, j) != kRed) return false;
    return true;
  };
  auto window_is_corner = [&](int i, int j) {
    const int a = m.at(i, j), b = m.at(i, j + 1), c = m.at(i + 1, j), d = m.at(i + 1, j + 1);
    if (a == kRed || b == kRed || c == kRed || d == kRed) return false;
    return !(a == b && c == d) && !(a == c && b == d);
  };
  int best = 0;
  for (int p = 0; p < k; ++p) {
    int row = 0, col = 0;
    for (int q = 0; q < k; ++q) {
      row += mixed(p, q);
      col += mixed(q, p);
    }
    for (int q = 0; q + 1 < k; ++q) {
      const int c = m.part_end(q) - 1;
      bool row_cut = false, col_cut = false;
      for (int i = m.part_begin(p); i + 1 < m.part_end(p); ++i) row_cut = row_cut || window_is_corner(i, c);
      for (int j = m.part_begin(p); j + 1 < m.part_end(p); ++j) col_cut = col_cut || window_is_corner(c, j);
      if (!mixed(p, q) && !mixed(p, q + 1) && row_cut) ++row;
      if (!mixed(q, p) && !mixed(q + 1, p) && col_cut) ++col;
    }
    best = std::max({best, row, col});
  }
  return best;
}

NeatlyDividedMatrix random_symmetric(Rng& rng, int n, double p_one, double p_red) {
  NeatlyDividedMatrix m;
  m.n = n;
  m.entries.assign(static_cast<std::size_t>(n) * n, kZero);
  for (int i = 0; i < n; ++i) {
    m.starts.push_back(i);
    m.vmap.push_back(i);
    for (int j = i + 1; j < n; ++j) {
      const double x = std::uniform_real_distribution<double>(0, 1)(rng);
      m.put(i, j, x < p_red ? kRed : x < p_red + p_one ? kOne : kZero);
    }
  }
  return m;
}

BalanceParams permissive() {
  auto p = BalanceParams::make(1);
  p.apply_caps("mv=64,ps=64");
  return p;
}

}  // namespace

TEST_CASE("a 0,1 zone without a corner is horizontal or vertical (exhaustive up to 3x4)") {
  for (int rows = 1; rows <= 3; ++rows)
    for (int cols = 1; cols <= 4; ++cols) {
      const int cells = rows * cols;
      for (int mask = 0; mask < (1 << cells); ++mask) {
        const int n = std::max(rows, cols);
        NeatlyDividedMatrix m;
        m.n = n;
        m.entries.assign(static_cast<std::size_t>(n) * n, kZero);
        for (int c = 0; c < cells; ++c)
          m.entries[static_cast<std::size_t>(c / cols) * n + c % cols] = (mask >> c & 1) ? kOne : kZero;
        const bool corner = has_corner(m, 0, rows, 0, cols);
        const bool hv = rows_constant(m, 0, rows, 0, cols) || cols_constant(m, 0, rows, 0, cols);
        CHECK(corner == !hv);
      }
    }
}

TEST_CASE("statistics of tiny matrices") {
  const auto zero = matrix_from_rows({"000", "000", "000"});
  CHECK(mixed_value(zero) == 0);
  CHECK(red_number(zero) == 0);
  CHECK(is_neat(zero));
  const auto two = matrix_from_rows({"0r", "r0"});
  CHECK(mixed_value(two) == 1);
  CHECK(red_number(two) == 1);
  CHECK(part_size(two) == 1);

  Graph p4(4);
  p4.add_black(0, 1);
  p4.add_black(1, 2);
  p4.add_black(2, 3);
  const auto m = adjacency_matrix(p4, {0, 1, 2, 3});
  CHECK(mixed_value(m) == brute_mixed_value(m));
  CHECK(mixed_value(m) == 0);
  CHECK_THROWS_AS(matrix_from_rows({"00", "0"}), InputError);
}

TEST_CASE("red number of the five-part figure-1 quotient") {
  const auto fig = gen_figure1();
  const auto p = partition_at(fig.graph, fig.seq, 5);
  const auto q = quotient(fig.graph, p);
  std::vector<int> order(q.n());
  for (int i = 0; i < q.n(); ++i) order[i] = i;
  const auto m = adjacency_matrix(q, order);
  CHECK(red_number(m) == 2);
  // The two red pairs share the part {a,d}.
  CHECK(q.red_degree(p.part_of[0]) == 2);
}

TEST_CASE("conform matrices") {
  Graph k3(3);
  k3.add_black(0, 1);
  k3.add_black(0, 2);
  k3.add_black(1, 2);
  const ContractionSequence tri{3, {{0, 1, 3}, {3, 2, 4}}};
  const auto m = finest_conform_matrix(k3, tri);
  CHECK(m.vmap == std::vector<int>{0, 1, 2});
  CHECK(m.render() == "011\n101\n110\n");
  CHECK(m.parts() == 3);

  const auto e = finest_conform_matrix(Graph(4), ContractionSequence{4, {{0, 1, 4}, {2, 3, 5}, {4, 5, 6}}});
  CHECK(std::all_of(e.entries.begin(), e.entries.end(), [](std::uint8_t x) { return x == kZero; }));

  const auto fig = gen_figure1();
  // Contraction tree: 12=(10,11), 10=(8,g), 8=(a,d), 11=(9,c), 9=(b,7), 7=(e,f).
  CHECK(contraction_leaf_order(fig.seq) == std::vector<int>{0, 3, 6, 1, 4, 5, 2});
  CHECK(finest_conform_matrix(fig.graph, fig.seq).vmap == std::vector<int>{0, 3, 6, 1, 4, 5, 2});
}

TEST_CASE("coarsen_step on constant and twin-column matrices") {
  const auto twins = matrix_from_rows({"0011", "0011", "1100", "1100"});
  const auto r = coarsen_step(twins, permissive());
  CHECK(r.pairs.size() == 2);
  for (auto [x, y] : r.pairs) CHECK(r.matrix.column_equal(x, y));

  const auto zero = matrix_from_rows({"0000", "0000", "0000", "0000"});
  auto p = permissive();
  p.apply_caps("mv=8,ps=2");
  const auto z = coarsen_step(zero, p);
  CHECK(z.matrix.parts() == 2);
  CHECK(z.pairs.size() == 2);

  // The pair list agrees with an independent scan of the fused matrix.
  const auto fig = gen_figure1();
  const auto fm = finest_conform_matrix(fig.graph, fig.seq);
  const auto step = coarsen_step(fm, BalanceParams::make(2));
  const auto part = step.matrix.part_index();
  for (auto [x, y] : step.pairs) {
    CHECK(part[x] == part[y]);
    for (int i = 0; i < step.matrix.n; ++i)
      if (i != x && i != y) CHECK(step.matrix.at(i, x) == step.matrix.at(i, y));
  }
  CHECK(is_neat(step.matrix));
  if (!step.pairs.empty()) CHECK(is_neat(delete_rowcols(step.matrix, {step.pairs.front().second})));
}

TEST_CASE("delete_rowcols corner cases") {
  const auto m = matrix_from_rows({"01r", "10r", "rr0"});
  CHECK(delete_rowcols(m, {}).entries == m.entries);
  const auto one = delete_rowcols(m, {0, 2});
  CHECK(one.n == 1);
  CHECK(one.parts() == 1);
  CHECK(one.at(0, 0) == kZero);
  CHECK_THROWS_AS(delete_rowcols(m, {3}), InputError);
}

TEST_CASE("coarsening keeps the division neat and deletions never raise the statistics") {
  Rng rng(6);
  for (int it = 0; it < 60; ++it) {
    NeatlyDividedMatrix m;
    if (it % 2 == 0) {
      const auto inst = gen_by_uncontraction(uniform(rng, 4, 30), uniform(rng, 0, 3), rng());
      m = finest_conform_matrix(inst.graph, inst.seq);
    } else {
      m = random_symmetric(rng, uniform(rng, 2, 20), 0.4, 0.1);
    }
    auto params = BalanceParams::make(3);
    params.apply_caps("mv=" + std::to_string(uniform(rng, 2, 10)) + ",ps=" + std::to_string(uniform(rng, 2, 6)));
    for (int round = 0; round < 40 && m.n > 1; ++round) {
      CoarsenResult step;
      try {
        step = coarsen_step(m, params);
      } catch (const CoarseningStalled&) {
        break;
      }
      REQUIRE(is_neat(step.matrix));
      CHECK(mixed_value(step.matrix) == brute_mixed_value(step.matrix));
      if (step.pairs.empty()) {
        m = step.matrix;
        continue;
      }
      const auto next = delete_rowcols(step.matrix, {step.pairs.front().second});
      REQUIRE(is_neat(next));
      CHECK(mixed_value(next) <= mixed_value(step.matrix));
      CHECK(red_number(next) <= red_number(step.matrix));
      m = next;
    }
  }
}

TEST_CASE("caps parsing") {
  auto p = BalanceParams::make(1);
  p.apply_caps("mv=3,ps=5");
  CHECK(p.mixed_value_cap == 3);
  CHECK(p.part_size_cap == 5);
  p.apply_caps("practical");
  CHECK(p.mixed_value_cap == 8);
  CHECK(p.part_size_cap == 4);
  CHECK_THROWS_AS(p.apply_caps("mv=0"), InputError);
  CHECK_THROWS_AS(p.apply_caps("zz=3"), InputError);
  CHECK_THROWS_AS(p.apply_caps("nonsense"), InputError);
  p.apply_caps("theoretical");
  CHECK(p.theoretical);
  CHECK(p.part_size_cap >= 4);
  CHECK(BalanceParams::make(1).d == 4);
}

TEST_CASE("balanced partition on small inputs") {
  const auto one = balanced_partition(Graph(1), ContractionSequence{1, {}}, BalanceParams::make(0));
  CHECK(one.partition.size() == 1);
  CHECK(one.achieved_red_degree == 0);

  Graph k9(9);
  for (int u = 0; u < 9; ++u)
    for (int v = u + 1; v < 9; ++v) k9.add_black(u, v);
  ContractionSequence twins{9, {}};
  int last = 0;
  for (int i = 1; i < 9; ++i) {
    twins.steps.push_back({last, i, 8 + i});
    last = 8 + i;
  }
  const auto k = balanced_partition(k9, twins, BalanceParams::make(0));
  CHECK(k.partition.size() == 3);
  CHECK(k.achieved_red_degree == 0);
  CHECK(k.achieved_part_size <= 4 * 3);

  const auto fig = gen_figure1();
  const auto f = balanced_partition(fig.graph, fig.seq, BalanceParams::make(2));
  CHECK(f.partition.size() == 2);
  CHECK(f.achieved_red_degree == quotient(fig.graph, f.partition).max_red_degree());
  CHECK(f.achieved_part_size == f.partition.max_part_size());
}

TEST_CASE("balanced partitions of generated instances") {
  Rng rng(8);
  for (int it = 0; it < 40; ++it) {
    const int n = uniform(rng, 16, 120), d = uniform(rng, 0, 3);
    const auto inst = gen_by_uncontraction(n, d, rng());
    const auto res = balanced_partition(inst.graph, inst.seq, BalanceParams::make(d));
    const int k = static_cast<int>(std::floor(std::sqrt(static_cast<double>(n))));
    CHECK(res.partition.size() == k);
    CHECK(res.achieved_part_size <= 4 * std::sqrt(static_cast<double>(n)));
    CHECK(res.achieved_red_degree == quotient(inst.graph, res.partition).max_red_degree());

    // The provider's matrices restrict consistently.
    std::vector<int> first = res.partition.parts.front();
    const auto sub = res.provider.matrix_for_induced(first);
    CHECK(sub.n == static_cast<int>(first.size()));
    CHECK(is_neat(sub));
  }
}
