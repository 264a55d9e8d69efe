#pragma once
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tww/contraction.hpp"
#include "tww/matrix.hpp"
#include "tww/trigraph.hpp"

namespace tww {

struct BalanceParams {
  int d_hat = 0;
  int d = 2;                // 2 * d_hat + 2
  long double c_d = 0;      // 8/3 (d+1)^2 2^(4d) unless overridden
  long double log2_s = 0;   // s = 2^(4 c_d + 4)
  long double log2_d_prime = 0;

  int mixed_value_cap = 8;
  int part_size_cap = 4;
  int red_degree_cap = 0;  // 0: not enforced
  bool theoretical = false;
  bool validity_scan = false;
  std::ostream* trace = nullptr;  // line trace of every round when set

  static BalanceParams make(int d_hat, std::optional<long double> c_d_override = std::nullopt);
  // "practical", "theoretical" or "mv=<k>,ps=<k>"; throws InputError.
  void apply_caps(const std::string& spec);
};

struct CoarseningStalled : std::runtime_error {
  CoarseningStalled(const std::string& what, int columns, int parts, int mixed)
      : std::runtime_error(what), columns(columns), parts(parts), mixed_value(mixed) {}
  int columns;
  int parts;
  int mixed_value;
};

struct CoarsenResult {
  NeatlyDividedMatrix matrix;
  std::vector<std::pair<int, int>> pairs;  // disjoint identical columns, each inside one part
  int fusions = 0;
  double s_eff = 0;  // columns per reported pair
};

// One greedy left-to-right fusion pass under the caps, then a scan for identical column pairs.
CoarsenResult coarsen_step(const NeatlyDividedMatrix& m, const BalanceParams& params);

class ConformProvider {
 public:
  ConformProvider() = default;
  ConformProvider(NeatlyDividedMatrix initial, NeatlyDividedMatrix final_matrix)
      : initial_(std::move(initial)), final_(std::move(final_matrix)) {}

  // Conform matrix of G[vertices]; vmap refers to positions in `vertices`.
  NeatlyDividedMatrix matrix_for_induced(const std::vector<int>& vertices) const;
  // Conform matrix of any cleanup of (G/P)[parts]; vmap refers to positions in `parts`.
  NeatlyDividedMatrix matrix_for_quotient(const std::vector<int>& parts) const;

  const NeatlyDividedMatrix& initial() const { return initial_; }
  const NeatlyDividedMatrix& final_matrix() const { return final_; }

 private:
  NeatlyDividedMatrix initial_;
  NeatlyDividedMatrix final_;
};

struct BalancedPartitionResult {
  VertexPartition partition;
  int achieved_part_size = 0;
  int achieved_red_degree = 0;
  bool balance_certified = true;
  std::string fallback;  // "", "prefix" or "forced-merge"
  int rounds = 0;
  int fusions = 0;
  double s_eff = 0;  // worst columns-per-pair ratio seen
  int max_mixed_value = 0;
  ConformProvider provider;
};

// Source may be a contraction sequence or a conform matrix (vmap: row -> vertex of g).
BalancedPartitionResult balanced_partition(const Trigraph& g, const ContractionSequence& seq,
                                           const BalanceParams& params);
BalancedPartitionResult balanced_partition(const Trigraph& g, const NeatlyDividedMatrix& m,
                                           const BalanceParams& params);

}  // namespace tww
