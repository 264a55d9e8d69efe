#pragma once
#include <chrono>
#include <cstdint>
#include <vector>

#include "tww/rational.hpp"
#include "tww/trigraph.hpp"

namespace tww {

struct OracleBudget {
  std::uint64_t node_limit = 200'000'000;
  std::int64_t time_limit_ms = 120'000;

  // Default budget, wall time capped by TWW_BUDGET_MS when set.
  static OracleBudget from_env();
};

struct WeightedSetResult {
  std::vector<int> set;  // sorted
  Rational value;
  std::uint64_t nodes = 0;
};

// Maximum-weight independent set over explicit bit rows (adj[v] must not contain v).
// Deterministic; throws BudgetExceeded.
WeightedSetResult max_weight_independent_set(const std::vector<Bits>& adj, const std::vector<Rational>& weight,
                                             const OracleBudget& budget);

}  // namespace tww
