#pragma once
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tww/balance.hpp"
#include "tww/contraction.hpp"
#include "tww/oracles.hpp"
#include "tww/problems.hpp"
#include "tww/rational.hpp"

namespace tww {

enum class RegimeMode { Exact, Fixed, Epsilon, Log };

struct RegimeParams {
  RegimeMode mode = RegimeMode::Exact;
  int q = 0;
  double epsilon = 0.5;
  int threshold = 3;
  // Profile constants; only c3 enters depth selection.
  double c1 = 1.0;
  double c2 = 0.5;
  double c3 = 1.0;

  // "exact", "q=<k>", "eps=<x>" or "log"; throws InputError.
  static RegimeParams parse(const std::string& spec);
  std::string describe() const;
};

// Depth for an n-vertex input whose per-level certified factor is `factor` (>= 1).
int choose_depth(long long n, const RegimeParams& regime, const Rational& factor);

struct Trace {
  int depth = 0;  // depth limit q in force
  std::uint64_t calls = 0;
  std::vector<int> d_eff_levels;    // max achieved quotient red degree per recursion level
  std::vector<int> size_levels;     // largest instance seen per level
  std::vector<int> base_size_levels;  // largest base-case instance per level (0: none)
  std::uint64_t base_calls = 0;
  int balance_fallbacks = 0;
  int clustered_fallbacks = 0;
  double size_ratio = 0;  // max child size / sqrt(parent size) over all subcalls
  double ms = 0;
  int max_base_size() const;
};

struct SolverConfig {
  RegimeParams regime;
  BalanceParams balance = BalanceParams::make(1);
  OracleConfig oracle{OracleBudget::from_env(), OracleLimits::desk()};
  std::uint64_t seed = 0;
  std::uint64_t call_limit = 20'000'000;
  bool clustered = false;
  int cluster_cap = 3;
  int pattern_cap = 4;
};

// Where a (sub)instance gets its balanced partition from.
struct Source {
  const ContractionSequence* seq = nullptr;
  std::optional<NeatlyDividedMatrix> matrix;
  int parent_n = 0;  // 0 at the root
};

class Driver {
 public:
  explicit Driver(SolverConfig cfg);

  const SolverConfig& config() const { return cfg_; }
  Trace& trace() { return trace_; }
  const Trace& trace() const { return trace_; }

  void set_depth_limit(int q);
  int depth_limit() const { return q_; }
  bool is_base(int n, int depth) const;

  void enter(int depth, int n, const Source& src);  // counts the call and records sizes
  void record_base(int depth, int n);
  BalancedPartitionResult partition(const Graph& g, const Source& src, int depth);
  void record_clustered_fallback() { ++trace_.clustered_fallbacks; }

  // Chooses the depth from the root partition when the regime asks for it; the partition is cached.
  void select_depth(const Graph& g, const Source& root, const std::function<Rational(int)>& level_factor);

  void finish();

 private:
  SolverConfig cfg_;
  Trace trace_;
  int q_ = 0;
  std::optional<BalancedPartitionResult> root_partition_;
  std::chrono::steady_clock::time_point start_;
};

// Child source for an induced subinstance G[vertices] / a cleanup of (G/P)[parts].
Source induced_source(const BalancedPartitionResult& bp, const std::vector<int>& vertices, int parent_n);
Source quotient_source(const BalancedPartitionResult& bp, const std::vector<int>& parts, int parent_n);

using Solution = std::variant<std::vector<int>, PaletteAssignment, std::vector<Edge>, std::vector<Star>>;

struct ApproxResult {
  std::string problem;
  int n = 0;
  Solution solution;
  Rational value;
  Rational certified_bound = 1;
  Trace trace;
};

}  // namespace tww
