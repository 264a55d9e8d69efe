#include "tww/driver.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <sstream>

#include "tww/errors.hpp"
#include "tww/instances.hpp"

namespace tww {

RegimeParams RegimeParams::parse(const std::string& spec) {
  RegimeParams r;
  try {
    if (spec == "exact") {
      r.mode = RegimeMode::Exact;
    } else if (spec == "log") {
      r.mode = RegimeMode::Log;
    } else if (spec.rfind("q=", 0) == 0) {
      std::size_t used = 0;
      r.q = std::stoi(spec.substr(2), &used);
      if (used != spec.size() - 2 || r.q < 0) throw InputError("bad depth");
      r.mode = RegimeMode::Fixed;
    } else if (spec.rfind("eps=", 0) == 0) {
      std::size_t used = 0;
      r.epsilon = std::stod(spec.substr(4), &used);
      if (used != spec.size() - 4 || !(r.epsilon > 0)) throw InputError("bad epsilon");
      r.mode = RegimeMode::Epsilon;
    } else {
      throw InputError("unknown regime");
    }
  } catch (const std::logic_error&) {
    throw InputError("regime '" + spec + "': expected exact, q=<k>, eps=<x> or log");
  } catch (const InputError&) {
    throw InputError("regime '" + spec + "': expected exact, q=<k>, eps=<x> or log");
  }
  return r;
}

std::string RegimeParams::describe() const {
  std::ostringstream out;
  switch (mode) {
    case RegimeMode::Exact: out << "exact"; break;
    case RegimeMode::Fixed: out << "q=" << q; break;
    case RegimeMode::Epsilon: out << "eps=" << epsilon; break;
    case RegimeMode::Log: out << "log"; break;
  }
  return out.str();
}

int choose_depth(long long n, const RegimeParams& regime, const Rational& factor) {
  if (regime.mode == RegimeMode::Exact) return 0;
  if (regime.mode == RegimeMode::Fixed) return std::max(0, regime.q);
  if (n < 2) return 0;
  const double log_n = std::log2(static_cast<double>(n));
  const double budget = regime.mode == RegimeMode::Epsilon ? regime.epsilon * log_n : std::log2(log_n);
  const double log_f = std::log2(std::max(1.0, static_cast<double>(factor)));
  if (log_f <= 0) return std::max(0, static_cast<int>(std::ceil(std::log2(std::max(1.0, log_n)))));
  int q = 0;
  while (q < 40 && regime.c3 * (std::ldexp(1.0, q + 1) - 1) * log_f <= budget) ++q;
  return q;
}

int Trace::max_base_size() const {
  int best = 0;
  for (int s : base_size_levels) best = std::max(best, s);
  return best;
}

Driver::Driver(SolverConfig cfg) : cfg_(std::move(cfg)), start_(std::chrono::steady_clock::now()) {
  q_ = choose_depth(1, cfg_.regime, 1);
  trace_.depth = q_;
}

void Driver::set_depth_limit(int q) {
  q_ = std::max(0, q);
  trace_.depth = q_;
}

bool Driver::is_base(int n, int depth) const {
  if (depth >= q_ || n <= cfg_.regime.threshold) return true;
  return static_cast<int>(std::sqrt(static_cast<double>(n))) < 2;
}

namespace {
void bump(std::vector<int>& levels, int depth, int value) {
  if (static_cast<int>(levels.size()) <= depth) levels.resize(depth + 1, 0);
  levels[depth] = std::max(levels[depth], value);
}
}  // namespace

void Driver::enter(int depth, int n, const Source& src) {
  if (++trace_.calls > cfg_.call_limit) throw BudgetExceeded("recursion call limit exceeded");
  bump(trace_.size_levels, depth, n);
  if (src.parent_n > 0)
    trace_.size_ratio = std::max(trace_.size_ratio, n / std::sqrt(static_cast<double>(src.parent_n)));
}

void Driver::record_base(int depth, int n) {
  ++trace_.base_calls;
  bump(trace_.base_size_levels, depth, n);
}

BalancedPartitionResult Driver::partition(const Graph& g, const Source& src, int depth) {
  BalancedPartitionResult res;
  if (depth == 0 && root_partition_) {
    res = *root_partition_;
  } else if (src.matrix) {
    res = balanced_partition(g, *src.matrix, cfg_.balance);
  } else if (src.seq) {
    res = balanced_partition(g, *src.seq, cfg_.balance);
  } else {
    const auto greedy = greedy_sequence(g, INT_MAX);
    res = balanced_partition(g, greedy.attempted, cfg_.balance);
  }
  if (depth == 0 && !root_partition_) root_partition_ = res;
  bump(trace_.d_eff_levels, depth, res.achieved_red_degree);
  if (!res.balance_certified) ++trace_.balance_fallbacks;
  return res;
}

void Driver::select_depth(const Graph& g, const Source& root, const std::function<Rational(int)>& level_factor) {
  const RegimeMode mode = cfg_.regime.mode;
  if (mode == RegimeMode::Exact || mode == RegimeMode::Fixed) {
    set_depth_limit(choose_depth(g.n(), cfg_.regime, 1));
    return;
  }
  if (g.n() <= cfg_.regime.threshold || g.n() < 4) {
    set_depth_limit(0);
    return;
  }
  const auto bp = partition(g, root, 0);
  set_depth_limit(choose_depth(g.n(), cfg_.regime, level_factor(bp.achieved_red_degree)));
  // The recorded level statistics belong to the solve proper.
  trace_.d_eff_levels.clear();
  trace_.balance_fallbacks = 0;
}

void Driver::finish() {
  trace_.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  trace_.depth = q_;
}

Source induced_source(const BalancedPartitionResult& bp, const std::vector<int>& vertices, int parent_n) {
  Source s;
  s.matrix = bp.provider.matrix_for_induced(vertices);
  s.parent_n = parent_n;
  return s;
}

Source quotient_source(const BalancedPartitionResult& bp, const std::vector<int>& parts, int parent_n) {
  Source s;
  s.matrix = bp.provider.matrix_for_quotient(parts);
  s.parent_n = parent_n;
  return s;
}

}  // namespace tww
