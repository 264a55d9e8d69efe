#pragma once
#include <optional>
#include <string>

#include "tww/driver.hpp"
#include "tww/io.hpp"
#include "tww/oracles.hpp"

namespace tww {

// A problem name ("mis", "setcol", "msim", "mlisf", "mief", "aihp") with its parsed files.
struct ProblemInput {
  std::string problem;
  InstanceData data;
  std::optional<Graph> pattern;  // aihp only
};

bool is_known_problem(const std::string& problem);
bool is_minimization(const std::string& problem);

WmisInstance make_mis(const InstanceData& d);
SetColoringInstance make_set_coloring(const InstanceData& d);
MsimInstance make_msim(const InstanceData& d);
StarForestInstance make_star_forest(const InstanceData& d);
AihpInstance make_aihp(const InstanceData& d, const Graph& pattern);

ApproxResult run_approx(const ProblemInput& in, const ContractionSequence& seq, const SolverConfig& cfg);

struct OracleOutcome {
  Rational value;
  Solution solution;
};
OracleOutcome run_oracle(const ProblemInput& in, const OracleConfig& cfg);

// OPT/value for maximisation, value/OPT for set colouring; nullopt when unbounded.
std::optional<Rational> realized_ratio(const std::string& problem, const Rational& value, const Rational& opt);

}  // namespace tww
