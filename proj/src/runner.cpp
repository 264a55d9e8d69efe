#include "tww/runner.hpp"

#include "tww/errors.hpp"
#include "tww/solvers.hpp"

namespace tww {

bool is_known_problem(const std::string& p) {
  return p == "mis" || p == "setcol" || p == "msim" || p == "mlisf" || p == "mief" || p == "aihp";
}

bool is_minimization(const std::string& p) { return p == "setcol"; }

WmisInstance make_mis(const InstanceData& d) { return {d.graph, d.vertex_weight}; }

SetColoringInstance make_set_coloring(const InstanceData& d) { return {d.graph, d.demand}; }

MsimInstance make_msim(const InstanceData& d) {
  MsimInstance inst{d.graph, {}};
  for (const auto& e : d.prescribed_edges()) inst.y_weight[e] = d.edge_weight_of(e.first, e.second);
  return inst;
}

StarForestInstance make_star_forest(const InstanceData& d) {
  StarForestInstance inst{d.graph, d.vertex_weight, {}};
  for (const auto& e : d.prescribed_edges()) inst.y.insert(e);
  return inst;
}

AihpInstance make_aihp(const InstanceData& d, const Graph& pattern) {
  AihpInstance inst{d.graph, pattern, d.host_label, std::vector<int>(pattern.n(), 0), {true, d.tuple_weight}};
  for (const auto& [x, label] : d.pattern_label) {
    if (x >= pattern.n()) throw InputError("pattern label on vertex " + std::to_string(x) + " out of range");
    inst.pattern_label[x] = label;
  }
  return inst;
}

namespace {
const Graph& need_pattern(const ProblemInput& in) {
  if (!in.pattern) throw InputError("problem aihp needs a pattern graph");
  return *in.pattern;
}
void need_graph(const InstanceData& d) {
  if (!d.graph.is_graph()) throw InputError("the input must be a graph (no red edges)");
}
}  // namespace

ApproxResult run_approx(const ProblemInput& in, const ContractionSequence& seq, const SolverConfig& cfg) {
  need_graph(in.data);
  if (seq.origin != in.data.graph.n()) throw InputError("sequence origin does not match the graph");
  const auto& p = in.problem;
  if (p == "mis") return approx_mis(make_mis(in.data), seq, cfg);
  if (p == "setcol") return approx_set_coloring(make_set_coloring(in.data), seq, cfg);
  if (p == "msim") return approx_msim(make_msim(in.data), seq, cfg);
  if (p == "mlisf") return approx_mlisf(make_star_forest(in.data), seq, cfg);
  if (p == "mief") return approx_mief(make_star_forest(in.data), seq, cfg);
  if (p == "aihp") return approx_aihp(make_aihp(in.data, need_pattern(in)), seq, cfg);
  throw InputError("unknown problem '" + p + "'");
}

OracleOutcome run_oracle(const ProblemInput& in, const OracleConfig& cfg) {
  need_graph(in.data);
  const auto& p = in.problem;
  if (p == "mis") {
    auto s = exact_mis(make_mis(in.data), cfg);
    return {s.value, std::move(s.set)};
  }
  if (p == "setcol") {
    auto s = exact_set_coloring(make_set_coloring(in.data), cfg);
    return {s.colors, std::move(s.palettes)};
  }
  if (p == "msim") {
    auto s = exact_msim(make_msim(in.data), cfg);
    return {s.value, std::move(s.edges)};
  }
  if (p == "mlisf") {
    auto s = exact_mlisf(make_star_forest(in.data), cfg);
    return {s.value, std::move(s.stars)};
  }
  if (p == "mief") {
    auto s = exact_mief(make_star_forest(in.data), cfg);
    return {s.value, std::move(s.vertices)};
  }
  if (p == "aihp") {
    auto s = exact_aihp(make_aihp(in.data, need_pattern(in)), cfg);
    return {s.value, std::move(s.vertices)};
  }
  throw InputError("unknown problem '" + p + "'");
}

std::optional<Rational> realized_ratio(const std::string& problem, const Rational& value, const Rational& opt) {
  const Rational& num = is_minimization(problem) ? value : opt;
  const Rational& den = is_minimization(problem) ? opt : value;
  if (num == 0) return Rational(1);
  if (den == 0) return std::nullopt;
  return num / den;
}

}  // namespace tww
