#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <climits>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tww/balance.hpp"
#include "tww/contraction.hpp"
#include "tww/errors.hpp"
#include "tww/instances.hpp"
#include "tww/io.hpp"
#include "tww/report.hpp"
#include "tww/runner.hpp"

namespace tww::cli {

namespace {

struct SolveOptions {
  std::string problem = "mis";
  std::string graph;
  std::string seq;
  std::string pattern;
  std::string prescribed;
  std::string regime = "exact";
  int threshold = 3;
  std::uint64_t seed = 0;
  std::string caps = "practical";
  bool clustered = false;
  int cluster_cap = 3;
  bool trace_balance = false;
};

void add_solve_flags(CLI::App* cmd, SolveOptions& o, bool with_regime) {
  cmd->add_option("graph", o.graph, "graph file (tgf)")->required();
  cmd->add_option("seq", o.seq, "contraction sequence file; a greedy sequence is built when absent");
  cmd->add_option("--problem", o.problem, "mis|setcol|msim|mlisf|mief|aihp");
  cmd->add_option("--pattern", o.pattern, "pattern graph file for aihp");
  cmd->add_option("--prescribed", o.prescribed, "file of 'y u v' lines restricting usable edges");
  if (with_regime) {
    cmd->add_option("--regime", o.regime, "exact|q=<k>|eps=<x>|log");
    cmd->add_option("--threshold", o.threshold, "base-case size threshold");
    cmd->add_option("--seed", o.seed, "seed for every randomised choice");
    cmd->add_option("--caps", o.caps, "theoretical|practical|mv=<k>,ps=<k>");
    cmd->add_flag("--clustered", o.clustered, "clustered colouring for mis");
    cmd->add_option("--cluster-cap", o.cluster_cap, "largest monochromatic component for --clustered");
    cmd->add_flag("--trace-balance", o.trace_balance, "per-round division dump on stderr");
  }
}

std::set<Edge> read_prescribed(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::set<Edge> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream tokens(line);
    std::string kind;
    if (!(tokens >> kind)) continue;
    int u, v;
    std::string extra;
    if (kind != "y" || !(tokens >> u >> v) || (tokens >> extra))
      throw InputError(path + ":" + std::to_string(line_no) + ": expected 'y u v'");
    out.insert(normalized(u, v));
  }
  return out;
}

ProblemInput load_input(const SolveOptions& o) {
  if (!is_known_problem(o.problem)) throw InputError("unknown problem '" + o.problem + "'");
  ProblemInput in{o.problem, read_instance_file(o.graph), std::nullopt};
  if (!o.prescribed.empty()) {
    const auto y = read_prescribed(o.prescribed);
    for (const auto& e : y) {
      if (e.first < 0 || e.second >= in.data.graph.n() || !in.data.graph.adjacent(e.first, e.second))
        throw InputError("prescribed pair is not an edge");
    }
    in.data.prescribed = y;
  }
  if (!o.pattern.empty()) in.pattern = read_instance_file(o.pattern).graph;
  return in;
}

ContractionSequence load_sequence(const SolveOptions& o, const Graph& g) {
  if (!o.seq.empty()) {
    auto seq = read_sequence_file(o.seq);
    verify_sequence(g, seq);
    return seq;
  }
  return greedy_sequence(g, INT_MAX).attempted;
}

SolverConfig make_config(const SolveOptions& o, const ContractionSequence& seq, const Graph& g) {
  SolverConfig cfg;
  cfg.regime = RegimeParams::parse(o.regime);
  if (o.threshold < 1) throw InputError("threshold must be at least 1");
  cfg.regime.threshold = o.threshold;
  cfg.seed = o.seed;
  cfg.balance = BalanceParams::make(verify_sequence(g, seq).width);
  cfg.balance.apply_caps(o.caps);
  if (o.trace_balance) cfg.balance.trace = &std::cerr;
  cfg.clustered = o.clustered;
  if (o.cluster_cap < 1) throw InputError("cluster cap must be at least 1");
  cfg.cluster_cap = o.cluster_cap;
  return cfg;
}

Json oracle_json(const std::string& problem, int n, const OracleOutcome& r) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["problem"] = problem;
  j["n"] = n;
  j["value"] = rational_to_string(r.value);
  j["solution"] = solution_to_json(r.solution);
  return j;
}

struct CheckOutcome {
  ApproxResult approx;
  OracleOutcome oracle;
  std::optional<Rational> realized;
  bool ok = false;
};

CheckOutcome run_check(const ProblemInput& in, const ContractionSequence& seq, const SolverConfig& cfg) {
  CheckOutcome c{run_approx(in, seq, cfg), run_oracle(in, cfg.oracle), std::nullopt, false};
  c.realized = realized_ratio(in.problem, c.approx.value, c.oracle.value);
  c.ok = c.realized && *c.realized <= c.approx.certified_bound;
  return c;
}

std::string fmt_double(const Rational& r) {
  std::ostringstream s;
  s << static_cast<double>(r);
  return s.str();
}

int cmd_bench(const std::string& manifest, const std::string& csv_path, std::ostream& out) {
  std::ifstream in(manifest);
  if (!in) throw InputError("cannot open " + manifest);
  const auto base = std::filesystem::path(manifest).parent_path();
  auto resolve = [&](const std::string& p) { return std::filesystem::path(p).is_absolute() ? p : (base / p).string(); };
  struct Row {
    std::string id, text;
  };
  std::vector<Row> rows;
  std::string line;
  int line_no = 0;
  bool violation = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream tokens(line);
    SolveOptions o;
    std::string id;
    if (!(tokens >> id)) continue;
    if (!(tokens >> o.graph >> o.seq >> o.problem >> o.regime))
      throw InputError(manifest + ":" + std::to_string(line_no) + ": expected '<id> <graph> <seq> <problem> <regime> [pattern]'");
    tokens >> o.pattern;
    o.graph = resolve(o.graph);
    o.seq = resolve(o.seq);
    if (!o.pattern.empty()) o.pattern = resolve(o.pattern);
    const ProblemInput pin = load_input(o);
    const ContractionSequence seq = load_sequence(o, pin.data.graph);
    const SolverConfig cfg = make_config(o, seq, pin.data.graph);
    const ApproxResult r = run_approx(pin, seq, cfg);
    std::string opt, realized;
    try {
      const auto orc = run_oracle(pin, cfg.oracle);
      opt = rational_to_string(orc.value);
      const auto ratio = realized_ratio(pin.problem, r.value, orc.value);
      realized = ratio ? rational_to_string(*ratio) : "inf";
      if (!ratio || *ratio > r.certified_bound) violation = true;
    } catch (const InputError&) {
    } catch (const BudgetExceeded&) {
    }
    int d_eff = 0;
    for (int d : r.trace.d_eff_levels) d_eff = std::max(d_eff, d);
    std::ostringstream row;
    row << id << ',' << r.n << ',' << d_eff << ',' << r.trace.depth << ',' << rational_to_string(r.value) << ',' << opt
        << ',' << rational_to_string(r.certified_bound) << ',' << realized << ',' << r.trace.ms;
    rows.push_back({id, row.str()});
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.id < b.id; });
  std::ostringstream csv;
  csv << "instance,n,d_eff,q,value,opt,certified,realized,ms\n";
  for (const auto& r : rows) csv << r.text << '\n';
  if (csv_path.empty()) {
    out << csv.str();
  } else {
    std::ofstream f(csv_path);
    if (!f) throw InputError("cannot write " + csv_path);
    f << csv.str();
  }
  return violation ? kCertificateViolation : kOk;
}

Json error_json(const std::string& kind, const std::string& message) {
  Json j;
  j["error"] = kind;
  j["message"] = message;
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Approximation solvers for graphs given with a contraction sequence"};
  app.require_subcommand(1);

  std::string graph_path, seq_path;
  auto* verify = app.add_subcommand("verify", "replay a contraction sequence and report its width");
  verify->add_option("graph", graph_path)->required();
  verify->add_option("seq", seq_path)->required();

  SolveOptions part_opts;
  auto* partition = app.add_subcommand("partition", "balanced partition summary");
  partition->add_option("graph", part_opts.graph)->required();
  partition->add_option("seq", part_opts.seq)->required();
  partition->add_option("--caps", part_opts.caps);
  partition->add_flag("--trace-balance", part_opts.trace_balance);

  SolveOptions solve_opts;
  auto* solve = app.add_subcommand("solve", "approximate solution with a certified ratio bound");
  add_solve_flags(solve, solve_opts, true);

  SolveOptions oracle_opts;
  auto* oracle = app.add_subcommand("oracle", "exact optimum by exhaustive search");
  add_solve_flags(oracle, oracle_opts, false);

  SolveOptions check_opts;
  auto* check = app.add_subcommand("check", "approximate run compared with the exact optimum");
  add_solve_flags(check, check_opts, true);

  std::string family = "figure1", out_prefix, from_graph;
  int gen_n = 10, gen_d = 1;
  std::uint64_t gen_seed = 0;
  auto* gen = app.add_subcommand("gen", "write a generated graph and its sequence");
  gen->add_option("--family", family, "figure1|cograph|uncontract|greedy");
  gen->add_option("--n", gen_n);
  gen->add_option("--d", gen_d);
  gen->add_option("--seed", gen_seed);
  gen->add_option("--from", from_graph, "input graph for the greedy family");
  gen->add_option("--out", out_prefix, "output prefix (<prefix>.tgf, <prefix>.seq)")->required();

  std::string manifest, csv_path;
  auto* bench = app.add_subcommand("bench", "batch run over a manifest, CSV output");
  bench->add_option("manifest", manifest, "lines '<id> <graph> <seq> <problem> <regime> [pattern]'")->required();
  bench->add_option("--csv", csv_path, "write the CSV here instead of stdout");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << error_json("usage", e.what()).dump() << '\n';
    return kInputError;
  }

  try {
    if (*verify) {
      const auto data = read_instance_file(graph_path);
      const auto seq = read_sequence_file(seq_path);
      const auto rep = verify_sequence(data.graph, seq);
      Json j;
      j["schema"] = kSchemaVersion;
      j["n"] = data.graph.n();
      j["steps"] = seq.steps.size();
      j["full"] = seq.full();
      j["width"] = rep.width;
      j["argmax_step"] = rep.argmax_step;
      j["per_step"] = rep.per_step;
      out << j.dump() << '\n';
      return kOk;
    }
    if (*partition) {
      const auto data = read_instance_file(part_opts.graph);
      const auto seq = read_sequence_file(part_opts.seq);
      auto params = BalanceParams::make(verify_sequence(data.graph, seq).width);
      params.apply_caps(part_opts.caps);
      if (part_opts.trace_balance) params.trace = &std::cerr;
      const auto res = balanced_partition(data.graph, seq, params);
      Json j;
      j["schema"] = kSchemaVersion;
      j["n"] = data.graph.n();
      j["parts"] = res.partition.parts;
      j["achieved_part_size"] = res.achieved_part_size;
      j["achieved_red_degree"] = res.achieved_red_degree;
      j["balance_certified"] = res.balance_certified;
      j["fallback"] = res.fallback;
      j["rounds"] = res.rounds;
      j["fusions"] = res.fusions;
      j["s_eff"] = res.s_eff;
      j["max_mixed_value"] = res.max_mixed_value;
      j["mixed_value_cap"] = params.mixed_value_cap;
      j["part_size_cap"] = params.part_size_cap;
      out << j.dump() << '\n';
      return kOk;
    }
    if (*solve) {
      const auto in = load_input(solve_opts);
      const auto seq = load_sequence(solve_opts, in.data.graph);
      const auto r = run_approx(in, seq, make_config(solve_opts, seq, in.data.graph));
      out << result_to_json(r).dump() << '\n';
      return kOk;
    }
    if (*oracle) {
      const auto in = load_input(oracle_opts);
      OracleConfig cfg{OracleBudget::from_env(), OracleLimits::desk()};
      out << oracle_json(in.problem, in.data.graph.n(), run_oracle(in, cfg)).dump() << '\n';
      return kOk;
    }
    if (*check) {
      const auto in = load_input(check_opts);
      const auto seq = load_sequence(check_opts, in.data.graph);
      const auto c = run_check(in, seq, make_config(check_opts, seq, in.data.graph));
      Json j;
      j["schema"] = kSchemaVersion;
      j["problem"] = in.problem;
      j["n"] = in.data.graph.n();
      j["value"] = rational_to_string(c.approx.value);
      j["opt"] = rational_to_string(c.oracle.value);
      j["certified_bound"] = rational_to_string(c.approx.certified_bound);
      j["realized_ratio"] = c.realized ? rational_to_string(*c.realized) : "inf";
      j["realized_ratio_approx"] = c.realized ? fmt_double(*c.realized) : "inf";
      j["within_bound"] = c.ok;
      out << j.dump() << '\n';
      if (!c.ok) {
        err << error_json("certificate", "realized ratio exceeds the certified bound").dump() << '\n';
        return kCertificateViolation;
      }
      return kOk;
    }
    if (*gen) {
      GeneratedInstance g;
      if (family == "figure1") {
        g = gen_figure1();
      } else if (family == "cograph") {
        if (gen_n < 1) throw InputError("--n must be positive");
        g = gen_cograph(gen_n, gen_seed);
      } else if (family == "uncontract") {
        if (gen_n < 1 || gen_d < 0) throw InputError("--n must be positive and --d non-negative");
        g = gen_by_uncontraction(gen_n, gen_d, gen_seed);
      } else if (family == "greedy") {
        if (from_graph.empty()) throw InputError("the greedy family needs --from <graph>");
        g.graph = read_instance_file(from_graph).graph;
        const auto res = greedy_sequence(g.graph, gen_d);
        if (!res.seq)
          throw InputError("greedy sequence has width " + std::to_string(res.width) + " above --d " + std::to_string(gen_d));
        g.seq = *res.seq;
      } else {
        throw InputError("unknown family '" + family + "'");
      }
      // Both files are written to temporaries first and renamed together.
      const std::string tgf = out_prefix + ".tgf", seqf = out_prefix + ".seq";
      {
        std::ofstream a(tgf + ".tmp"), b(seqf + ".tmp");
        if (!a || !b) throw InputError("cannot write under prefix " + out_prefix);
        write_trigraph(a, g.graph);
        write_sequence(b, g.seq);
      }
      std::filesystem::rename(tgf + ".tmp", tgf);
      std::filesystem::rename(seqf + ".tmp", seqf);
      Json j;
      j["schema"] = kSchemaVersion;
      j["graph"] = tgf;
      j["seq"] = seqf;
      j["n"] = g.graph.n();
      j["width"] = verify_sequence(g.graph, g.seq).width;
      out << j.dump() << '\n';
      return kOk;
    }
    if (*bench) return cmd_bench(manifest, csv_path, out);
  } catch (const SequenceError& e) {
    Json j = error_json("sequence", e.what());
    j["step"] = e.step;
    err << j.dump() << '\n';
    return kInputError;
  } catch (const InputError& e) {
    err << error_json("input", e.what()).dump() << '\n';
    return kInputError;
  } catch (const BudgetExceeded& e) {
    err << error_json("budget", e.what()).dump() << '\n';
    return kBudgetError;
  } catch (const CertificateViolation& e) {
    err << error_json("certificate", e.what()).dump() << '\n';
    return kCertificateViolation;
  } catch (const std::filesystem::filesystem_error& e) {
    err << error_json("input", e.what()).dump() << '\n';
    return kInputError;
  }
  return kOk;
}

}  // namespace tww::cli
