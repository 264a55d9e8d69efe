#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "support.hpp"
#include "tww/instances.hpp"
#include "tww/io.hpp"
#include "tww/report.hpp"
#include "tww/solvers.hpp"

using namespace tww;
using namespace tww::testing;
namespace fs = std::filesystem;

#ifndef TWW_GOLDEN_DIR
#error "TWW_GOLDEN_DIR must point at tests/golden"
#endif

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    static int counter = 0;
    path = fs::temp_directory_path() / ("tww_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name, const std::string& content) const {
    const auto p = (path / name).string();
    std::ofstream(p) << content;
    return p;
  }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

Json strip_timing(Json j) {
  if (j.contains("trace")) j["trace"].erase("ms");
  return j;
}

}  // namespace

TEST_CASE("report fields, order and round trip") {
  ApproxResult r;
  r.problem = "mis";
  r.n = 0;
  r.solution = std::vector<int>{};
  r.value = 0;
  const auto j = result_to_json(r);
  CHECK(j.dump().find("\"certified_bound\":\"1/1\"") != std::string::npos);
  CHECK(j.dump().find("\"solution\":[]") != std::string::npos);
  CHECK(j["value"] == "0/1");
  CHECK(j["schema"] == "v1");
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"schema", "problem", "n", "value", "certified_bound", "solution", "trace"});

  Rng rng(61);
  for (int it = 0; it < 30; ++it) {
    const auto inst = gen_by_uncontraction(uniform(rng, 4, 12), 2, rng());
    SolverConfig cfg;
    cfg.regime = RegimeParams::parse("q=1");
    cfg.balance = BalanceParams::make(2);
    std::vector<ApproxResult> results;
    results.push_back(approx_mis({inst.graph, random_weights(rng, inst.graph.n())}, inst.seq, cfg));
    results.push_back(approx_set_coloring({inst.graph, random_demand(rng, inst.graph.n(), 2)}, inst.seq, cfg));
    results.push_back(approx_msim({inst.graph, random_y(rng, inst.graph)}, inst.seq, cfg));
    results.push_back(approx_mlisf({inst.graph, random_weights(rng, inst.graph.n()), random_y_set(rng, inst.graph)},
                                   inst.seq, cfg));
    for (const auto& res : results) {
      const auto back = result_from_json(Json::parse(result_to_json(res).dump()));
      CHECK(back.problem == res.problem);
      CHECK(back.n == res.n);
      CHECK(back.value == res.value);
      CHECK(back.certified_bound == res.certified_bound);
      CHECK(back.solution == res.solution);
      CHECK(back.trace.depth == res.trace.depth);
      CHECK(back.trace.d_eff_levels == res.trace.d_eff_levels);
    }
  }
}

TEST_CASE("figure-1 mis run matches the golden snapshot") {
  TempDir dir;
  REQUIRE(invoke({"gen", "--family", "figure1", "--out", dir / "fig"}).code == 0);
  const auto run = invoke({"solve", dir / "fig.tgf", dir / "fig.seq", "--problem", "mis", "--regime", "q=1"});
  REQUIRE(run.code == 0);
  std::ifstream golden(std::string(TWW_GOLDEN_DIR) + "/figure1_mis_q1.json");
  REQUIRE(golden);
  CHECK(strip_timing(Json::parse(run.out)) == strip_timing(Json::parse(golden)));
}

TEST_CASE("verify, partition and solve commands") {
  TempDir dir;
  REQUIRE(invoke({"gen", "--family", "figure1", "--out", dir / "fig"}).code == 0);
  const auto v = invoke({"verify", dir / "fig.tgf", dir / "fig.seq"});
  CHECK(v.code == 0);
  CHECK(Json::parse(v.out)["width"] == 2);

  const auto p = invoke({"partition", dir / "fig.tgf", dir / "fig.seq"});
  CHECK(p.code == 0);
  CHECK(Json::parse(p.out)["parts"].size() == 2);

  std::string k5 = "tgf 5\n";
  for (int u = 0; u < 5; ++u)
    for (int w = u + 1; w < 5; ++w) k5 += "b " + std::to_string(u) + " " + std::to_string(w) + "\n";
  const auto s = invoke({"solve", dir.file("k5.tgf", k5), "--problem", "mis", "--regime", "exact"});
  CHECK(s.code == 0);
  const auto j = Json::parse(s.out);
  CHECK(j["value"] == "1/1");
  CHECK(j["certified_bound"] == "1/1");

  const auto o = invoke({"oracle", dir / "fig.tgf", "--problem", "setcol"});
  CHECK(o.code == 0);
  CHECK(Json::parse(o.out)["value"] == "4/1");

  const auto c = invoke({"check", dir / "fig.tgf", dir / "fig.seq", "--problem", "mis", "--regime", "q=1"});
  CHECK(c.code == 0);
  CHECK(Json::parse(c.out)["within_bound"] == true);

  const auto pattern = dir.file("k2.tgf", "tgf 2\nb 0 1\n");
  const auto a = invoke({"solve", dir / "fig.tgf", dir / "fig.seq", "--problem", "aihp", "--pattern", pattern,
                      "--regime", "q=1"});
  CHECK(a.code == 0);

  const auto y = dir.file("y.txt", "y 0 1\ny 2 4\n");
  const auto m = invoke({"check", dir / "fig.tgf", dir / "fig.seq", "--problem", "msim", "--prescribed", y});
  CHECK(m.code == 0);
  CHECK(Json::parse(m.out)["opt"] == "1/1");
}

TEST_CASE("error exit codes carry JSON on stderr") {
  TempDir dir;
  REQUIRE(invoke({"gen", "--family", "figure1", "--out", dir / "fig"}).code == 0);
  auto r = invoke({"solve", dir / "missing.tgf", "--problem", "mis"});
  CHECK(r.code == 2);
  CHECK(Json::parse(r.err)["error"] == "input");
  r = invoke({"solve", dir / "fig.tgf", "--problem", "nope"});
  CHECK(r.code == 2);
  r = invoke({"frobnicate"});
  CHECK(r.code == 2);
  CHECK(Json::parse(r.err)["error"] == "usage");
  r = invoke({"verify", dir / "fig.tgf", dir.file("bad.seq", "seq 7\nc 0 1 7\nc 0 2 8\n")});
  CHECK(r.code == 2);
  CHECK(Json::parse(r.err)["step"] == 1);
  r = invoke({"solve", dir / "fig.tgf", dir / "fig.seq", "--problem", "aihp"});
  CHECK(r.code == 2);
  r = invoke({"solve", dir / "fig.tgf", dir / "fig.seq", "--regime", "warp"});
  CHECK(r.code == 2);
  r = invoke({"solve", dir / "fig.tgf", dir / "fig.seq", "--caps", "mv=0"});
  CHECK(r.code == 2);

  std::string big = "tgf 40\n";
  for (int u = 0; u < 40; ++u)
    for (int w = u + 1; w < 40; ++w)
      if ((u * 7 + w * 3) % 5 == 0) big += "b " + std::to_string(u) + " " + std::to_string(w) + "\n";
  r = invoke({"oracle", dir.file("big.tgf", big), "--problem", "setcol"});
  CHECK(r.code == 2);  // above the oracle size limit
}

TEST_CASE("gen writes replayable pairs") {
  TempDir dir;
  for (const std::string family : {"cograph", "uncontract"}) {
    const auto r = invoke({"gen", "--family", family, "--n", "15", "--d", "2", "--seed", "4", "--out", dir / family});
    REQUIRE(r.code == 0);
    const auto data = read_instance_file(dir / (family + ".tgf"));
    const auto seq = read_sequence_file(dir / (family + ".seq"));
    CHECK(data.graph.n() == 15);
    CHECK(verify_sequence(data.graph, seq).width <= 2);
  }
  auto r = invoke({"gen", "--family", "greedy", "--from", dir / "uncontract.tgf", "--d", "3", "--out", dir / "g"});
  CHECK(r.code == 0);
  r = invoke({"gen", "--family", "greedy", "--d", "3", "--out", dir / "g"});
  CHECK(r.code == 2);
  r = invoke({"gen", "--family", "moebius", "--out", dir / "m"});
  CHECK(r.code == 2);
}

TEST_CASE("bench emits sorted CSV rows") {
  TempDir dir;
  REQUIRE(invoke({"gen", "--family", "figure1", "--out", dir / "fig"}).code == 0);
  REQUIRE(invoke({"gen", "--family", "uncontract", "--n", "12", "--d", "2", "--seed", "1", "--out", dir / "u"}).code == 0);
  const auto manifest = dir.file("bench.txt",
                                 "# id graph seq problem regime\n"
                                 "zeta u.tgf u.seq setcol q=1\n"
                                 "alpha fig.tgf fig.seq mis q=1\n"
                                 "beta u.tgf u.seq msim q=2\n");
  const auto r = invoke({"bench", manifest});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string header, first, second, third;
  std::getline(lines, header);
  std::getline(lines, first);
  std::getline(lines, second);
  std::getline(lines, third);
  CHECK(header == "instance,n,d_eff,q,value,opt,certified,realized,ms");
  CHECK(first.rfind("alpha,7,", 0) == 0);
  CHECK(second.rfind("beta,", 0) == 0);
  CHECK(third.rfind("zeta,", 0) == 0);
}
