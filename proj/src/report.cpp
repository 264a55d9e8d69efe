#include "tww/report.hpp"

#include "tww/errors.hpp"

namespace tww {

Json solution_to_json(const Solution& solution) {
  return std::visit(
      [](const auto& s) -> Json {
        using T = std::decay_t<decltype(s)>;
        Json out = Json::array();
        if constexpr (std::is_same_v<T, std::vector<int>>) {
          for (int v : s) out.push_back(v);
        } else if constexpr (std::is_same_v<T, PaletteAssignment>) {
          for (const auto& p : s) out.push_back(p);
        } else if constexpr (std::is_same_v<T, std::vector<Edge>>) {
          for (const auto& [u, v] : s) out.push_back(Json::array({u, v}));
        } else {
          for (const auto& star : s) out.push_back(Json{{"root", star.root}, {"leaves", star.leaves}});
        }
        return out;
      },
      solution);
}

Json trace_to_json(const Trace& t) {
  Json j;
  j["depth"] = t.depth;
  j["calls"] = t.calls;
  j["d_eff_levels"] = t.d_eff_levels;
  j["ms"] = t.ms;
  j["size_levels"] = t.size_levels;
  j["base_size_levels"] = t.base_size_levels;
  j["base_calls"] = t.base_calls;
  j["balance_fallbacks"] = t.balance_fallbacks;
  j["clustered_fallbacks"] = t.clustered_fallbacks;
  j["size_ratio"] = t.size_ratio;
  return j;
}

Json result_to_json(const ApproxResult& r) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["problem"] = r.problem;
  j["n"] = r.n;
  j["value"] = rational_to_string(r.value);
  j["certified_bound"] = rational_to_string(r.certified_bound);
  j["solution"] = solution_to_json(r.solution);
  j["trace"] = trace_to_json(r.trace);
  return j;
}

ApproxResult result_from_json(const Json& j) {
  try {
    if (j.at("schema").get<std::string>() != kSchemaVersion) throw InputError("unsupported result schema");
    ApproxResult r;
    r.problem = j.at("problem").get<std::string>();
    r.n = j.at("n").get<int>();
    r.value = parse_rational(j.at("value").get<std::string>());
    r.certified_bound = parse_rational(j.at("certified_bound").get<std::string>());
    const Json& s = j.at("solution");
    if (r.problem == "setcol") {
      r.solution = s.get<PaletteAssignment>();
    } else if (r.problem == "msim") {
      std::vector<Edge> edges;
      for (const auto& e : s) edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
      r.solution = std::move(edges);
    } else if (r.problem == "mlisf") {
      std::vector<Star> stars;
      for (const auto& x : s) stars.push_back({x.at("root").get<int>(), x.at("leaves").get<std::vector<int>>()});
      r.solution = std::move(stars);
    } else {
      r.solution = s.get<std::vector<int>>();
    }
    const Json& t = j.at("trace");
    r.trace.depth = t.at("depth").get<int>();
    r.trace.calls = t.at("calls").get<std::uint64_t>();
    r.trace.d_eff_levels = t.at("d_eff_levels").get<std::vector<int>>();
    r.trace.ms = t.at("ms").get<double>();
    if (t.contains("size_levels")) r.trace.size_levels = t["size_levels"].get<std::vector<int>>();
    if (t.contains("base_size_levels")) r.trace.base_size_levels = t["base_size_levels"].get<std::vector<int>>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed result JSON: ") + e.what());
  }
}

}  // namespace tww
