#pragma once
#include <string>

#include <json.hpp>

#include "tww/driver.hpp"

namespace tww {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "v1";

Json solution_to_json(const Solution& solution);
Json trace_to_json(const Trace& trace);
// {schema, problem, n, value, certified_bound, solution, trace{depth, calls, d_eff_levels, ms, ...}}
Json result_to_json(const ApproxResult& result);

// Inverse of result_to_json for problem, n, value, certified_bound, solution and the main trace fields.
ApproxResult result_from_json(const Json& j);

}  // namespace tww
