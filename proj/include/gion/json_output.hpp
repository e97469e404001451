#pragma once

// JSON documents for the CLI. Field order is fixed and doubles are printed
// with 17 significant digits so output is stable and round-trips exactly.

#include <string>
#include <vector>

#include <json.hpp>

#include "gion/claims.hpp"
#include "gion/geometry.hpp"
#include "gion/interpretations.hpp"
#include "gion/inverse_solver.hpp"

namespace gion {

using Json = nlohmann::ordered_json;

Json to_json(Point p);
Json to_json(const SegmentMetrics& m);
Json to_json(const ClaimReport& rep);
Json to_json(const HaikuLines& lines);
Json solution_set_json(double p, double q,
                       const std::vector<SolveResult>& solutions);

std::string dump_json(const Json& j, int indent = 2);

}  // namespace gion
