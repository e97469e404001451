#include "gion/json_output.hpp"

#include <cmath>
#include <cstdio>

namespace gion {
namespace {

void write(const Json& j, int indent, int depth, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
  const std::string close_pad(static_cast<std::size_t>(indent * depth), ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ",\n";
        first = false;
        out += pad + Json(key).dump() + ": ";
        write(value, indent, depth + 1, out);
      }
      out += "\n" + close_pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i > 0) out += ",\n";
        out += pad;
        write(j[i], indent, depth + 1, out);
      }
      out += "\n" + close_pad + "]";
      return;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) {
        out += "null";
        return;
      }
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.17g", v);
      out += buf;
      return;
    }
    default:
      out += j.dump();
  }
}

}  // namespace

Json to_json(Point p) { return Json{{"x", p.x}, {"y", p.y}}; }

Json to_json(const SegmentMetrics& m) {
  return Json{{"R", m.R},
              {"theta", m.theta},
              {"a", m.a},
              {"m", m.m},
              {"r", m.r},
              {"s", m.s},
              {"arc", m.arc},
              {"central", m.central},
              {"circle_center", to_json(m.circle_center)},
              {"square_origin", to_json(m.square_origin)}};
}

Json to_json(const ClaimReport& rep) {
  return Json{{"central_chord_identity", rep.central_chord_identity},
              {"central_square_identity", rep.central_square_identity},
              {"chord_residual_at_140", rep.chord_residual_at_140},
              {"square_residual_at_140", rep.square_residual_at_140},
              {"protractor_consistent", rep.protractor_consistent},
              {"tolerance_deg", rep.tolerance_deg}};
}

Json to_json(const HaikuLines& lines) {
  return Json{{"line1_expr", lines.line1_expr},
              {"line2_expr", lines.line2_expr},
              {"line3_expr", lines.line3_expr},
              {"line1_val", lines.line1_val},
              {"line2_val", lines.line2_val},
              {"line3_val", lines.line3_val},
              {"exact_perimeter_line2", lines.exact_perimeter_line2}};
}

Json solution_set_json(double p, double q,
                       const std::vector<SolveResult>& solutions) {
  Json list = Json::array();
  for (const auto& s : solutions) {
    list.push_back(Json{{"R", s.R},
                        {"theta_rad", s.theta},
                        {"theta_deg", radians_to_degrees(s.theta)},
                        {"central_deg", s.central_degrees()},
                        {"a", s.a},
                        {"m", s.m},
                        {"r", s.r},
                        {"s", s.s},
                        {"near_double", s.near_double}});
  }
  return Json{{"p", p},
              {"q", q},
              {"solutions", std::move(list)},
              {"feasible_q_range", Json::array({kQInfimum, kQSupremum})}};
}

std::string dump_json(const Json& j, int indent) {
  std::string out;
  write(j, indent, 0, out);
  out += "\n";
  return out;
}

}  // namespace gion
