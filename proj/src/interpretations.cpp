#include "gion/interpretations.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <string>

namespace gion {
namespace {

constexpr std::array<Interpretation, 5> kRegistry{{
    {
        "fukagawa_rothman",
        "H. Fukagawa, T. Rothman, Sacred Mathematics: Japanese Temple Geometry",
        "d",
        "r",
        CircleMeasure::kRadius,
        false,
        "p = a + m + d + r",
        "q = m/a + r/m + d/r",
        "Then, if p = a + m + d + r and q = m/a + r/m + d/r, find a, m, d, "
        "and r in terms of p and q.",
        "We have a segment of a circle. The line segment m bisects the arc and "
        "chord AB. As shown, we draw a square with side d and an inscribed "
        "circle of the radius r. Let length AB = a.",
    },
    {
        "dereyna_clark",
        "J.A. de Reyna, D. Clark, A Modern Solution To The Gion Shrine Problem",
        "s",
        "d",
        CircleMeasure::kDiameter,
        true,
        "p = a + m + s + d",
        "q = m/a + d/m + s/d",
        "Then, if p = a + m + s + d and q = m/a + d/m + s/d, find a, m, s, "
        "and d in terms of p and q.",
        "We have a segment of a circle. The line segment m bisects the arc and "
        "chord AB. As shown, we draw a square with side s and an inscribed "
        "circle of diameter d. Let the length AB = a.",
    },
    {
        "cut_the_knot",
        "Cut-the-Knot, Gion Shrine Problem",
        "d",
        "r",
        CircleMeasure::kRadius,
        false,
        "p = a + m + d + r",
        "q = m/a + r/m + d/r",
        "Form p = a + m + d + r and q = m/a + r/m + d/r. The task is to "
        "express a, m, d, and r in terms of p and q.",
        "In a circular segment with base AB of length a and altitude m, there "
        "are a circle of radius r inscribed in one half of the segment and a "
        "square of side d inscribed in the other half, as shown.",
    },
    {
        "oconnor_robertson",
        "J.J. O'Connor, E.F. Robertson, Chokuyen Naonobu Ajima",
        "d",
        "r",
        CircleMeasure::kRadius,
        false,
        "p = a + m + d + r",
        "q = m/a + r/m + d/r",
        "Put p = a + m + d + r, and q = m/a + r/m + d/r. The problem requires "
        "that we express a, m, d, and r in terms of p and q.",
        "In this figure we have a segment of a circle on the chord AB of "
        "length a. From the mid-point of AB we draw a line perpendicular to AB "
        "to meet the circle. It has length m. To the left of this line we draw "
        "a square of side d, as shown, and to the right we draw a circle of "
        "radius r, as shown.",
    },
    {
        "paper_own",
        "Circular segment with bisector m, square s on the left, circle with "
        "drawn diameter and marked center on the right",
        "s",
        "r",
        CircleMeasure::kRadius,
        true,
        "p = a + m + s + r",
        "q = m/a + r/m + s/r",
        "Using p = a + m + s + r and q = m/a + r/m + s/r, express a, m, s, "
        "and r in terms of p and q.",
        "Minor circular segment split by the perpendicular bisector m of "
        "chord a. Right half: circle of radius r, drawn with a diameter "
        "through its marked center. Left half: square of side s standing on "
        "the chord against the bisector, its outer corner on the arc.",
    },
}};

std::string format_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::span<const Interpretation> list_interpretations() { return kRegistry; }

const Interpretation& find_interpretation(std::string_view id) {
  for (const auto& interp : kRegistry) {
    if (interp.id == id) return interp;
  }
  throw UnknownInterpretationError("unknown interpretation id '" +
                                   std::string(id) + "'");
}

std::vector<LabeledValue> relabel(const Measures& measures,
                                  const Interpretation& interp) {
  const bool diameter = interp.circle_measure == CircleMeasure::kDiameter;
  return {
      {"a", "chord", measures.a},
      {"m", "bisector", measures.m},
      {std::string(interp.square_symbol), "square side", measures.s},
      {std::string(interp.circle_symbol),
       diameter ? "circle diameter" : "circle radius",
       diameter ? 2.0 * measures.r : measures.r},
  };
}

Measures unlabel(std::span<const LabeledValue> labels,
                 const Interpretation& interp) {
  const bool diameter = interp.circle_measure == CircleMeasure::kDiameter;
  Measures out;
  for (const auto& lv : labels) {
    if (lv.symbol == "a") {
      out.a = lv.value;
    } else if (lv.symbol == "m") {
      out.m = lv.value;
    } else if (lv.symbol == interp.square_symbol) {
      out.s = lv.value;
    } else if (lv.symbol == interp.circle_symbol) {
      out.r = diameter ? lv.value / 2.0 : lv.value;
    } else {
      throw std::invalid_argument("unlabel: symbol '" + lv.symbol +
                                  "' is not used by " + std::string(interp.id));
    }
  }
  return out;
}

std::string render_solution(const SolveResult& result, std::string_view id) {
  const Interpretation& interp = find_interpretation(id);
  std::string out;
  out += "interpretation: " + std::string(interp.id) + "\n";
  out += "R = " + format_value(result.R) + "\n";
  out += "central angle = " + format_value(result.central_degrees()) + "°\n";
  for (const auto& lv :
       relabel({result.a, result.m, result.s, result.r}, interp)) {
    out += lv.symbol + " = " + format_value(lv.value) + "  (" + lv.role + ")\n";
  }
  if (interp.uses_diameter_marker &&
      interp.circle_measure == CircleMeasure::kRadius) {
    out += "2" + std::string(interp.circle_symbol) + " = " +
           format_value(2.0 * result.r) + "  (drawn diameter)\n";
  }
  if (result.near_double) {
    out += "note: q lies at a local extremum of q(theta); this root is "
           "near-double\n";
  }
  return out;
}

HaikuLines haiku(const SegmentConfig& cfg, PiStyle style) {
  const SegmentMetrics m = metrics(SegmentConfig(1.0, cfg.half_angle()));
  const bool unicode = style == PiStyle::kUnicode;
  const bool at_140 = std::abs(cfg.central_degrees() - 140.0) < 1e-9;

  HaikuLines out;
  out.line1_expr = unicode ? "2rπ" : "2r*pi";
  if (at_140) {
    out.line2_expr = unicode ? "2r + 2m + 7π/9" : "2r + 2m + 7*pi/9";
  } else {
    out.line2_expr = unicode ? "2r + 2m + 2Rθ" : "2r + 2m + 2R*theta";
  }
  out.line3_expr = "2s + 2s";
  out.line1_val = 2.0 * m.r * kPi;
  out.line2_val = 2.0 * m.r + 2.0 * m.m + (at_140 ? 7.0 * kPi / 9.0 : m.arc);
  out.line3_val = 2.0 * m.s + 2.0 * m.s;
  out.exact_perimeter_line2 = m.a + m.arc;
  return out;
}

}  // namespace gion
