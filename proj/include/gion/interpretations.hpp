#pragma once

// Registry of the modern renditions of the Gion Shrine tablet. They describe
// the same figure but disagree on symbols (square side d or s, small circle
// by radius r or diameter d) and on the wording of the formulae.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gion/geometry.hpp"
#include "gion/inverse_solver.hpp"

namespace gion {

class UnknownInterpretationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class CircleMeasure { kRadius, kDiameter };

struct Interpretation {
  std::string_view id;
  std::string_view source;
  std::string_view square_symbol;
  std::string_view circle_symbol;
  CircleMeasure circle_measure = CircleMeasure::kRadius;
  bool uses_diameter_marker = false;
  std::string_view p_formula_text;
  std::string_view q_formula_text;
  std::string_view formula_statement;
  std::string_view description_text;
};

inline constexpr std::string_view kDefaultInterpretation = "paper_own";

std::span<const Interpretation> list_interpretations();

/// Throws UnknownInterpretationError.
const Interpretation& find_interpretation(std::string_view id);

/// The four measures of a figure.
struct Measures {
  double a = 0.0;
  double m = 0.0;
  double s = 0.0;  // square side
  double r = 0.0;  // inscribed circle radius
};

struct LabeledValue {
  std::string symbol;
  std::string role;
  double value = 0.0;
};

/// Measures under the rendition's own symbols, in the order a, m, square,
/// circle. The circle entry is a diameter for renditions that label one.
std::vector<LabeledValue> relabel(const Measures& measures,
                                  const Interpretation& interp);

/// Inverse of relabel().
Measures unlabel(std::span<const LabeledValue> labels,
                 const Interpretation& interp);

/// Human-readable report of one solution in the rendition's notation.
/// Throws UnknownInterpretationError.
std::string render_solution(const SolveResult& result, std::string_view id);

enum class PiStyle { kUnicode, kAscii };

struct HaikuLines {
  std::string line1_expr;
  std::string line2_expr;
  std::string line3_expr;
  double line1_val = 0.0;
  double line2_val = 0.0;
  double line3_val = 0.0;
  double exact_perimeter_line2 = 0.0;
};

/// Circumference and perimeter lines for the figure with cfg's angle at unit
/// radius: the arc term is written without a radius factor, so values are
/// always reported for R = 1.
HaikuLines haiku(const SegmentConfig& cfg, PiStyle style = PiStyle::kUnicode);

}  // namespace gion
