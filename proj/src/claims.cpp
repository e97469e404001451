#include "gion/claims.hpp"

#include <cmath>

namespace gion {
namespace {

// Bisection over the open half-angle interval. f must be positive near 0 and
// negative near pi/2; the endpoints themselves are never evaluated.
template <typename F>
double bisect_half_angle(F f) {
  double lo = 0.0;
  double hi = kPi / 2.0;
  for (;;) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) return mid;
    const double v = f(mid);
    if (v == 0.0) return mid;
    (v > 0.0 ? lo : hi) = mid;
  }
}

SegmentConfig protractor_config() {
  return SegmentConfig::from_central_degrees(1.0, kProtractorCentralDeg);
}

}  // namespace

double chord_identity_residual(const SegmentConfig& cfg) {
  const SegmentMetrics m = metrics(cfg);
  return m.a - (2.0 * m.r + 2.0 * m.m);
}

double square_identity_residual(const SegmentConfig& cfg) {
  const SegmentMetrics m = metrics(cfg);
  return m.R - 2.0 * m.s;
}

double theta_chord_identity() {
  return bisect_half_angle(
      [](double t) { return chord_identity_residual(SegmentConfig(1.0, t)); });
}

double theta_square_identity() {
  return std::acos((std::sqrt(3.0) - 1.0) / 2.0);
}

ClaimReport verify_paper_claims(double tolerance_deg) {
  if (!std::isfinite(tolerance_deg) || tolerance_deg <= 0.0) {
    throw DomainError("tolerance_deg must be > 0");
  }
  ClaimReport rep;
  rep.tolerance_deg = tolerance_deg;
  rep.central_chord_identity = radians_to_degrees(2.0 * theta_chord_identity());
  rep.central_square_identity =
      radians_to_degrees(2.0 * theta_square_identity());
  rep.chord_residual_at_140 = chord_identity_residual(protractor_config());
  rep.square_residual_at_140 = square_identity_residual(protractor_config());
  rep.protractor_consistent =
      std::abs(rep.central_chord_identity - kProtractorCentralDeg) <=
          tolerance_deg &&
      std::abs(rep.central_square_identity - kProtractorCentralDeg) <=
          tolerance_deg;
  return rep;
}

}  // namespace gion
