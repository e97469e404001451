#pragma once

// Numerical checks of two construction identities attributed to the figure:
// the chord identity a = 2r + 2m and the square identity R = 2s. Neither
// holds exactly at a 140° central angle; each holds at its own angle.

#include "gion/geometry.hpp"

namespace gion {

/// Central angle measured by protractor on the reference drawing.
inline constexpr double kProtractorCentralDeg = 140.0;
inline constexpr double kDefaultProtractorToleranceDeg = 3.5;

struct ClaimReport {
  double central_chord_identity = 0.0;   // degrees, where a = 2r + 2m
  double central_square_identity = 0.0;  // degrees, where R = 2s
  double chord_residual_at_140 = 0.0;    // a - 2r - 2m at R = 1
  double square_residual_at_140 = 0.0;   // R - 2s at R = 1
  bool protractor_consistent = false;
  double tolerance_deg = 0.0;
};

/// a - (2r + 2m).
double chord_identity_residual(const SegmentConfig& cfg);

/// R - 2s.
double square_identity_residual(const SegmentConfig& cfg);

/// Half angle where a = 2r + 2m, by bisection. In terms of c = cos(theta/2)
/// this is the root of 5c^3 + c^2 - 3c - 1 = 0 in (1/sqrt(2), 1).
double theta_chord_identity();

/// Half angle where R = 2s: cos(theta) = (sqrt(3) - 1) / 2.
double theta_square_identity();

/// Throws DomainError unless tolerance_deg > 0.
ClaimReport verify_paper_claims(
    double tolerance_deg = kDefaultProtractorToleranceDeg);

}  // namespace gion
