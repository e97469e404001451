#pragma once

// Forward construction of the Gion Shrine figure: a minor circular segment
// cut by its perpendicular bisector, with a square on the left half and an
// inscribed circle on the right half.
//
// Frame: origin at the chord midpoint, x along the chord (positive toward the
// circle side), y toward the arc. The large circle's center sits at
// (0, -R cos(theta)).

#include <array>
#include <numbers>
#include <stdexcept>
#include <string>

namespace gion {

/// Raised for inputs outside the figure's domain (semicircle or larger,
/// non-positive radius, non-finite values, invalid options).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised by circumcenter() when the three points are collinear.
class CollinearPointsError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr double kPi = std::numbers::pi;

constexpr double degrees_to_radians(double deg) { return deg * kPi / 180.0; }
constexpr double radians_to_degrees(double rad) { return rad * 180.0 / kPi; }

struct Point {
  double x = 0.0;
  double y = 0.0;
};

double distance(Point p, Point q);

/// The two free parameters of the figure. `half_angle` is half the central
/// angle subtended by the chord, in radians.
class SegmentConfig {
 public:
  /// Throws DomainError unless radius > 0 and 0 < half_angle < pi/2.
  SegmentConfig(double radius, double half_angle);

  static SegmentConfig from_central_degrees(double radius, double central_deg);

  double radius() const { return radius_; }
  double half_angle() const { return half_angle_; }
  double central_angle() const { return 2.0 * half_angle_; }
  double central_degrees() const { return radians_to_degrees(central_angle()); }

  /// Same shape, different scale.
  SegmentConfig scaled(double k) const;

 private:
  double radius_;
  double half_angle_;
};

struct SegmentMetrics {
  double R = 0.0;
  double theta = 0.0;    // half central angle
  double a = 0.0;        // chord
  double m = 0.0;        // sagitta
  double r = 0.0;        // inscribed circle radius
  double s = 0.0;        // square side
  double arc = 0.0;      // arc length
  double central = 0.0;  // central angle, radians
  Point circle_center;
  Point square_origin;   // lower-left corner

  /// Center of the large circle.
  Point big_center() const;
};

SegmentMetrics metrics(const SegmentConfig& cfg);

struct TangencyResiduals {
  double chord = 0.0;      // |center.y - r|
  double bisector = 0.0;   // |center.x - r|
  double arc = 0.0;        // |dist(center, O) - (R - r)|
  double square_corner = 0.0;  // |dist((-s, s), O) - R|

  double max() const;
};

/// Measures how far `m` is from satisfying the tangency and incidence
/// constraints that define the figure. Uses only the fields of `m`, never the
/// closed forms, so it serves as an independent check of metrics().
TangencyResiduals tangency_residuals(const SegmentMetrics& m);

/// Point equidistant from three non-collinear points.
Point circumcenter(Point p1, Point p2, Point p3);

}  // namespace gion
