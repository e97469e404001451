#include "gion/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace gion {

double distance(Point p, Point q) { return std::hypot(p.x - q.x, p.y - q.y); }

SegmentConfig::SegmentConfig(double radius, double half_angle)
    : radius_(radius), half_angle_(half_angle) {
  if (!std::isfinite(radius) || radius <= 0.0) {
    throw DomainError("radius must be finite and > 0, got " +
                      std::to_string(radius));
  }
  if (!std::isfinite(half_angle) || half_angle <= 0.0 ||
      half_angle >= kPi / 2.0) {
    throw DomainError(
        "central angle must lie in the open interval (0°, 180°), got " +
        std::to_string(radians_to_degrees(2.0 * half_angle)) + "°");
  }
}

SegmentConfig SegmentConfig::from_central_degrees(double radius,
                                                  double central_deg) {
  return SegmentConfig(radius, degrees_to_radians(central_deg) / 2.0);
}

SegmentConfig SegmentConfig::scaled(double k) const {
  return SegmentConfig(radius_ * k, half_angle_);
}

Point SegmentMetrics::big_center() const { return {0.0, -R * std::cos(theta)}; }

SegmentMetrics metrics(const SegmentConfig& cfg) {
  const double R = cfg.radius();
  const double t = cfg.half_angle();
  const double c = std::cos(t);
  const double sin_t = std::sin(t);
  const double sin_half = std::sin(t / 2.0);
  const double sin_quarter = std::sin(t / 4.0);

  SegmentMetrics out;
  out.R = R;
  out.theta = t;
  out.central = 2.0 * t;
  out.a = 2.0 * R * sin_t;
  // R(1 - cos t), written without cancellation.
  out.m = 2.0 * R * sin_half * sin_half;
  // 2R cos(t/2) (1 - cos(t/2)).
  out.r = 4.0 * R * std::cos(t / 2.0) * sin_quarter * sin_quarter;
  // R(-cos t + sqrt(2 - cos^2 t)) / 2, rationalized.
  out.s = R * sin_t * sin_t / (std::sqrt(2.0 - c * c) + c);
  out.arc = 2.0 * R * t;
  out.circle_center = {out.r, out.r};
  out.square_origin = {-out.s, 0.0};
  return out;
}

double TangencyResiduals::max() const {
  return std::max({chord, bisector, arc, square_corner});
}

TangencyResiduals tangency_residuals(const SegmentMetrics& m) {
  const Point O = m.big_center();
  const Point corner{-m.s, m.s};
  TangencyResiduals res;
  res.chord = std::abs(m.circle_center.y - m.r);
  res.bisector = std::abs(m.circle_center.x - m.r);
  res.arc = std::abs(distance(m.circle_center, O) - (m.R - m.r));
  res.square_corner = std::abs(distance(corner, O) - m.R);
  return res;
}

Point circumcenter(Point p1, Point p2, Point p3) {
  // Solve the two perpendicular-bisector equations relative to p1.
  const double bx = p2.x - p1.x, by = p2.y - p1.y;
  const double cx = p3.x - p1.x, cy = p3.y - p1.y;
  const double det = 2.0 * (bx * cy - by * cx);
  const double scale = std::max({std::abs(bx), std::abs(by), std::abs(cx),
                                 std::abs(cy)});
  if (scale == 0.0 || std::abs(det) <= 1e-14 * scale * scale) {
    throw CollinearPointsError("circumcenter: points are collinear");
  }
  const double b2 = bx * bx + by * by;
  const double c2 = cx * cx + cy * cy;
  const double ux = (cy * b2 - by * c2) / det;
  const double uy = (bx * c2 - cx * b2) / det;
  return {p1.x + ux, p1.y + uy};
}

}  // namespace gion
