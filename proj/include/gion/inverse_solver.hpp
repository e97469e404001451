#pragma once

// Inverse problem: given p = a + m + s + r and q = m/a + r/m + s/r, recover
// every figure consistent with both.
//
// q depends only on the shape (half angle), p carries the scale. The solver
// finds all half angles with q(theta) = q on the curve, then fixes R from p.
// q(theta) is not monotone, so a given (p, q) may describe 0 to 3 figures.

#include <cmath>
#include <vector>

#include "gion/geometry.hpp"

namespace gion {

/// Limit of q as theta -> 0+: m/a -> 0, r/m -> 1/2, s/r -> 2.
inline constexpr double kQInfimum = 2.5;

/// Limit of q as theta -> pi/2-: m/a -> 1/2, r/m -> sqrt(2) - 1,
/// s/r -> 1 + sqrt(2)/2, summing to 1/2 + (3/2) sqrt(2).
inline const double kQSupremum = 0.5 + 1.5 * std::sqrt(2.0);

struct SolverOptions {
  int grid_size = 4096;
  double refine_tol = 1e-13;    // radians
  double extremum_tol = 1e-9;   // in q units

  /// Throws DomainError when grid_size < 64 or a tolerance is not positive.
  void validate() const;
};

struct QCurveSample {
  double theta = 0.0;
  double q = 0.0;
};

struct CurveExtremum {
  double theta = 0.0;
  double q = 0.0;
  bool is_maximum = false;
};

struct ThetaRoot {
  double theta = 0.0;
  bool near_double = false;  // q within extremum_tol of a neighbouring extremum
};

struct SolveResult {
  double R = 0.0;
  double theta = 0.0;
  double a = 0.0;
  double m = 0.0;
  double r = 0.0;
  double s = 0.0;
  double p_check = 0.0;
  double q_check = 0.0;
  bool near_double = false;

  double central_degrees() const { return radians_to_degrees(2.0 * theta); }
};

double q_of_metrics(const SegmentMetrics& m);

/// Scale-free ratio sum at the given half angle. Throws DomainError outside
/// (0, pi/2).
double q_of_theta(double theta);

double p_of_config(const SegmentConfig& cfg);

/// Uniformly spaced interior samples of the q curve.
std::vector<QCurveSample> sample_q_curve(int grid_size);

/// Interior extrema of q(theta), located on the scan grid and refined by
/// golden-section search. Ascending in theta.
std::vector<CurveExtremum> q_curve_extrema(const SolverOptions& opts = {});

std::vector<ThetaRoot> solve_theta_roots(double q,
                                         const SolverOptions& opts = {});

/// All half angles in (0, pi/2) with q_of_theta(theta) == q, ascending.
std::vector<double> solve_theta(double q, const SolverOptions& opts = {});

std::vector<SolveResult> solve_pq(double p, double q,
                                  const SolverOptions& opts = {});

}  // namespace gion
