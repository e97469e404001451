#include "gion/inverse_solver.hpp"

#include <cmath>
#include <string>

namespace gion {
namespace {

constexpr double kHalfPi = kPi / 2.0;

int sign(double v) { return (v > 0.0) - (v < 0.0); }

// The sign at lo is supplied rather than evaluated: lo may be theta = 0,
// where q exists only as a limit.
double bisect(double q, double lo, int sign_lo, double hi, double tol) {
  for (;;) {
    const double mid = 0.5 * (lo + hi);
    if (hi - lo <= tol || mid <= lo || mid >= hi) return mid;
    const double f_mid = q_of_theta(mid) - q;
    if (f_mid == 0.0) return mid;
    if (sign(f_mid) == sign_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
}

CurveExtremum golden_section(double lo, double hi, bool maximum) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  auto score = [maximum](double t) {
    const double v = q_of_theta(t);
    return maximum ? v : -v;
  };
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = score(x1), f2 = score(x2);
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = score(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = score(x1);
    }
  }
  const double t = f1 > f2 ? x1 : x2;
  return {t, q_of_theta(t), maximum};
}

}  // namespace

void SolverOptions::validate() const {
  if (grid_size < 64) {
    throw DomainError("grid_size must be >= 64, got " +
                      std::to_string(grid_size));
  }
  if (!(refine_tol > 0.0) || !(extremum_tol > 0.0)) {
    throw DomainError("solver tolerances must be positive");
  }
}

double q_of_metrics(const SegmentMetrics& m) {
  return m.m / m.a + m.r / m.m + m.s / m.r;
}

double q_of_theta(double theta) {
  return q_of_metrics(metrics(SegmentConfig(1.0, theta)));
}

double p_of_config(const SegmentConfig& cfg) {
  const SegmentMetrics m = metrics(cfg);
  return m.a + m.m + m.s + m.r;
}

std::vector<QCurveSample> sample_q_curve(int grid_size) {
  SolverOptions{grid_size}.validate();
  const double h = kHalfPi / grid_size;
  std::vector<QCurveSample> out;
  out.reserve(static_cast<std::size_t>(grid_size) - 1);
  for (int i = 1; i < grid_size; ++i) {
    const double t = i * h;
    out.push_back({t, q_of_theta(t)});
  }
  return out;
}

std::vector<CurveExtremum> q_curve_extrema(const SolverOptions& opts) {
  opts.validate();
  const auto samples = sample_q_curve(opts.grid_size);
  std::vector<CurveExtremum> out;
  for (std::size_t i = 1; i + 1 < samples.size(); ++i) {
    const double left = samples[i].q - samples[i - 1].q;
    const double right = samples[i + 1].q - samples[i].q;
    const bool is_max = left > 0.0 && right <= 0.0;
    const bool is_min = left < 0.0 && right >= 0.0;
    if (is_max || is_min) {
      out.push_back(
          golden_section(samples[i - 1].theta, samples[i + 1].theta, is_max));
    }
  }
  return out;
}

std::vector<ThetaRoot> solve_theta_roots(double q, const SolverOptions& opts) {
  if (!std::isfinite(q)) throw DomainError("q must be finite");
  opts.validate();

  // Breakpoints split (0, pi/2) into pieces on which q(theta) is monotone.
  // The outer endpoints carry the limit values, which are never attained.
  const auto extrema = q_curve_extrema(opts);
  std::vector<double> knots{0.0};
  std::vector<double> values{kQInfimum};
  for (const auto& e : extrema) {
    knots.push_back(e.theta);
    values.push_back(e.q);
  }
  knots.push_back(kHalfPi);
  values.push_back(kQSupremum);

  const auto near_extremum = [&](std::size_t knot) {
    return knot > 0 && knot + 1 < knots.size() &&
           std::abs(q - values[knot]) < opts.extremum_tol;
  };

  std::vector<ThetaRoot> roots;
  for (std::size_t k = 0; k + 1 < knots.size(); ++k) {
    const double f_lo = values[k] - q;
    const double f_hi = values[k + 1] - q;
    const bool hi_interior = k + 2 < knots.size();
    const bool flagged = near_extremum(k) || near_extremum(k + 1);
    if (f_hi == 0.0 && hi_interior) {
      roots.push_back({knots[k + 1], true});
    } else if (sign(f_lo) * sign(f_hi) < 0) {
      const double t =
          bisect(q, knots[k], sign(f_lo), knots[k + 1], opts.refine_tol);
      roots.push_back({t, flagged});
    }
  }
  return roots;
}

std::vector<double> solve_theta(double q, const SolverOptions& opts) {
  std::vector<double> out;
  for (const auto& root : solve_theta_roots(q, opts)) out.push_back(root.theta);
  return out;
}

std::vector<SolveResult> solve_pq(double p, double q,
                                  const SolverOptions& opts) {
  if (!std::isfinite(p) || p <= 0.0) {
    throw DomainError("p must be finite and > 0, got " + std::to_string(p));
  }
  std::vector<SolveResult> out;
  for (const auto& root : solve_theta_roots(q, opts)) {
    const double unit_p = p_of_config(SegmentConfig(1.0, root.theta));
    const SegmentMetrics m = metrics(SegmentConfig(p / unit_p, root.theta));
    SolveResult res;
    res.R = m.R;
    res.theta = m.theta;
    res.a = m.a;
    res.m = m.m;
    res.r = m.r;
    res.s = m.s;
    res.p_check = m.a + m.m + m.s + m.r;
    res.q_check = q_of_metrics(m);
    res.near_double = root.near_double;
    out.push_back(res);
  }
  return out;
}

}  // namespace gion
