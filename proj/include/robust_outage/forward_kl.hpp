#ifndef ROBUST_OUTAGE_FORWARD_KL_HPP
#define ROBUST_OUTAGE_FORWARD_KL_HPP

#include <utility>

#include "robust_outage/core.hpp"

namespace robust_outage {

/// Compound outage solution for the class D(f || f0) <= d.
///
/// The dual objective L(s) = s*ln(1 + (e^{1/s}-1)*eps) + s*d is minimized
/// via the substitution y = eps*(e^{1/s} - 1), whose stationarity equation
///   d + ln(1+y) = ((y+eps)/(1+y)) * ln(1 + y/eps)
/// is solved by bracketed root finding; then p_out = (eps + y*)/(1 + y*).
struct ForwardResult {
  double p_out;
  double s_star;          // 0 when y* -> inf (p_out = 1), inf when d = 0
  double y_star;
  double approx_low_eps;  // uncertainty-dominated approximation, NaN outside domain
  double approx_low_d;    // nominal-dominated approximation, NaN outside domain
  std::pair<double, double> bounds;  // eps <= p_out <= min(d + (e-1)eps, 1)
};

ForwardResult solve_forward(double eps, double d);

/// (eps, min(d + (e-1)*eps, 1))
std::pair<double, double> forward_bounds(double eps, double d);

/// Leading-order compound outage in the uncertainty-dominated regime
/// (eps << d): p = d/(ln(d/eps) - ln ln(d/eps)), s* = p/d.
/// Throws std::domain_error when ln(d/eps) <= 1 (nested log undefined).
std::pair<double, double> approx_uncertainty_dominated(double eps, double d);

/// Nominal-dominated regime (d << eps):
/// p = eps + sqrt(2d(1-eps)eps), s* = sqrt(eps(1-eps)/(2d)) (inf at d = 0).
std::pair<double, double> approx_nominal_dominated(double eps, double d);

/// Piecewise-constant worst-case density ratios (p_out/eps, (1-p_out)/(1-eps)).
/// Throws std::domain_error at eps in {0, 1}.
WorstCaseRatio forward_worst_ratio(const ForwardResult& result, double eps);

/// Factor-100 thresholds: uncertainty-dominated when eps <= d/100,
/// nominal-dominated when d <= eps/100, transitional otherwise
/// (including the degenerate eps = d = 0 point).
Regime classify_regime(double eps, double d);

/// Packs a forward solve into the shared CompoundSolution shape.
CompoundSolution solve_forward_compound(double eps, double d);

}  // namespace robust_outage

#endif
