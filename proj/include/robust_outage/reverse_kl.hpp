#ifndef ROBUST_OUTAGE_REVERSE_KL_HPP
#define ROBUST_OUTAGE_REVERSE_KL_HPP

#include <utility>

#include "robust_outage/core.hpp"

namespace robust_outage {

/// Compound outage solution for the class D(f0 || f) <= d.
///
/// The root mu > 1 of mu^eps (mu-1)^{1-eps} / (mu-1+eps) = e^{-d} is found
/// from the log residual eps*ln(mu) + (1-eps)*ln(mu-1) - ln(mu-1+eps) + d,
/// which is strictly increasing in mu; then
///   lambda* = e^{-d} (mu-1)^eps mu^{1-eps},  p_out = lambda* eps / (mu - 1).
struct ReverseResult {
  double p_out;
  double mu;              // >= 1 (inf at d = 0, limit regime)
  double mu_minus_one;    // kept separately: mu - 1 underflows in mu for large d
  double lambda_star;
  double floor;           // 1 - e^{-d}
  std::pair<double, double> bounds;  // (1 - e^{-d} + e^{-d} eps, 1)
  double approx_low_eps;  // 1 - e^{-d}
  double approx_low_d;    // eps + sqrt(2 eps (1-eps) d), NaN at eps in {0,1}
};

ReverseResult solve_reverse(double eps, double d);

/// Alternative characterization: minimize over lambda >= 0 the dual
///   L(lambda) = lambda*eps*(1/(mu-1) + ln(mu/(mu-1))) + lambda*(d - ln(mu/lambda))
/// with mu = (1 + lambda + sqrt((1-lambda)^2 + 4 lambda eps))/2.
/// Returns (p_out, lambda at the minimum).
std::pair<double, double> solve_reverse_dual(double eps, double d);

/// (1 - e^{-d} + e^{-d} eps, d + eps): the floor sharpened by the eps term,
/// and the small-d linear bound.
/// The second member is a valid bound only when d <= 0.01.
std::pair<double, double> reverse_floor_bounds(double eps, double d);

/// 1 - e^{-d}, the error floor (low nominal outage limit).
double approx_reverse_low_eps(double d);

/// eps + sqrt(2 eps (1-eps) d), the small-uncertainty expansion.
double approx_reverse_low_d(double eps, double d);

/// Worst-case density ratios (lambda*/(mu-1), lambda*/mu).
/// Throws std::domain_error at eps in {0, 1}.
WorstCaseRatio reverse_worst_ratio(const ReverseResult& result, double eps);

CompoundSolution solve_reverse_compound(double eps, double d);

}  // namespace robust_outage

#endif
