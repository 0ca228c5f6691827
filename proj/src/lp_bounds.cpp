#include "robust_outage/lp_bounds.hpp"

#include <algorithm>
#include <cmath>

#include "robust_outage/forward_kl.hpp"
#include "robust_outage/reverse_kl.hpp"

namespace robust_outage {

LpBoundChain lp_lower_bounds(double p, double d, double eps) {
  if (!(p >= 1.0)) throw std::domain_error("norm order p must be >= 1");
  check_radius(d);
  check_probability(eps, "eps");
  const double kl_radius = 0.5 * d * d;
  LpBoundChain chain{};
  chain.p = p;
  chain.d = d;
  chain.eps = eps;
  chain.p1_via_forward = solve_forward(eps, kl_radius).p_out;
  chain.p1_via_reverse = solve_reverse(eps, kl_radius).p_out;
  chain.floor = -std::expm1(-kl_radius);
  chain.floor_with_eps = chain.floor + std::exp(-kl_radius) * eps;
  return chain;
}

double tv_exact_outage(double d, double eps) {
  check_radius(d);
  check_probability(eps, "eps");
  return std::min(1.0, eps + 0.5 * d);
}

}  // namespace robust_outage
