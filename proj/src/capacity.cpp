#include "robust_outage/capacity.hpp"

#include <cmath>

#include "robust_outage/forward_kl.hpp"
#include "robust_outage/lp_bounds.hpp"
#include "robust_outage/reverse_kl.hpp"

namespace robust_outage {

namespace {

constexpr double kRateTol = 1e-6;  // nats

double compound_outage(double eps, const std::optional<UncertaintyClass>& cls) {
  if (!cls) return eps;
  switch (cls->kind) {
    case DivergenceKind::ForwardKL:
      return solve_forward(eps, cls->d).p_out;
    case DivergenceKind::ReverseKL:
      return solve_reverse(eps, cls->d).p_out;
    case DivergenceKind::LpBall: {
      // only the lower-bound chain is available; use its tightest member
      const LpBoundChain chain = lp_lower_bounds(cls->p, cls->d, eps);
      return std::max(chain.p1_via_forward, chain.p1_via_reverse);
    }
  }
  return eps;
}

}  // namespace

double outage_capacity(const CapacityQuery& q) {
  check_probability(q.delta, "delta");
  if (!(q.r_max > 0.0)) throw std::domain_error("rate bracket must be positive");
  if (!q.eps_of_rate) throw std::invalid_argument("eps_of_rate callback missing");

  auto p_at = [&](double r) { return compound_outage(q.eps_of_rate(r), q.cls); };

  if (p_at(q.r_max) <= q.delta) {
    throw BracketError("outage at r_max is within target; enlarge the bracket");
  }
  if (p_at(kRateTol) > q.delta) return 0.0;

  double lo = kRateTol, hi = q.r_max;  // p(lo) <= delta < p(hi)
  while (hi - lo > kRateTol) {
    const double mid = 0.5 * (lo + hi);
    (p_at(mid) <= q.delta ? lo : hi) = mid;
  }
  return lo;
}

double capacity_floor(double d) {
  check_radius(d);
  return -std::expm1(-d);
}

double capacity_loss_bound(double delta, double d,
                           const std::function<double(double)>& nominal_capacity_at) {
  check_probability(delta, "delta");
  check_radius(d);
  if (d > 0.01) throw std::domain_error("capacity_loss_bound: valid only for d <= 0.01");
  if (!(delta > d)) throw std::domain_error("capacity_loss_bound requires delta > d");
  return nominal_capacity_at(delta - d);
}

}  // namespace robust_outage
