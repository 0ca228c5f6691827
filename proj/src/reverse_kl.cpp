#include "robust_outage/reverse_kl.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "robust_outage/detail/scalar_solve.hpp"
#include "robust_outage/forward_kl.hpp"

namespace robust_outage {

namespace {

// Log of the mu-equation residual with m = mu - 1:
//   eps*ln(mu) + (1-eps)*ln(m) - ln(m + eps) + d,
// strictly increasing in m, -inf at m -> 0+, -> d > 0 as m -> inf.
double mu_residual(double m, double eps, double d) {
  return eps * std::log1p(m) + (1.0 - eps) * std::log(m) - std::log(m + eps) + d;
}

// mu - 1 as a function of lambda in the alternative dual,
// rationalized for lambda < 1 to avoid cancellation.
double mu_minus_one_of_lambda(double lambda, double eps) {
  const double disc = std::sqrt((1.0 - lambda) * (1.0 - lambda) + 4.0 * lambda * eps);
  if (lambda < 1.0) {
    return 2.0 * lambda * eps / ((1.0 - lambda) + disc);
  }
  return 0.5 * (lambda - 1.0 + disc);
}

double dual_objective(double lambda, double eps, double d) {
  if (lambda == 0.0) return 1.0;  // L(0+) = 1
  const double m = mu_minus_one_of_lambda(lambda, eps);
  return lambda * eps * (1.0 / m + std::log1p(1.0 / m)) +
         lambda * (d - std::log1p(m) + std::log(lambda));
}

}  // namespace

ReverseResult solve_reverse(double eps, double d) {
  check_probability(eps, "eps");
  check_radius(d);

  ReverseResult r{};
  r.floor = -std::expm1(-d);
  r.bounds = {r.floor + std::exp(-d) * eps, 1.0};
  r.approx_low_eps = r.floor;
  r.approx_low_d = (eps > 0.0 && eps < 1.0) ? approx_reverse_low_d(eps, d) : kNaN;

  if (d == 0.0) {
    r.p_out = eps;
    r.mu = kInf;  // mu -> inf as d -> 0
    r.mu_minus_one = kInf;
    r.lambda_star = kInf;
    return r;
  }
  if (eps == 0.0) {
    r.p_out = r.floor;
    r.mu = 1.0;
    r.mu_minus_one = 0.0;
    r.lambda_star = std::exp(-d);
    return r;
  }
  if (eps == 1.0) {
    // degenerate: f* = f0 already has outage mass 1; certificates as limits
    r.p_out = 1.0;
    r.lambda_star = std::exp(-d);
    r.mu_minus_one = r.lambda_star;
    r.mu = 1.0 + r.lambda_star;
    return r;
  }

  // Bracket m around the small-d scale sqrt(eps(1-eps)/(2d)), expanding
  // geometrically until the residual changes sign.
  auto residual = [&](double ln_m) { return mu_residual(std::exp(ln_m), eps, d); };
  double hi = std::log(std::max(2.0, 2.0 * std::sqrt(eps * (1.0 - eps) / (2.0 * d))));
  double fhi = residual(hi);
  while (fhi < 0.0) {
    hi += std::log(4.0);
    fhi = residual(hi);
  }
  double lo = std::min(hi - 1.0, std::log(1e-14));
  double flo = residual(lo);
  while (flo > 0.0) {
    lo -= std::log(4.0);
    flo = residual(lo);
  }
  const double ln_m = detail::find_root(residual, lo, hi, flo, fhi);
  const double m = std::exp(ln_m);

  const double ln_lambda =
      -d + eps * std::log(m) + (1.0 - eps) * std::log1p(m);
  const double ln_p = std::log(eps) + ln_lambda - std::log(m);
  r.mu_minus_one = m;
  r.mu = 1.0 + m;
  r.lambda_star = std::exp(ln_lambda);
  r.p_out = std::clamp(std::exp(ln_p), eps, 1.0);
  return r;
}

std::pair<double, double> solve_reverse_dual(double eps, double d) {
  check_probability(eps, "eps");
  check_radius(d);
  if (!(eps > 0.0 && eps < 1.0) || !(d > 0.0)) {
    throw std::domain_error("solve_reverse_dual requires 0 < eps < 1 and d > 0");
  }
  // Coarse log-grid scan to bracket the minimum, then golden section in
  // ln(lambda); the dual is convex in lambda, hence unimodal in ln(lambda).
  const double ln_lo = std::log(1e-18), ln_hi = std::log(1e18);
  const int n = 1200;
  int best = 0;
  double best_val = kInf;
  std::vector<double> vals(n + 1);
  for (int i = 0; i <= n; ++i) {
    const double lam = std::exp(ln_lo + (ln_hi - ln_lo) * i / n);
    vals[i] = dual_objective(lam, eps, d);
    if (vals[i] < best_val) {
      best_val = vals[i];
      best = i;
    }
  }
  const double a = ln_lo + (ln_hi - ln_lo) * std::max(0, best - 1) / n;
  const double b = ln_lo + (ln_hi - ln_lo) * std::min(n, best + 1) / n;
  auto obj = [&](double ln_lam) { return dual_objective(std::exp(ln_lam), eps, d); };
  auto [ln_lam_star, p] = detail::golden_min(obj, a, b);
  return {std::clamp(p, 0.0, 1.0), std::exp(ln_lam_star)};
}

std::pair<double, double> reverse_floor_bounds(double eps, double d) {
  check_probability(eps, "eps");
  check_radius(d);
  return {-std::expm1(-d) + std::exp(-d) * eps, d + eps};
}

double approx_reverse_low_eps(double d) {
  check_radius(d);
  return -std::expm1(-d);
}

double approx_reverse_low_d(double eps, double d) {
  check_probability(eps, "eps");
  check_radius(d);
  if (!(eps > 0.0 && eps < 1.0)) {
    throw std::domain_error("approx_reverse_low_d requires 0 < eps < 1");
  }
  return eps + std::sqrt(2.0 * eps * (1.0 - eps) * d);
}

WorstCaseRatio reverse_worst_ratio(const ReverseResult& result, double eps) {
  check_probability(eps, "eps");
  if (eps == 0.0 || eps == 1.0) {
    throw std::domain_error("reverse_worst_ratio: degenerate at eps in {0,1}");
  }
  if (std::isinf(result.mu)) return {1.0, 1.0};  // d = 0
  return {result.lambda_star / result.mu_minus_one, result.lambda_star / result.mu};
}

CompoundSolution solve_reverse_compound(double eps, double d) {
  ReverseResult rr = solve_reverse(eps, d);
  CompoundSolution sol{};
  sol.p_out = rr.p_out;
  sol.cls = UncertaintyClass::reverse_kl(d);
  sol.eps = eps;
  sol.certificate = ReverseRootCertificate{rr.mu, rr.lambda_star};
  sol.regime = classify_regime(eps, d);
  sol.lower_bound = rr.bounds.first;
  sol.upper_bound = rr.bounds.second;
  return sol;
}

}  // namespace robust_outage
