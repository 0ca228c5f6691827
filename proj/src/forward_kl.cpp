#include "robust_outage/forward_kl.hpp"

#include <algorithm>
#include <cmath>

#include "robust_outage/detail/scalar_solve.hpp"

namespace robust_outage {

namespace {

// Stationarity residual in y-space: d + ln(1+y) - ((y+eps)/(1+y))*ln(1+y/eps).
// Positive at y = 0+ (value d), tends to d + ln(eps) as y -> inf.
double stationarity_residual(double y, double eps, double d) {
  return d + std::log1p(y) - (y + eps) / (1.0 + y) * std::log1p(y / eps);
}

double fill_approx_low_eps(double eps, double d) {
  if (eps > 0.0 && d > 0.0 && std::log(d / eps) > 1.0) {
    return approx_uncertainty_dominated(eps, d).first;
  }
  return kNaN;
}

double fill_approx_low_d(double eps, double d) {
  if (eps > 0.0 && eps < 1.0) {
    return approx_nominal_dominated(eps, d).first;
  }
  return kNaN;
}

}  // namespace

ForwardResult solve_forward(double eps, double d) {
  check_probability(eps, "eps");
  check_radius(d);

  ForwardResult r{};
  r.bounds = forward_bounds(eps, d);
  r.approx_low_eps = fill_approx_low_eps(eps, d);
  r.approx_low_d = fill_approx_low_d(eps, d);

  if (eps == 0.0) {  // P_out = 0 iff eps = 0
    r.p_out = 0.0;
    r.s_star = 0.0;
    r.y_star = 0.0;
    return r;
  }
  if (eps == 1.0) {
    r.p_out = 1.0;
    r.s_star = 0.0;
    r.y_star = kInf;
    return r;
  }
  if (d == 0.0) {
    r.p_out = eps;
    r.s_star = kInf;
    r.y_star = 0.0;
    return r;
  }
  if (d >= -std::log(eps)) {
    // the whole ball reaches p = 1: KL(1 || eps) = ln(1/eps) <= d
    r.p_out = 1.0;
    r.s_star = 0.0;
    r.y_star = kInf;
    return r;
  }

  // Root-find on ln y. Residual is d > 0 at y -> 0; expand hi until the
  // sign changes (guaranteed since the limit d + ln(eps) is negative here).
  auto residual = [&](double ln_y) { return stationarity_residual(std::exp(ln_y), eps, d); };
  double lo = std::log(std::max(eps * 1e-15, 1e-300));
  double hi = std::log(std::max(d, eps));
  double fhi = residual(hi);
  while (fhi > 0.0) {
    hi += std::log(4.0);
    fhi = residual(hi);
  }
  double ln_y = detail::find_root(residual, lo, hi, residual(lo), fhi);
  double y = std::exp(ln_y);

  r.y_star = y;
  r.p_out = (eps + y) / (1.0 + y);
  r.s_star = 1.0 / std::log1p(y / eps);
  r.p_out = std::clamp(r.p_out, eps, 1.0);
  return r;
}

std::pair<double, double> forward_bounds(double eps, double d) {
  check_probability(eps, "eps");
  check_radius(d);
  const double e = std::exp(1.0);
  return {eps, std::min(d + (e - 1.0) * eps, 1.0)};
}

std::pair<double, double> approx_uncertainty_dominated(double eps, double d) {
  check_probability(eps, "eps");
  check_radius(d);
  if (!(eps > 0.0) || !(d > 0.0) || !(std::log(d / eps) > 1.0)) {
    throw std::domain_error(
        "approx_uncertainty_dominated requires ln(d/eps) > 1");
  }
  const double u = std::log(d / eps);
  const double p = d / (u - std::log(u));
  return {p, p / d};
}

std::pair<double, double> approx_nominal_dominated(double eps, double d) {
  check_probability(eps, "eps");
  check_radius(d);
  if (!(eps > 0.0 && eps < 1.0)) {
    throw std::domain_error("approx_nominal_dominated requires 0 < eps < 1");
  }
  const double p = eps + std::sqrt(2.0 * d * (1.0 - eps) * eps);
  const double s = d == 0.0 ? kInf : std::sqrt(eps * (1.0 - eps) / (2.0 * d));
  return {p, s};
}

WorstCaseRatio forward_worst_ratio(const ForwardResult& result, double eps) {
  check_probability(eps, "eps");
  if (eps == 0.0 || eps == 1.0) {
    throw std::domain_error("forward_worst_ratio: degenerate at eps in {0,1}");
  }
  return {result.p_out / eps, (1.0 - result.p_out) / (1.0 - eps)};
}

Regime classify_regime(double eps, double d) {
  check_probability(eps, "eps");
  check_radius(d);
  if (eps == 0.0 && d == 0.0) return Regime::Transitional;
  if (eps <= d / 100.0) return Regime::UncertaintyDominated;
  if (d <= eps / 100.0) return Regime::NominalDominated;
  return Regime::Transitional;
}

CompoundSolution solve_forward_compound(double eps, double d) {
  ForwardResult fr = solve_forward(eps, d);
  CompoundSolution sol{};
  sol.p_out = fr.p_out;
  sol.cls = UncertaintyClass::forward_kl(d);
  sol.eps = eps;
  sol.certificate = ForwardDualCertificate{fr.s_star, fr.y_star};
  sol.regime = classify_regime(eps, d);
  sol.lower_bound = fr.bounds.first;
  sol.upper_bound = fr.bounds.second;
  return sol;
}

}  // namespace robust_outage
