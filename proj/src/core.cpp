#include "robust_outage/core.hpp"

#include <cmath>

namespace robust_outage {

UncertaintyClass UncertaintyClass::forward_kl(double d) {
  check_radius(d);
  return {DivergenceKind::ForwardKL, d, 0.0};
}

UncertaintyClass UncertaintyClass::reverse_kl(double d) {
  check_radius(d);
  return {DivergenceKind::ReverseKL, d, 0.0};
}

UncertaintyClass UncertaintyClass::lp_ball(double d, double p) {
  check_radius(d);
  if (!(p >= 1.0)) {
    throw std::domain_error("lp_ball: norm order p must be >= 1");
  }
  return {DivergenceKind::LpBall, d, p};
}

void check_probability(double x, const char* name) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::domain_error(std::string(name) + " must lie in [0,1], got " +
                            std::to_string(x));
  }
}

void check_radius(double d) {
  if (!(d >= 0.0) || std::isinf(d)) {
    throw std::domain_error("divergence radius d must be finite and nonnegative");
  }
}

double bernoulli_kl(double p, double q) {
  check_probability(p, "p");
  check_probability(q, "q");
  auto term = [](double a, double b) {
    if (a == 0.0) return 0.0;  // 0*ln 0 = 0
    if (b == 0.0) return kInf;
    return a * std::log(a / b);
  };
  return term(p, q) + term(1.0 - p, 1.0 - q);
}

double safe_dual_objective(double s, double eps, double d) {
  if (!(s > 0.0)) throw std::domain_error("safe_dual_objective: s must be > 0");
  check_probability(eps, "eps");
  check_radius(d);
  if (std::isinf(s)) {
    // lim s->inf of s*ln(1 + (e^{1/s}-1)eps) = eps; the sd term dominates otherwise
    return d == 0.0 ? eps : kInf;
  }
  if (eps == 0.0) return s * d;
  const double t = 1.0 / s;
  if (t > 40.0) {
    return 1.0 + s * std::log(eps + (1.0 - eps) * std::exp(-t)) + s * d;
  }
  return s * std::log1p(std::expm1(t) * eps) + s * d;
}

const char* to_string(Regime r) {
  switch (r) {
    case Regime::UncertaintyDominated: return "uncertainty-dominated";
    case Regime::NominalDominated: return "nominal-dominated";
    default: return "transitional";
  }
}

const char* to_string(DivergenceKind k) {
  switch (k) {
    case DivergenceKind::ForwardKL: return "fwd-kl";
    case DivergenceKind::ReverseKL: return "rev-kl";
    default: return "lp";
  }
}

}  // namespace robust_outage
