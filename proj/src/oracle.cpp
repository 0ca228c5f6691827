#include "robust_outage/oracle.hpp"

#include <cmath>
#include <cstddef>
#include <numeric>

namespace robust_outage {

namespace {

constexpr int kBisectDepth = 60;  // ~1e-18 interval, independent of solver tolerances

// Divergence of the two-set scaled density against the nominal atoms.
// Outage atoms carry total mass q, the complement carries 1 - q; within
// each set the nominal shape is kept (atoms with zero nominal mass share
// the set mass uniformly when the whole set has zero nominal mass).
double discrete_divergence(std::span<const double> probs,
                           std::span<const bool> mask, double eps, double q,
                           DivergenceKind kind) {
  std::size_t n_mask = 0;
  for (bool b : mask) n_mask += b ? 1 : 0;
  const std::size_t n_clear = mask.size() - n_mask;

  double div = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    const double p = probs[i];
    double f;
    if (mask[i]) {
      f = eps > 0.0 ? p * q / eps : q / static_cast<double>(n_mask);
    } else {
      f = eps < 1.0 ? p * (1.0 - q) / (1.0 - eps)
                    : (1.0 - q) / static_cast<double>(n_clear);
    }
    if (kind == DivergenceKind::ForwardKL) {
      if (f > 0.0) {
        if (p == 0.0) return kInf;
        div += f * std::log(f / p);
      }
    } else {
      if (p > 0.0) {
        if (f == 0.0) return kInf;
        div += p * std::log(p / f);
      }
    }
  }
  return div;
}

}  // namespace

OracleResult oracle_forward(double eps, double d) {
  check_probability(eps, "eps");
  check_radius(d);
  if (d == 0.0 || eps == 0.0 || eps == 1.0) return {eps, 0, 0.0};
  if (-std::log(eps) <= d) return {1.0, 0, 0.0};

  double lo = eps, hi = 1.0;
  for (int it = 0; it < kBisectDepth; ++it) {
    const double mid = 0.5 * (lo + hi);
    (bernoulli_kl(mid, eps) <= d ? lo : hi) = mid;
  }
  return {lo, kBisectDepth, std::abs(bernoulli_kl(lo, eps) - d)};
}

OracleResult oracle_reverse(double eps, double d) {
  check_probability(eps, "eps");
  check_radius(d);
  if (d == 0.0 || eps == 1.0) return {eps, 0, 0.0};
  if (eps == 0.0) return {-std::expm1(-d), 0, 0.0};

  double lo = eps, hi = 1.0 - 1e-16;
  if (bernoulli_kl(eps, hi) <= d) return {hi, 0, 0.0};
  for (int it = 0; it < kBisectDepth; ++it) {
    const double mid = 0.5 * (lo + hi);
    (bernoulli_kl(eps, mid) <= d ? lo : hi) = mid;
  }
  return {lo, kBisectDepth, std::abs(bernoulli_kl(eps, lo) - d)};
}

double oracle_discrete(std::span<const double> probs,
                       std::span<const bool> outage_mask,
                       const UncertaintyClass& cls) {
  if (probs.size() != outage_mask.size() || probs.empty()) {
    throw std::invalid_argument("oracle_discrete: probs/mask size mismatch");
  }
  if (cls.kind == DivergenceKind::LpBall) {
    throw std::invalid_argument("oracle_discrete: class must be a KL kind");
  }
  double sum = 0.0;
  bool any_true = false, any_false = false;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (!(probs[i] >= 0.0)) throw std::domain_error("oracle_discrete: negative atom");
    sum += probs[i];
    (outage_mask[i] ? any_true : any_false) = true;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw std::domain_error("oracle_discrete: probs must sum to 1");
  }
  if (!any_true) return 0.0;
  if (!any_false) return 1.0;

  double eps = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (outage_mask[i]) eps += probs[i];
  }

  auto feasible = [&](double q) {
    return discrete_divergence(probs, outage_mask, eps, q, cls.kind) <=
           cls.d + 1e-15;
  };
  if (eps >= 1.0) return 1.0;
  if (feasible(1.0)) return 1.0;

  // Exhaustive scan with four levels of 100x grid refinement: the final
  // step is <= 1e-8 of the scan range.
  double lo = eps, hi = 1.0;
  for (int level = 0; level < 4; ++level) {
    const double step = (hi - lo) / 100.0;
    double best = lo;
    for (int i = 0; i <= 100; ++i) {
      const double q = lo + step * i;
      if (feasible(q)) best = q;
    }
    lo = best;
    hi = std::min(1.0, best + step);
  }
  return lo;
}

}  // namespace robust_outage
