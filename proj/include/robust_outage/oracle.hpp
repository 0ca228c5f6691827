#ifndef ROBUST_OUTAGE_ORACLE_HPP
#define ROBUST_OUTAGE_ORACLE_HPP

#include <cstdint>
#include <span>

#include "robust_outage/core.hpp"

namespace robust_outage {

/// Result of the brute-force Bernoulli-reduction certifier.
struct OracleResult {
  double p_star;
  int iterations;
  double residual;  // |divergence(p_star) - d| at termination
};

/// max{p in [eps, 1] : bernoulli_kl(p, eps) <= d}, by bisection on the
/// increasing map p -> bernoulli_kl(p, eps). Returns 1 when
/// bernoulli_kl(1, eps) = ln(1/eps) <= d.
OracleResult oracle_forward(double eps, double d);

/// max{p in [eps, 1) : bernoulli_kl(eps, p) <= d}. At eps = 0 returns the
/// exact cap 1 - e^{-d} from ln(1/(1-p)) <= d.
OracleResult oracle_reverse(double eps, double d);

/// Direct finite-support maximization of the outage mass subject to the
/// KL-ball constraint, by exhaustive scan (with grid refinement to 1e-8)
/// over the common scaling factors of the outage set and its complement.
/// Validates the two-set reduction used by the scalar oracles.
double oracle_discrete(std::span<const double> probs,
                       std::span<const bool> outage_mask,
                       const UncertaintyClass& cls);

}  // namespace robust_outage

#endif
