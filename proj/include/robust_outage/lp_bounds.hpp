#ifndef ROBUST_OUTAGE_LP_BOUNDS_HPP
#define ROBUST_OUTAGE_LP_BOUNDS_HPP

#include "robust_outage/core.hpp"

namespace robust_outage {

/// Lower-bound chain for the Lp-ball class ||f - f0||_p <= d, obtained by
/// relaxing to the L1 ball and crossing into the KL balls of radius d^2/2
/// (Pinsker, D >= ||f - f0||_1^2 / 2). In descending order:
///   P_p >= P_1 >= max(p1_via_forward, p1_via_reverse)
///       >= floor_with_eps >= floor.
/// No exact P_p is claimed for p > 1.
struct LpBoundChain {
  double p;
  double d;
  double eps;
  double p1_via_forward;   // forward-KL compound outage at radius d^2/2
  double p1_via_reverse;   // reverse-KL compound outage at radius d^2/2
  double floor_with_eps;   // 1 - e^{-d^2/2} + e^{-d^2/2} eps
  double floor;            // 1 - e^{-d^2/2}
};

LpBoundChain lp_lower_bounds(double p, double d, double eps);

/// Exact L1 (total variation) worst case: moving mass d/2 into the outage
/// set gives min(1, eps + d/2). An extension beyond the KL results, gated
/// by its own discrete-support oracle test.
double tv_exact_outage(double d, double eps);

}  // namespace robust_outage

#endif
