#ifndef ROBUST_OUTAGE_CAPACITY_HPP
#define ROBUST_OUTAGE_CAPACITY_HPP

#include <functional>
#include <optional>

#include "robust_outage/core.hpp"

namespace robust_outage {

/// Thrown when the compound outage at the top of the rate bracket is
/// still within the target: the true capacity exceeds the bracket, and we
/// report rather than extrapolate.
struct BracketError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A capacity inversion query. cls == nullopt means the nominal channel
/// (no uncertainty ball). eps_of_rate must be nondecreasing over
/// (0, r_max]; closed-form or MC-backed (with a fixed seed so that the
/// bisection sees a monotone common-random-numbers estimate).
struct CapacityQuery {
  double delta;
  std::optional<UncertaintyClass> cls;
  std::function<double(double)> eps_of_rate;
  double r_max;
};

/// Largest rate R in (0, r_max] whose compound outage stays <= delta,
/// by bisection to 1e-6 nats. Returns 0 when even R -> 0+ violates delta.
/// Throws BracketError when the outage at r_max is still <= delta.
double outage_capacity(const CapacityQuery& q);

/// Reverse-class capacity floor: 1 - e^{-d}. Targets delta below it admit
/// no positive rate.
double capacity_floor(double d);

/// Small-d upper bound on the reverse-class compound capacity:
/// C_delta <= C_0(delta - d). Valid for d <= 0.01 and delta > d.
double capacity_loss_bound(double delta, double d,
                           const std::function<double(double)>& nominal_capacity_at);

}  // namespace robust_outage

#endif
