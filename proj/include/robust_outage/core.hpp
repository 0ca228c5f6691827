#ifndef ROBUST_OUTAGE_CORE_HPP
#define ROBUST_OUTAGE_CORE_HPP

#include <limits>
#include <stdexcept>
#include <string>
#include <variant>

namespace robust_outage {

/// Numeric policy shared by every solver: scalar root-finds and
/// minimizations terminate at relative tolerance 1e-12 on the variable
/// and the residual, with at most 200 iterations.
struct NumericPolicy {
  static constexpr double rel_tol = 1e-12;
  static constexpr int max_iter = 200;
};

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

enum class DivergenceKind { ForwardKL, ReverseKL, LpBall };

/// Which divergence ball constrains the true fading law.
/// d is in nats for the KL kinds and in norm units for LpBall.
struct UncertaintyClass {
  DivergenceKind kind;
  double d;
  double p = 0.0;  // norm order, LpBall only

  static UncertaintyClass forward_kl(double d);
  static UncertaintyClass reverse_kl(double d);
  static UncertaintyClass lp_ball(double d, double p);
};

enum class Regime { UncertaintyDominated, NominalDominated, Transitional };

/// The two piecewise-constant scalings of the nominal density that make
/// up the worst-case distribution: r_outage on the outage set, r_clear on
/// its complement. Normalization: r_outage*eps + r_clear*(1-eps) = 1.
struct WorstCaseRatio {
  double r_outage;
  double r_clear;
};

struct ForwardDualCertificate {
  double s_star;  // minimizer of the dual objective, >= 0 (inf at d = 0)
  double y_star;  // y = eps*(e^{1/s} - 1) at the minimizer
};

struct ReverseRootCertificate {
  double mu;           // root of the mu-equation, >= 1
  double lambda_star;  // multiplier, >= 0
};

struct BoundOnlyCertificate {};

using Certificate =
    std::variant<ForwardDualCertificate, ReverseRootCertificate, BoundOnlyCertificate>;

/// Worst-case outage probability together with its dual/root certificate,
/// regime tag and bound values.
struct CompoundSolution {
  double p_out;
  UncertaintyClass cls;
  double eps;
  Certificate certificate;
  Regime regime;
  double lower_bound;
  double upper_bound;
};

/// Throws std::domain_error unless 0 <= x <= 1.
void check_probability(double x, const char* name);

/// Throws std::domain_error unless 0 <= d < inf.
void check_radius(double d);

/// Binary (two-set) relative entropy p*ln(p/q) + (1-p)*ln((1-p)/(1-q))
/// in nats, with the convention 0*ln 0 = 0. Returns +inf when p > 0, q = 0
/// or p < 1, q = 1. Throws std::domain_error for inputs outside [0,1].
double bernoulli_kl(double p, double q);

/// Dual objective L(s) = s*ln(1 + (e^{1/s}-1)*eps) + s*d evaluated without
/// overflow for arbitrarily small s.
///
/// Branch point: for 1/s > 40 and eps > 0 the exact rewrite
///   L(s) = 1 + s*ln(eps + (1-eps)*e^{-1/s}) + s*d
/// is used (factor e^{1/s} out of the logarithm); below it the naive form
/// with log1p/expm1 is accurate and cannot overflow. For eps = 0 the
/// objective reduces to s*d exactly.
double safe_dual_objective(double s, double eps, double d);

const char* to_string(Regime r);
const char* to_string(DivergenceKind k);

}  // namespace robust_outage

#endif
