#ifndef ROBUST_OUTAGE_CHANNEL_HPP
#define ROBUST_OUTAGE_CHANNEL_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <variant>
#include <vector>

#include "robust_outage/core.hpp"

namespace robust_outage {

using ComplexMatrix = Eigen::MatrixXcd;

struct IidRayleigh {};

struct PointMass {
  ComplexMatrix H;
};

using FadingModel = std::variant<IidRayleigh, PointMass>;

/// Concrete channel setup driving the Monte Carlo nominal-outage estimate.
/// snr is the linear average SNR per Rx antenna; rate is in nats per
/// channel use; tx_covariance is Hermitian PSD with trace <= 1.
struct MimoScenario {
  int n_tx;
  int n_rx;
  double snr;
  double rate;
  ComplexMatrix tx_covariance;
  FadingModel fading = IidRayleigh{};
  std::uint64_t trials = 100000;
  std::uint64_t seed = 0;

  /// Throws std::domain_error / std::invalid_argument on bad fields.
  void validate() const;

  static MimoScenario isotropic(int n_tx, int n_rx, double snr_linear,
                                double rate_nats, std::uint64_t trials,
                                std::uint64_t seed);
};

struct EpsEstimate {
  double eps_hat;
  double std_err;  // binomial: sqrt(eps_hat (1 - eps_hat) / trials)
  std::uint64_t trials;
};

/// ln det(I + snr * H Rx H^dagger) in nats, via Cholesky of the Hermitian
/// positive definite matrix, falling back to the eigenvalues of
/// snr * H Rx H^dagger (sum of log1p) when the factorization fails.
double mutual_information(const ComplexMatrix& H, double snr,
                          const ComplexMatrix& tx_covariance);

/// Closed-form SISO Rayleigh nominal outage: 1 - exp(-(e^R - 1)/snr)
/// (|h|^2 is unit-mean exponential; outage iff |h|^2 < (e^R - 1)/snr).
double rayleigh_siso_eps(double snr, double rate);

/// Monte Carlo estimate of Pr{I < R} under the nominal fading law.
/// Deterministic for fixed (seed, trials) regardless of worker count:
/// trial t always uses the same counter window of the seed's stream, and
/// the reduction is integer counting.
EpsEstimate estimate_eps(const MimoScenario& scenario, unsigned workers = 1);

struct GridMinResult {
  std::size_t index;
  double eps_star;
};

/// Picks the covariance grid member minimizing the Monte Carlo nominal
/// outage; all candidates share channel draws (common random numbers).
GridMinResult minimize_eps_over_grid(const MimoScenario& base,
                                     const std::vector<ComplexMatrix>& grid);

}  // namespace robust_outage

#endif
