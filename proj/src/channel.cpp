#include "robust_outage/channel.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <thread>

#include "robust_outage/rng.hpp"

namespace robust_outage {

namespace {

constexpr double kHermTol = 1e-9;

void check_covariance(const ComplexMatrix& rx, Eigen::Index n_tx) {
  if (rx.rows() != n_tx || rx.cols() != n_tx) {
    throw std::invalid_argument("tx covariance has wrong dimensions");
  }
  if ((rx - rx.adjoint()).cwiseAbs().maxCoeff() > kHermTol) {
    throw std::domain_error("tx covariance is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rx, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -kHermTol) {
    throw std::domain_error("tx covariance is not positive semidefinite");
  }
}

ComplexMatrix draw_iid_rayleigh(CounterRng& rng, int n_rx, int n_tx) {
  ComplexMatrix h(n_rx, n_tx);
  for (int i = 0; i < n_rx; ++i) {
    for (int j = 0; j < n_tx; ++j) {
      h(i, j) = rng.next_complex_gaussian();
    }
  }
  return h;
}

}  // namespace

void MimoScenario::validate() const {
  if (n_tx < 1 || n_rx < 1) throw std::domain_error("antenna counts must be >= 1");
  if (!(snr > 0.0)) throw std::domain_error("snr must be positive");
  if (!(rate >= 0.0)) throw std::domain_error("rate must be nonnegative");
  if (trials < 1) throw std::domain_error("trials must be >= 1");
  check_covariance(tx_covariance, n_tx);
  if (tx_covariance.trace().real() > 1.0 + 1e-12) {
    throw std::domain_error("tx covariance trace exceeds the power budget");
  }
  if (const auto* pm = std::get_if<PointMass>(&fading)) {
    if (pm->H.rows() != n_rx || pm->H.cols() != n_tx) {
      throw std::invalid_argument("point-mass channel has wrong dimensions");
    }
  }
}

MimoScenario MimoScenario::isotropic(int n_tx, int n_rx, double snr_linear,
                                     double rate_nats, std::uint64_t trials,
                                     std::uint64_t seed) {
  MimoScenario s;
  s.n_tx = n_tx;
  s.n_rx = n_rx;
  s.snr = snr_linear;
  s.rate = rate_nats;
  s.tx_covariance =
      ComplexMatrix::Identity(n_tx, n_tx) / static_cast<double>(n_tx);
  s.trials = trials;
  s.seed = seed;
  return s;
}

double mutual_information(const ComplexMatrix& H, double snr,
                          const ComplexMatrix& tx_covariance) {
  if (H.cols() != tx_covariance.rows()) {
    throw std::invalid_argument("channel/covariance dimension mismatch");
  }
  check_covariance(tx_covariance, tx_covariance.rows());
  const Eigen::Index n = H.rows();
  ComplexMatrix m = snr * H * tx_covariance * H.adjoint();
  m = 0.5 * (m + m.adjoint().eval());  // kill roundoff asymmetry
  ComplexMatrix a = ComplexMatrix::Identity(n, n) + m;
  Eigen::LLT<ComplexMatrix> llt(a);
  if (llt.info() == Eigen::Success) {
    double logdet = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      logdet += std::log(std::real(llt.matrixLLT()(i, i)));
    }
    return std::max(0.0, 2.0 * logdet);
  }
  // near-singular fallback
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m, Eigen::EigenvaluesOnly);
  double logdet = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    logdet += std::log1p(std::max(0.0, es.eigenvalues()(i)));
  }
  return logdet;
}

double rayleigh_siso_eps(double snr, double rate) {
  if (!(snr > 0.0)) throw std::domain_error("snr must be positive");
  if (!(rate >= 0.0)) throw std::domain_error("rate must be nonnegative");
  return -std::expm1(-std::expm1(rate) / snr);
}

EpsEstimate estimate_eps(const MimoScenario& scenario, unsigned workers) {
  scenario.validate();
  if (workers < 1) workers = 1;
  if (workers > scenario.trials) workers = static_cast<unsigned>(scenario.trials);

  // trial t always consumes RNG counters [t*k, (t+1)*k), k = 2 per matrix
  // entry, so the estimate is invariant to the worker split
  const std::uint64_t draws_per_trial =
      2ULL * static_cast<std::uint64_t>(scenario.n_rx) *
      static_cast<std::uint64_t>(scenario.n_tx);
  std::vector<std::uint64_t> counts(workers, 0);
  auto run_chunk = [&](unsigned w, std::uint64_t first, std::uint64_t n) {
    CounterRng rng(scenario.seed);
    std::uint64_t hits = 0;
    for (std::uint64_t t = first; t < first + n; ++t) {
      double info;
      if (std::holds_alternative<IidRayleigh>(scenario.fading)) {
        rng.jump_to(t * draws_per_trial);
        const ComplexMatrix h =
            draw_iid_rayleigh(rng, scenario.n_rx, scenario.n_tx);
        info = mutual_information(h, scenario.snr, scenario.tx_covariance);
      } else {
        info = mutual_information(std::get<PointMass>(scenario.fading).H,
                                  scenario.snr, scenario.tx_covariance);
      }
      if (info < scenario.rate) ++hits;
    }
    counts[w] = hits;
  };

  const std::uint64_t base = scenario.trials / workers;
  const std::uint64_t rem = scenario.trials % workers;
  if (workers == 1) {
    run_chunk(0, 0, scenario.trials);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::uint64_t first = 0;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t n = base + (w < rem ? 1 : 0);
      pool.emplace_back(run_chunk, w, first, n);
      first += n;
    }
    for (auto& t : pool) t.join();
  }

  std::uint64_t hits = 0;
  for (auto c : counts) hits += c;
  const double eps_hat =
      static_cast<double>(hits) / static_cast<double>(scenario.trials);
  const double std_err = std::sqrt(eps_hat * (1.0 - eps_hat) /
                                   static_cast<double>(scenario.trials));
  return {eps_hat, std_err, scenario.trials};
}

GridMinResult minimize_eps_over_grid(const MimoScenario& base,
                                     const std::vector<ComplexMatrix>& grid) {
  if (grid.empty()) throw std::invalid_argument("covariance grid is empty");
  GridMinResult best{0, kInf};
  for (std::size_t i = 0; i < grid.size(); ++i) {
    MimoScenario s = base;
    s.tx_covariance = grid[i];  // same seed: common random numbers
    const double eps_hat = estimate_eps(s).eps_hat;
    if (eps_hat < best.eps_star) {
      best = {i, eps_hat};
    }
  }
  return best;
}

}  // namespace robust_outage
