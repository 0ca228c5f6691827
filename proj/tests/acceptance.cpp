// End-to-end acceptance checks: one pass/fail line per check, nonzero exit
// if any fails. Runtime budgets are enforced where stated.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "robust_outage/capacity.hpp"
#include "robust_outage/channel.hpp"
#include "robust_outage/core.hpp"
#include "robust_outage/forward_kl.hpp"
#include "robust_outage/lp_bounds.hpp"
#include "robust_outage/oracle.hpp"
#include "robust_outage/reverse_kl.hpp"
#include "robust_outage/rng.hpp"
#include "robust_outage/sweep.hpp"

using namespace robust_outage;

namespace {

const std::vector<double> kEpsGrid = {0.0, 1e-6, 1e-4, 1e-2, 0.1,
                                      0.3, 0.5,  0.9,  0.99, 1.0};
const std::vector<double> kDGrid = {0.0, 1e-6, 1e-3, 0.1, 1.0, 5.0};

int g_failures = 0;

void run(const char* label, double budget_sec, const std::function<bool()>& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = fn();
  } catch (const std::exception& e) {
    std::fprintf(stderr, "  exception: %s\n", e.what());
  }
  const double sec =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  if (budget_sec > 0.0 && sec > budget_sec) ok = false;
  std::printf("[%s] %-58s (%.3f s%s)\n", ok ? "PASS" : "FAIL", label, sec,
              budget_sec > 0.0 && sec > budget_sec ? ", over budget" : "");
  if (!ok) ++g_failures;
}

bool forward_oracle_grid() {
  for (double eps : kEpsGrid)
    for (double d : kDGrid)
      if (std::abs(solve_forward(eps, d).p_out - oracle_forward(eps, d).p_star) >
          1e-8)
        return false;
  return true;
}

bool reverse_oracle_grid() {
  for (double eps : kEpsGrid)
    for (double d : kDGrid) {
      const double p = solve_reverse(eps, d).p_out;
      if (std::abs(p - oracle_reverse(eps, d).p_star) > 1e-8) return false;
      if (eps > 0.0 && eps < 1.0 && d > 0.0) {
        if (std::abs(solve_reverse_dual(eps, d).first - p) > 1e-8) return false;
      }
    }
  return true;
}

bool discrete_supports() {
  for (int cls = 0; cls < 2; ++cls) {
    for (int inst = 0; inst < 100; ++inst) {
      CounterRng rng(/*seed=*/42, /*stream=*/cls * 1000 + inst);
      double probs[5], sum = 0.0;
      for (double& p : probs) {
        p = rng.next_uniform();
        sum += p;
      }
      for (double& p : probs) p /= sum;
      bool mask[5];
      while (true) {
        int trues = 0;
        for (bool& b : mask) {
          b = rng.next_u64() & 1u;
          trues += b ? 1 : 0;
        }
        if (trues > 0 && trues < 5) break;
      }
      const double d = std::pow(10.0, -3.0 + 3.0 * rng.next_uniform());
      double eps = 0.0;
      for (int i = 0; i < 5; ++i)
        if (mask[i]) eps += probs[i];

      const UncertaintyClass ball = cls == 0 ? UncertaintyClass::forward_kl(d)
                                             : UncertaintyClass::reverse_kl(d);
      const double scalar = cls == 0 ? oracle_forward(eps, d).p_star
                                     : oracle_reverse(eps, d).p_star;
      const double disc =
          oracle_discrete(probs, std::span<const bool>(mask, 5), ball);
      if (std::abs(disc - scalar) > 1e-6) return false;
    }
  }
  return true;
}

bool bound_suite() {
  const double e = std::exp(1.0);
  for (double eps : kEpsGrid)
    for (double d : kDGrid) {
      const double pf = solve_forward(eps, d).p_out;
      if (pf - eps < -1e-12) return false;
      if (std::min(d + (e - 1.0) * eps, 1.0) - pf < -1e-12) return false;
      const double pr = solve_reverse(eps, d).p_out;
      const double floor = -std::expm1(-d) + std::exp(-d) * eps;
      if (pr - floor < -1e-12) return false;
    }
  return true;
}

bool asymptotics() {
  for (double d : {1e-3, 1e-2, 0.1}) {
    const double eps = d * 1e-4;
    const double approx = approx_uncertainty_dominated(eps, d).first;
    const double exact = solve_forward(eps, d).p_out;
    if (std::abs(approx - exact) / exact > 0.15) return false;
  }
  for (double eps : {0.01, 0.1, 0.5}) {
    const double d = eps * 1e-4;
    const double ef = solve_forward(eps, d).p_out;
    if (std::abs(approx_nominal_dominated(eps, d).first - ef) / ef > 0.05)
      return false;
    const double er = solve_reverse(eps, d).p_out;
    if (std::abs(approx_reverse_low_d(eps, d) - er) / er > 0.05) return false;
  }
  for (double d : {1e-3, 1e-2, 0.1, 1.0}) {
    const double eps = std::expm1(d) * 1e-4;
    const double er = solve_reverse(eps, d).p_out;
    if (std::abs(approx_reverse_low_eps(d) - er) / er > 0.05) return false;
  }
  return true;
}

bool two_regime_gap() {
  // eps = 1/SNR, d = 1e-3, 1 dB steps: SNR gap between hitting forward
  // compound outage 1e-3 and 1e-4 must be 60 +- 10 dB
  const auto rows =
      run_sweep(inverse_snr_model(), 1e-3, SnrRange::parse("0:120:1"));
  double at3 = kNaN, at4 = kNaN;
  for (const SweepRecord& r : rows) {
    if (std::isnan(at3) && r.p_fwd <= 1e-3) at3 = r.snr_db;
    if (std::isnan(at4) && r.p_fwd <= 1e-4) at4 = r.snr_db;
  }
  if (std::isnan(at3) || std::isnan(at4)) return false;
  const double gap = at4 - at3;
  return gap >= 50.0 && gap <= 70.0;
}

bool error_floor() {
  const auto rows =
      run_sweep(inverse_snr_model(), 1e-3, SnrRange::parse("0:120:1"));
  const double floor = -std::expm1(-1e-3);
  for (const SweepRecord& r : rows)
    if (r.p_rev < floor - 1e-15) return false;
  for (double d : {1e-6, 1e-3, 0.1, 1.0, 5.0})
    if (solve_reverse(0.0, d).p_out != -std::expm1(-d)) return false;
  return true;
}

bool monte_carlo() {
  const MimoScenario s =
      MimoScenario::isotropic(1, 1, 10.0, std::log(2.0), 1000000, 0);
  const EpsEstimate a = estimate_eps(s, 4);
  const EpsEstimate b = estimate_eps(s, 4);
  if (a.eps_hat != b.eps_hat) return false;  // bit-identical rerun
  const double exact = rayleigh_siso_eps(10.0, std::log(2.0));
  return std::abs(a.eps_hat - exact) <= 3.0 * a.std_err;
}

bool covariance_argmin() {
  // 2x2 diagonal grid diag(a, 1-a); with common random numbers the argmin
  // of the nominal outage and of the compound forward outage coincide
  MimoScenario base = MimoScenario::isotropic(2, 2, 10.0, 1.5, 50000, 5);
  std::vector<ComplexMatrix> grid;
  for (int k = 0; k <= 10; ++k) {
    ComplexMatrix q = ComplexMatrix::Zero(2, 2);
    q(0, 0) = 0.1 * k;
    q(1, 1) = 1.0 - 0.1 * k;
    grid.push_back(q);
  }
  const GridMinResult nominal = minimize_eps_over_grid(base, grid);
  for (double d : {1e-3, 0.1}) {
    std::size_t best = 0;
    double best_p = kInf;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      MimoScenario s = base;
      s.tx_covariance = grid[i];
      const double p = solve_forward(estimate_eps(s).eps_hat, d).p_out;
      if (p < best_p) {
        best_p = p;
        best = i;
      }
    }
    if (best != nominal.index) return false;
  }
  return true;
}

bool capacity_checks() {
  const double snr = 10.0;
  const auto eps_of_rate = [snr](double r) { return rayleigh_siso_eps(snr, r); };
  const double r_max = std::log1p(snr) + 10.0;

  const double c0 =
      outage_capacity({0.1, std::nullopt, eps_of_rate, r_max});
  if (std::abs(c0 - std::log1p(snr * -std::log(0.9))) > 1e-4) return false;

  for (double d : {0.05, 0.2, 1.0}) {
    const double delta = capacity_floor(d) * 0.5;
    if (outage_capacity({delta, UncertaintyClass::reverse_kl(d), eps_of_rate,
                         r_max}) != 0.0)
      return false;
  }

  for (double delta : {0.05, 0.1, 0.3}) {
    const double nominal =
        outage_capacity({delta, std::nullopt, eps_of_rate, r_max});
    for (double d : {1e-3, 1e-2, 0.1}) {
      for (int cls = 0; cls < 2; ++cls) {
        const UncertaintyClass ball = cls == 0
                                          ? UncertaintyClass::forward_kl(d)
                                          : UncertaintyClass::reverse_kl(d);
        const double c =
            outage_capacity({delta, ball, eps_of_rate, r_max});
        if (c > nominal + 1e-6) return false;
      }
    }
  }
  return true;
}

bool lp_chain() {
  for (double p : {1.0, 1.5, 2.0, 10.0})
    for (double d : {0.0, 0.01, 0.2, 1.0})
      for (double eps : {0.0, 1e-4, 0.01, 0.3, 0.9}) {
        const LpBoundChain c = lp_lower_bounds(p, d, eps);
        const double best = std::max(c.p1_via_forward, c.p1_via_reverse);
        if (best < c.floor_with_eps - 1e-12) return false;
        if (c.floor_with_eps < c.floor - 1e-15) return false;
        if (p == 1.0) {
          const double tv = tv_exact_outage(d, eps);
          if (tv < best - 1e-12 || tv < c.floor_with_eps - 1e-12) return false;
        }
      }
  return true;
}

bool shape_properties() {
  const double h = 1e-3;
  for (double eps : {1e-3, 0.01, 0.1, 0.5})
    for (double d : {1e-3, 0.01, 0.1, 0.5, 1.0}) {
      const double pm = solve_forward(eps, d - h).p_out;
      const double p0 = solve_forward(eps, d).p_out;
      const double pp = solve_forward(eps, d + h).p_out;
      if (pp - p0 < -1e-10 || p0 - pm < -1e-10) return false;   // nondecreasing
      if (pp - 2.0 * p0 + pm > 1e-10) return false;             // concave
    }
  for (double d : {1e-3, 0.1, 1.0})
    for (double eps : {0.01, 0.1, 0.3, 0.5, 0.9}) {
      const double pm = solve_forward(eps - h, d).p_out;
      const double p0 = solve_forward(eps, d).p_out;
      const double pp = solve_forward(eps + h, d).p_out;
      if (pp - p0 < -1e-10 || p0 - pm < -1e-10) return false;
      if (pp - 2.0 * p0 + pm > 1e-10) return false;
    }
  return true;
}

}  // namespace

int main() {
  run("01 forward solver matches bisection oracle on the grid", 1.0,
      forward_oracle_grid);
  run("02 reverse solver and dual match the oracle on the grid", 1.0,
      reverse_oracle_grid);
  run("03 discrete 5-atom supports match the scalar oracles", 30.0,
      discrete_supports);
  run("04 sandwich and floor bounds hold at every grid point", 0.0,
      bound_suite);
  run("05 regime approximations within stated relative error", 0.0,
      asymptotics);
  run("06 two-regime sweep: 1e-3 to 1e-4 takes 60 +- 10 dB", 5.0,
      two_regime_gap);
  run("07 reverse-class error floor across the sweep", 0.0, error_floor);
  run("08 Monte Carlo SISO estimate: accuracy and determinism", 10.0,
      monte_carlo);
  run("09 covariance argmin shared by nominal and compound outage", 0.0,
      covariance_argmin);
  run("10 outage capacity: inversion, zero-rate floor, ordering", 0.0,
      capacity_checks);
  run("11 Lp lower-bound chain ordering and exact TV dominance", 0.0,
      lp_chain);
  run("12 monotone and concave outage in d and in eps", 0.0,
      shape_properties);

  if (g_failures > 0) {
    std::printf("%d of 12 checks failed\n", g_failures);
    return 1;
  }
  std::printf("all 12 checks passed\n");
  return 0;
}
