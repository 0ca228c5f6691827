// Command-line front end: single-point compound outage solves, SNR sweeps,
// capacity queries, worst-case density reports and oracle cross-checks.
//
// Exit codes: 0 success, 1 check failure, 2 usage/domain error, 3 runtime
// (Monte Carlo) error.

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
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

namespace ro = robust_outage;

namespace {

std::uint64_t default_seed() {
  if (const char* env = std::getenv("ROBUST_OUTAGE_SEED")) {
    return std::strtoull(env, nullptr, 10);
  }
  return 0;
}

void print_solution(const ro::CompoundSolution& sol) {
  std::printf("p_out        %.12g\n", sol.p_out);
  std::printf("eps          %.12g\n", sol.eps);
  std::printf("class        %s (d=%.12g)\n", ro::to_string(sol.cls.kind), sol.cls.d);
  std::printf("regime       %s\n", ro::to_string(sol.regime));
  std::printf("bounds       [%.12g, %.12g]\n", sol.lower_bound, sol.upper_bound);
  if (const auto* fd = std::get_if<ro::ForwardDualCertificate>(&sol.certificate)) {
    std::printf("certificate  forward-dual s*=%.12g y*=%.12g\n", fd->s_star, fd->y_star);
  } else if (const auto* rr = std::get_if<ro::ReverseRootCertificate>(&sol.certificate)) {
    std::printf("certificate  reverse-root mu=%.12g lambda*=%.12g\n", rr->mu,
                rr->lambda_star);
  } else {
    std::printf("certificate  bound-only\n");
  }
}

int cmd_solve(double eps, double d, const std::string& cls, double p_order) {
  if (cls == "fwd-kl") {
    print_solution(ro::solve_forward_compound(eps, d));
  } else if (cls == "rev-kl") {
    print_solution(ro::solve_reverse_compound(eps, d));
  } else {
    const ro::LpBoundChain chain = ro::lp_lower_bounds(p_order, d, eps);
    std::printf("lp lower-bound chain (p=%g, d=%g, eps=%g)\n", p_order, d, eps);
    std::printf("p1_via_forward  %.12g\n", chain.p1_via_forward);
    std::printf("p1_via_reverse  %.12g\n", chain.p1_via_reverse);
    std::printf("floor_with_eps  %.12g\n", chain.floor_with_eps);
    std::printf("floor           %.12g\n", chain.floor);
  }
  return 0;
}

struct MimoFlags {
  int n_tx = 2;
  int n_rx = 2;
  std::uint64_t trials = 100000;
};

ro::EpsModel make_sweep_model(const std::string& name, double rate,
                              const MimoFlags& mimo, std::uint64_t seed) {
  if (name == "inverse-snr") return ro::inverse_snr_model();
  if (name == "siso-rayleigh") return ro::siso_rayleigh_model(rate);
  if (name == "mc-mimo") {
    return [=](double snr) {
      ro::MimoScenario s = ro::MimoScenario::isotropic(
          mimo.n_tx, mimo.n_rx, snr, rate, mimo.trials, seed);
      return ro::estimate_eps(s).eps_hat;
    };
  }
  throw CLI::ValidationError("unknown eps model '" + name + "'");
}

int cmd_sweep(const std::string& model_name, double rate, double d,
              const std::string& range_spec, const MimoFlags& mimo,
              std::uint64_t seed, unsigned jobs, const std::string& out_path,
              bool gnuplot) {
  const ro::SnrRange range = ro::SnrRange::parse(range_spec);
  const ro::EpsModel model = make_sweep_model(model_name, rate, mimo, seed);
  const auto records = ro::run_sweep(model, d, range, jobs);
  const std::string csv = ro::to_csv(records);
  if (out_path.empty()) {
    std::fputs(csv.c_str(), stdout);
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file " + out_path);
    out << csv;
  }
  if (gnuplot) {
    if (out_path.empty()) {
      throw CLI::ValidationError("--gnuplot requires --out");
    }
    std::ofstream gp(out_path + ".gp");
    gp << "set datafile separator ','\n"
       << "set logscale y\n"
       << "set xlabel 'SNR [dB]'\n"
       << "set ylabel 'outage probability'\n"
       << "plot '" << out_path << "' skip 1 using 1:3 with lines title 'forward KL', \\\n"
       << "     '" << out_path << "' skip 1 using 1:4 with lines title 'reverse KL', \\\n"
       << "     '" << out_path << "' skip 1 using 1:2 with lines title 'nominal', \\\n"
       << "     '" << out_path << "' skip 1 using 1:7 with lines title 'reverse floor'\n";
  }
  return 0;
}

int cmd_capacity(double delta, double d, const std::string& cls,
                 const std::string& model_name, double snr_db, double rate,
                 const MimoFlags& mimo, std::uint64_t seed, bool strict) {
  const double snr = ro::snr_db_to_linear(snr_db);

  if (cls == "rev-kl" && delta < ro::capacity_floor(d)) {
    if (strict) {
      throw std::domain_error("target delta is below the reverse-class floor");
    }
    std::printf("capacity 0 nats (0 bits)\n");
    std::printf("note: delta=%.6g is below the reverse-class floor 1-e^-d=%.6g; "
                "no transmission is possible\n",
                delta, ro::capacity_floor(d));
    return 0;
  }

  ro::CapacityQuery q;
  q.delta = delta;
  if (cls == "fwd-kl") {
    q.cls = ro::UncertaintyClass::forward_kl(d);
  } else if (cls == "rev-kl") {
    q.cls = ro::UncertaintyClass::reverse_kl(d);
  } else if (cls != "nominal") {
    throw CLI::ValidationError("unknown class '" + cls + "'");
  }
  if (model_name == "siso-rayleigh") {
    q.eps_of_rate = [snr](double r) { return ro::rayleigh_siso_eps(snr, r); };
    q.r_max = std::log1p(snr) + 10.0;
  } else if (model_name == "mc-mimo") {
    // one fixed seed across all rate probes: common random numbers
    q.eps_of_rate = [=](double r) {
      ro::MimoScenario s = ro::MimoScenario::isotropic(mimo.n_tx, mimo.n_rx,
                                                       snr, r, mimo.trials, seed);
      return ro::estimate_eps(s).eps_hat;
    };
    q.r_max = std::log1p(snr * std::min(mimo.n_tx, mimo.n_rx)) + 10.0;
  } else {
    throw CLI::ValidationError("capacity needs --eps-model siso-rayleigh|mc-mimo");
  }
  (void)rate;

  try {
    const double c = ro::outage_capacity(q);
    std::printf("capacity %.9f nats (%.9f bits)\n", c, c / std::log(2.0));
  } catch (const ro::BracketError& e) {
    std::printf("capacity exceeds the search bracket R_max=%.6g nats: %s\n",
                q.r_max, e.what());
  }
  return 0;
}

int cmd_worst_case(double eps, double d, const std::string& cls) {
  ro::check_probability(eps, "eps");
  ro::check_radius(d);
  ro::WorstCaseRatio ratio{1.0, 1.0};
  double certificate = 0.0;
  if (d > 0.0) {
    if (cls == "fwd-kl") {
      const auto fr = ro::solve_forward(eps, d);
      ratio = ro::forward_worst_ratio(fr, eps);
      certificate = ro::bernoulli_kl(fr.p_out, eps);
    } else if (cls == "rev-kl") {
      const auto rr = ro::solve_reverse(eps, d);
      ratio = ro::reverse_worst_ratio(rr, eps);
      certificate = ro::bernoulli_kl(eps, rr.p_out);
    } else {
      throw CLI::ValidationError("worst-case supports fwd-kl and rev-kl");
    }
  }
  std::printf("r_outage  %.12g\n", ratio.r_outage);
  std::printf("r_clear   %.12g\n", ratio.r_clear);
  std::printf("kl_certificate %.12g (target d=%.12g)\n", certificate, d);
  return 0;
}

int cmd_check(double perturb) {
  const std::vector<double> eps_grid = {0.0, 1e-6, 1e-4, 1e-2, 0.1,
                                        0.3, 0.5,  0.9,  0.99, 1.0};
  const std::vector<double> d_grid = {0.0, 1e-6, 1e-3, 0.1, 1.0, 5.0};
  const double e = std::exp(1.0);
  int failures = 0;

  auto report = [&](const char* family, bool ok, double worst) {
    std::printf("%s %s worst=%.3g\n", ok ? "PASS" : "FAIL", family, worst);
    if (!ok) ++failures;
  };

  double worst_fwd = 0.0, worst_rev = 0.0, worst_bounds = 0.0, worst_floor = 0.0;
  for (double eps : eps_grid) {
    for (double d : d_grid) {
      const double pf = ro::solve_forward(eps, d).p_out + perturb;
      const double pr = ro::solve_reverse(eps, d).p_out + perturb;
      worst_fwd = std::max(worst_fwd, std::abs(pf - ro::oracle_forward(eps, d).p_star));
      worst_rev = std::max(worst_rev, std::abs(pr - ro::oracle_reverse(eps, d).p_star));
      worst_bounds = std::max({worst_bounds, eps - pf,
                               pf - std::min(d + (e - 1.0) * eps, 1.0)});
      worst_floor = std::max(worst_floor,
                             ro::reverse_floor_bounds(eps, d).first - pr);
    }
  }
  report("oracle-equivalence-forward", worst_fwd <= 1e-8, worst_fwd);
  report("oracle-equivalence-reverse", worst_rev <= 1e-8, worst_rev);
  report("forward-bound-sandwich", worst_bounds <= 1e-12, worst_bounds);
  report("reverse-floor-bound", worst_floor <= 1e-12, worst_floor);

  // exact floor equality on the eps = 0 row
  double worst_eq = 0.0;
  for (double d : d_grid) {
    worst_eq = std::max(worst_eq, std::abs(ro::solve_reverse(0.0, d).p_out + perturb -
                                           (-std::expm1(-d))));
  }
  report("reverse-floor-equality-eps0", worst_eq == 0.0, worst_eq);

  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"compound (worst-case) outage probability and capacity toolkit"};
  app.require_subcommand(1);

  std::uint64_t seed = default_seed();
  double eps = 0.0, d = 0.0, p_order = 2.0, delta = 0.1, rate = std::log(2.0);
  double snr_db = 10.0, perturb = 0.0;
  std::string cls = "fwd-kl", model = "inverse-snr", range_spec = "0:120:1";
  std::string out_path;
  unsigned jobs = 0;
  bool gnuplot = false, strict = false;
  MimoFlags mimo;

  auto* solve = app.add_subcommand("solve", "single-point compound outage");
  solve->add_option("--eps", eps, "nominal outage probability")->required();
  solve->add_option("--d", d, "divergence radius")->required();
  solve->add_option("--class", cls, "fwd-kl|rev-kl|lp");
  solve->add_option("--p", p_order, "norm order for --class lp");

  auto* sweep = app.add_subcommand("sweep", "SNR sweep, CSV output");
  sweep->add_option("--eps-model", model, "inverse-snr|siso-rayleigh|mc-mimo");
  sweep->add_option("--rate", rate, "target rate in nats (siso/mimo models)");
  sweep->add_option("--d", d, "divergence radius")->required();
  sweep->add_option("--snr-db", range_spec, "start:stop[:step] in dB");
  sweep->add_option("--out", out_path, "CSV output path (default stdout)");
  sweep->add_flag("--gnuplot", gnuplot, "emit companion gnuplot script");
  sweep->add_option("--jobs", jobs, "parallel workers (0 = hardware)");
  sweep->add_option("--n-tx", mimo.n_tx);
  sweep->add_option("--n-rx", mimo.n_rx);
  sweep->add_option("--trials", mimo.trials);
  sweep->add_option("--seed", seed);

  auto* capacity = app.add_subcommand("capacity", "outage capacity query");
  capacity->add_option("--delta", delta, "target outage probability")->required();
  capacity->add_option("--d", d, "divergence radius");
  capacity->add_option("--class", cls, "nominal|fwd-kl|rev-kl");
  capacity->add_option("--eps-model", model, "siso-rayleigh|mc-mimo");
  capacity->add_option("--snr-db", snr_db, "SNR in dB");
  capacity->add_option("--rate", rate);
  capacity->add_flag("--strict", strict, "error out below the reverse floor");
  capacity->add_option("--n-tx", mimo.n_tx);
  capacity->add_option("--n-rx", mimo.n_rx);
  capacity->add_option("--trials", mimo.trials);
  capacity->add_option("--seed", seed);

  auto* worst = app.add_subcommand("worst-case", "worst-case density ratios");
  worst->add_option("--eps", eps)->required();
  worst->add_option("--d", d)->required();
  worst->add_option("--class", cls, "fwd-kl|rev-kl");

  auto* check = app.add_subcommand("check", "oracle-equivalence and bound grids");
  check->add_option("--perturb", perturb, "inject an offset (checker self-test)");

  CLI11_PARSE(app, argc, argv);

  std::fprintf(stderr, "seed=%llu\n", static_cast<unsigned long long>(seed));
  try {
    if (solve->parsed()) return cmd_solve(eps, d, cls, p_order);
    if (sweep->parsed())
      return cmd_sweep(model, rate, d, range_spec, mimo, seed, jobs, out_path,
                       gnuplot);
    if (capacity->parsed()) {
      if (model == "inverse-snr") model = "siso-rayleigh";
      return cmd_capacity(delta, d, cls, model, snr_db, rate, mimo, seed, strict);
    }
    if (worst->parsed()) return cmd_worst_case(eps, d, cls);
    if (check->parsed()) return cmd_check(perturb);
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "domain error: %s\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return 2;
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "runtime error: %s\n", e.what());
    return 3;
  }
  return 0;
}
