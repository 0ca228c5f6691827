#include "robust_outage/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <thread>

#include "robust_outage/channel.hpp"
#include "robust_outage/forward_kl.hpp"
#include "robust_outage/reverse_kl.hpp"

namespace robust_outage {

const char* const kSweepCsvHeader =
    "snr_db,eps,p_fwd,p_rev,fwd_approx_u,fwd_approx_n,rev_lower,fwd_upper";

SnrRange SnrRange::parse(const std::string& spec) {
  SnrRange r{0.0, 0.0, 1.0};
  char extra;
  if (std::sscanf(spec.c_str(), "%lf:%lf:%lf%c", &r.start_db, &r.stop_db,
                  &r.step_db, &extra) == 3) {
    // full form
  } else if (std::sscanf(spec.c_str(), "%lf:%lf%c", &r.start_db, &r.stop_db,
                         &extra) == 2) {
    r.step_db = 1.0;
  } else {
    throw std::invalid_argument("bad SNR range '" + spec +
                                "', expected start:stop[:step]");
  }
  if (!(r.step_db > 0.0) || r.stop_db < r.start_db) {
    throw std::invalid_argument("bad SNR range '" + spec + "'");
  }
  return r;
}

std::vector<double> SnrRange::points() const {
  std::vector<double> pts;
  const auto n = static_cast<std::size_t>(
      std::floor((stop_db - start_db) / step_db + 1e-9));
  pts.reserve(n + 1);
  for (std::size_t i = 0; i <= n; ++i) pts.push_back(start_db + step_db * i);
  return pts;
}

double snr_db_to_linear(double snr_db) { return std::pow(10.0, snr_db / 10.0); }

EpsModel inverse_snr_model() {
  return [](double snr) { return std::min(1.0, 1.0 / snr); };
}

EpsModel siso_rayleigh_model(double rate) {
  return [rate](double snr) { return rayleigh_siso_eps(snr, rate); };
}

namespace {

SweepRecord make_record(double snr_db, double eps, double d) {
  SweepRecord rec{};
  rec.snr_db = snr_db;
  rec.eps = eps;
  rec.p_fwd = solve_forward(eps, d).p_out;
  rec.p_rev = solve_reverse(eps, d).p_out;
  rec.fwd_approx_u = 1.0;
  if (eps > 0.0 && d > 0.0 && std::log(d / eps) > 1.0) {
    rec.fwd_approx_u =
        std::clamp(approx_uncertainty_dominated(eps, d).first, 0.0, 1.0);
  } else if (d == 0.0) {
    rec.fwd_approx_u = eps;
  }
  rec.fwd_approx_n =
      (eps > 0.0 && eps < 1.0)
          ? std::clamp(approx_nominal_dominated(eps, d).first, 0.0, 1.0)
          : eps;
  rec.rev_lower = reverse_floor_bounds(eps, d).first;
  rec.fwd_upper = forward_bounds(eps, d).second;
  return rec;
}

}  // namespace

std::vector<SweepRecord> run_sweep(const EpsModel& model, double d,
                                   const SnrRange& range, unsigned jobs) {
  check_radius(d);
  const std::vector<double> pts = range.points();
  std::vector<SweepRecord> records(pts.size());
  if (jobs == 0) {
    jobs = std::max(1u, std::thread::hardware_concurrency());
  }
  jobs = std::min<unsigned>(jobs, pts.size());

  auto work = [&](unsigned j) {
    for (std::size_t i = j; i < pts.size(); i += jobs) {
      const double eps = model(snr_db_to_linear(pts[i]));
      records[i] = make_record(pts[i], eps, d);
    }
  };
  if (jobs <= 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(work, j);
    for (auto& t : pool) t.join();
  }
  return records;
}

std::string to_csv(const std::vector<SweepRecord>& records) {
  std::string out = kSweepCsvHeader;
  out += '\n';
  char buf[256];
  for (const auto& r : records) {
    std::snprintf(buf, sizeof(buf),
                  "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", r.snr_db,
                  r.eps, r.p_fwd, r.p_rev, r.fwd_approx_u, r.fwd_approx_n,
                  r.rev_lower, r.fwd_upper);
    out += buf;
  }
  return out;
}

std::vector<SweepRecord> parse_csv(const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  if (!std::getline(in, line) || line != kSweepCsvHeader) {
    throw std::invalid_argument("sweep CSV: bad or missing header");
  }
  std::vector<SweepRecord> records;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    SweepRecord r{};
    if (std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf,%lf,%lf,%lf,%lf", &r.snr_db,
                    &r.eps, &r.p_fwd, &r.p_rev, &r.fwd_approx_u,
                    &r.fwd_approx_n, &r.rev_lower, &r.fwd_upper) != 8) {
      throw std::invalid_argument("sweep CSV: bad row '" + line + "'");
    }
    records.push_back(r);
  }
  return records;
}

}  // namespace robust_outage
