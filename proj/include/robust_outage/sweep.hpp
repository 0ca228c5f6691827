#ifndef ROBUST_OUTAGE_SWEEP_HPP
#define ROBUST_OUTAGE_SWEEP_HPP

#include <functional>
#include <string>
#include <vector>

#include "robust_outage/core.hpp"

namespace robust_outage {

/// One row of an SNR sweep. All probability fields lie in [0, 1];
/// the regime approximations are clamped to that range (the nested-log form
/// saturates at 1 outside its ln(d/eps) > 1 domain).
struct SweepRecord {
  double snr_db;
  double eps;
  double p_fwd;
  double p_rev;
  double fwd_approx_u;  // uncertainty-dominated approximation
  double fwd_approx_n;  // nominal-dominated approximation
  double rev_lower;     // reverse-class floor bound
  double fwd_upper;     // forward-class upper bound
};

struct SnrRange {
  double start_db;
  double stop_db;
  double step_db;

  /// Parses "start:stop:step" (step optional, default 1).
  static SnrRange parse(const std::string& spec);
  std::vector<double> points() const;
};

/// Nominal-outage model as a function of linear SNR.
using EpsModel = std::function<double(double snr_linear)>;

EpsModel inverse_snr_model();                  // eps = min(1, 1/snr)
EpsModel siso_rayleigh_model(double rate);     // closed form
double snr_db_to_linear(double snr_db);        // 10^(db/10)

/// Computes one record per SNR point; rows are evaluated in parallel and
/// returned in SNR order.
std::vector<SweepRecord> run_sweep(const EpsModel& model, double d,
                                   const SnrRange& range, unsigned jobs = 0);

/// Exact CSV contract: header
/// `snr_db,eps,p_fwd,p_rev,fwd_approx_u,fwd_approx_n,rev_lower,fwd_upper`,
/// 17 significant digits, '\n' newlines.
std::string to_csv(const std::vector<SweepRecord>& records);
std::vector<SweepRecord> parse_csv(const std::string& csv);

extern const char* const kSweepCsvHeader;

}  // namespace robust_outage

#endif
