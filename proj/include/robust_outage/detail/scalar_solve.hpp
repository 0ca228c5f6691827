#ifndef ROBUST_OUTAGE_DETAIL_SCALAR_SOLVE_HPP
#define ROBUST_OUTAGE_DETAIL_SCALAR_SOLVE_HPP

#include <cmath>
#include <stdexcept>
#include <utility>

#include "robust_outage/core.hpp"

namespace robust_outage::detail {

/// Bracketed hybrid bisection/secant root find. Requires f(lo) and f(hi)
/// of opposite sign. The secant step is accepted only while it stays
/// inside the current bracket, so convergence is guaranteed.
template <class F>
double find_root(F&& f, double lo, double hi, double flo, double fhi,
                 int max_iter = NumericPolicy::max_iter,
                 double rel_tol = NumericPolicy::rel_tol) {
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0)) {
    throw std::runtime_error("find_root: endpoints do not bracket a root");
  }
  double x = lo;
  for (int it = 0; it < max_iter; ++it) {
    double mid = 0.5 * (lo + hi);
    double sec = mid;
    if (fhi != flo) {
      sec = hi - fhi * (hi - lo) / (fhi - flo);
      if (!(sec > lo && sec < hi)) sec = mid;
    }
    x = sec;
    double fx = f(x);
    if (fx == 0.0) return x;
    if ((fx > 0.0) == (flo > 0.0)) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
      fhi = fx;
    }
    if (hi - lo <= rel_tol * (std::abs(lo) + std::abs(hi))) break;
    // alternate with a plain bisection step to keep the bracket shrinking
    mid = 0.5 * (lo + hi);
    double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
      fhi = fm;
    }
    if (hi - lo <= rel_tol * (std::abs(lo) + std::abs(hi))) break;
  }
  return 0.5 * (lo + hi);
}

template <class F>
double find_root(F&& f, double lo, double hi,
                 int max_iter = NumericPolicy::max_iter,
                 double rel_tol = NumericPolicy::rel_tol) {
  double flo = f(lo), fhi = f(hi);
  return find_root(std::forward<F>(f), lo, hi, flo, fhi, max_iter, rel_tol);
}

/// Golden-section minimization of a unimodal function on [a, b].
/// Returns (argmin, min value).
template <class F>
std::pair<double, double> golden_min(F&& f, double a, double b,
                                     int max_iter = NumericPolicy::max_iter,
                                     double rel_tol = NumericPolicy::rel_tol) {
  const double inv_gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_gr * (b - a);
  double d = a + inv_gr * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < max_iter; ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_gr * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_gr * (b - a);
      fd = f(d);
    }
    if (b - a <= rel_tol * (std::abs(a) + std::abs(b)) + 1e-300) break;
  }
  double x = 0.5 * (a + b);
  return {x, f(x)};
}

}  // namespace robust_outage::detail

#endif
