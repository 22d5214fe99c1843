#include "polysieve/root_finding.hpp"

#include <cmath>

#include "polysieve/errors.hpp"

namespace polysieve {

double find_root(const std::function<double(double)>& f, double lo, double hi,
                 double xtol, double ftol, Bracket* used) {
  double flo = f(lo), fhi = f(hi);
  if (used) *used = Bracket{lo, hi};
  if (flo == 0) return lo;
  if (fhi == 0) return hi;
  if ((flo < 0) == (fhi < 0))
    throw convergence_error("find_root: endpoints do not bracket a root");

  double x = lo, fx = flo;
  for (int it = 0; it < 200 && hi - lo > xtol; ++it) {
    // Secant proposal, falling back to bisection when it leaves the bracket
    // or fails to shrink it fast enough.
    double mid = 0.5 * (lo + hi);
    double cand = mid;
    if (fhi != flo) {
      double s = lo - flo * (hi - lo) / (fhi - flo);
      if (s > lo + 0.01 * (hi - lo) && s < hi - 0.01 * (hi - lo) &&
          it % 2 == 0)
        cand = s;
    }
    x = cand;
    fx = f(x);
    if (fx == 0) return x;
    if (std::abs(fx) <= ftol) return x;
    if ((fx < 0) == (flo < 0)) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
      fhi = fx;
    }
  }
  return 0.5 * (lo + hi);
}

bool scan_for_bracket(const std::function<double(double)>& f, double lo,
                      double hi, int n, Bracket* out) {
  if (n < 1 || !(hi > lo)) return false;
  double prev_x = lo, prev_f = f(lo);
  for (int i = 1; i <= n; ++i) {
    double x = lo + (hi - lo) * i / n;
    double fx = f(x);
    if (prev_f == 0 || (prev_f < 0) != (fx < 0)) {
      if (out) *out = Bracket{prev_x, x};
      return true;
    }
    prev_x = x;
    prev_f = fx;
  }
  return false;
}

}  // namespace polysieve
