#ifndef POLYSIEVE_ROOT_FINDING_HPP
#define POLYSIEVE_ROOT_FINDING_HPP

#include <functional>

namespace polysieve {

struct Bracket {
  double lo = 0;
  double hi = 0;
};

// Hybrid bisection/secant root find on a bracketing interval; f(lo) and
// f(hi) must have opposite signs.  Converges to |hi-lo| <= xtol or
// |f| <= ftol, whichever first.
double find_root(const std::function<double(double)>& f, double lo, double hi,
                 double xtol = 1e-9, double ftol = 0.0,
                 Bracket* used = nullptr);

// Scan [lo, hi] in n equal steps for the first sign change and return that
// sub-bracket; returns false when every sample has the same sign.
bool scan_for_bracket(const std::function<double(double)>& f, double lo,
                      double hi, int n, Bracket* out);

}  // namespace polysieve

#endif
