#ifndef POLYSIEVE_QUAD_REAL_HPP
#define POLYSIEVE_QUAD_REAL_HPP

// 128-bit floating point (~33 significant decimal digits).  Used by the
// differential-delay marches behind the sifting-limit shooting solver, where
// the residuals that pin (alpha_g, beta_g) sit far below double precision.
// Only rational arithmetic is required, so libquadmath is not needed;
// transcendental constants are parsed from decimal strings.

#include <cmath>
#include <cstdint>
#include <string>

namespace polysieve {

using quad = __float128;

inline double to_double(quad x) { return static_cast<double>(x); }

inline quad qabs(quad x) { return x < 0 ? -x : x; }

inline quad qmax(quad a, quad b) { return a > b ? a : b; }
inline quad qmin(quad a, quad b) { return a < b ? a : b; }

// Integer power by repeated multiplication (exponents here are tiny).
inline quad qpow_int(quad base, int e) {
  if (e < 0) return quad(1) / qpow_int(base, -e);
  quad r = 1;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

// Parse a decimal literal like "-1.23450e-2" into a quad.  Digits are
// accumulated exactly in the 113-bit mantissa as far as they fit; the final
// scaling introduces at most a couple of ulp of error, well below 1e-33
// relative.
quad quad_from_decimal(const char* s);

// Mathematical constants to 36 significant digits.
quad q_euler_gamma();  // Euler-Mascheroni gamma
quad q_exp_gamma();    // e^gamma
quad q_pi();

// cos on [0, pi] by range reduction and Taylor series; used only to place
// Chebyshev nodes, so the call count is tiny.
quad qcos(quad x);

}  // namespace polysieve

#endif
