#include "polysieve/chebyshev.hpp"

#include <cstring>

#include "polysieve/errors.hpp"

namespace polysieve {

quad quad_from_decimal(const char* s) {
  const char* p = s;
  bool neg = false;
  if (*p == '+' || *p == '-') neg = (*p++ == '-');
  quad mant = 0;
  long expo = 0;
  bool seen_dot = false;
  for (; *p; ++p) {
    if (*p == '.') {
      seen_dot = true;
    } else if (*p >= '0' && *p <= '9') {
      mant = mant * 10 + (*p - '0');
      if (seen_dot) --expo;
    } else if (*p == 'e' || *p == 'E') {
      expo += std::strtol(p + 1, nullptr, 10);
      break;
    } else {
      throw parse_error(std::string("bad decimal literal: ") + s);
    }
  }
  quad scale = qpow_int(quad(10), static_cast<int>(expo < 0 ? -expo : expo));
  quad v = expo < 0 ? mant / scale : mant * scale;
  return neg ? -v : v;
}

quad q_euler_gamma() {
  static const quad v =
      quad_from_decimal("0.577215664901532860606512090082402431");
  return v;
}

quad q_exp_gamma() {
  static const quad v =
      quad_from_decimal("1.78107241799019798523650410310717954");
  return v;
}

quad q_pi() {
  static const quad v =
      quad_from_decimal("3.14159265358979323846264338327950288");
  return v;
}

quad qcos(quad x) {
  // Reduce to [0, pi/2]; callers stay within [0, pi].
  const quad pi = q_pi();
  bool flip = false;
  if (x > pi / 2) {
    x = pi - x;
    flip = true;
  }
  quad x2 = x * x, term = 1, sum = 1;
  for (int k = 1; k <= 24; ++k) {
    term *= -x2 / (quad(2 * k - 1) * quad(2 * k));
    sum += term;
  }
  return flip ? -sum : sum;
}

quad cheb_eval(const ChebPiece& p, quad x) {
  const quad t = (2 * x - p.lo - p.hi) / (p.hi - p.lo);
  quad b1 = 0, b2 = 0;
  for (size_t k = p.coef.size(); k-- > 1;) {
    quad b0 = 2 * t * b1 - b2 + p.coef[k];
    b2 = b1;
    b1 = b0;
  }
  return t * b1 - b2 + p.coef[0];
}

double cheb_eval(const ChebPieceD& p, double x) {
  const double t = (2 * x - p.lo - p.hi) / (p.hi - p.lo);
  double b1 = 0, b2 = 0;
  for (size_t k = p.coef.size(); k-- > 1;) {
    double b0 = 2 * t * b1 - b2 + p.coef[k];
    b2 = b1;
    b1 = b0;
  }
  return t * b1 - b2 + p.coef[0];
}

ChebPieceD narrow(const ChebPiece& p) {
  ChebPieceD d;
  d.lo = to_double(p.lo);
  d.hi = to_double(p.hi);
  d.coef.reserve(p.coef.size());
  for (quad c : p.coef) d.coef.push_back(to_double(c));
  return d;
}

ChebEngine::ChebEngine(int degree) : n_(degree) {
  if (degree < 2) throw domain_error("ChebEngine: degree too small");
  nodes_.resize(n_ + 1);
  const quad pi = q_pi();
  for (int j = 0; j <= n_; ++j) {
    // Ascending: -cos(pi j / n).
    nodes_[j] = -qcos(pi * quad(j) / quad(n_));
  }
  nodes_[0] = -1;
  nodes_[n_] = 1;
  if (n_ % 2 == 0) nodes_[n_ / 2] = 0;
  tmat_.assign(n_ + 1, std::vector<quad>(n_ + 1));
  for (int j = 0; j <= n_; ++j) {
    tmat_[0][j] = 1;
    tmat_[1][j] = nodes_[j];
    for (int k = 2; k <= n_; ++k)
      tmat_[k][j] = 2 * nodes_[j] * tmat_[k - 1][j] - tmat_[k - 2][j];
  }
}

std::vector<quad> ChebEngine::mapped_nodes(quad lo, quad hi) const {
  std::vector<quad> out(n_ + 1);
  const quad mid = (lo + hi) / 2, half = (hi - lo) / 2;
  for (int j = 0; j <= n_; ++j) out[j] = mid + half * nodes_[j];
  out[0] = lo;
  out[n_] = hi;
  return out;
}

std::vector<quad> ChebEngine::to_coefficients(
    const std::vector<quad>& values) const {
  std::vector<quad> c(n_ + 1);
  for (int k = 0; k <= n_; ++k) {
    quad s = values[0] * tmat_[k][0] / 2 + values[n_] * tmat_[k][n_] / 2;
    for (int j = 1; j < n_; ++j) s += values[j] * tmat_[k][j];
    quad wk = (k == 0 || k == n_) ? quad(1) : quad(2);
    c[k] = s * wk / quad(n_);
  }
  return c;
}

std::vector<quad> ChebEngine::antiderivative(const std::vector<quad>& coef,
                                             quad lo, quad hi) {
  const size_t n = coef.size();
  std::vector<quad> b(n + 1, quad(0));
  // The series carries a full (unhalved) constant term; double it here so
  // the standard b_k = (c_{k-1} - c_{k+1})/(2k) recursion applies.
  auto a = [&](size_t k) -> quad {
    if (k >= n) return quad(0);
    return k == 0 ? 2 * coef[0] : coef[k];
  };
  for (size_t k = 1; k <= n; ++k)
    b[k] = (a(k - 1) - a(k + 1)) / quad(2 * static_cast<long>(k));
  // Pin the value at the left endpoint to zero: T_k(-1) = (-1)^k.
  quad at_left = 0;
  for (size_t k = 1; k <= n; ++k)
    at_left += (k % 2 == 0) ? b[k] : -b[k];
  b[0] = -at_left;
  const quad half = (hi - lo) / 2;
  for (auto& v : b) v *= half;
  return b;
}

}  // namespace polysieve
