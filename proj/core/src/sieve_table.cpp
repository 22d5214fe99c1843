#include "polysieve/sieve_table.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <ostream>

#include "polysieve/dde_march.hpp"
#include "polysieve/errors.hpp"
#include "polysieve/quadrature.hpp"

namespace polysieve {

namespace {

// Beyond this point both functions equal 1 to double precision and the grid
// is filled with exactly 1.0.
double march_cap(const SieveLimits& limits, double u_max) {
  return std::min(u_max, std::max(limits.alpha + 12.5, 20.0));
}

}  // namespace

SieveFunctionTable build_sieve_function_table(SieveDimension gd,
                                              const SieveLimits& limits,
                                              double u_max, double step) {
  const int g = gd.value();
  if (limits.g != g) throw domain_error("table build: limits dimension mismatch");
  validate(limits);
  if (!(step > 0 && step <= 1.0 / 256))
    throw domain_error("table build: step must lie in (0, 2^-8]");
  if (u_max < limits.alpha + 12)
    throw domain_error("table build: u_max must be at least alpha + 12");

  SieveFunctionTable t;
  t.g = g;
  t.limits = limits;
  t.step = step;
  t.sigma = shared_sigma(gd, std::max(limits.alpha + 2, 16.0));

  const double cap = march_cap(limits, u_max);
  SievePairSolution sol =
      march_sieve_pair(*t.sigma, quad(limits.alpha), quad(limits.beta),
                       quad(cap) + quad(0.5));
  t.kinks = sol.kink_abscissas();

  const size_t n = static_cast<size_t>(std::ceil((u_max - t.u_min) / step)) + 1;
  t.u_max = t.u_min + step * static_cast<double>(n - 1);
  t.F_values.resize(n);
  t.f_values.resize(n);

  std::vector<ChebPieceD> Fd, fd;
  Fd.reserve(sol.F_pieces.size());
  for (const ChebPiece& p : sol.F_pieces) Fd.push_back(narrow(p));
  fd.reserve(sol.f_pieces.size());
  for (const ChebPiece& p : sol.f_pieces) fd.push_back(narrow(p));

  auto eval_piecewise = [](const std::vector<ChebPieceD>& pieces, double u) {
    size_t lo = 0, hi = pieces.size();
    while (lo < hi) {
      size_t mid = (lo + hi) / 2;
      if (u <= pieces[mid].hi)
        hi = mid;
      else
        lo = mid + 1;
    }
    return cheb_eval(pieces[std::min(lo, pieces.size() - 1)], u);
  };

  bool filling = false;
  for (size_t i = 0; i < n; ++i) {
    const double u = t.u_at(i);
    if (filling || u > cap) {
      t.F_values[i] = 1.0;
      t.f_values[i] = 1.0;
      continue;
    }
    double F = u <= limits.alpha ? 1.0 / (*t.sigma)(u) : eval_piecewise(Fd, u);
    double f = u <= limits.beta ? 0.0 : eval_piecewise(fd, u);
    if (u > limits.alpha + 12 && std::abs(F - 1) < 1e-13 &&
        std::abs(f - 1) < 1e-13) {
      filling = true;
      F = 1.0;
      f = 1.0;
    }
    t.F_values[i] = F;
    t.f_values[i] = f;
  }

  const double bound = 10.0 * std::exp(-t.u_max);
  const double end_F = std::abs(t.F_values.back() - 1.0);
  const double end_f = std::abs(1.0 - t.f_values.back());
  if (end_F > std::max(bound, 1e-12) || end_f > std::max(bound, 1e-12))
    throw accuracy_error("table build: grid too coarse for the boundary "
                         "condition at u_max");
  return t;
}

namespace {

// Cubic Lagrange interpolation on four consecutive grid points, with the
// stencil confined to the inter-kink segment containing u.
double interpolate(const SieveFunctionTable& t, const std::vector<double>& v,
                   double u) {
  const double x = (u - t.u_min) / t.step;
  const long n = static_cast<long>(v.size());
  long i = static_cast<long>(std::floor(x));
  i = std::clamp(i, 0L, n - 2);

  // Enclosing kink segment.
  auto it = std::upper_bound(t.kinks.begin(), t.kinks.end(), u);
  const double seg_lo = (it == t.kinks.begin()) ? t.u_min : *(it - 1);
  const double seg_hi = (it == t.kinks.end()) ? t.u_max : *it;
  long lo_idx = static_cast<long>(std::ceil((seg_lo - t.u_min) / t.step - 1e-9));
  long hi_idx = static_cast<long>(std::floor((seg_hi - t.u_min) / t.step + 1e-9));
  lo_idx = std::clamp(lo_idx, 0L, n - 1);
  hi_idx = std::clamp(hi_idx, 0L, n - 1);

  long start = i - 1;
  start = std::min(start, hi_idx - 3);
  start = std::max(start, lo_idx);
  long count = std::min(4L, hi_idx - start + 1);
  if (count <= 1) {
    // Segment narrower than the grid: fall back to the bracketing points.
    long j = std::clamp(i, 0L, n - 2);
    double w = x - static_cast<double>(j);
    return v[j] * (1 - w) + v[j + 1] * w;
  }

  double result = 0;
  for (long a = 0; a < count; ++a) {
    double num = 1, den = 1;
    for (long b = 0; b < count; ++b) {
      if (a == b) continue;
      num *= x - static_cast<double>(start + b);
      den *= static_cast<double>(a - b);
    }
    result += v[start + a] * num / den;
  }
  return result;
}

}  // namespace

double eval_F(const SieveFunctionTable& t, double u) {
  if (u <= 0) throw domain_error("eval_F: u must be positive");
  if (u <= t.limits.alpha) return 1.0 / (*t.sigma)(u);
  if (u >= t.u_max) return 1.0;
  return interpolate(t, t.F_values, u);
}

double eval_f(const SieveFunctionTable& t, double u) {
  if (u <= 0) throw domain_error("eval_f: u must be positive");
  if (u <= t.limits.beta) return 0.0;
  if (u >= t.u_max) return 1.0;
  return interpolate(t, t.f_values, u);
}

void write_csv(const SieveFunctionTable& t, std::ostream& out) {
  out << "u,F,f\n";
  char buf[96];
  for (size_t i = 0; i < t.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.10g,%.12g,%.12g\n", t.u_at(i),
                  t.F_values[i], t.f_values[i]);
    out << buf;
  }
}

double integral_F_dt(const SieveFunctionTable& t, double t_lo, double t_hi,
                     double abs_tol) {
  if (t_lo <= 0) throw domain_error("integral_F_dt: lower endpoint not positive");
  if (t_lo >= t_hi) return 0.0;
  double total = 0.0;
  double lo = t_lo;
  const double cut = std::min(t_hi, 2.0);
  if (lo < cut) {
    const double a = t.sigma->leading_coefficient();
    const int d = t.g;
    total += d == 1 ? std::log(cut / lo) / a
                    : (std::pow(lo, 1 - d) - std::pow(cut, 1 - d)) /
                          (a * (d - 1));
    lo = cut;
  }
  if (lo < t_hi)
    total += integrate([&](double x) { return eval_F(t, x); }, lo, t_hi,
                       abs_tol);
  return total;
}

ResidualStats dde_residual_stats(const SieveFunctionTable& t) {
  ResidualStats stats;
  const double h = t.step;
  const size_t n = t.size();
  const long delay = std::lround(1.0 / h);

  auto near_kink = [&](double u) {
    auto it = std::lower_bound(t.kinks.begin(), t.kinks.end(), u - 1.5 * h);
    return it != t.kinks.end() && *it < u + 1.5 * h;
  };

  for (size_t i = 1; i + 1 < n; ++i) {
    const double u = t.u_at(i);
    if (u - h <= t.limits.beta || near_kink(u)) {
      ++stats.points_skipped;
      continue;
    }
    const long j = static_cast<long>(i) - delay;  // u-1 is grid-aligned
    const double um = u - h, up = u + h;
    const double ug1 = t.g * std::pow(u, t.g - 1);
    // f equation, valid for u > beta.
    {
      const double Fm1 = j >= 0 ? t.F_values[j] : 1.0 / (*t.sigma)(u - 1);
      const double lhs = (std::pow(up, t.g) * t.f_values[i + 1] -
                          std::pow(um, t.g) * t.f_values[i - 1]) /
                         (2 * h);
      const double rhs = ug1 * Fm1;
      stats.max_f_residual = std::max(stats.max_f_residual,
                                      std::abs(lhs - rhs) / (1 + std::abs(rhs)));
    }
    // F equation, valid for u > alpha.
    if (um > t.limits.alpha) {
      const double fm1 = j >= 0 ? t.f_values[j] : 0.0;  // u-1 < 1 < beta
      const double lhs = (std::pow(up, t.g) * t.F_values[i + 1] -
                          std::pow(um, t.g) * t.F_values[i - 1]) /
                         (2 * h);
      const double rhs = ug1 * fm1;
      stats.max_F_residual = std::max(stats.max_F_residual,
                                      std::abs(lhs - rhs) / (1 + std::abs(rhs)));
    }
    ++stats.points_checked;
  }
  return stats;
}

namespace {
std::mutex g_table_mutex;
std::map<std::pair<int, int>, std::shared_ptr<const SieveFunctionTable>>
    g_table_cache;
}  // namespace

std::shared_ptr<const SieveFunctionTable> shared_table(SieveDimension g,
                                                       LimitsSource source,
                                                       double u_max) {
  std::lock_guard<std::mutex> lock(g_table_mutex);
  auto key = std::make_pair(g.value(), static_cast<int>(source));
  auto it = g_table_cache.find(key);
  if (it != g_table_cache.end() && it->second->u_max >= u_max)
    return it->second;
  SieveLimits lim = get_limits(g, source);
  double target = std::max(u_max, lim.alpha + 14);
  if (it != g_table_cache.end()) target = std::max(target, 2 * it->second->u_max);
  auto ptr = std::make_shared<const SieveFunctionTable>(
      build_sieve_function_table(g, lim, target));
  g_table_cache[key] = ptr;
  return ptr;
}

}  // namespace polysieve
