#include "polysieve/sieve_limits.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

#include "polysieve/dde_march.hpp"
#include "polysieve/errors.hpp"

namespace polysieve {

namespace {

// Computed by the shooting solver at 128-bit precision; shipped both here and
// in data/sifting_limits.txt.  beta_2 agrees with the Diamond-Halberstam
// value 4.2665 quoted throughout the sieve literature.
struct RefRow {
  int g;
  double alpha;
  double beta;
};
const RefRow kReferenceLimits[] = {
    {1, 2.0, 2.0},
    {2, 4.849874227, 4.266451184},
    {3, 7.459737780, 6.640859883},
    {4, 10.053848562, 9.072950060},
    {5, 12.651092541, 11.534575564},
    {6, 15.268944180, 14.013375515},
    {7, 17.909794465, 16.503817820},
    {8, 20.571218529, 19.003137431},
};
constexpr int kMaxReferenceG = 8;

struct Seed {
  double alpha;
  double beta;
};

Seed seed_for(int g) {
  if (g <= kMaxReferenceG)
    return {kReferenceLimits[g - 1].alpha, kReferenceLimits[g - 1].beta};
  const RefRow& last = kReferenceLimits[kMaxReferenceG - 1];
  return {last.alpha + 2.66 * (g - kMaxReferenceG),
          last.beta + 2.50 * (g - kMaxReferenceG)};
}

}  // namespace

void validate(const SieveLimits& limits) {
  if (limits.g < 1) throw domain_error("sieve limits: g must be positive");
  if (limits.g == 1) {
    if (limits.alpha != 2.0 || limits.beta != 2.0)
      throw domain_error("sieve limits: g=1 requires alpha = beta = 2");
    return;
  }
  if (!(limits.alpha > limits.beta && limits.beta > 2.0))
    throw domain_error("sieve limits: need alpha > beta > 2 for g > 1");
  if (limits.g <= 10 && limits.beta > 2.5 * limits.g)
    throw domain_error("sieve limits: beta exceeds 2.5 g");
}

SieveLimits solve_sieve_limits(SieveDimension g, double tol) {
  return solve_sieve_limits(g, tol, nullptr);
}

SieveLimits solve_sieve_limits(SieveDimension gd, double tol,
                               ShootingReport* report) {
  if (tol <= 0) throw domain_error("solve_sieve_limits: tol must be positive");
  const int g = gd.value();
  if (g == 1) {
    if (report) *report = ShootingReport{0.0, 0.0, 0};
    return SieveLimits{2.0, 2.0, 1, LimitsSource::solved};
  }

  const Seed seed = seed_for(g);
  const quad U = quad(seed.alpha) + 12;
  auto sig = shared_sigma(gd, to_double(U) + 2);
  int marches = 0;

  struct Resid {
    quad level;  // (F(U)+f(U))/2 - 1
    quad diff;   // F(U) - f(U)
  };
  auto residuals = [&](quad a, quad b) -> Resid {
    SievePairSolution sol = march_sieve_pair(*sig, a, b, U);
    ++marches;
    return {(sol.F_end + sol.f_end) / 2 - 1, sol.F_end - sol.f_end};
  };

  // Inner solve: for fixed b, move the F switch point a until the common
  // limit of F and f sits at 1.  Secant iteration, warm-started across calls.
  quad a_warm = quad(seed.alpha);
  auto solve_level = [&](quad b, quad* diff_out) -> quad {
    quad a0 = qmax(a_warm, b + quad(0.01));
    Resid r0 = residuals(a0, b);
    quad a1 = a0 + (r0.level > 0 ? quad(-0.02) : quad(0.02));
    Resid r1 = residuals(a1, b);
    for (int it = 0; it < 60; ++it) {
      if (qabs(r1.level) < quad(1e-27) || qabs(a1 - a0) < quad(1e-22)) break;
      quad denom = r1.level - r0.level;
      if (denom == 0) break;
      quad a2 = a1 - r1.level * (a1 - a0) / denom;
      a2 = qmax(a2, b + quad(1e-4));
      a2 = qmin(a2, b + quad(8));
      a0 = a1;
      r0 = r1;
      a1 = a2;
      r1 = residuals(a1, b);
    }
    if (qabs(r1.level) > quad(1e-18))
      throw convergence_error("sifting-limit solve: level equation stalled",
                              to_double(qabs(r1.level)), 0.0);
    a_warm = a1;
    *diff_out = r1.diff;
    return a1;
  };

  // Outer solve: slide b until the difference F(U) - f(U) crosses zero.
  quad diff_tmp = 0;
  auto diff_at = [&](quad b) -> quad {
    quad d;
    solve_level(b, &d);
    return d;
  };

  quad b_lo = 0, b_hi = 0, d_lo = 0, d_hi = 0;
  {
    quad b0 = quad(seed.beta);
    quad d0 = diff_at(b0);
    bool found = false;
    for (int k = 1; k <= 12 && !found; ++k) {
      quad step = quad(0.12) * k;
      for (quad b1 : {b0 + step, b0 - step}) {
        if (b1 <= quad(2.01)) continue;
        quad d1 = diff_at(b1);
        if ((d0 < 0) != (d1 < 0)) {
          b_lo = qmin(b0, b1);
          b_hi = qmax(b0, b1);
          d_lo = b0 < b1 ? d0 : d1;
          d_hi = b0 < b1 ? d1 : d0;
          found = true;
          break;
        }
      }
    }
    if (!found)
      throw convergence_error(
          "sifting-limit solve: no sign change in the difference residual",
          to_double(qabs(d0)), 0.0);
  }

  // Bisection with a secant refinement step once the bracket is tight.
  for (int it = 0; it < 80 && (b_hi - b_lo) > quad(1e-12); ++it) {
    quad bm;
    if (it % 3 == 2 && d_hi != d_lo)
      bm = b_lo - d_lo * (b_hi - b_lo) / (d_hi - d_lo);
    else
      bm = (b_lo + b_hi) / 2;
    if (bm <= b_lo || bm >= b_hi) bm = (b_lo + b_hi) / 2;
    quad dm = diff_at(bm);
    if ((dm < 0) == (d_lo < 0)) {
      b_lo = bm;
      d_lo = dm;
    } else {
      b_hi = bm;
      d_hi = dm;
    }
  }

  const quad beta_q = (b_lo + b_hi) / 2;
  const quad alpha_q = solve_level(beta_q, &diff_tmp);

  // Verification march at the solved switch points.
  SievePairSolution fin = march_sieve_pair(*sig, alpha_q, beta_q,
                                           alpha_q + 12);
  ++marches;
  const double rF = std::abs(to_double(fin.F_end - 1));
  const double rf = std::abs(to_double(fin.f_end - 1));
  if (rF > tol || rf > tol)
    throw convergence_error("sifting-limit solve: residuals above tolerance",
                            rF, rf);

  if (report) *report = ShootingReport{rF, rf, marches};

  SieveLimits out{to_double(alpha_q), to_double(beta_q), g,
                  LimitsSource::solved};
  validate(out);
  return out;
}

SieveLimits reference_limits(SieveDimension g) {
  if (g.value() > kMaxReferenceG)
    throw domain_error("reference sifting limits available only for g <= " +
                       std::to_string(kMaxReferenceG));
  const RefRow& row = kReferenceLimits[g.value() - 1];
  return SieveLimits{row.alpha, row.beta, row.g, LimitsSource::reference};
}

int max_reference_dimension() { return kMaxReferenceG; }

std::vector<SieveLimits> load_reference_limits(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open sifting-limit file: " + path);
  std::vector<SieveLimits> rows;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    int g;
    double a, b;
    if (!(ss >> g)) continue;  // blank/comment line
    if (!(ss >> a >> b))
      throw parse_error(path + ":" + std::to_string(lineno) +
                        ": expected 'g alpha beta'");
    SieveLimits lim{a, b, g, LimitsSource::reference};
    validate(lim);
    rows.push_back(lim);
  }
  if (rows.empty()) throw parse_error(path + ": no data rows");
  return rows;
}

namespace {
std::mutex g_limits_mutex;
std::map<int, SieveLimits> g_solved_cache;
}  // namespace

SieveLimits get_limits(SieveDimension g, LimitsSource source) {
  if (source == LimitsSource::reference) return reference_limits(g);
  std::lock_guard<std::mutex> lock(g_limits_mutex);
  auto it = g_solved_cache.find(g.value());
  if (it != g_solved_cache.end()) return it->second;
  SieveLimits lim = solve_sieve_limits(g, 1e-9);
  g_solved_cache[g.value()] = lim;
  return lim;
}

}  // namespace polysieve
