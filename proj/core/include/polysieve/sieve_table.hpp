#ifndef POLYSIEVE_SIEVE_TABLE_HPP
#define POLYSIEVE_SIEVE_TABLE_HPP

#include <iosfwd>
#include <memory>
#include <vector>

#include "polysieve/sieve_limits.hpp"
#include "polysieve/sigma.hpp"

namespace polysieve {

// Dense grid of the sieve-function pair (F_g, f_g).  Immutable once built;
// safe to share across threads.  Arguments at or below alpha_g are served by
// 1/sigma_g directly, arguments beyond u_max return 1 (the common limit).
struct SieveFunctionTable {
  int g = 0;
  SieveLimits limits;
  double u_min = 1.0;
  double step = 0;
  double u_max = 0;
  std::vector<double> F_values;
  std::vector<double> f_values;
  std::vector<double> kinks;  // abscissas where some derivative jumps
  std::shared_ptr<const SigmaFunction> sigma;

  size_t size() const { return F_values.size(); }
  double u_at(size_t i) const { return u_min + step * static_cast<double>(i); }
};

// Populate the grid by the method of steps: on each panel the integrated
// forms u^g F and u^g f are advanced by quadrature of right-hand sides that
// depend only on finished values one unit back.  Requires u_max >= alpha+12
// and 0 < step <= 2^-8; default step 2^-10.
SieveFunctionTable build_sieve_function_table(SieveDimension g,
                                              const SieveLimits& limits,
                                              double u_max,
                                              double step = 1.0 / 1024);

// Interpolated values.  Between grid points, cubic interpolation with the
// stencil kept inside one inter-kink segment.
double eval_F(const SieveFunctionTable& table, double u);
double eval_f(const SieveFunctionTable& table, double u);

// CSV export with header "u,F,f".
void write_csv(const SieveFunctionTable& table, std::ostream& out);

// Int_{t_lo}^{t_hi} F_g(t) dt.  The power-law head F = 1/(A_g t^g) on (0, 2]
// integrates in closed form, which keeps small lower endpoints cheap and
// accurate; the rest is adaptive quadrature of eval_F.
double integral_F_dt(const SieveFunctionTable& table, double t_lo, double t_hi,
                     double abs_tol = 1e-9);

// Worst centered-difference defect of the tabulated pair against the delay
// system, normalized by 1+|rhs|.  Grid points whose difference window spans a
// kink abscissa are not meaningful derivative estimates and are skipped.
struct ResidualStats {
  double max_F_residual = 0;
  double max_f_residual = 0;
  size_t points_checked = 0;
  size_t points_skipped = 0;
};
ResidualStats dde_residual_stats(const SieveFunctionTable& table);

// Memoized build keyed on (g, source); u_max is grown as needed.
std::shared_ptr<const SieveFunctionTable> shared_table(SieveDimension g,
                                                       LimitsSource source,
                                                       double u_max);

}  // namespace polysieve

#endif
