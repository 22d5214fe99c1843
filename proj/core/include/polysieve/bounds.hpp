#ifndef POLYSIEVE_BOUNDS_HPP
#define POLYSIEVE_BOUNDS_HPP

#include "polysieve/sieve_table.hpp"

namespace polysieve {

// e^gamma, gamma the Euler-Mascheroni constant.
inline constexpr double kExpGamma = 1.7810724179901979852;

// Sieve parameters z = X^{1/v}, s = X^{1/w}, y = X^{1/u} with levels of
// distribution tau1 (prime arguments) and tau2 (the integer-argument switch),
// plus the derived shifted arguments xi1, xi2 of the closed-form bounds.
struct ParameterPoint {
  double v = 0;
  double w = 0;
  double u = 0;
  double tau1 = 0.5;
  double tau2 = 1.0;
  double xi1 = 0;  // v tau1 + 1 - v/w
  double xi2 = 0;  // v tau2 + 1 - v/u
};

// Builds the point and checks the ordering hypothesis
//   0 < 1/v < 1/w < tau1 <= 1/2 < 1/u < tau2 <= 1.
ParameterPoint make_parameter_point(double v, double w, double u,
                                    double tau1 = 0.5, double tau2 = 1.0);
void validate(const ParameterPoint& p);

// C0 = e^gamma / (log 4 - 1/4).
double compute_C0();

// I(u,w,v) = g Int_w^v (1 - u/s) F_g(v(tau1 - 1/s)) ds/s.
double integral_I(const ParameterPoint& p, const SieveFunctionTable& table_g,
                  double abs_tol = 1e-9);

// J(u,w,v) = g Int_u^w (1 - u/s) F_{g+1}(v(tau2 - 1/s)) ds/s.
double integral_J(const ParameterPoint& p,
                  const SieveFunctionTable& table_g_plus_1,
                  double abs_tol = 1e-9);

// Closed-form upper bound for I / f_g(tau1 v); requires xi1 >= beta_g.
double bound_I_closed(int g, const ParameterPoint& p, double f_at_tau1v,
                      double f_at_xi1, const SieveLimits& limits_g);

// Closed-form upper bound for v J / (e^gamma f_g(tau1 v)); requires
// xi2 >= beta_{g+1}.
double bound_J_closed(int g, const ParameterPoint& p, double f_at_tau1v,
                      double f_next_at_xi2, const SieveLimits& limits_g_plus_1);

// The right side of the admissibility condition
//   r > g k u - 1 + I/f_g(tau1 v) + v J/(e^gamma f_g(tau1 v))
// split into its terms, with the minimal admissible integer r and
// eta = r + 1 - g k u.
struct ThresholdBreakdown {
  double gku = 0;
  double I_over_f = 0;
  double J_term = 0;
  double threshold = 0;
  double eta = 0;
  int r = 0;
};

ThresholdBreakdown r_threshold(int g, int k, const ParameterPoint& p,
                               const SieveFunctionTable& table_g,
                               const SieveFunctionTable& table_g_plus_1);

// Smallest integer strictly above the threshold; values within 1e-9 of an
// integer round up conservatively.
int minimal_admissible_r(double threshold);

// Closed-form parameter choices and the main term
//   M(v) = gk + gk (2 sqrt((beta_{g+1}-1)/(C0 k)) + (beta_{g+1}-1)/(C0 k))
// at the minimizing v = beta_{g+1} - 1 + sqrt(C0 (beta_{g+1}-1) k), plus the
// asymptotic coefficients c1 = 2 sqrt((beta_{g+1}-1)/(C0 g)) and
// c2 = (beta_{g+1}-1)/(C0 g).
struct AsymptoticParams {
  double v = 0;
  double u = 0;
  double w = 0;
  double M = 0;
  double c1 = 0;
  double c2 = 0;
};

AsymptoticParams asymptotic_params(int g, int k, const SieveLimits& limits_g,
                                   const SieveLimits& limits_g_plus_1);

// The pieces, exposed for direct checks.
double u_choice(double v, double beta_g_plus_1);
double w_choice(double v, double beta_g);
double M_of_v(int g, int k, double v, double beta_g_plus_1);

// w/u = 2(v - (beta_{g+1}-1)) / (v - 2(beta_g-1)) and whether it lies in
// [4/3, 4]; domain error when v <= max{beta_{g+1}-1, 2(beta_g-1)}.
struct RatioCheck {
  double w_over_u = 0;
  bool within_bounds = false;
};

RatioCheck ratio_check(int g, double v, const SieveLimits& limits_g,
                       const SieveLimits& limits_g_plus_1);

// Smallest integer N >= 3 with N(beta_{g+1}-1) above each of beta_{g+1}-1,
// 2(beta_g-1) and 4(beta_g-1)-(beta_{g+1}-1), and the induced informational
// lower bound (N-1)^2 (beta_{g+1}-1)/C0 on k.
int ratio_condition_N(const SieveLimits& limits_g,
                      const SieveLimits& limits_g_plus_1);
double k_bound(const SieveLimits& limits_g_plus_1, int N);

}  // namespace polysieve

#endif
