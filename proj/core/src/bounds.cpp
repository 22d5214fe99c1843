#include "polysieve/bounds.hpp"

#include <cmath>

#include "polysieve/errors.hpp"
#include "polysieve/quadrature.hpp"

namespace polysieve {

ParameterPoint make_parameter_point(double v, double w, double u, double tau1,
                                    double tau2) {
  ParameterPoint p;
  p.v = v;
  p.w = w;
  p.u = u;
  p.tau1 = tau1;
  p.tau2 = tau2;
  p.xi1 = v * tau1 + 1 - v / w;
  p.xi2 = v * tau2 + 1 - v / u;
  validate(p);
  return p;
}

void validate(const ParameterPoint& p) {
  const bool ok = p.v > 0 && p.w > 0 && p.u > 0 &&
                  1 / p.v < 1 / p.w && 1 / p.w < p.tau1 && p.tau1 <= 0.5 &&
                  0.5 < 1 / p.u && 1 / p.u < p.tau2 && p.tau2 <= 1.0;
  if (!ok)
    throw domain_error(
        "parameter point violates 0 < 1/v < 1/w < tau1 <= 1/2 < 1/u < tau2 <= 1");
}

double compute_C0() { return kExpGamma / (std::log(4.0) - 0.25); }

double integral_I(const ParameterPoint& p, const SieveFunctionTable& table_g,
                  double abs_tol) {
  validate(p);
  if (p.w == p.v) return 0.0;
  const int g = table_g.g;
  const double arg_at_w = p.v * (p.tau1 - 1 / p.w);
  if (arg_at_w <= 0)
    throw domain_error("integral_I: integrand argument not positive");
  auto integrand = [&](double s) {
    return (1 - p.u / s) * eval_F(table_g, p.v * (p.tau1 - 1 / s)) / s;
  };
  return g * integrate(integrand, p.w, p.v, abs_tol);
}

double integral_J(const ParameterPoint& p,
                  const SieveFunctionTable& table_g_plus_1, double abs_tol) {
  validate(p);
  if (p.u == p.w) return 0.0;
  const int g = table_g_plus_1.g - 1;
  if (g < 1) throw domain_error("integral_J: table dimension must be g+1 >= 2");
  const double arg_at_u = p.v * (p.tau2 - 1 / p.u);
  if (arg_at_u <= 0)
    throw domain_error("integral_J: integrand argument not positive");
  auto integrand = [&](double s) {
    return (1 - p.u / s) * eval_F(table_g_plus_1, p.v * (p.tau2 - 1 / s)) / s;
  };
  return g * integrate(integrand, p.u, p.w, abs_tol);
}

double bound_I_closed(int g, const ParameterPoint& p, double f_at_tau1v,
                      double f_at_xi1, const SieveLimits& limits_g) {
  validate(p);
  if (p.xi1 < limits_g.beta)
    throw infeasible_error("bound_I_closed: hypothesis xi1 >= beta_g fails");
  if (f_at_tau1v <= 0)
    throw domain_error("bound_I_closed: f_g(tau1 v) must be positive");
  const double ratio = 1 - f_at_xi1 / f_at_tau1v;
  return (g + (p.u / p.v) * p.xi1 * ratio) * std::log(p.v / p.w) +
         ratio * p.xi1 * (p.w / p.v) * (1 - p.u / p.w) -
         g * (p.u / p.w - p.u / p.v);
}

double bound_J_closed(int g, const ParameterPoint& p, double f_at_tau1v,
                      double f_next_at_xi2,
                      const SieveLimits& limits_g_plus_1) {
  validate(p);
  if (p.xi2 < limits_g_plus_1.beta)
    throw infeasible_error("bound_J_closed: hypothesis xi2 >= beta_{g+1} fails");
  if (f_at_tau1v <= 0)
    throw domain_error("bound_J_closed: f_g(tau1 v) must be positive");
  return (p.v / kExpGamma) * g * (std::log(p.w / p.u) - 1 + p.u / p.w) /
             f_at_tau1v +
         p.xi2 * (static_cast<double>(g) / (g + 1)) * (p.u / kExpGamma) *
             (1 - f_next_at_xi2) / f_at_tau1v * std::log(p.v / p.u);
}

int minimal_admissible_r(double threshold) {
  return static_cast<int>(std::floor(threshold + 1e-9)) + 1;
}

ThresholdBreakdown r_threshold(int g, int k, const ParameterPoint& p,
                               const SieveFunctionTable& table_g,
                               const SieveFunctionTable& table_g_plus_1) {
  validate(p);
  if (table_g.g != g || table_g_plus_1.g != g + 1)
    throw domain_error("r_threshold: table dimensions must be g and g+1");
  const double f_tau1v = eval_f(table_g, p.tau1 * p.v);
  if (f_tau1v <= 0)
    throw infeasible_error(
        "r_threshold: f_g(tau1 v) = 0, the lower-bound sieve is void");
  ThresholdBreakdown b;
  b.gku = g * static_cast<double>(k) * p.u;
  b.I_over_f = integral_I(p, table_g) / f_tau1v;
  b.J_term = p.v * integral_J(p, table_g_plus_1) / (kExpGamma * f_tau1v);
  b.threshold = b.gku - 1 + b.I_over_f + b.J_term;
  b.r = minimal_admissible_r(b.threshold);
  b.eta = b.r + 1 - b.gku;
  return b;
}

double u_choice(double v, double beta_g_plus_1) {
  const double a = beta_g_plus_1 - 1;
  return 1 + a / (v - a);
}

double w_choice(double v, double beta_g) {
  const double b = beta_g - 1;
  return 2 * (1 + 2 * b / (v - 2 * b));
}

double M_of_v(int g, int k, double v, double beta_g_plus_1) {
  const double a = beta_g_plus_1 - 1;
  return g * static_cast<double>(k) + a * g * k / (v - a) +
         v * g / compute_C0();
}

AsymptoticParams asymptotic_params(int g, int k, const SieveLimits& limits_g,
                                   const SieveLimits& limits_g_plus_1) {
  if (k < 1) throw domain_error("asymptotic_params: k must be >= 1");
  if (limits_g.g != g || limits_g_plus_1.g != g + 1)
    throw domain_error("asymptotic_params: limits dimension mismatch");
  const double C0 = compute_C0();
  const double a = limits_g_plus_1.beta - 1;
  AsymptoticParams out;
  out.v = a + std::sqrt(C0 * a * k);
  out.u = u_choice(out.v, limits_g_plus_1.beta);
  out.w = w_choice(out.v, limits_g.beta);
  out.M = g * static_cast<double>(k) +
          g * static_cast<double>(k) *
              (2 * std::sqrt(a / (C0 * k)) + a / (C0 * k));
  out.c1 = 2 * std::sqrt(a / (C0 * g));
  out.c2 = a / (C0 * g);
  return out;
}

RatioCheck ratio_check(int g, double v, const SieveLimits& limits_g,
                       const SieveLimits& limits_g_plus_1) {
  if (limits_g.g != g || limits_g_plus_1.g != g + 1)
    throw domain_error("ratio_check: limits dimension mismatch");
  const double a = limits_g_plus_1.beta - 1;
  const double b2 = 2 * (limits_g.beta - 1);
  if (v <= std::max(a, b2))
    throw domain_error("ratio_check: v below the domain of w/u");
  RatioCheck out;
  out.w_over_u = 2 * (v - a) / (v - b2);
  out.within_bounds = out.w_over_u >= 4.0 / 3.0 && out.w_over_u <= 4.0;
  return out;
}

int ratio_condition_N(const SieveLimits& limits_g,
                      const SieveLimits& limits_g_plus_1) {
  const double a = limits_g_plus_1.beta - 1;
  const double need = std::max(
      {a, 2 * (limits_g.beta - 1), 4 * (limits_g.beta - 1) - a});
  int N = 3;
  while (N * a <= need) ++N;
  return N;
}

double k_bound(const SieveLimits& limits_g_plus_1, int N) {
  const double a = limits_g_plus_1.beta - 1;
  return (N - 1.0) * (N - 1.0) * a / compute_C0();
}

}  // namespace polysieve
