#ifndef POLYSIEVE_OPTIMIZER_HPP
#define POLYSIEVE_OPTIMIZER_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "polysieve/bounds.hpp"
#include "polysieve/root_finding.hpp"

namespace polysieve {

// One admissible-exponent result for a (g, k) cell, with the certifying
// parameters, threshold breakdown, winning grid index v = alpha_g + n_star,
// and the root brackets used (for reproducibility).
struct AdmissibleResult {
  int g = 0;
  int k = 0;
  int r = 0;
  ParameterPoint params;
  ThresholdBreakdown breakdown;
  int n_star = 0;
  std::optional<int> classical_r;
  Bracket w_bracket;
  Bracket u_bracket;
};

struct MinimizeOptions {
  int n_max = 400;
  int rise_stop = 25;  // stop after this many consecutive threshold increases
  double tau1 = 0.5;
  double tau2 = 1.0;
};

// Root of F_g(v(tau1 - 1/w)) = (v/e^gamma) F_{g+1}(v(tau2 - 1/w)) in
// w in (1/tau1, v): the stationarity of the admissibility threshold in w.
double solve_w(double v, const SieveFunctionTable& table_g,
               const SieveFunctionTable& table_g_plus_1, double tau1 = 0.5,
               double tau2 = 1.0, Bracket* used = nullptr);

// Stationarity of the threshold in u: the root of
//   k f_g(tau1 v) = Int_w^v F_g(v(tau1-1/s)) ds/s^2
//                   + (v/e^gamma) Int_u^w F_{g+1}(v(tau2-1/s)) ds/s^2
// in u in (1/tau2, w).
double solve_u(int k, double v, double w, const SieveFunctionTable& table_g,
               const SieveFunctionTable& table_g_plus_1, double tau1 = 0.5,
               double tau2 = 1.0, Bracket* used = nullptr);

// Scan v = alpha_g + n for n = 1..n_max, solve w then u at each feasible n,
// and return the cell minimizing the exact threshold (ties to smaller n).
// Throws infeasible_error listing per-n reasons when no n admits valid
// parameters.
AdmissibleResult minimize_r(int g, int k, const SieveFunctionTable& table_g,
                            const SieveFunctionTable& table_g_plus_1,
                            const MinimizeOptions& options = {});

// Classical admissible r for comparison (embedded reference data).
std::optional<int> classical_r(int g, int k);

struct TableCell {
  int g = 0;
  int k = 0;
  bool feasible = false;
  int r = 0;
  std::optional<int> classical;
  double v = 0, w = 0, u = 0, threshold = 0;
  int n_star = 0;
  std::string failure;  // first per-n reasons when infeasible
};

struct TableDocument {
  int g_lo = 0, g_hi = 0, k_lo = 0, k_hi = 0;
  std::vector<TableCell> cells;  // fixed (g, k) row-major order
};

// Full grid over g and k ranges; cells are evaluated concurrently and
// reduced in fixed order.
TableDocument generate_table(int g_lo, int g_hi, int k_lo, int k_hi,
                             LimitsSource source = LimitsSource::reference,
                             const MinimizeOptions& options = {});

// CSV header: g,k,r,classical_r,v,w,u,threshold (empty fields on
// infeasible cells).
void write_csv(const TableDocument& doc, std::ostream& out);
TableDocument parse_table_csv(std::istream& in);

void write_text(const TableDocument& doc, std::ostream& out);
void write_json(const TableDocument& doc, std::ostream& out);

void write_json(const AdmissibleResult& result, std::ostream& out);

}  // namespace polysieve

#endif
