#include "polysieve/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "polysieve/errors.hpp"
#include "polysieve/parallel.hpp"
#include "polysieve/quadrature.hpp"

namespace polysieve {

namespace {

// Classical admissible r, Diamond-Halberstam weighted sieve, g = 2..4,
// k = 1..14.  Embedded verbatim; not recomputed here.
constexpr int kClassicalR[3][14] = {
    {7, 11, 16, 20, 24, 28, 32, 36, 40, 44, 48, 52, 56, 60},
    {12, 19, 25, 32, 38, 44, 50, 56, 62, 69, 75, 81, 87, 93},
    {17, 27, 35, 44, 52, 61, 69, 77, 86, 94, 102, 110, 118, 126},
};

}  // namespace

std::optional<int> classical_r(int g, int k) {
  if (g < 2 || g > 4 || k < 1 || k > 14) return std::nullopt;
  return kClassicalR[g - 2][k - 1];
}

double solve_w(double v, const SieveFunctionTable& table_g,
               const SieveFunctionTable& table_g_plus_1, double tau1,
               double tau2, Bracket* used) {
  if (v <= 1 / tau1 + 0.5)
    throw domain_error("solve_w: v too small for a w bracket");
  auto G = [&](double w) {
    return eval_F(table_g, v * (tau1 - 1 / w)) -
           (v / kExpGamma) * eval_F(table_g_plus_1, v * (tau2 - 1 / w));
  };
  double lo = 1 / tau1 * (1 + 1e-10);
  double hi = v * (1 - 1e-10);
  if ((G(lo) < 0) == (G(hi) < 0)) {
    Bracket b;
    if (!scan_for_bracket(G, lo, hi, 64, &b))
      throw convergence_error("solve_w: no sign change for w in (1/tau1, v)");
    lo = b.lo;
    hi = b.hi;
  }
  if (used) *used = Bracket{lo, hi};
  return find_root(G, lo, hi, 1e-12);
}

double solve_u(int k, double v, double w, const SieveFunctionTable& table_g,
               const SieveFunctionTable& table_g_plus_1, double tau1,
               double tau2, Bracket* used) {
  if (k < 1) throw domain_error("solve_u: k must be >= 1");
  const double f_tau1v = eval_f(table_g, tau1 * v);
  if (f_tau1v <= 0)
    throw infeasible_error("solve_u: f_g(tau1 v) = 0 at this v");

  // Both integrals in the balance equation collapse to Int F(t) dt under
  // t = v(tau - 1/s), which also removes the near-singular 1/s^2 factor.
  const double first =
      integral_F_dt(table_g, v * (tau1 - 1 / w), v * tau1 - 1) / v;
  auto balance = [&](double u) {
    const double second =
        integral_F_dt(table_g_plus_1, v * (tau2 - 1 / u), v * (tau2 - 1 / w)) /
        v;
    return k * f_tau1v - first - (v / kExpGamma) * second;
  };

  double lo = (1 / tau2) * (1 + 1e-9);
  double hi = w * (1 - 1e-12);
  double blo = balance(lo), bhi = balance(hi);
  if (blo >= 0 || bhi <= 0)
    throw infeasible_error(
        "solve_u: no stationary u in (1/tau2, w) for this (v, w)");
  if (used) *used = Bracket{lo, hi};
  return find_root(balance, lo, hi, 1e-12);
}

AdmissibleResult minimize_r(int g, int k, const SieveFunctionTable& table_g,
                            const SieveFunctionTable& table_g_plus_1,
                            const MinimizeOptions& options) {
  if (table_g.g != g || table_g_plus_1.g != g + 1)
    throw domain_error("minimize_r: table dimensions must be g and g+1");
  if (k < 1) throw domain_error("minimize_r: k must be >= 1");

  const double alpha = table_g.limits.alpha;
  const double u_avail = std::min(table_g.u_max, table_g_plus_1.u_max);

  bool have_best = false;
  AdmissibleResult best;
  std::vector<std::string> failures;
  double prev_threshold = 0;
  bool have_prev = false;
  int rises = 0;

  for (int n = 1; n <= options.n_max; ++n) {
    const double v = alpha + n;
    if (v * options.tau2 + 1 > u_avail) break;  // tables exhausted
    auto fail = [&](const std::string& why) {
      if (failures.size() < 16)
        failures.push_back("n=" + std::to_string(n) + ": " + why);
    };
    try {
      Bracket wb, ub;
      const double w =
          solve_w(v, table_g, table_g_plus_1, options.tau1, options.tau2, &wb);
      const double u = solve_u(k, v, w, table_g, table_g_plus_1, options.tau1,
                               options.tau2, &ub);
      if (u >= 2.0) {
        fail("stationary u >= 2 violates 1/2 < 1/u");
        continue;
      }
      ParameterPoint p =
          make_parameter_point(v, w, u, options.tau1, options.tau2);
      ThresholdBreakdown bd = r_threshold(g, k, p, table_g, table_g_plus_1);
      if (bd.eta <= 0) {
        fail("eta <= 0");
        continue;
      }
      if (have_prev && bd.threshold > prev_threshold)
        ++rises;
      else
        rises = 0;
      prev_threshold = bd.threshold;
      have_prev = true;
      if (!have_best || bd.threshold < best.breakdown.threshold) {
        best.g = g;
        best.k = k;
        best.r = bd.r;
        best.params = p;
        best.breakdown = bd;
        best.n_star = n;
        best.w_bracket = wb;
        best.u_bracket = ub;
        have_best = true;
      }
      if (rises >= options.rise_stop) break;
    } catch (const infeasible_error& e) {
      fail(e.what());
    } catch (const convergence_error& e) {
      fail(e.what());
    } catch (const domain_error& e) {
      fail(e.what());
    }
  }

  if (!have_best) {
    std::string msg = "minimize_r(g=" + std::to_string(g) +
                      ", k=" + std::to_string(k) + "): no feasible n";
    for (const std::string& f : failures) msg += "; " + f;
    throw infeasible_error(msg);
  }
  best.classical_r = classical_r(g, k);
  return best;
}

TableDocument generate_table(int g_lo, int g_hi, int k_lo, int k_hi,
                             LimitsSource source,
                             const MinimizeOptions& options) {
  if (g_lo < 1 || g_lo > g_hi || k_lo < 1 || k_lo > k_hi)
    throw domain_error("generate_table: bad g/k ranges");

  TableDocument doc;
  doc.g_lo = g_lo;
  doc.g_hi = g_hi;
  doc.k_lo = k_lo;
  doc.k_hi = k_hi;

  // Tables are shared per dimension and built once, large enough for the
  // whole v grid.
  std::map<int, std::shared_ptr<const SieveFunctionTable>> tables;
  for (int g = g_lo; g <= g_hi + 1; ++g) {
    SieveLimits lim = get_limits(SieveDimension(g), source);
    tables[g] = shared_table(SieveDimension(g), source,
                             lim.alpha + options.n_max + 2);
  }

  const int nk = k_hi - k_lo + 1;
  const size_t total = static_cast<size_t>(g_hi - g_lo + 1) * nk;
  doc.cells.assign(total, TableCell{});
  parallel_for(total, [&](size_t idx) {
    const int g = g_lo + static_cast<int>(idx) / nk;
    const int k = k_lo + static_cast<int>(idx) % nk;
    TableCell& cell = doc.cells[idx];
    cell.g = g;
    cell.k = k;
    cell.classical = classical_r(g, k);
    try {
      AdmissibleResult res =
          minimize_r(g, k, *tables.at(g), *tables.at(g + 1), options);
      cell.feasible = true;
      cell.r = res.r;
      cell.v = res.params.v;
      cell.w = res.params.w;
      cell.u = res.params.u;
      cell.threshold = res.breakdown.threshold;
      cell.n_star = res.n_star;
    } catch (const infeasible_error& e) {
      cell.feasible = false;
      cell.failure = e.what();
    }
  });
  return doc;
}

void write_csv(const TableDocument& doc, std::ostream& out) {
  out << "g,k,r,classical_r,v,w,u,threshold\n";
  char buf[160];
  for (const TableCell& c : doc.cells) {
    if (c.feasible) {
      std::snprintf(buf, sizeof buf, "%d,%d,%d,%s,%.9g,%.9g,%.9g,%.9g\n", c.g,
                    c.k, c.r,
                    c.classical ? std::to_string(*c.classical).c_str() : "",
                    c.v, c.w, c.u, c.threshold);
    } else {
      std::snprintf(buf, sizeof buf, "%d,%d,,%s,,,,\n", c.g, c.k,
                    c.classical ? std::to_string(*c.classical).c_str() : "");
    }
    out << buf;
  }
}

TableDocument parse_table_csv(std::istream& in) {
  TableDocument doc;
  std::string line;
  if (!std::getline(in, line) || line != "g,k,r,classical_r,v,w,u,threshold")
    throw parse_error("table CSV: missing or unexpected header");
  int g_lo = 0, g_hi = 0, k_lo = 0, k_hi = 0;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : line) {
      if (ch == ',') {
        fields.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(ch);
      }
    }
    fields.push_back(cur);
    if (fields.size() != 8) throw parse_error("table CSV: bad row: " + line);
    TableCell c;
    c.g = std::stoi(fields[0]);
    c.k = std::stoi(fields[1]);
    c.feasible = !fields[2].empty();
    if (c.feasible) {
      c.r = std::stoi(fields[2]);
      c.v = std::stod(fields[4]);
      c.w = std::stod(fields[5]);
      c.u = std::stod(fields[6]);
      c.threshold = std::stod(fields[7]);
    }
    if (!fields[3].empty()) c.classical = std::stoi(fields[3]);
    if (first) {
      g_lo = g_hi = c.g;
      k_lo = k_hi = c.k;
      first = false;
    } else {
      g_lo = std::min(g_lo, c.g);
      g_hi = std::max(g_hi, c.g);
      k_lo = std::min(k_lo, c.k);
      k_hi = std::max(k_hi, c.k);
    }
    doc.cells.push_back(c);
  }
  doc.g_lo = g_lo;
  doc.g_hi = g_hi;
  doc.k_lo = k_lo;
  doc.k_hi = k_hi;
  return doc;
}

void write_text(const TableDocument& doc, std::ostream& out) {
  auto cell_at = [&](int g, int k) -> const TableCell& {
    const int nk = doc.k_hi - doc.k_lo + 1;
    return doc.cells[static_cast<size_t>(g - doc.g_lo) * nk + (k - doc.k_lo)];
  };
  out << "Minimal admissible r (weighted sieve; o(1) error terms dropped, so "
         "values are idealized)\n";
  out << "'--' marks cells with no valid parameter choice.\n\n";
  auto header = [&] {
    out << "g\\k ";
    for (int k = doc.k_lo; k <= doc.k_hi; ++k)
      out << std::setw(5) << k;
    out << '\n';
  };
  header();
  for (int g = doc.g_lo; g <= doc.g_hi; ++g) {
    out << std::setw(4) << g;
    for (int k = doc.k_lo; k <= doc.k_hi; ++k) {
      const TableCell& c = cell_at(g, k);
      if (c.feasible)
        out << std::setw(5) << c.r;
      else
        out << std::setw(5) << "--";
    }
    out << '\n';
  }
  out << "\nClassical reference r\n";
  header();
  for (int g = doc.g_lo; g <= doc.g_hi; ++g) {
    out << std::setw(4) << g;
    for (int k = doc.k_lo; k <= doc.k_hi; ++k) {
      const TableCell& c = cell_at(g, k);
      if (c.classical)
        out << std::setw(5) << *c.classical;
      else
        out << std::setw(5) << "--";
    }
    out << '\n';
  }
  out << "\nImprovement (classical - computed)\n";
  header();
  for (int g = doc.g_lo; g <= doc.g_hi; ++g) {
    out << std::setw(4) << g;
    for (int k = doc.k_lo; k <= doc.k_hi; ++k) {
      const TableCell& c = cell_at(g, k);
      if (c.classical && c.feasible)
        out << std::setw(5) << (*c.classical - c.r);
      else
        out << std::setw(5) << "--";
    }
    out << '\n';
  }
}

namespace {

nlohmann::json cell_to_json(const TableCell& c) {
  nlohmann::json j;
  j["g"] = c.g;
  j["k"] = c.k;
  j["feasible"] = c.feasible;
  if (c.feasible) {
    j["r"] = c.r;
    j["v"] = c.v;
    j["w"] = c.w;
    j["u"] = c.u;
    j["threshold"] = c.threshold;
    j["n_star"] = c.n_star;
  } else {
    j["failure"] = c.failure;
  }
  if (c.classical) j["classical_r"] = *c.classical;
  return j;
}

}  // namespace

void write_json(const TableDocument& doc, std::ostream& out) {
  nlohmann::json j;
  j["g_range"] = {doc.g_lo, doc.g_hi};
  j["k_range"] = {doc.k_lo, doc.k_hi};
  j["note"] = "o(1) error terms dropped; r values are idealized";
  j["cells"] = nlohmann::json::array();
  for (const TableCell& c : doc.cells) j["cells"].push_back(cell_to_json(c));
  out << j.dump(2) << '\n';
}

void write_json(const AdmissibleResult& res, std::ostream& out) {
  nlohmann::json j;
  j["g"] = res.g;
  j["k"] = res.k;
  j["r"] = res.r;
  j["n_star"] = res.n_star;
  j["params"] = {{"v", res.params.v},     {"w", res.params.w},
                 {"u", res.params.u},     {"tau1", res.params.tau1},
                 {"tau2", res.params.tau2}, {"xi1", res.params.xi1},
                 {"xi2", res.params.xi2}};
  j["breakdown"] = {{"gku", res.breakdown.gku},
                    {"I_over_f", res.breakdown.I_over_f},
                    {"J_term", res.breakdown.J_term},
                    {"threshold", res.breakdown.threshold},
                    {"eta", res.breakdown.eta}};
  j["brackets"] = {{"w", {res.w_bracket.lo, res.w_bracket.hi}},
                   {"u", {res.u_bracket.lo, res.u_bracket.hi}}};
  if (res.classical_r) j["classical_r"] = *res.classical_r;
  j["note"] = "o(1) error terms dropped; r is idealized";
  out << j.dump(2) << '\n';
}

}  // namespace polysieve
