#include "polysieve/dde_march.hpp"

#include <algorithm>
#include <cmath>

#include "polysieve/errors.hpp"

namespace polysieve {

namespace {
constexpr int kMarchDegree = 40;

const ChebEngine& march_engine() {
  static const ChebEngine engine(kMarchDegree);
  return engine;
}

// Locate the piece containing u (pieces ascending, contiguous).
const ChebPiece* find_piece(const std::vector<ChebPiece>& pieces, quad u) {
  size_t lo = 0, hi = pieces.size();
  while (lo < hi) {
    size_t mid = (lo + hi) / 2;
    if (u <= pieces[mid].hi)
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo < pieces.size() ? &pieces[lo] : nullptr;
}
}  // namespace

quad SievePairSolution::eval_F(const SigmaFunction& sig, quad u) const {
  if (u <= alpha) return 1 / sig.eval_q(u);
  const ChebPiece* p = find_piece(F_pieces, u);
  if (!p) throw domain_error("sieve pair march: F argument beyond march end");
  return cheb_eval(*p, u);
}

quad SievePairSolution::eval_f(quad u) const {
  if (u <= beta) return 0;
  const ChebPiece* p = find_piece(f_pieces, u);
  if (!p) throw domain_error("sieve pair march: f argument beyond march end");
  return cheb_eval(*p, u);
}

std::vector<double> SievePairSolution::kink_abscissas() const {
  std::vector<double> k;
  double a = to_double(alpha), b = to_double(beta), end = to_double(u_end);
  for (double x = b; x <= end; x += 1.0) k.push_back(x);
  for (double x = a; x <= end; x += 1.0) k.push_back(x);
  for (double x = 2.0; x <= end; x += 1.0) k.push_back(x);
  std::sort(k.begin(), k.end());
  k.erase(std::unique(k.begin(), k.end(),
                      [](double x, double y) { return std::abs(x - y) < 1e-9; }),
          k.end());
  return k;
}

SievePairSolution march_sieve_pair(const SigmaFunction& sig, quad alpha,
                                   quad beta, quad u_end) {
  if (!(beta > 2 || (sig.g() == 1 && beta >= 2)) || alpha < beta)
    throw domain_error("sieve pair march: need alpha >= beta >= 2");
  if (u_end <= alpha + 1)
    throw domain_error("sieve pair march: u_end too small");

  const int g = sig.g();
  const quad gq = g;
  const ChebEngine& eng = march_engine();

  SievePairSolution sol;
  sol.alpha = alpha;
  sol.beta = beta;
  sol.u_end = u_end;

  // Segment boundaries: the shifted switch points and the integers, within
  // [beta, u_end].  Consecutive integers keep every segment at most one unit
  // long, so delayed arguments always land in finished territory.
  std::vector<quad> cuts;
  for (quad x = beta; x < u_end; x += 1) cuts.push_back(x);
  for (quad x = alpha; x < u_end; x += 1) cuts.push_back(x);
  for (long m = 2; quad(m) < u_end; ++m)
    if (quad(m) > beta) cuts.push_back(quad(m));
  cuts.push_back(u_end);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end(),
                         [](quad x, quad y) { return qabs(x - y) < 1e-9; }),
             cuts.end());

  // Running values of P = u^g F at the F frontier and Q = u^g f at the f
  // frontier.
  quad P_left = qpow_int(alpha, g) / sig.eval_q(alpha);
  quad Q_left = 0;

  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    const quad lo = cuts[i], hi = cuts[i + 1];
    const std::vector<quad> nodes = eng.mapped_nodes(lo, hi);

    // f marches on every segment (they all start at or above beta).
    {
      std::vector<quad> rhs(nodes.size());
      for (size_t j = 0; j < nodes.size(); ++j)
        rhs[j] = gq * qpow_int(nodes[j], g - 1) *
                 sol.eval_F(sig, nodes[j] - 1);
      ChebPiece anti{lo, hi,
                     ChebEngine::antiderivative(eng.to_coefficients(rhs), lo, hi)};
      std::vector<quad> vals(nodes.size());
      for (size_t j = 0; j < nodes.size(); ++j)
        vals[j] = (Q_left + cheb_eval(anti, nodes[j])) / qpow_int(nodes[j], g);
      Q_left += cheb_eval(anti, hi);
      sol.f_pieces.push_back(ChebPiece{lo, hi, eng.to_coefficients(vals)});
    }

    // F marches only above its switch point.
    if (lo >= alpha - quad(1e-9)) {
      std::vector<quad> rhs(nodes.size());
      for (size_t j = 0; j < nodes.size(); ++j)
        rhs[j] = gq * qpow_int(nodes[j], g - 1) * sol.eval_f(nodes[j] - 1);
      ChebPiece anti{lo, hi,
                     ChebEngine::antiderivative(eng.to_coefficients(rhs), lo, hi)};
      std::vector<quad> vals(nodes.size());
      for (size_t j = 0; j < nodes.size(); ++j)
        vals[j] = (P_left + cheb_eval(anti, nodes[j])) / qpow_int(nodes[j], g);
      P_left += cheb_eval(anti, hi);
      sol.F_pieces.push_back(ChebPiece{lo, hi, eng.to_coefficients(vals)});
    }
  }

  sol.F_end = sol.eval_F(sig, u_end);
  sol.f_end = sol.eval_f(u_end);
  return sol;
}

}  // namespace polysieve
