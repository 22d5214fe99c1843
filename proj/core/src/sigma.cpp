#include "polysieve/sigma.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "polysieve/errors.hpp"

namespace polysieve {

namespace {
constexpr int kSigmaDegree = 40;

const ChebEngine& sigma_engine() {
  static const ChebEngine engine(kSigmaDegree);
  return engine;
}
}  // namespace

SieveDimension::SieveDimension(int g) : g_(g) {
  if (g < 1) throw domain_error("sieve dimension must be a positive integer");
}

SigmaFunction::SigmaFunction(SieveDimension g, double u_cap) : g_(g.value()) {
  quad factorial = 1;
  for (int i = 2; i <= g_; ++i) factorial *= i;
  a_g_ = qpow_int(quad(1) / (2 * q_exp_gamma()), g_) / factorial;
  cap_ = qmax(quad(u_cap), quad(4));

  const ChebEngine& eng = sigma_engine();
  const quad gq = g_;

  auto sigma_at = [&](quad u) -> quad {
    if (u <= 0) return 0;
    if (u <= 2) return a_g_ * qpow_int(u, g_);
    for (const ChebPiece& p : pieces_)
      if (u <= p.hi) return cheb_eval(p, u);
    return cheb_eval(pieces_.back(), pieces_.back().hi);
  };

  // Method of steps on q(u) = u^{-g} sigma(u), segments of unit length
  // starting at the delay kink u = 2.
  quad q_left = a_g_;  // q(2) = 2^{-g} sigma(2) = A_g
  quad lo = 2;
  while (lo < cap_) {
    quad hi = qmin(lo + 1, cap_);
    std::vector<quad> nodes = eng.mapped_nodes(lo, hi);
    std::vector<quad> rhs(nodes.size());
    for (size_t j = 0; j < nodes.size(); ++j) {
      quad t = nodes[j];
      rhs[j] = -gq * sigma_at(t - 2) / qpow_int(t, g_ + 1);
    }
    std::vector<quad> anti =
        ChebEngine::antiderivative(eng.to_coefficients(rhs), lo, hi);
    ChebPiece anti_piece{lo, hi, anti};
    std::vector<quad> vals(nodes.size());
    for (size_t j = 0; j < nodes.size(); ++j) {
      quad qv = q_left + cheb_eval(anti_piece, nodes[j]);
      vals[j] = qv * qpow_int(nodes[j], g_);
    }
    ChebPiece piece{lo, hi, eng.to_coefficients(vals)};
    q_left += cheb_eval(anti_piece, hi);
    pieces_.push_back(std::move(piece));
    lo = hi;
  }
  pieces_d_.reserve(pieces_.size());
  for (const ChebPiece& p : pieces_) pieces_d_.push_back(narrow(p));
}

quad SigmaFunction::eval_q(quad u) const {
  if (u <= 0) throw domain_error("sigma: u must be positive");
  if (u <= 2) return a_g_ * qpow_int(u, g_);
  for (const ChebPiece& p : pieces_)
    if (u <= p.hi) return cheb_eval(p, u);
  return 1;  // sigma -> 1 far beyond the tabulated range
}

double SigmaFunction::operator()(double u) const {
  if (u <= 0) throw domain_error("sigma: u must be positive");
  if (u <= 2) {
    double a = to_double(a_g_);
    return a * std::pow(u, g_);
  }
  // Pieces start at 2 with unit length; index directly.
  size_t idx = static_cast<size_t>(u - 2.0);
  if (idx >= pieces_d_.size()) return 1.0;
  const ChebPieceD& p = pieces_d_[idx];
  if (u > p.hi) return 1.0;
  return cheb_eval(p, u);
}

namespace {
std::mutex g_sigma_mutex;
std::map<std::pair<int, int>, std::shared_ptr<const SigmaFunction>>
    g_sigma_cache;
}  // namespace

std::shared_ptr<const SigmaFunction> shared_sigma(SieveDimension g,
                                                  double u_cap) {
  // Bucket the cap so repeated requests share one instance.
  int cap_bucket = 64;
  while (cap_bucket < u_cap) cap_bucket *= 2;
  std::lock_guard<std::mutex> lock(g_sigma_mutex);
  auto key = std::make_pair(g.value(), cap_bucket);
  auto it = g_sigma_cache.find(key);
  if (it != g_sigma_cache.end()) return it->second;
  auto ptr = std::make_shared<const SigmaFunction>(g, cap_bucket);
  g_sigma_cache[key] = ptr;
  return ptr;
}

double sigma(SieveDimension g, double u) {
  if (u <= 0) throw domain_error("sigma: u must be positive");
  return (*shared_sigma(g, u))(u);
}

}  // namespace polysieve
