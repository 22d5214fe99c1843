#include "polysieve/polynomial.hpp"

#include <algorithm>
#include <cctype>

#include "polysieve/errors.hpp"

namespace polysieve {

mpz_class Polynomial::eval(const mpz_class& x) const {
  mpz_class acc = 0;
  for (size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
  return acc;
}

std::string Polynomial::to_string(char var) const {
  if (coeffs.empty()) return "0";
  std::string out;
  for (size_t i = coeffs.size(); i-- > 0;) {
    const mpz_class& c = coeffs[i];
    if (c == 0) continue;
    const bool first = out.empty();
    mpz_class a = abs(c);
    if (c < 0)
      out += first ? "-" : " - ";
    else if (!first)
      out += " + ";
    if (i == 0 || a != 1) out += a.get_str();
    if (i > 0) {
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;
  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() const { return i >= s.size(); }
  char peek() const { return s[i]; }
};

[[noreturn]] void fail(const Cursor& c, const std::string& why) {
  throw parse_error("polynomial parse error at position " +
                    std::to_string(c.i) + ": " + why);
}

}  // namespace

Polynomial parse_polynomial(const std::string& text) {
  Cursor c{text};
  std::vector<mpz_class> coeffs;
  char var = 0;
  bool any_term = false;

  auto add_coeff = [&](size_t deg, const mpz_class& value) {
    if (coeffs.size() <= deg) coeffs.resize(deg + 1, mpz_class(0));
    coeffs[deg] += value;
  };

  c.skip_ws();
  while (!c.done()) {
    int sign = 1;
    c.skip_ws();
    if (!c.done() && (c.peek() == '+' || c.peek() == '-')) {
      sign = c.peek() == '-' ? -1 : 1;
      ++c.i;
      c.skip_ws();
    } else if (any_term) {
      fail(c, "expected '+' or '-' between terms");
    }
    if (c.done()) fail(c, "dangling sign");

    mpz_class coef = 1;
    bool saw_digits = false;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      size_t start = c.i;
      while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek())))
        ++c.i;
      coef = mpz_class(text.substr(start, c.i - start));
      saw_digits = true;
      c.skip_ws();
      if (!c.done() && c.peek() == '*') {
        ++c.i;
        c.skip_ws();
      }
    }

    size_t deg = 0;
    if (!c.done() && std::isalpha(static_cast<unsigned char>(c.peek()))) {
      char v = c.peek();
      if (var == 0)
        var = v;
      else if (var != v)
        fail(c, std::string("mixed variables '") + var + "' and '" + v + "'");
      ++c.i;
      c.skip_ws();
      deg = 1;
      if (!c.done() && c.peek() == '^') {
        ++c.i;
        c.skip_ws();
        if (c.done() || !std::isdigit(static_cast<unsigned char>(c.peek())))
          fail(c, "expected exponent digits after '^'");
        size_t start = c.i;
        while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek())))
          ++c.i;
        unsigned long e = std::stoul(text.substr(start, c.i - start));
        if (e > 64) fail(c, "exponent too large");
        deg = e;
      }
    } else if (!saw_digits) {
      fail(c, "expected a coefficient or a variable");
    }

    add_coeff(deg, sign * coef);
    any_term = true;
    c.skip_ws();
  }
  if (!any_term) throw parse_error("empty polynomial");

  while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
  return Polynomial{std::move(coeffs)};
}

std::vector<uint64_t> reduced_coeffs(const Polynomial& p, uint64_t m) {
  std::vector<uint64_t> out(p.coeffs.size());
  mpz_class mz = mpz_class(static_cast<unsigned long>(m));
  for (size_t i = 0; i < p.coeffs.size(); ++i) {
    mpz_class r = p.coeffs[i] % mz;
    if (r < 0) r += mz;
    out[i] = r.get_ui();
  }
  return out;
}

uint64_t eval_mod(const std::vector<uint64_t>& reduced, uint64_t a,
                  uint64_t m) {
  unsigned __int128 acc = 0;
  for (size_t i = reduced.size(); i-- > 0;) {
    acc = (acc * a + reduced[i]) % m;
  }
  return static_cast<uint64_t>(acc);
}

mpz_class PolynomialSystem::eval(const mpz_class& x) const {
  mpz_class prod = 1;
  for (const Polynomial& h : factors) prod *= h.eval(x);
  return prod;
}

std::string PolynomialSystem::to_string(char var) const {
  std::string out;
  for (const Polynomial& h : factors) {
    if (!out.empty()) out += "; ";
    out += h.to_string(var);
  }
  return out;
}

PolynomialSystem parse_polynomial_system(const std::string& text) {
  PolynomialSystem sys;
  size_t start = 0;
  while (start <= text.size()) {
    size_t semi = text.find(';', start);
    std::string part = semi == std::string::npos
                           ? text.substr(start)
                           : text.substr(start, semi - start);
    if (part.find_first_not_of(" \t\r\n") != std::string::npos)
      sys.factors.push_back(parse_polynomial(part));
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  if (sys.factors.empty()) throw parse_error("no polynomial factors given");

  sys.g = static_cast<int>(sys.factors.size());
  sys.k = sys.factors.front().degree();
  for (const Polynomial& h : sys.factors)
    if (h.degree() != sys.k)
      throw parse_error("unequal degrees: all factors must share one degree");
  for (int i = 0; i < sys.g; ++i)
    for (int j = i + 1; j < sys.g; ++j)
      if (sys.factors[i] == sys.factors[j])
        throw parse_error("duplicate factors: " +
                          sys.factors[i].to_string());
  sys.H0 = sys.eval(0);
  return sys;
}

}  // namespace polysieve
