#ifndef POLYSIEVE_ERRORS_HPP
#define POLYSIEVE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace polysieve {

// Bad argument values (non-positive u, modulus out of range, ...).
class domain_error : public std::invalid_argument {
public:
  explicit domain_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// Malformed textual input (polynomial strings, ranges, data files).
class parse_error : public std::invalid_argument {
public:
  explicit parse_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// An iterative solve ran out of budget without meeting its tolerance.
class convergence_error : public std::runtime_error {
public:
  convergence_error(const std::string& msg, double residual_f = 0.0,
                    double residual_g = 0.0)
      : std::runtime_error(msg), residual_F(residual_f), residual_f_(residual_g) {}
  double residual_F;
  double residual_f_;
};

// Parameters violate an ordering/feasibility hypothesis of the method.
class infeasible_error : public std::runtime_error {
public:
  explicit infeasible_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A discretization was too coarse to meet a stated accuracy requirement.
class accuracy_error : public std::runtime_error {
public:
  explicit accuracy_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A factoring attempt exceeded its iteration budget.
class budget_error : public std::runtime_error {
public:
  explicit budget_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace polysieve

#endif
