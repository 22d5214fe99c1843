#ifndef POLYSIEVE_QUADRATURE_HPP
#define POLYSIEVE_QUADRATURE_HPP

#include <functional>

namespace polysieve {

// Adaptive Simpson quadrature with absolute tolerance and a recursion depth
// cap of 40.  Integrands here are smooth apart from kinks inherited from the
// sieve functions, which the subdivision localizes.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-9);

}  // namespace polysieve

#endif
