#pragma once

#include <functional>

namespace secretary {

/// Adaptive composite Gauss-Legendre quadrature of f over [a, b] to the given
/// absolute tolerance. Intervals are bisected until a 10-point rule on the
/// whole interval agrees with the sum over its halves.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol = 1e-10);

}  // namespace secretary
