#pragma once

namespace secretary {

/// Real branches of the Lambert W function, the inverse of w * exp(w).
/// Branch 0 is defined for x >= -1/e, branch -1 for -1/e <= x < 0.
/// Throws std::domain_error outside those ranges or for other branches.
double lambert_w(int branch, double x);

}  // namespace secretary
