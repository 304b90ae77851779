#include "secretary/lambert_w.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace secretary {

namespace {

constexpr double kBranchPoint = -1.0 / std::numbers::e;

double halley(double x, double w) {
  for (int iter = 0; iter < 100; ++iter) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    const double wp1 = w + 1.0;
    if (wp1 == 0.0) break;
    const double step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
    const double next = w - step;
    if (!std::isfinite(next)) break;
    if (std::abs(next - w) <= 4.0 * std::numeric_limits<double>::epsilon() *
                                  (1.0 + std::abs(next))) {
      return next;
    }
    w = next;
  }
  return w;
}

}  // namespace

double lambert_w(int branch, double x) {
  if (std::isnan(x)) throw std::domain_error("lambert_w of NaN");
  // Allow rounding of -1/e itself.
  const double slack = 4.0 * std::numeric_limits<double>::epsilon();
  if (x < kBranchPoint - slack) throw std::domain_error("lambert_w needs x >= -1/e");
  if (branch == 0) {
    if (x == 0.0) return 0.0;
    if (std::isinf(x)) return x;
    if (x <= kBranchPoint) return -1.0;
    double w;
    const double p = std::sqrt(2.0 * (std::numbers::e * x + 1.0));
    if (x < 0.25) {
      w = -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p;
    } else if (x < 3.0) {
      w = std::log1p(x) * 0.75;
    } else {
      const double l1 = std::log(x);
      const double l2 = std::log(l1);
      w = l1 - l2 + l2 / l1;
    }
    return halley(x, w);
  }
  if (branch == -1) {
    if (!(x < 0.0)) throw std::domain_error("lambert_w branch -1 needs x < 0");
    if (x <= kBranchPoint) return -1.0;
    double w;
    if (x < -0.25) {
      const double p = -std::sqrt(2.0 * (std::numbers::e * x + 1.0));
      w = -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p;
    } else {
      const double l1 = std::log(-x);
      const double l2 = std::log(-l1);
      w = l1 - l2 + l2 / l1;
    }
    return halley(x, w);
  }
  throw std::domain_error("lambert_w supports branches 0 and -1");
}

}  // namespace secretary
