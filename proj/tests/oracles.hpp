#pragma once

#include <cmath>
#include <vector>

// Independent reference computations shared by the tests.
namespace oracle {

inline long double binomial(int n, int k) {
  long double r = 1.0L;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Integral of (1-t)^m / t over [tau, 1] by expanding (1-t)^m.
inline double k_closed(double tau, int m) {
  long double s = -std::log(static_cast<long double>(tau));
  for (int j = 1; j <= m; ++j) {
    const long double sign = (j % 2) ? -1.0L : 1.0L;
    s += sign * binomial(m, j) * (1.0L - std::pow(static_cast<long double>(tau), j)) / j;
  }
  return static_cast<double>(s);
}

/// tau times the integral of (1 - (1-t)^m) / t over [tau, 1].
inline double j_closed(double tau, int m) {
  long double s = 0.0L;
  for (int j = 1; j <= m; ++j) {
    const long double sign = (j % 2) ? 1.0L : -1.0L;
    s += sign * binomial(m, j) * (1.0L - std::pow(static_cast<long double>(tau), j)) / j;
  }
  return static_cast<double>(tau * s);
}

/// Success probability of the cutoff rule with n candidates and i.i.d.
/// uniform arrival times: the best arrives at s > tau, and either nobody else
/// arrives before s or the best of the earlier arrivals came before tau.
inline double cutoff_success(int n, double tau) {
  return std::pow(1.0 - tau, n) / n - tau * std::log(tau) - tau * k_closed(tau, n - 1);
}

/// E[1 / (X + 1)] for X ~ Binomial(n, p), summed term by term.
inline double reciprocal_binomial_brute(int n, double p) {
  long double s = 0.0L;
  for (int x = 0; x <= n; ++x) {
    s += binomial(n, x) * std::pow(static_cast<long double>(p), x) *
         std::pow(1.0L - p, n - x) / (x + 1);
  }
  return static_cast<double>(s);
}

}  // namespace oracle
