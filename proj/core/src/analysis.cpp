#include "secretary/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "secretary/lambert_w.hpp"
#include "secretary/quadrature.hpp"

namespace secretary {

namespace {

constexpr double kQuadTol = 1e-10;

void check_tau(double tau) {
  if (!(tau > 0.0 && tau < 1.0)) throw std::invalid_argument("tau must lie in (0, 1)");
}

void check_m(int m) {
  if (m < 1) throw std::invalid_argument("m must be >= 1");
}

double tau_log(double tau) { return tau * std::log(1.0 / tau); }

double case_ii(int m, double j) { return 1.0 / (m + 1) + j; }

double case_v(double tau, int m, double k) {
  const double s = 1.0 - tau;
  return std::pow(s, m + 1) / (m + 1) + tau_log(tau) - tau * k -
         (s / m) * (1.0 - std::pow(s, m));
}

// Case vi without its theta term, given J(tau, m + 1).
double case_vi_tail(double tau, int m, double j_next) {
  const double s = 1.0 - tau;
  return j_next - (s / (m + 1)) * (1.0 - std::pow(s, m + 1));
}

double case_vi(double rho, int m, double tail) { return rho / (m + 1) + tail; }

// Everything in overall_lower_bound that depends on tau alone.
struct TauTerms {
  double theta_free = 0.0;        // min over cases i..v
  std::vector<double> vi_tails;   // index m - 1
};

TauTerms tau_terms(double tau, int m_max) {
  TauTerms terms;
  terms.theta_free = tau_log(tau);
  double j = j_integral(tau, 1);
  for (int m = 1; m <= m_max; ++m) {
    const double j_next = j_integral(tau, m + 1);
    terms.theta_free = std::min({terms.theta_free, case_ii(m, j), j,
                                 case_v(tau, m, k_integral(tau, m))});
    terms.vi_tails.push_back(case_vi_tail(tau, m, j_next));
    j = j_next;
  }
  return terms;
}

double evaluate(const TauTerms& terms, double theta) {
  const double rho = trust_ratio(theta);
  double bound = std::min(rho, terms.theta_free);
  for (std::size_t i = 0; i < terms.vi_tails.size(); ++i) {
    bound = std::min(bound, case_vi(rho, static_cast<int>(i) + 1, terms.vi_tails[i]));
  }
  return bound;
}

}  // namespace

std::string_view to_string(CaseId id) {
  switch (id) {
    case CaseId::kI: return "i";
    case CaseId::kII: return "ii";
    case CaseId::kIII: return "iii";
    case CaseId::kIV: return "iv";
    case CaseId::kV: return "v";
    case CaseId::kVI: return "vi";
  }
  return "i";
}

double j_integral(double tau, int m) {
  check_tau(tau);
  check_m(m);
  return integrate(
      [tau, m](double t) { return -std::expm1(m * std::log1p(-t)) * tau / t; }, tau,
      1.0, kQuadTol);
}

double k_integral(double tau, int m) {
  check_tau(tau);
  check_m(m);
  return integrate([m](double t) { return std::pow(1.0 - t, m) / t; }, tau, 1.0,
                   kQuadTol);
}

double trust_ratio(double theta) { return (1.0 - theta) / (1.0 + theta); }

double case_bound(CaseId id, const CaseBoundInput& input) {
  check_tau(input.tau);
  const double tau = input.tau;
  const int m = input.m;
  switch (id) {
    case CaseId::kI:
    case CaseId::kIII:
      return tau_log(tau);
    case CaseId::kII:
      check_m(m);
      return case_ii(m, j_integral(tau, m));
    case CaseId::kIV:
      check_m(m);
      return j_integral(tau, m);
    case CaseId::kV:
      check_m(m);
      return case_v(tau, m, k_integral(tau, m));
    case CaseId::kVI:
      check_m(m);
      return case_vi(trust_ratio(input.theta), m,
                     case_vi_tail(tau, m, j_integral(tau, m + 1)));
  }
  throw std::invalid_argument("unknown case");
}

double overall_lower_bound(double theta, double tau, int m_max) {
  check_tau(tau);
  check_m(m_max);
  return evaluate(tau_terms(tau, m_max), theta);
}

std::vector<double> grid_points(Range range, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("grid step must be > 0");
  if (range.hi < range.lo) throw std::invalid_argument("grid range is empty");
  const auto count = static_cast<long>(std::floor((range.hi - range.lo) / step + 1e-9));
  std::vector<double> points;
  points.reserve(static_cast<std::size_t>(count + 1));
  for (long i = 0; i <= count; ++i) points.push_back(range.lo + static_cast<double>(i) * step);
  return points;
}

GridOptimum grid_search(Range theta, Range tau, double step, int m_max) {
  check_m(m_max);
  const std::vector<double> thetas = grid_points(theta, step);
  const std::vector<double> taus = grid_points(tau, step);
  GridOptimum best{0.0, 0.0, -1.0};
  bool found = false;
  for (double t : taus) {
    const TauTerms terms = tau_terms(t, m_max);
    for (double th : thetas) {
      const double b = evaluate(terms, th);
      const bool better =
          !found || b > best.bound ||
          (b == best.bound && (th > best.theta || (th == best.theta && t < best.tau)));
      if (better) {
        best = {th, t, b};
        found = true;
      }
    }
  }
  return best;
}

double agkk_f(double c) {
  if (!(c >= 1.0)) throw std::domain_error("agkk_f needs c >= 1");
  const double x = -1.0 / (c * std::numbers::e);
  return std::exp(lambert_w(0, x)) - std::exp(lambert_w(-1, x));
}

double agkk_ratio(double c, double lambda, double eta, double vmax) {
  if (!(vmax > 0.0)) throw std::invalid_argument("agkk_ratio needs vmax > 0");
  const double floor_value = 1.0 / (c * std::numbers::e);
  const double f = agkk_f(c);
  if (eta >= lambda) return floor_value;
  return std::max(floor_value, f * std::max(1.0 - (lambda + eta) / vmax, 0.0));
}

double learned_dynkin_guarantee(double epsilon) {
  return std::max(0.215, trust_ratio(epsilon));
}

double learned_kleinberg_guarantee(int k, double epsilon) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const double kd = k;
  return 1.0 - std::min(21.0 * std::log(kd) / std::sqrt(kd), 5.0 * epsilon);
}

double learned_kleinberg_theta(int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const double kd = k;
  return 5.0 * std::log(kd) / std::sqrt(kd);
}

double learned_kleinberg_guarantee_floored(int k, double epsilon) {
  return std::max(0.0, learned_kleinberg_guarantee(k, epsilon));
}

double reciprocal_binomial_mean(int n, double p) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in (0, 1]");
  return -std::expm1((n + 1) * std::log1p(-p)) / ((n + 1) * p);
}

std::vector<ComparisonRow> comparison_curves(const std::vector<double>& c_values,
                                             const std::vector<double>& lambda_values,
                                             const std::vector<double>& epsilon_grid) {
  std::vector<ComparisonRow> rows;
  for (double c : c_values) {
    for (double lambda : lambda_values) {
      for (double eps : epsilon_grid) {
        rows.push_back({c, lambda, eps, agkk_ratio(c, lambda, eps, 1.0),
                        learned_dynkin_guarantee(eps)});
      }
    }
  }
  return rows;
}

}  // namespace secretary
