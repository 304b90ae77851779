#pragma once

#include <string_view>
#include <vector>

namespace secretary {

enum class CaseId { kI, kII, kIII, kIV, kV, kVI };

inline constexpr CaseId kAllCases[] = {CaseId::kI,  CaseId::kII, CaseId::kIII,
                                       CaseId::kIV, CaseId::kV,  CaseId::kVI};

std::string_view to_string(CaseId id);  // "i" .. "vi"

struct CaseBoundInput {
  double tau = 0.313;
  double theta = 0.646;
  int m = 1;  // number of deviating candidates
};

/// J(tau, m) = integral over [tau, 1] of (1 - (1-t)^m) tau / t.
double j_integral(double tau, int m);
/// K(tau, m) = integral over [tau, 1] of (1-t)^m / t.
double k_integral(double tau, int m);

/// (1 - theta) / (1 + theta), the value guaranteed while predictions are trusted.
double trust_ratio(double theta);

/// Lower bound on the success probability of learned Dynkin in one case of
/// the analysis. Throws std::invalid_argument if tau is outside (0, 1) or m < 1.
double case_bound(CaseId id, const CaseBoundInput& input);

/// Minimum of trust_ratio(theta) and every case bound for m = 1..m_max.
double overall_lower_bound(double theta, double tau, int m_max = 50);

struct Range {
  double lo = 0.0;
  double hi = 0.0;
};

struct GridOptimum {
  double theta = 0.0;
  double tau = 0.0;
  double bound = 0.0;
};

/// Maximizes overall_lower_bound over the inclusive grid lo, lo + step, ...
/// on both axes. Ties resolve to the largest theta, then the smallest tau.
GridOptimum grid_search(Range theta, Range tau, double step, int m_max = 50);

/// Grid points lo + i * step up to hi (inclusive, with 1e-9 slack).
std::vector<double> grid_points(Range range, double step);

/// exp(W0(-1/(c e))) - exp(W-1(-1/(c e))), for c >= 1.
double agkk_f(double c);

/// Competitive ratio of the value-prediction algorithm with parameters c and
/// lambda at prediction error eta, with values scaled by vmax.
double agkk_ratio(double c, double lambda, double eta, double vmax = 1.0);

/// max{0.215, (1 - eps) / (1 + eps)}.
double learned_dynkin_guarantee(double epsilon);

/// 1 - min{21 ln k / sqrt(k), 5 eps}, possibly negative.
double learned_kleinberg_guarantee(int k, double epsilon);
/// Switch threshold 5 ln k / sqrt(k) paired with that guarantee.
double learned_kleinberg_theta(int k);
/// learned_kleinberg_guarantee floored at 0.
double learned_kleinberg_guarantee_floored(int k, double epsilon);

/// E[1 / (X + 1)] for X ~ Binomial(n, p), in closed form.
double reciprocal_binomial_mean(int n, double p);

struct ComparisonRow {
  double c = 1.0;
  double lambda = 0.0;
  double epsilon = 0.0;
  double agkk = 0.0;
  double learned_dynkin = 0.0;
};

/// One row per (c, lambda, epsilon), with eta = epsilon and vmax = 1.
std::vector<ComparisonRow> comparison_curves(const std::vector<double>& c_values,
                                             const std::vector<double>& lambda_values,
                                             const std::vector<double>& epsilon_grid);

}  // namespace secretary
