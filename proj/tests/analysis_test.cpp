#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "secretary/analysis.hpp"
#include "secretary/lambert_w.hpp"
#include "secretary/quadrature.hpp"
#include "secretary/rng.hpp"

namespace secretary {
namespace {

constexpr double kE = std::numbers::e;

double tau_log(double tau) { return tau * std::log(1.0 / tau); }

TEST(Integrate, Polynomials) {
  EXPECT_NEAR(integrate([](double x) { return x * x; }, 0.0, 3.0), 9.0, 1e-12);
  EXPECT_NEAR(integrate([](double x) { return std::pow(x, 19); }, 0.0, 1.0), 0.05, 1e-12);
}

TEST(Integrate, SmoothFunctions) {
  EXPECT_NEAR(integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi), 2.0, 1e-10);
  EXPECT_NEAR(integrate([](double x) { return 1.0 / x; }, 0.01, 1.0), std::log(100.0), 1e-10);
  EXPECT_NEAR(integrate([](double x) { return std::sqrt(x); }, 0.0, 1.0), 2.0 / 3.0, 1e-9);
}

TEST(Integrate, EmptyAndReversed) {
  EXPECT_EQ(integrate([](double) { return 1.0; }, 0.5, 0.5), 0.0);
  EXPECT_NEAR(integrate([](double) { return 1.0; }, 1.0, 0.0), -1.0, 1e-14);
}

TEST(LambertW, SpecialValues) {
  EXPECT_EQ(lambert_w(0, 0.0), 0.0);
  EXPECT_NEAR(lambert_w(0, kE), 1.0, 1e-14);
  EXPECT_NEAR(lambert_w(-1, -1.0 / kE), -1.0, 1e-7);
  EXPECT_NEAR(lambert_w(0, -1.0 / kE), -1.0, 1e-7);
  EXPECT_NEAR(lambert_w(0, 1.0), 0.5671432904097838, 1e-15);
  EXPECT_NEAR(lambert_w(-1, -0.1), -3.577152063957297, 1e-13);
}

TEST(LambertW, DomainErrors) {
  EXPECT_THROW(lambert_w(0, -1.0), std::domain_error);
  EXPECT_THROW(lambert_w(-1, 0.0), std::domain_error);
  EXPECT_THROW(lambert_w(-1, 0.5), std::domain_error);
  EXPECT_THROW(lambert_w(1, 0.5), std::domain_error);
}

TEST(LambertW, Residuals) {
  Rng rng(21);
  for (int i = 0; i < 1000; ++i) {
    const double x0 = -1.0 / kE + rng.uniform() * (10.0 + 1.0 / kE);
    const double w0 = lambert_w(0, x0);
    EXPECT_LE(std::abs(w0 * std::exp(w0) - x0), 1e-12) << x0;
    EXPECT_GE(w0, -1.0);
    const double x1 = -1.0 / kE * (1.0 - rng.uniform());
    if (x1 >= 0.0) continue;
    const double w1 = lambert_w(-1, x1);
    EXPECT_LE(std::abs(w1 * std::exp(w1) - x1), 1e-12) << x1;
    EXPECT_LE(w1, -1.0);
  }
}

TEST(Integrals, MatchAlternatingSums) {
  for (double tau : {0.1, 0.313, 0.7}) {
    for (int m = 1; m <= 15; ++m) {
      EXPECT_NEAR(j_integral(tau, m), oracle::j_closed(tau, m), 1e-9) << tau << " " << m;
      EXPECT_NEAR(k_integral(tau, m), oracle::k_closed(tau, m), 1e-9) << tau << " " << m;
    }
  }
}

TEST(Integrals, LowOrderForms) {
  EXPECT_NEAR(j_integral(0.313, 1), 0.313 * (1 - 0.313), 1e-12);
  EXPECT_THROW(k_integral(0.4, 0), std::invalid_argument);
  EXPECT_NEAR(k_integral(0.4, 1), std::log(1 / 0.4) - 0.6, 1e-12);
}

TEST(CaseBound, Examples) {
  const double tau = 0.313;
  EXPECT_NEAR(case_bound(CaseId::kI, {tau, 0.646, 1}), 0.3634, 1e-3);
  EXPECT_NEAR(case_bound(CaseId::kI, {tau, 0.646, 1}), tau_log(tau), 1e-12);
  EXPECT_NEAR(case_bound(CaseId::kIII, {tau, 0.646, 7}), tau_log(tau), 1e-12);
  EXPECT_NEAR(case_bound(CaseId::kIV, {tau, 0.646, 1}), 0.215031, 1e-6);
  EXPECT_NEAR(case_bound(CaseId::kII, {tau, 0.646, 1}), 0.715031, 1e-6);
  EXPECT_GE(case_bound(CaseId::kI, {tau, 0.646, 1}), 0.363);
}

TEST(CaseBound, ClosedFormsAtSmallM) {
  const double tau = 0.313, theta = 0.646;
  for (int m = 1; m <= 10; ++m) {
    const double a = std::pow(1 - tau, m + 1) / (m + 1) + tau_log(tau) - tau * oracle::k_closed(tau, m) -
                     (1 - tau) / m * (1 - std::pow(1 - tau, m));
    EXPECT_NEAR(case_bound(CaseId::kV, {tau, theta, m}), a, 1e-9);
    const double b = (1 - theta) / (1 + theta) / (m + 1) + oracle::j_closed(tau, m + 1) -
                     (1 - tau) / (m + 1) * (1 - std::pow(1 - tau, m + 1));
    EXPECT_NEAR(case_bound(CaseId::kVI, {tau, theta, m}), b, 1e-9);
  }
}

TEST(CaseBound, CaseTwoMinusCaseFour) {
  for (double tau : {0.05, 0.313, 0.9}) {
    for (int m = 1; m <= 50; m += 7) {
      EXPECT_NEAR(case_bound(CaseId::kII, {tau, 0.5, m}) - case_bound(CaseId::kIV, {tau, 0.5, m}),
                  1.0 / (m + 1), 1e-14);
    }
  }
}

TEST(CaseBound, CaseFourMonotoneAndLimit) {
  const double tau = 0.313;
  double last = 0.0;
  for (int m = 1; m <= 50; ++m) {
    const double v = case_bound(CaseId::kIV, {tau, 0.646, m});
    EXPECT_GE(v, last - 1e-15);
    last = v;
  }
  EXPECT_NEAR(case_bound(CaseId::kIV, {tau, 0.646, 500}), tau_log(tau), 1e-3);
}

TEST(CaseBound, RejectsBadInput) {
  EXPECT_THROW(case_bound(CaseId::kI, {0.0, 0.5, 1}), std::invalid_argument);
  EXPECT_THROW(case_bound(CaseId::kI, {1.0, 0.5, 1}), std::invalid_argument);
  EXPECT_THROW(case_bound(CaseId::kIV, {0.3, 0.5, 0}), std::invalid_argument);
  EXPECT_EQ(to_string(CaseId::kVI), "vi");
}

TEST(OverallLowerBound, Examples) {
  const double v = overall_lower_bound(0.646, 0.313, 50);
  EXPECT_GE(v, 0.215);
  EXPECT_LE(v, 0.216);
  EXPECT_NEAR(v, 0.313 * (1 - 0.313), 1e-9);
  EXPECT_LT(overall_lower_bound(0.0, 0.313, 1), 0.5);
}

TEST(OverallLowerBound, MonotoneInMMax) {
  for (double theta : {0.3, 0.646, 0.9}) {
    double last = 1.0;
    for (int m = 1; m <= 30; ++m) {
      const double v = overall_lower_bound(theta, 0.3, m);
      EXPECT_LE(v, last);
      last = v;
    }
  }
}

TEST(GridSearch, FindsKnownOptimum) {
  const GridOptimum best = grid_search({0.5, 0.8}, {0.2, 0.45}, 0.001, 50);
  EXPECT_GE(best.bound, 0.215);
  EXPECT_LE(best.bound, 0.22);
  EXPECT_NEAR(best.theta, 0.646, 0.005);
  EXPECT_NEAR(best.tau, 0.313, 0.005);
  EXPECT_EQ(best.bound, overall_lower_bound(best.theta, best.tau, 50));
}

TEST(GridSearch, SinglePoint) {
  const GridOptimum best = grid_search({0.6, 0.6}, {0.3, 0.3}, 0.01, 20);
  EXPECT_EQ(best.theta, 0.6);
  EXPECT_EQ(best.tau, 0.3);
  EXPECT_EQ(best.bound, overall_lower_bound(0.6, 0.3, 20));
}

TEST(GridSearch, CoarserStepNeverBetter) {
  const double fine = grid_search({0.5, 0.8}, {0.2, 0.45}, 0.005, 20).bound;
  const double coarse = grid_search({0.5, 0.8}, {0.2, 0.45}, 0.05, 20).bound;
  EXPECT_LE(coarse, fine);
}

TEST(GridPoints, Inclusive) {
  const auto p = grid_points({0.0, 1.0}, 0.1);
  ASSERT_EQ(p.size(), 11u);
  EXPECT_NEAR(p.back(), 1.0, 1e-12);
}

TEST(Agkk, Examples) {
  EXPECT_EQ(agkk_f(1.0), 0.0);
  EXPECT_NEAR(agkk_ratio(1.0, 0.3, 0.5), 1.0 / kE, 1e-15);
  EXPECT_NEAR(agkk_ratio(1.0 / (0.215 * kE), 0.2, 0.2), 0.215, 1e-12);
  EXPECT_THROW(agkk_f(0.5), std::domain_error);
  for (double c : {1.5, 2.0, 3.0}) {
    EXPECT_NEAR(agkk_ratio(c, 0.2, 0.0), std::max(1 / (c * kE), 0.8 * agkk_f(c)), 1e-15);
    EXPECT_EQ(agkk_ratio(c, 0.0, 0.0), 1 / (c * kE));
    EXPECT_LT(agkk_f(c), 1.0);
  }
}

TEST(Agkk, CurvesBelowSlopeEnvelope) {
  const auto rows = comparison_curves({1.5, 3.0}, {0.0, 0.2}, grid_points({0.0, 1.0}, 0.05));
  for (const auto& r : rows) {
    if (r.epsilon >= r.lambda) {
      EXPECT_EQ(r.agkk, 1 / (r.c * kE));
    } else {
      EXPECT_LE(r.agkk, std::max(1 / (r.c * kE), 1 - (r.lambda + r.epsilon)));
    }
    EXPECT_EQ(r.learned_dynkin, learned_dynkin_guarantee(r.epsilon));
  }
}

TEST(Guarantees, LearnedDynkin) {
  EXPECT_EQ(learned_dynkin_guarantee(0.0), 1.0);
  EXPECT_NEAR(learned_dynkin_guarantee(0.646), 0.354 / 1.646, 1e-12);
  EXPECT_EQ(learned_dynkin_guarantee(1.0), 0.215);
  double last = 1.0;
  for (double e = 0.0; e <= 2.0; e += 0.01) {
    EXPECT_LE(learned_dynkin_guarantee(e), last);
    last = learned_dynkin_guarantee(e);
    if (e >= (1 - 0.215) / (1 + 0.215)) {
      EXPECT_EQ(last, 0.215);
    }
  }
}

TEST(Guarantees, LearnedKleinberg) {
  EXPECT_EQ(learned_kleinberg_guarantee(7, 0.0), 1.0);
  EXPECT_NEAR(learned_kleinberg_guarantee(1000000, 1.0), 1 - 21 * std::log(1e6) / 1000, 1e-12);
  const int k = static_cast<int>(std::round(kE * kE));
  EXPECT_LT(learned_kleinberg_guarantee(k, 10.0), 0.0);
  EXPECT_EQ(learned_kleinberg_guarantee_floored(k, 10.0), 0.0);
  EXPECT_EQ(learned_kleinberg_theta(1), 0.0);
  EXPECT_NEAR(learned_kleinberg_theta(100), 5 * std::log(100.0) / 10, 1e-15);
}

TEST(ReciprocalBinomial, Examples) {
  EXPECT_NEAR(reciprocal_binomial_mean(0, 0.37), 1.0, 1e-15);
  EXPECT_NEAR(reciprocal_binomial_mean(1, 0.5), 0.75, 1e-15);
  EXPECT_THROW(reciprocal_binomial_mean(3, 0.0), std::invalid_argument);
  EXPECT_THROW(reciprocal_binomial_mean(-1, 0.5), std::invalid_argument);
}

TEST(ReciprocalBinomial, MatchesEnumeration) {
  for (int n = 0; n <= 20; ++n) {
    for (int i = 1; i <= 9; ++i) {
      const double p = i / 10.0;
      EXPECT_NEAR(reciprocal_binomial_mean(n, p), oracle::reciprocal_binomial_brute(n, p), 1e-12);
    }
  }
}

}  // namespace
}  // namespace secretary
