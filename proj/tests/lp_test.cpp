#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <limits>

#include "secretary/lp_text.hpp"
#include "secretary/rng.hpp"
#include "secretary/simplex.hpp"

namespace secretary {
namespace {

DenseMatrix matrix(std::vector<std::vector<double>> rows) {
  DenseMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

// Solves the square system by Gaussian elimination; false when singular.
bool solve_square(std::vector<std::vector<double>> a, std::vector<double> b, std::vector<double>& x) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    }
    if (std::abs(a[piv][col]) < 1e-12) return false;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  x.resize(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return true;
}

// Best vertex of {Ax <= b, x >= 0}, or NaN when no vertex is feasible.
double vertex_max(const DenseMatrix& a, const std::vector<double>& b, const std::vector<double>& c) {
  const std::size_t n = a.cols, m = a.rows, total = m + n;
  double best = std::numeric_limits<double>::quiet_NaN();
  for (std::uint32_t mask = 0; mask < (1u << total); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != n) continue;
    std::vector<std::vector<double>> rows;
    std::vector<double> rhs;
    for (std::size_t i = 0; i < total; ++i) {
      if (!(mask >> i & 1u)) continue;
      std::vector<double> row(n, 0.0);
      if (i < m) {
        for (std::size_t j = 0; j < n; ++j) row[j] = a(i, j);
        rhs.push_back(b[i]);
      } else {
        row[i - m] = 1.0;
        rhs.push_back(0.0);
      }
      rows.push_back(row);
    }
    std::vector<double> x;
    if (!solve_square(rows, rhs, x)) continue;
    bool feasible = true;
    for (std::size_t j = 0; j < n && feasible; ++j) feasible = x[j] >= -1e-9;
    for (std::size_t i = 0; i < m && feasible; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < n; ++j) s += a(i, j) * x[j];
      feasible = s <= b[i] + 1e-9;
    }
    if (!feasible) continue;
    double obj = 0.0;
    for (std::size_t j = 0; j < n; ++j) obj += c[j] * x[j];
    if (std::isnan(best) || obj > best) best = obj;
  }
  return best;
}

TEST(Simplex, TextbookProblem) {
  // max 3x + 5y s.t. x <= 4, 2y <= 12, 3x + 2y <= 18 -> 36 at (2, 6).
  const SimplexResult r = simplex_maximize(matrix({{1, 0}, {0, 2}, {3, 2}}), {4, 12, 18}, {3, 5});
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_NEAR(r.objective, 36.0, 1e-12);
  EXPECT_NEAR(r.x[0], 2.0, 1e-12);
  EXPECT_NEAR(r.x[1], 6.0, 1e-12);
}

TEST(Simplex, NegativeRightHandSide) {
  // x + y >= 2 written as -x - y <= -2; max -x - 2y -> -2 at (2, 0).
  const SimplexResult r = simplex_maximize(matrix({{-1, -1}, {1, 0}}), {-2, 5}, {-1, -2});
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_NEAR(r.objective, -2.0, 1e-12);
}

TEST(Simplex, Infeasible) {
  const SimplexResult r = simplex_maximize(matrix({{1, 1}, {-1, -1}}), {1, -2}, {1, 1});
  EXPECT_EQ(r.status, LpStatus::kInfeasible);
  EXPECT_EQ(to_string(r.status), "infeasible");
}

TEST(Simplex, Unbounded) {
  const SimplexResult r = simplex_maximize(matrix({{1, -1}}), {1}, {1, 1});
  EXPECT_EQ(r.status, LpStatus::kUnbounded);
}

TEST(Simplex, DegenerateProblemTerminates) {
  // Beale's cycling example.
  const SimplexResult r = simplex_maximize(
      matrix({{0.25, -60, -1.0 / 25, 9}, {0.5, -90, -1.0 / 50, 3}, {0, 0, 1, 0}}), {0, 0, 1},
      {0.75, -150, 1.0 / 50, -6});
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_NEAR(r.objective, 0.05, 1e-12);
}

TEST(Simplex, MatchesVertexEnumeration) {
  Rng rng(31);
  int compared = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + rng.below(2), m = 2 + rng.below(3);
    DenseMatrix a(m, n);
    std::vector<double> b(m), c(n);
    for (auto& v : a.data) v = std::round(rng.uniform(-3, 6));
    for (auto& v : b) v = std::round(rng.uniform(-2, 10));
    for (auto& v : c) v = std::round(rng.uniform(-2, 5));
    // Cap every variable so the problem is bounded.
    DenseMatrix capped(m + n, n);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) capped(i, j) = a(i, j);
    }
    for (std::size_t j = 0; j < n; ++j) capped(m + j, j) = 1.0;
    b.resize(m + n, 20.0);
    const SimplexResult r = simplex_maximize(capped, b, c);
    const double oracle = vertex_max(capped, b, c);
    if (std::isnan(oracle)) {
      EXPECT_EQ(r.status, LpStatus::kInfeasible);
    } else {
      ASSERT_EQ(r.status, LpStatus::kOptimal);
      EXPECT_NEAR(r.objective, oracle, 1e-8);
      ++compared;
    }
  }
  EXPECT_GT(compared, 100);
}

LpProblem sample_problem() {
  LpProblem p;
  p.comment = "sample";
  p.objective = {{"z", Rational(1)}};
  p.rows.push_back({"r1", {{"x_1", Rational(24)}, {"x_2e", Rational(-3, 2)}}, Sense::kLessEqual, Rational(6)});
  p.rows.push_back({"r2", {{"x_1", Rational(1)}, {"z", Rational(-1)}}, Sense::kGreaterEqual, Rational(0)});
  p.rows.push_back({"r3", {{"x_2e", Rational(1)}}, Sense::kEqual, Rational(1, 3)});
  p.free_variables = {"z"};
  return p;
}

TEST(LpText, WritesSections) {
  const std::string text = write_lp(sample_problem());
  EXPECT_NE(text.find("\\ sample"), std::string::npos);
  EXPECT_NE(text.find("Maximize"), std::string::npos);
  EXPECT_NE(text.find("Subject To"), std::string::npos);
  EXPECT_NE(text.find("r1: 24 x_1 - 3/2 x_2e <= 6"), std::string::npos);
  EXPECT_NE(text.find("r3: x_2e = 1/3"), std::string::npos);
  EXPECT_NE(text.find("Bounds"), std::string::npos);
  EXPECT_NE(text.find("z free"), std::string::npos);
  EXPECT_EQ(text.substr(text.size() - 4), "End\n");
}

TEST(LpText, RoundTrip) {
  const LpProblem p = sample_problem();
  EXPECT_EQ(parse_lp(write_lp(p)), p);
  const auto path = std::filesystem::temp_directory_path() / "secretary_lp_test.lp";
  save_lp(p, path);
  EXPECT_EQ(load_lp(path), p);
  std::filesystem::remove(path);
}

TEST(LpText, LongRowsWrap) {
  LpProblem p;
  LpRow row{"long", {}, Sense::kLessEqual, Rational(1)};
  for (int i = 0; i < 60; ++i) row.terms.push_back({"x_" + std::to_string(i), Rational(i + 1)});
  p.rows.push_back(row);
  const std::string text = write_lp(p);
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t end = text.find('\n', start);
    EXPECT_LE(end - start, 80u);
    start = end + 1;
  }
  EXPECT_EQ(parse_lp(text), p);
}

TEST(LpText, AcceptsDecimalsAndRejectsGarbage) {
  const LpProblem p = parse_lp("Maximize\n obj: 2.5 x\nSubject To\n c: x <= 4\nEnd\n");
  ASSERT_EQ(p.objective.size(), 1u);
  EXPECT_EQ(p.objective[0].coefficient, Rational(5, 2));
  EXPECT_THROW(parse_lp("Maximize\n obj: x\nSubject To\n c: x <=\nEnd\n"), std::invalid_argument);
  EXPECT_THROW(parse_lp("Subject To\n c: x ?? 4\nEnd\n"), std::invalid_argument);
}

TEST(LpSolution, RoundTrip) {
  const LpSolutionValues v{{"x_1", 0.125}, {"z", 1.0 / 3.0}};
  EXPECT_EQ(parse_solution(write_solution(v)), v);
  const LpSolutionValues parsed = parse_solution("# comment\n\\ other\nx_1 0.5\n\nz 2\n");
  EXPECT_EQ(parsed.at("x_1"), 0.5);
  EXPECT_EQ(parsed.at("z"), 2.0);
  EXPECT_THROW(parse_solution("x_1 abc\n"), std::invalid_argument);
}

}  // namespace
}  // namespace secretary
