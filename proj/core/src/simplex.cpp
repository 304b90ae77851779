#include "secretary/simplex.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace secretary {

namespace {

constexpr std::size_t kDegenerateRunLimit = 50;

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), t_((rows + 1) * (cols + 1), 0.0), basis_(rows) {}

  double& at(std::size_t r, std::size_t c) { return t_[r * (cols_ + 1) + c]; }
  double at(std::size_t r, std::size_t c) const { return t_[r * (cols_ + 1) + c]; }
  double& rhs(std::size_t r) { return at(r, cols_); }
  // Row rows_ holds the objective's reduced costs.
  double& obj(std::size_t c) { return at(rows_, c); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::vector<std::size_t>& basis() { return basis_; }

  void pivot(std::size_t pr, std::size_t pc) {
    const std::size_t width = cols_ + 1;
    double* prow = &t_[pr * width];
    const double inv = 1.0 / prow[pc];
    for (std::size_t c = 0; c < width; ++c) prow[c] *= inv;
    prow[pc] = 1.0;
    for (std::size_t r = 0; r <= rows_; ++r) {
      if (r == pr) continue;
      double* row = &t_[r * width];
      const double f = row[pc];
      if (f == 0.0) continue;
      for (std::size_t c = 0; c < width; ++c) row[c] -= f * prow[c];
      row[pc] = 0.0;
    }
    basis_[pr] = pc;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> t_;
  std::vector<std::size_t> basis_;
};

// Runs primal simplex on the tableau's objective row over columns [0, usable).
LpStatus optimize(Tableau& t, std::size_t usable, const SimplexOptions& options,
                  std::size_t& iterations) {
  bool bland = false;
  std::size_t degenerate_run = 0;
  for (;;) {
    if (iterations >= options.max_iterations) return LpStatus::kIterationLimit;
    std::size_t enter = usable;
    double most_negative = -options.tolerance;
    for (std::size_t c = 0; c < usable; ++c) {
      const double rc = t.obj(c);
      if (rc < most_negative) {
        enter = c;
        if (bland) break;
        most_negative = rc;
      }
    }
    if (enter == usable) return LpStatus::kOptimal;

    std::size_t leave = t.rows();
    double best_ratio = std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < t.rows(); ++r) {
      const double a = t.at(r, enter);
      if (a <= options.tolerance) continue;
      const double ratio = std::max(t.rhs(r), 0.0) / a;
      if (ratio < best_ratio - options.tolerance ||
          (ratio <= best_ratio + options.tolerance && leave < t.rows() &&
           t.basis()[r] < t.basis()[leave])) {
        best_ratio = std::min(ratio, best_ratio);
        leave = r;
      }
    }
    if (leave == t.rows()) return LpStatus::kUnbounded;

    if (best_ratio <= options.tolerance) {
      if (++degenerate_run > kDegenerateRunLimit) bland = true;
    } else {
      degenerate_run = 0;
    }
    t.pivot(leave, enter);
    ++iterations;
  }
}

}  // namespace

std::string_view to_string(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal: return "optimal";
    case LpStatus::kInfeasible: return "infeasible";
    case LpStatus::kUnbounded: return "unbounded";
    case LpStatus::kIterationLimit: return "iteration-limit";
  }
  return "optimal";
}

SimplexResult simplex_maximize(const DenseMatrix& a, const std::vector<double>& b,
                               const std::vector<double>& c,
                               const SimplexOptions& options) {
  const std::size_t m = a.rows;
  const std::size_t n = a.cols;
  if (b.size() != m || c.size() != n) {
    throw std::invalid_argument("simplex: dimension mismatch");
  }

  std::vector<std::size_t> artificial_rows;
  for (std::size_t r = 0; r < m; ++r) {
    if (b[r] < 0.0) artificial_rows.push_back(r);
  }
  const std::size_t slack0 = n;
  const std::size_t art0 = n + m;
  Tableau t(m, n + m + artificial_rows.size());

  std::size_t next_art = art0;
  for (std::size_t r = 0; r < m; ++r) {
    const double sign = b[r] < 0.0 ? -1.0 : 1.0;
    for (std::size_t j = 0; j < n; ++j) t.at(r, j) = sign * a(r, j);
    t.at(r, slack0 + r) = sign;
    t.rhs(r) = sign * b[r];
    if (sign < 0.0) {
      t.at(r, next_art) = 1.0;
      t.basis()[r] = next_art++;
    } else {
      t.basis()[r] = slack0 + r;
    }
  }

  SimplexResult result;
  if (!artificial_rows.empty()) {
    // Phase one: maximize -sum(artificials), expressed in the nonbasic columns.
    for (std::size_t col = art0; col < t.cols(); ++col) t.obj(col) = 1.0;
    for (std::size_t r : artificial_rows) {
      for (std::size_t col = 0; col <= t.cols(); ++col) t.obj(col) -= t.at(r, col);
    }
    const LpStatus s = optimize(t, t.cols(), options, result.iterations);
    if (s == LpStatus::kIterationLimit) {
      result.status = s;
      return result;
    }
    if (-t.obj(t.cols()) > 1e-9 * (1.0 + static_cast<double>(m))) {
      result.status = LpStatus::kInfeasible;
      return result;
    }
    // Drive remaining zero-level artificials out of the basis where possible.
    for (std::size_t r = 0; r < m; ++r) {
      if (t.basis()[r] < art0) continue;
      for (std::size_t col = 0; col < art0; ++col) {
        if (std::abs(t.at(r, col)) > options.tolerance) {
          t.pivot(r, col);
          break;
        }
      }
    }
  }

  for (std::size_t col = 0; col <= t.cols(); ++col) t.obj(col) = 0.0;
  for (std::size_t j = 0; j < n; ++j) t.obj(j) = -c[j];
  for (std::size_t r = 0; r < m; ++r) {
    const std::size_t bc = t.basis()[r];
    if (bc < n && c[bc] != 0.0) {
      const double f = t.obj(bc);
      for (std::size_t col = 0; col <= t.cols(); ++col) t.obj(col) -= f * t.at(r, col);
    }
  }
  result.status = optimize(t, art0, options, result.iterations);
  result.x.assign(n, 0.0);
  for (std::size_t r = 0; r < m; ++r) {
    if (t.basis()[r] < n) result.x[t.basis()[r]] = t.rhs(r);
  }
  result.objective = 0.0;
  for (std::size_t j = 0; j < n; ++j) result.objective += c[j] * result.x[j];
  return result;
}

}  // namespace secretary
