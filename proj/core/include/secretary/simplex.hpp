#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

namespace secretary {

/// Dense row-major matrix.
struct DenseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  DenseMatrix() = default;
  DenseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}
  double& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded, kIterationLimit };

std::string_view to_string(LpStatus status);

struct SimplexResult {
  LpStatus status = LpStatus::kOptimal;
  double objective = 0.0;
  std::vector<double> x;
  std::size_t iterations = 0;
};

struct SimplexOptions {
  double tolerance = 1e-11;
  std::size_t max_iterations = 1'000'000;
};

/// maximize c'x subject to A x <= b, x >= 0, by the two-phase tableau method.
/// Entering columns follow Dantzig's rule and fall back to Bland's rule after
/// a run of degenerate pivots.
SimplexResult simplex_maximize(const DenseMatrix& a, const std::vector<double>& b,
                               const std::vector<double>& c,
                               const SimplexOptions& options = {});

}  // namespace secretary
