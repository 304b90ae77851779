#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "secretary/algorithms.hpp"
#include "secretary/core.hpp"
#include "secretary/generators.hpp"

namespace secretary {

struct RatioEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::int64_t trials = 0;
};

/// Pairwise (cascade) summation.
double pairwise_sum(std::span<const double> values);

/// Mean and standard error (sample std / sqrt(count)) of the samples.
RatioEstimate summarize(std::span<const double> samples);

/// Seed of the schedule used by trial `trial` under base seed `seed`.
std::uint64_t trial_seed(std::uint64_t seed, std::int64_t trial);

/// Mean per-run ratio over `trials` random schedules.
RatioEstimate estimate_ratio(const Instance& instance, const AlgorithmSpec& spec,
                             std::int64_t trials, std::uint64_t seed);
RatioEstimate estimate_ratio(const OnlineAlgorithm& algorithm, int n,
                             std::int64_t trials, std::uint64_t seed);

struct GridCell {
  GeneratorKind generator = GeneratorKind::kUniform;
  int k = 1;
  double epsilon = 0.0;
};

struct ExperimentConfig {
  std::vector<GeneratorKind> generators;
  std::vector<double> epsilons;
  std::vector<int> ks;
  int n = 100;
  int datasets = 100;
  int trials = 100;
  std::vector<AlgorithmSpec> algorithms;
  std::uint64_t master_seed = 0;
  int jobs = 1;
};

/// n = 100, three generators, eps in {0, 0.1, ..., 1}, k in {1, 10, 50},
/// 100 datasets x 100 trials, the benchmark algorithm line-up.
ExperimentConfig default_config();

/// Throws std::invalid_argument on empty grids or counts below 1.
void validate(const ExperimentConfig& config);

struct SkippedCell {
  GridCell cell;
  std::string reason;
};

struct CellPlan {
  std::vector<GridCell> cells;
  std::vector<SkippedCell> skipped;
};

/// Enumerates generators x k x epsilon in config order, setting aside cells
/// whose generator preconditions fail.
CellPlan plan_cells(const ExperimentConfig& config);

/// Seed for dataset `dataset` of a cell. Depends on the cell's contents, not
/// its position in the grid.
std::uint64_t dataset_seed(std::uint64_t master_seed, const GridCell& cell,
                           int dataset);

struct DatasetResult {
  int dataset = 0;
  double epsilon_global = 0.0;
  /// One estimate per algorithm applicable to the cell, in config order.
  std::vector<RatioEstimate> estimates;
};

struct CellResult {
  GridCell cell;
  std::vector<AlgorithmSpec> algorithms;  // those applicable to cell.k
  std::vector<DatasetResult> datasets;
};

/// Runs every applicable algorithm on every dataset of one cell. All
/// algorithms see the same schedules within a dataset.
CellResult evaluate_cell(const ExperimentConfig& config, const GridCell& cell);

struct SweepRow {
  GeneratorKind generator = GeneratorKind::kUniform;
  int k = 1;
  double epsilon = 0.0;
  std::string algorithm;
  std::string params;
  int datasets = 0;
  int trials = 0;
  double mean_ratio = 0.0;
  double std_error = 0.0;  // across dataset means
};

std::vector<SweepRow> aggregate(const CellResult& result, int trials);
std::vector<SweepRow> sweep(const ExperimentConfig& config);

/// generator,k,epsilon,algorithm,params,datasets,trials,mean_ratio,std_error
std::string sweep_csv_header();
std::string to_csv(const std::vector<SweepRow>& rows);

/// Average of f over all n! arrival orders (n <= 10).
double average_over_orders(
    int n, const std::function<double(std::span<const CandidateId>)>& f);

/// Exact expected ratio for n <= 8: enumerates every arrival order and, per
/// order, every assignment of arrivals to the intervals between the
/// algorithm's time breakpoints, weighting each by its probability under
/// i.i.d. uniform arrival times.
double exact_ratio_small(const Instance& instance, const AlgorithmSpec& spec);
double exact_ratio_small(const Instance& instance, const OnlineAlgorithm& algorithm);

}  // namespace secretary
