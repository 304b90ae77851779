#include "secretary/simulate.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "secretary/rng.hpp"

namespace secretary {

namespace {

constexpr std::uint64_t kScheduleStream = 0x5ced;
constexpr std::uint64_t kDatasetStream = 0xda7a;

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Enumerates count vectors c with sum(c) = total over bins.size() bins and
// adds prob(c) * value(c) to the accumulator.
void for_each_composition(std::vector<int>& counts, std::size_t bin, int left,
                          const std::function<void(const std::vector<int>&)>& visit) {
  if (bin + 1 == counts.size()) {
    counts[bin] = left;
    visit(counts);
    return;
  }
  for (int c = 0; c <= left; ++c) {
    counts[bin] = c;
    for_each_composition(counts, bin + 1, left - c, visit);
  }
}

// Expected ratio for one arrival order, integrating over arrival times.
double expected_for_order(const OnlineAlgorithm& algorithm,
                          std::span<const CandidateId> order) {
  const TimeDependence dep = algorithm.time_dependence(order);
  const std::size_t n = order.size();

  std::vector<double> edges{0.0};
  for (double b : dep.breakpoints) {
    if (b > edges.back() && b < 1.0) edges.push_back(b);
  }
  edges.push_back(1.0);
  const std::size_t bins = edges.size() - 1;

  // With an anchor, the prefix through the anchor gets fixed times in
  // (0, 0.5] and the free arrivals live in (0.5, 1], rescaled.
  std::size_t first_free = 0;
  double base = 0.0, span = 1.0;
  std::vector<double> times(n);
  if (dep.anchor) {
    const std::size_t a = *dep.anchor;
    for (std::size_t p = 0; p < a; ++p) {
      times[p] = 0.5 * static_cast<double>(p + 1) / static_cast<double>(a + 2);
    }
    times[a] = 0.5;
    first_free = a + 1;
    base = 0.5;
    span = 0.5;
  }
  const int free_count = static_cast<int>(n - first_free);
  if (free_count == 0) {
    return algorithm.run(Schedule(std::vector<CandidateId>(order.begin(), order.end()), times)).ratio;
  }

  const double log_multinomial_head = std::lgamma(free_count + 1.0);
  double total = 0.0;
  std::vector<int> counts(bins, 0);
  for_each_composition(counts, 0, free_count, [&](const std::vector<int>& c) {
    double log_p = log_multinomial_head;
    std::size_t pos = first_free;
    for (std::size_t b = 0; b < bins; ++b) {
      if (c[b] == 0) continue;
      const double width = edges[b + 1] - edges[b];
      log_p += c[b] * std::log(width) - std::lgamma(c[b] + 1.0);
      for (int j = 0; j < c[b]; ++j) {
        const double u = edges[b] + width * (j + 1) / (c[b] + 1);
        times[pos++] = base + span * u;
      }
    }
    const Schedule schedule(std::vector<CandidateId>(order.begin(), order.end()), times);
    total += std::exp(log_p) * algorithm.run(schedule).ratio;
  });
  return total;
}

std::string format_eps(double eps) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", eps);
  return buf;
}

std::string format_ratio(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.8f", x);
  return buf;
}

}  // namespace

double pairwise_sum(std::span<const double> values) {
  if (values.size() <= 8) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.subspan(0, half)) + pairwise_sum(values.subspan(half));
}

RatioEstimate summarize(std::span<const double> samples) {
  RatioEstimate est;
  est.trials = static_cast<std::int64_t>(samples.size());
  if (samples.empty()) return est;
  const double count = static_cast<double>(samples.size());
  est.mean = pairwise_sum(samples) / count;
  if (samples.size() > 1) {
    std::vector<double> sq(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
      const double d = samples[i] - est.mean;
      sq[i] = d * d;
    }
    const double var = pairwise_sum(sq) / (count - 1.0);
    est.std_error = std::sqrt(var / count);
  }
  return est;
}

std::uint64_t trial_seed(std::uint64_t seed, std::int64_t trial) {
  return derive_seed({seed, kScheduleStream, static_cast<std::uint64_t>(trial)});
}

RatioEstimate estimate_ratio(const OnlineAlgorithm& algorithm, int n,
                             std::int64_t trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("estimate_ratio needs trials >= 1");
  std::vector<double> ratios(static_cast<std::size_t>(trials));
  for (std::int64_t t = 0; t < trials; ++t) {
    Rng rng(trial_seed(seed, t));
    ratios[static_cast<std::size_t>(t)] = algorithm.run(random_schedule(n, rng)).ratio;
  }
  return summarize(ratios);
}

RatioEstimate estimate_ratio(const Instance& instance, const AlgorithmSpec& spec,
                             std::int64_t trials, std::uint64_t seed) {
  return estimate_ratio(*prepare(spec, instance), instance.size(), trials, seed);
}

ExperimentConfig default_config() {
  ExperimentConfig config;
  config.generators = {GeneratorKind::kUniform, GeneratorKind::kAdversarial,
                       GeneratorKind::kAlmostConstant};
  for (int i = 0; i <= 10; ++i) config.epsilons.push_back(i / 10.0);
  config.ks = {1, 10, 50};
  config.n = 100;
  config.datasets = 100;
  config.trials = 100;

  const std::vector<double> thetas{0.1, 0.3, 0.5, 0.7, 0.9};
  for (double theta : thetas) {
    AlgorithmSpec s;
    s.kind = AlgorithmKind::kLearnedDynkin;
    s.tau = 0.313;
    s.theta = theta;
    config.algorithms.push_back(s);
  }
  {
    AlgorithmSpec s;
    s.kind = AlgorithmKind::kLearnedDynkin;
    s.tau = 0.313;
    s.theta = 0.646;
    config.algorithms.push_back(s);
  }
  for (double theta : thetas) {
    AlgorithmSpec s;
    s.kind = AlgorithmKind::kLearnedKleinberg;
    s.theta = theta;
    config.algorithms.push_back(s);
  }
  for (AlgorithmKind kind :
       {AlgorithmKind::kDynkin, AlgorithmKind::kKleinberg, AlgorithmKind::kTopK}) {
    AlgorithmSpec s;
    s.kind = kind;
    config.algorithms.push_back(s);
  }
  for (double rel : {0.3, 0.7}) {
    AlgorithmSpec s;
    s.kind = AlgorithmKind::kProphetThreshold;
    s.theta = rel;
    s.theta_relative = true;
    config.algorithms.push_back(s);
  }
  return config;
}

void validate(const ExperimentConfig& config) {
  if (config.generators.empty() || config.epsilons.empty() || config.ks.empty()) {
    throw std::invalid_argument("experiment grid has an empty axis");
  }
  if (config.algorithms.empty()) throw std::invalid_argument("no algorithms configured");
  if (config.n < 1 || config.datasets < 1 || config.trials < 1 || config.jobs < 1) {
    throw std::invalid_argument("n, datasets, trials and jobs must all be >= 1");
  }
  for (const auto& spec : config.algorithms) validate(spec);
}

CellPlan plan_cells(const ExperimentConfig& config) {
  CellPlan plan;
  for (GeneratorKind g : config.generators) {
    for (int k : config.ks) {
      for (double eps : config.epsilons) {
        const GridCell cell{g, k, eps};
        GeneratorSpec spec{g, config.n, k, eps, 0};
        try {
          validate(spec);
          plan.cells.push_back(cell);
        } catch (const std::invalid_argument& e) {
          plan.skipped.push_back({cell, e.what()});
        }
      }
    }
  }
  return plan;
}

std::uint64_t dataset_seed(std::uint64_t master_seed, const GridCell& cell,
                           int dataset) {
  return derive_seed({master_seed, kDatasetStream,
                      static_cast<std::uint64_t>(cell.generator),
                      static_cast<std::uint64_t>(cell.k),
                      std::bit_cast<std::uint64_t>(cell.epsilon),
                      static_cast<std::uint64_t>(dataset)});
}

CellResult evaluate_cell(const ExperimentConfig& config, const GridCell& cell) {
  CellResult result;
  result.cell = cell;
  for (const auto& spec : config.algorithms) {
    if (spec.supports_capacity(cell.k)) result.algorithms.push_back(spec);
  }
  result.datasets.resize(static_cast<std::size_t>(config.datasets));

  auto run_dataset = [&](int d) {
    const std::uint64_t seed = dataset_seed(config.master_seed, cell, d);
    const Instance instance =
        generate(GeneratorSpec{cell.generator, config.n, cell.k, cell.epsilon, seed});
    std::vector<std::unique_ptr<OnlineAlgorithm>> prepared;
    for (const auto& spec : result.algorithms) prepared.push_back(prepare(spec, instance));

    std::vector<std::vector<double>> ratios(
        prepared.size(), std::vector<double>(static_cast<std::size_t>(config.trials)));
    for (int t = 0; t < config.trials; ++t) {
      Rng rng(trial_seed(seed, t));
      const Schedule schedule = random_schedule(config.n, rng);
      for (std::size_t a = 0; a < prepared.size(); ++a) {
        ratios[a][static_cast<std::size_t>(t)] = prepared[a]->run(schedule).ratio;
      }
    }
    DatasetResult& out = result.datasets[static_cast<std::size_t>(d)];
    out.dataset = d;
    out.epsilon_global = epsilon_global(instance);
    for (const auto& r : ratios) out.estimates.push_back(summarize(r));
  };

  const int jobs = std::clamp(config.jobs, 1, config.datasets);
  if (jobs == 1) {
    for (int d = 0; d < config.datasets; ++d) run_dataset(d);
  } else {
    std::vector<std::thread> workers;
    for (int w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        for (int d = w; d < config.datasets; d += jobs) run_dataset(d);
      });
    }
    for (auto& t : workers) t.join();
  }
  return result;
}

std::vector<SweepRow> aggregate(const CellResult& result, int trials) {
  std::vector<SweepRow> rows;
  for (std::size_t a = 0; a < result.algorithms.size(); ++a) {
    std::vector<double> means;
    means.reserve(result.datasets.size());
    for (const auto& d : result.datasets) means.push_back(d.estimates[a].mean);
    RatioEstimate across = summarize(means);
    if (result.datasets.size() == 1) across.std_error = result.datasets[0].estimates[a].std_error;

    SweepRow row;
    row.generator = result.cell.generator;
    row.k = result.cell.k;
    row.epsilon = result.cell.epsilon;
    row.algorithm = result.algorithms[a].name();
    row.params = result.algorithms[a].params();
    row.datasets = static_cast<int>(result.datasets.size());
    row.trials = trials;
    row.mean_ratio = across.mean;
    row.std_error = across.std_error;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<SweepRow> sweep(const ExperimentConfig& config) {
  validate(config);
  std::vector<SweepRow> rows;
  for (const GridCell& cell : plan_cells(config).cells) {
    auto cell_rows = aggregate(evaluate_cell(config, cell), config.trials);
    rows.insert(rows.end(), cell_rows.begin(), cell_rows.end());
  }
  return rows;
}

std::string sweep_csv_header() {
  return "generator,k,epsilon,algorithm,params,datasets,trials,mean_ratio,std_error";
}

std::string to_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << sweep_csv_header() << '\n';
  for (const auto& r : rows) {
    out << to_string(r.generator) << ',' << r.k << ',' << format_eps(r.epsilon) << ','
        << r.algorithm << ',' << r.params << ',' << r.datasets << ',' << r.trials << ','
        << format_ratio(r.mean_ratio) << ',' << format_ratio(r.std_error) << '\n';
  }
  return out.str();
}

double average_over_orders(
    int n, const std::function<double(std::span<const CandidateId>)>& f) {
  if (n < 1 || n > 10) throw std::invalid_argument("average_over_orders needs 1 <= n <= 10");
  std::vector<CandidateId> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 1);
  std::vector<double> values;
  do {
    values.push_back(f(order));
  } while (std::next_permutation(order.begin(), order.end()));
  return pairwise_sum(values) / factorial(n);
}

double exact_ratio_small(const Instance& instance, const OnlineAlgorithm& algorithm) {
  if (instance.size() > 8) throw std::invalid_argument("exact_ratio_small supports n <= 8");
  return average_over_orders(instance.size(), [&](std::span<const CandidateId> order) {
    return expected_for_order(algorithm, order);
  });
}

double exact_ratio_small(const Instance& instance, const AlgorithmSpec& spec) {
  if (instance.size() > 8) throw std::invalid_argument("exact_ratio_small supports n <= 8");
  return exact_ratio_small(instance, *prepare(spec, instance));
}

}  // namespace secretary
