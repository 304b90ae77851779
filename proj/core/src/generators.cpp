#include "secretary/generators.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "secretary/rng.hpp"

namespace secretary {

namespace {

constexpr double kTieBreakWidth = 0.01;

// Independent sub-streams per generator role.
enum Stream : std::uint64_t { kValues = 1, kFactors = 2, kSpikes = 3, kNoise = 4 };

Rng stream(const GeneratorSpec& spec, Stream s) {
  return Rng(derive_seed({spec.seed, static_cast<std::uint64_t>(s)}));
}

std::vector<double> exponential_values(const GeneratorSpec& spec) {
  Rng rng = stream(spec, kValues);
  std::vector<double> v(static_cast<std::size_t>(spec.n));
  for (double& x : v) x = rng.exponential();
  return v;
}

void require_kind(const GeneratorSpec& spec, GeneratorKind kind) {
  validate(spec);
  if (spec.kind != kind) {
    throw std::invalid_argument("generator called with a spec of another kind");
  }
}

}  // namespace

std::string_view to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::kUniform: return "uniform";
    case GeneratorKind::kAdversarial: return "adversarial";
    case GeneratorKind::kAlmostConstant: return "almost-constant";
  }
  return "uniform";
}

GeneratorKind parse_generator_kind(std::string_view name) {
  if (name == "uniform") return GeneratorKind::kUniform;
  if (name == "adversarial") return GeneratorKind::kAdversarial;
  if (name == "almost-constant") return GeneratorKind::kAlmostConstant;
  throw std::invalid_argument("unknown generator: " + std::string(name));
}

void validate(const GeneratorSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("generator needs n >= 1");
  if (spec.k < 1 || spec.k > spec.n) {
    throw std::invalid_argument("generator needs 1 <= k <= n");
  }
  if (!(spec.epsilon >= 0.0 && spec.epsilon <= 1.0)) {
    throw std::invalid_argument("generator epsilon must lie in [0, 1]");
  }
  if (spec.kind == GeneratorKind::kAlmostConstant && spec.epsilon >= 1.0) {
    throw std::invalid_argument("almost-constant is undefined at epsilon = 1");
  }
}

bool is_valid(const GeneratorSpec& spec) {
  try {
    validate(spec);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

Instance gen_uniform(const GeneratorSpec& spec) {
  require_kind(spec, GeneratorKind::kUniform);
  std::vector<double> actual = exponential_values(spec);
  Rng factors = stream(spec, kFactors);
  std::vector<double> predicted(actual.size());
  for (std::size_t i = 0; i < actual.size(); ++i) {
    const double delta = factors.uniform(1.0 - spec.epsilon, 1.0 + spec.epsilon);
    predicted[i] = delta * actual[i];
  }
  return Instance(std::move(actual), std::move(predicted), spec.k);
}

Instance gen_adversarial(const GeneratorSpec& spec) {
  require_kind(spec, GeneratorKind::kAdversarial);
  std::vector<double> actual = exponential_values(spec);
  std::vector<std::size_t> rank(actual.size());
  std::iota(rank.begin(), rank.end(), std::size_t{0});
  std::stable_sort(rank.begin(), rank.end(), [&](std::size_t a, std::size_t b) {
    return actual[a] > actual[b];
  });
  const std::size_t top = (actual.size() + 1) / 2;
  std::vector<double> predicted(actual.size());
  for (std::size_t r = 0; r < rank.size(); ++r) {
    const std::size_t i = rank[r];
    predicted[i] = (r < top ? 1.0 - spec.epsilon : 1.0 + spec.epsilon) * actual[i];
  }
  return Instance(std::move(actual), std::move(predicted), spec.k);
}

Instance gen_almost_constant(const GeneratorSpec& spec) {
  require_kind(spec, GeneratorKind::kAlmostConstant);
  const auto n = static_cast<std::size_t>(spec.n);

  // Partial Fisher-Yates: the first k slots form a uniform k-subset.
  std::vector<std::size_t> ids(n);
  std::iota(ids.begin(), ids.end(), std::size_t{0});
  Rng spikes = stream(spec, kSpikes);
  for (std::size_t j = 0; j < static_cast<std::size_t>(spec.k); ++j) {
    std::swap(ids[j], ids[j + spikes.below(n - j)]);
  }
  std::vector<char> spiked(n, 0);
  for (std::size_t j = 0; j < static_cast<std::size_t>(spec.k); ++j) spiked[ids[j]] = 1;

  const double high = 1.0 / (1.0 - spec.epsilon);
  Rng noise = stream(spec, kNoise);
  std::vector<double> actual(n), predicted(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double eta = noise.uniform(0.0, kTieBreakWidth);
    predicted[i] = 1.0 + eta;
    actual[i] = (spiked[i] ? high : 1.0) + eta;
  }
  return Instance(std::move(actual), std::move(predicted), spec.k);
}

Instance generate(const GeneratorSpec& spec) {
  switch (spec.kind) {
    case GeneratorKind::kUniform: return gen_uniform(spec);
    case GeneratorKind::kAdversarial: return gen_adversarial(spec);
    case GeneratorKind::kAlmostConstant: return gen_almost_constant(spec);
  }
  throw std::invalid_argument("unknown generator kind");
}

std::string dataset_file_name(const GeneratorSpec& spec) {
  char eps[32];
  std::snprintf(eps, sizeof eps, "%.2f", spec.epsilon);
  return std::string(to_string(spec.kind)) + "_" + eps + "_" +
         std::to_string(spec.seed) + ".json";
}

}  // namespace secretary
