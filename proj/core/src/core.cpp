#include "secretary/core.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "secretary/rng.hpp"

namespace secretary {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_permutation(std::span<const CandidateId> perm) {
  std::vector<char> seen(perm.size() + 1, 0);
  for (CandidateId c : perm) {
    if (c < 1 || static_cast<std::size_t>(c) > perm.size() || seen[c]) {
      throw std::invalid_argument("arrival order is not a permutation of 1..n");
    }
    seen[c] = 1;
  }
}

// Lowest index wins ties because the scan keeps the first maximum.
template <typename Less>
CandidateId arg_best(std::span<const double> values, Less better) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (better(values[i], values[best])) best = i;
  }
  return static_cast<CandidateId>(best + 1);
}

double sum_descending(std::vector<double> values) {
  std::sort(values.begin(), values.end(), std::greater<>());
  double total = 0.0;
  for (double v : values) total += v;
  return total;
}

}  // namespace

Instance::Instance(std::vector<double> actual, std::vector<double> predicted,
                   int capacity)
    : actual_(std::move(actual)),
      predicted_(std::move(predicted)),
      capacity_(capacity) {
  if (actual_.empty()) throw std::invalid_argument("instance has no candidates");
  if (actual_.size() != predicted_.size()) {
    throw std::invalid_argument("values and predictions differ in length");
  }
  if (capacity_ < 1 || capacity_ > size()) {
    throw std::invalid_argument("capacity must satisfy 1 <= k <= n, got k=" +
                                std::to_string(capacity_));
  }
  for (std::size_t i = 0; i < actual_.size(); ++i) {
    if (!(actual_[i] >= 0.0) || !(predicted_[i] >= 0.0) ||
        std::isinf(actual_[i]) || std::isinf(predicted_[i])) {
      throw std::invalid_argument("values and predictions must be finite and >= 0");
    }
  }
}

std::vector<Candidate> Instance::candidates() const {
  std::vector<Candidate> out;
  out.reserve(actual_.size());
  for (CandidateId i = 1; i <= size(); ++i) out.push_back(candidate(i));
  return out;
}

Instance Instance::with_capacity(int capacity) const {
  return Instance(actual_, predicted_, capacity);
}

Schedule::Schedule(std::vector<CandidateId> order, std::vector<double> times)
    : order_(std::move(order)), times_(std::move(times)) {
  if (order_.size() != times_.size()) {
    throw std::invalid_argument("schedule order and times differ in length");
  }
  check_permutation(order_);
  for (std::size_t j = 0; j < times_.size(); ++j) {
    if (!(times_[j] >= 0.0 && times_[j] <= 1.0)) {
      throw std::invalid_argument("arrival times must lie in [0, 1]");
    }
    if (j > 0 && !(times_[j] > times_[j - 1])) {
      throw std::invalid_argument("arrival times must be strictly increasing");
    }
  }
}

double Schedule::time_of(CandidateId candidate) const {
  for (std::size_t j = 0; j < order_.size(); ++j) {
    if (order_[j] == candidate) return times_[j];
  }
  throw std::out_of_range("candidate not in schedule");
}

std::string_view to_string(ErrorRule rule) {
  switch (rule) {
    case ErrorRule::kGlobal: return "global";
    case ErrorRule::kRefinedClassical: return "refined-classical";
    case ErrorRule::kRefinedMulti: return "refined-multi";
  }
  return "global";
}

ErrorRule parse_error_rule(std::string_view name) {
  if (name == "global") return ErrorRule::kGlobal;
  if (name == "refined-classical") return ErrorRule::kRefinedClassical;
  if (name == "refined-multi") return ErrorRule::kRefinedMulti;
  throw std::invalid_argument("unknown switch rule: " + std::string(name));
}

Outcome make_outcome(const Instance& instance, std::vector<CandidateId> hired,
                     double opt) {
  Outcome out;
  std::vector<double> values;
  values.reserve(hired.size());
  for (CandidateId c : hired) values.push_back(instance.actual(c));
  out.value = sum_descending(std::move(values));
  out.opt = opt;
  out.ratio = opt > 0.0 ? std::clamp(out.value / opt, 0.0, 1.0) : 1.0;
  out.hired = std::move(hired);
  return out;
}

Outcome make_outcome(const Instance& instance, std::vector<CandidateId> hired) {
  return make_outcome(instance, std::move(hired), offline_opt(instance));
}

double prediction_ratio(double actual, double predicted) {
  if (actual > 0.0) return predicted / actual;
  return predicted > 0.0 ? kInf : 1.0;
}

double error_of(double actual, double predicted) {
  return std::abs(1.0 - prediction_ratio(actual, predicted));
}

double epsilon_global(const Instance& instance) {
  double eps = 0.0;
  for (CandidateId i = 1; i <= instance.size(); ++i) {
    eps = std::max(eps, error_of(instance.actual(i), instance.predicted(i)));
  }
  return eps;
}

double epsilon_refined_classical(const Instance& instance) {
  const CandidateId top_pred = best_predicted(instance);
  const CandidateId top_actual = best_actual(instance);
  const double p = instance.predicted(top_pred);
  const double under = 1.0 - prediction_ratio(instance.actual(top_actual), p);
  const double over = prediction_ratio(instance.actual(top_pred), p) - 1.0;
  return std::max(under, over);
}

double epsilon_refined_multi(const Instance& instance) {
  const std::vector<CandidateId> top = top_k_predicted(instance);
  std::vector<char> in_top(instance.size() + 1, 0);
  for (CandidateId c : top) in_top[c] = 1;
  const double floor_pred = instance.predicted(top.back());

  double eps = 0.0;
  for (CandidateId i = 1; i <= instance.size(); ++i) {
    if (in_top[i]) {
      eps = std::max(eps, error_of(instance.actual(i), instance.predicted(i)));
    } else {
      eps = std::max(eps, 1.0 - prediction_ratio(instance.actual(i), floor_pred));
    }
  }
  return eps;
}

double epsilon(const Instance& instance, ErrorRule rule) {
  switch (rule) {
    case ErrorRule::kGlobal: return epsilon_global(instance);
    case ErrorRule::kRefinedClassical: return epsilon_refined_classical(instance);
    case ErrorRule::kRefinedMulti: return epsilon_refined_multi(instance);
  }
  return epsilon_global(instance);
}

CandidateId best_predicted(const Instance& instance) {
  return arg_best(instance.predicted_values(), std::greater<>());
}

CandidateId best_actual(const Instance& instance) {
  return arg_best(instance.actual_values(), std::greater<>());
}

std::vector<CandidateId> top_k_predicted(const Instance& instance) {
  std::vector<CandidateId> ids(instance.size());
  std::iota(ids.begin(), ids.end(), 1);
  std::stable_sort(ids.begin(), ids.end(), [&](CandidateId a, CandidateId b) {
    return instance.predicted(a) > instance.predicted(b);
  });
  ids.resize(instance.capacity());
  return ids;
}

double offline_opt(const Instance& instance) {
  std::vector<double> values(instance.actual_values().begin(),
                             instance.actual_values().end());
  const auto k = static_cast<std::size_t>(instance.capacity());
  std::partial_sort(values.begin(), values.begin() + k, values.end(),
                    std::greater<>());
  values.resize(k);
  return sum_descending(std::move(values));
}

Schedule schedule_from_draws(std::span<const CandidateId> perm,
                             std::vector<double> draws) {
  if (draws.size() != perm.size()) {
    throw std::invalid_argument("need one draw per arrival");
  }
  std::sort(draws.begin(), draws.end());
  return Schedule(std::vector<CandidateId>(perm.begin(), perm.end()),
                  std::move(draws));
}

Schedule schedule_from_permutation(std::span<const CandidateId> perm, Rng& rng) {
  std::vector<double> draws(perm.size());
  for (double& d : draws) d = rng.uniform();
  std::sort(draws.begin(), draws.end());
  for (;;) {
    auto dup = std::adjacent_find(draws.begin(), draws.end());
    if (dup == draws.end()) break;
    *dup = rng.uniform();
    std::sort(draws.begin(), draws.end());
  }
  return Schedule(std::vector<CandidateId>(perm.begin(), perm.end()),
                  std::move(draws));
}

Schedule random_schedule(int n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("random_schedule needs n >= 1");
  std::vector<CandidateId> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  rng.shuffle(std::span<CandidateId>(perm));
  return schedule_from_permutation(perm, rng);
}

}  // namespace secretary
