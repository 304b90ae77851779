#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace secretary {

class Rng;

/// Candidate identifiers are 1-based, matching the arrival-order notation
/// used throughout the library and its file formats.
using CandidateId = int;

struct Candidate {
  CandidateId index = 0;
  double actual = 0.0;
  double predicted = 0.0;
};

/// n candidates with actual and predicted values plus the hiring capacity k.
/// Immutable once constructed; the constructor enforces every invariant.
class Instance {
 public:
  Instance(std::vector<double> actual, std::vector<double> predicted,
           int capacity);

  int size() const { return static_cast<int>(actual_.size()); }
  int capacity() const { return capacity_; }

  double actual(CandidateId i) const { return actual_[index_of(i)]; }
  double predicted(CandidateId i) const { return predicted_[index_of(i)]; }
  Candidate candidate(CandidateId i) const {
    return {i, actual(i), predicted(i)};
  }
  std::vector<Candidate> candidates() const;

  /// Position 0 holds candidate 1.
  std::span<const double> actual_values() const { return actual_; }
  std::span<const double> predicted_values() const { return predicted_; }

  /// Same values, different capacity.
  Instance with_capacity(int capacity) const;

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  static std::size_t index_of(CandidateId i) {
    return static_cast<std::size_t>(i - 1);
  }

  std::vector<double> actual_;
  std::vector<double> predicted_;
  int capacity_ = 1;
};

/// An arrival order with strictly increasing arrival times in [0, 1].
/// times()[j] is the arrival time of order()[j].
class Schedule {
 public:
  struct Arrival {
    CandidateId candidate;
    double time;
  };

  Schedule(std::vector<CandidateId> order, std::vector<double> times);

  int size() const { return static_cast<int>(order_.size()); }
  const std::vector<CandidateId>& order() const { return order_; }
  const std::vector<double>& times() const { return times_; }
  Arrival operator[](std::size_t pos) const { return {order_[pos], times_[pos]}; }

  /// Arrival time of a candidate (linear scan).
  double time_of(CandidateId candidate) const;

 private:
  std::vector<CandidateId> order_;
  std::vector<double> times_;
};

enum class ErrorRule { kGlobal, kRefinedClassical, kRefinedMulti };

std::string_view to_string(ErrorRule rule);
/// Accepts "global", "refined-classical", "refined-multi".
ErrorRule parse_error_rule(std::string_view name);

struct Outcome {
  std::vector<CandidateId> hired;  // in hiring order
  double value = 0.0;
  double opt = 0.0;
  double ratio = 1.0;
};

/// Builds an Outcome. The value is summed in descending order, the same order
/// offline_opt uses, so hiring the optimal set gives a ratio of exactly 1.
Outcome make_outcome(const Instance& instance, std::vector<CandidateId> hired,
                     double opt);
Outcome make_outcome(const Instance& instance, std::vector<CandidateId> hired);

/// predicted / actual with the conventions 0/0 = 1 and p/0 = +inf for p > 0.
double prediction_ratio(double actual, double predicted);

/// |1 - predicted/actual|; 0 when both are 0, +inf when only actual is 0.
double error_of(double actual, double predicted);

double epsilon_global(const Instance& instance);
double epsilon_refined_classical(const Instance& instance);
double epsilon_refined_multi(const Instance& instance);
double epsilon(const Instance& instance, ErrorRule rule);

/// Argmax of predicted / actual values, lowest index on ties.
CandidateId best_predicted(const Instance& instance);
CandidateId best_actual(const Instance& instance);

/// The k candidates with the largest predicted values (lowest index first
/// among ties), listed by decreasing prediction.
std::vector<CandidateId> top_k_predicted(const Instance& instance);

/// Sum of the k largest actual values.
double offline_opt(const Instance& instance);

/// Assigns sorted uniform draws to the arrivals of perm. Colliding draws are
/// redrawn so arrival times are strictly increasing.
Schedule schedule_from_permutation(std::span<const CandidateId> perm, Rng& rng);

/// Deterministic variant: sorts the given draws and assigns the j-th smallest
/// to the j-th arrival of perm.
Schedule schedule_from_draws(std::span<const CandidateId> perm,
                             std::vector<double> draws);

/// Uniformly random arrival order with continuous arrival times.
Schedule random_schedule(int n, Rng& rng);

}  // namespace secretary
