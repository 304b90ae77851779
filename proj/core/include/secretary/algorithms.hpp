#pragma once

#include <functional>
#include <memory>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "secretary/core.hpp"

namespace secretary {

/// Switch comparisons treat values within this distance of theta as equal to
/// theta, so errors that are exactly theta up to rounding of v-hat/v do not
/// flip the mode.
inline constexpr double kSwitchSlack = 1e-12;

inline constexpr double kInvE = 1.0 / std::numbers::e;

struct ClassicalParams {
  double tau = 0.313;
  double theta = 0.646;
  ErrorRule switch_rule = ErrorRule::kGlobal;  // kGlobal or kRefinedClassical
};

struct MultiParams {
  double theta = 0.0;
  ErrorRule switch_rule = ErrorRule::kGlobal;  // kGlobal or kRefinedMulti
};

enum class Mode { kPrediction, kSecretary };

struct SwitchState {
  Mode mode = Mode::kPrediction;
  std::optional<double> switch_time;
};

struct TimeWindow {
  double lo = 0.0;
  double hi = 1.0;
};

/// Hires the first candidate arriving after tau whose value strictly exceeds
/// every earlier arrival. Requires k = 1.
Outcome dynkin(const Instance& instance, const Schedule& schedule, double tau);

/// Follows the top prediction until some arrival deviates by more than
/// theta, then runs the Dynkin rule for the rest of the sequence; the
/// best-so-far comparison covers every arrival, including pre-switch ones.
Outcome learned_dynkin(const Instance& instance, const Schedule& schedule,
                       const ClassicalParams& params);

/// Same as learned_dynkin, also reporting the final mode.
Outcome learned_dynkin(const Instance& instance, const Schedule& schedule,
                       const ClassicalParams& params, SwitchState& state);

/// Recursive k-choice rule on the arrivals whose time lies in the window:
/// capacity floor(k/2) on the first half, then a threshold at the
/// floor(k/2)-th largest first-half value for the second half. The base case
/// k = 1 is the Dynkin rule with cutoff at 1/e of the window.
Outcome kleinberg(const Instance& instance, const Schedule& schedule, int k,
                  TimeWindow window = {});

/// Hires arriving members of the top-k predictions; on the first deviating
/// arrival it hires that candidate and hands the remaining capacity to
/// kleinberg on the window (t_switch, 1].
Outcome learned_kleinberg(const Instance& instance, const Schedule& schedule,
                          const MultiParams& params);

/// Hires the k candidates with the largest predictions.
Outcome top_k_prediction(const Instance& instance, const Schedule& schedule);

/// Single-threshold prophet-secretary baseline: each candidate is modelled as
/// U[v-hat - theta, v-hat + theta]; at time t the threshold is the
/// alpha(t) = 0.53 - 0.38 t quantile of the maximum. Requires k = 1.
Outcome prophet_secretary_threshold(const Instance& instance,
                                    const Schedule& schedule, double theta);

/// The distribution model behind prophet_secretary_threshold.
class ProphetThresholdModel {
 public:
  ProphetThresholdModel(std::span<const double> predicted, double theta);

  static double alpha(double t) { return 0.53 - 0.38 * t; }

  /// Pr(max_i X_i <= x), product of clamped uniform CDFs.
  double max_cdf(double x) const;

  /// Root of max_cdf(x) = level by bisection on the joint support, to 1e-10.
  double quantile(double level) const;
  double threshold_at(double t) const { return quantile(alpha(t)); }

  double support_lo() const { return lo_; }
  double support_hi() const { return hi_; }

 private:
  std::vector<double> predicted_;
  double theta_;
  double lo_;
  double hi_;
};

/// Decision points of the recursive k-choice rule inside a window.
std::vector<double> kleinberg_breakpoints(int k, TimeWindow window = {});

/// How decisions depend on arrival times once the arrival order is fixed:
/// only through the interval between consecutive breakpoints that each
/// arrival falls into. With an anchor, arrivals up to and including that
/// position are time-independent and breakpoints are relative positions
/// within (t_anchor, 1].
struct TimeDependence {
  std::vector<double> breakpoints;
  std::optional<std::size_t> anchor;
};

/// An online rule bound to one instance, ready to run many schedules.
class OnlineAlgorithm {
 public:
  virtual ~OnlineAlgorithm() = default;
  virtual Outcome run(const Schedule& schedule) const = 0;
  virtual TimeDependence time_dependence(
      std::span<const CandidateId> order) const;
};

using AlgorithmFactory =
    std::function<std::unique_ptr<OnlineAlgorithm>(const Instance&)>;

enum class AlgorithmKind {
  kDynkin,
  kLearnedDynkin,
  kKleinberg,
  kLearnedKleinberg,
  kTopK,
  kProphetThreshold,
  kCustom,  // user-supplied factory, e.g. an AGKK implementation
};

std::string_view to_string(AlgorithmKind kind);
/// CLI identifiers: dynkin, learned-dynkin, kleinberg, learned-kleinberg,
/// top-k, prophet-threshold.
AlgorithmKind parse_algorithm_kind(std::string_view name);

struct AlgorithmSpec {
  AlgorithmKind kind = AlgorithmKind::kDynkin;
  double tau = kInvE;
  double theta = 0.0;
  ErrorRule switch_rule = ErrorRule::kGlobal;
  /// Prophet threshold only: theta is a multiple of max predicted value.
  bool theta_relative = false;
  std::string custom_name;
  AlgorithmFactory custom;

  std::string name() const;
  /// Compact parameter string, e.g. "tau=0.313;theta=0.646;rule=global".
  std::string params() const;
  /// True when the algorithm is defined for capacity k.
  bool supports_capacity(int k) const;
};

/// Throws std::invalid_argument on out-of-range parameters.
void validate(const AlgorithmSpec& spec);

std::unique_ptr<OnlineAlgorithm> prepare(const AlgorithmSpec& spec,
                                         const Instance& instance);
Outcome run_algorithm(const AlgorithmSpec& spec, const Instance& instance,
                      const Schedule& schedule);

}  // namespace secretary
