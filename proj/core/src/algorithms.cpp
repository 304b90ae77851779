#include "secretary/algorithms.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace secretary {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

using Arrivals = std::vector<Schedule::Arrival>;

double top_sum(const Instance& instance, int k) {
  return offline_opt(instance.with_capacity(std::clamp(k, 1, instance.size())));
}

void check_tau(double tau) {
  if (!(tau > 0.0 && tau < 1.0)) throw std::invalid_argument("tau must lie in (0, 1)");
}

void check_theta(double theta) {
  if (!(theta >= 0.0)) throw std::invalid_argument("theta must be >= 0");
}

void require_single_hire(const Instance& instance, std::string_view who) {
  if (instance.capacity() != 1) {
    throw std::invalid_argument(std::string(who) + " requires capacity k = 1");
  }
}

bool fires_strict(double error, double theta) { return error > theta + kSwitchSlack; }
bool fires_weak(double error, double theta) { return error >= theta - kSwitchSlack; }

// Per-candidate switch condition of the single-choice rule. The condition
// depends only on the candidate, never on time or order.
std::vector<char> classical_switches(const Instance& instance, double theta,
                                     ErrorRule rule) {
  std::vector<char> fires(instance.size() + 1, 0);
  const CandidateId top = best_predicted(instance);
  const double top_pred = instance.predicted(top);
  for (CandidateId i = 1; i <= instance.size(); ++i) {
    const double v = instance.actual(i);
    switch (rule) {
      case ErrorRule::kGlobal:
        fires[i] = fires_strict(error_of(v, instance.predicted(i)), theta);
        break;
      case ErrorRule::kRefinedClassical:
        fires[i] = fires_weak(1.0 - prediction_ratio(v, top_pred), theta) ||
                   (i == top && fires_weak(prediction_ratio(v, top_pred) - 1.0, theta));
        break;
      case ErrorRule::kRefinedMulti:
        throw std::invalid_argument("learned Dynkin takes a global or refined-classical rule");
    }
  }
  return fires;
}

std::vector<char> multi_switches(const Instance& instance, double theta,
                                 ErrorRule rule, const std::vector<char>& in_top,
                                 double floor_pred) {
  std::vector<char> fires(instance.size() + 1, 0);
  for (CandidateId i = 1; i <= instance.size(); ++i) {
    const double v = instance.actual(i);
    const double p = instance.predicted(i);
    switch (rule) {
      case ErrorRule::kGlobal:
        fires[i] = fires_strict(error_of(v, p), theta);
        break;
      case ErrorRule::kRefinedMulti:
        fires[i] = in_top[i] ? fires_weak(error_of(v, p), theta)
                             : fires_weak(1.0 - prediction_ratio(v, floor_pred), theta);
        break;
      case ErrorRule::kRefinedClassical:
        throw std::invalid_argument("learned Kleinberg takes a global or refined-multi rule");
    }
  }
  return fires;
}

// Dynkin rule over a span of arrivals: first arrival after the cutoff that
// beats everything seen before it.
std::optional<CandidateId> dynkin_pick(const Instance& instance,
                                       std::span<const Schedule::Arrival> arrivals,
                                       double cutoff) {
  double best = kNegInf;
  for (const auto& a : arrivals) {
    const double v = instance.actual(a.candidate);
    if (a.time > cutoff && v > best) return a.candidate;
    best = std::max(best, v);
  }
  return std::nullopt;
}

void kleinberg_window(const Instance& instance,
                      std::span<const Schedule::Arrival> arrivals, int k,
                      double lo, double hi, std::vector<CandidateId>& hired) {
  if (k <= 0 || arrivals.empty()) return;
  if (k == 1) {
    if (auto pick = dynkin_pick(instance, arrivals, lo + (hi - lo) * kInvE)) {
      hired.push_back(*pick);
    }
    return;
  }
  const double mid = 0.5 * (lo + hi);
  const auto split = std::partition_point(
      arrivals.begin(), arrivals.end(),
      [mid](const Schedule::Arrival& a) { return a.time < mid; });
  const auto first = arrivals.subspan(0, static_cast<std::size_t>(split - arrivals.begin()));
  const auto second = arrivals.subspan(first.size());
  const int ell = k / 2;

  const std::size_t before = hired.size();
  kleinberg_window(instance, first, ell, lo, mid, hired);
  int taken = static_cast<int>(hired.size() - before);

  // Fewer than ell first-half arrivals: accept everything in the second half.
  const bool accept_all = first.size() < static_cast<std::size_t>(ell);
  double threshold = 0.0;
  if (!accept_all) {
    std::vector<double> values;
    values.reserve(first.size());
    for (const auto& a : first) values.push_back(instance.actual(a.candidate));
    std::nth_element(values.begin(), values.begin() + (ell - 1), values.end(),
                     std::greater<>());
    threshold = values[static_cast<std::size_t>(ell - 1)];
  }
  for (const auto& a : second) {
    if (taken >= k) break;
    if (accept_all || instance.actual(a.candidate) > threshold) {
      hired.push_back(a.candidate);
      ++taken;
    }
  }
}

void collect_breakpoints(int k, double lo, double hi, std::vector<double>& out) {
  if (k <= 0) return;
  if (k == 1) {
    out.push_back(lo + (hi - lo) * kInvE);
    return;
  }
  const double mid = 0.5 * (lo + hi);
  out.push_back(mid);
  collect_breakpoints(k / 2, lo, mid, out);
}

class DynkinRule final : public OnlineAlgorithm {
 public:
  DynkinRule(const Instance& instance, double tau)
      : instance_(instance), tau_(tau), opt_(offline_opt(instance)) {
    check_tau(tau);
    require_single_hire(instance, "dynkin");
  }

  Outcome run(const Schedule& schedule) const override {
    std::vector<CandidateId> hired;
    double best = kNegInf;
    for (std::size_t j = 0; j < schedule.order().size(); ++j) {
      const auto a = schedule[j];
      const double v = instance_.actual(a.candidate);
      if (a.time > tau_ && v > best) {
        hired.push_back(a.candidate);
        break;
      }
      best = std::max(best, v);
    }
    return make_outcome(instance_, std::move(hired), opt_);
  }

  TimeDependence time_dependence(std::span<const CandidateId>) const override {
    return {{tau_}, std::nullopt};
  }

 private:
  Instance instance_;
  double tau_;
  double opt_;
};

class LearnedDynkin final : public OnlineAlgorithm {
 public:
  LearnedDynkin(const Instance& instance, const ClassicalParams& params)
      : instance_(instance),
        params_(params),
        top_(best_predicted(instance)),
        fires_(classical_switches(instance, params.theta, params.switch_rule)),
        opt_(offline_opt(instance)) {
    check_tau(params.tau);
    check_theta(params.theta);
    require_single_hire(instance, "learned-dynkin");
  }

  Outcome run(const Schedule& schedule) const override {
    SwitchState state;
    return run(schedule, state);
  }

  Outcome run(const Schedule& schedule, SwitchState& state) const {
    state = {};
    std::vector<CandidateId> hired;
    double best = kNegInf;
    for (std::size_t j = 0; j < schedule.order().size(); ++j) {
      const auto a = schedule[j];
      const double v = instance_.actual(a.candidate);
      if (state.mode == Mode::kPrediction && fires_[a.candidate]) {
        state.mode = Mode::kSecretary;
        state.switch_time = a.time;
      }
      if (state.mode == Mode::kPrediction && a.candidate == top_) {
        hired.push_back(a.candidate);
        break;
      }
      if (state.mode == Mode::kSecretary && a.time > params_.tau && v > best) {
        hired.push_back(a.candidate);
        break;
      }
      best = std::max(best, v);
    }
    return make_outcome(instance_, std::move(hired), opt_);
  }

  TimeDependence time_dependence(std::span<const CandidateId>) const override {
    return {{params_.tau}, std::nullopt};
  }

 private:
  Instance instance_;
  ClassicalParams params_;
  CandidateId top_;
  std::vector<char> fires_;
  double opt_;
};

class KleinbergRule final : public OnlineAlgorithm {
 public:
  KleinbergRule(const Instance& instance, int k, TimeWindow window)
      : instance_(instance), k_(k), window_(window), opt_(top_sum(instance, k)) {
    if (k < 1) throw std::invalid_argument("kleinberg requires k >= 1");
    if (!(0.0 <= window.lo && window.lo < window.hi && window.hi <= 1.0)) {
      throw std::invalid_argument("kleinberg window must satisfy 0 <= lo < hi <= 1");
    }
  }

  Outcome run(const Schedule& schedule) const override {
    Arrivals visible;
    visible.reserve(schedule.order().size());
    for (std::size_t j = 0; j < schedule.order().size(); ++j) {
      const auto a = schedule[j];
      if (a.time >= window_.lo && a.time <= window_.hi) visible.push_back(a);
    }
    std::vector<CandidateId> hired;
    kleinberg_window(instance_, visible, k_, window_.lo, window_.hi, hired);
    return make_outcome(instance_, std::move(hired), opt_);
  }

  TimeDependence time_dependence(std::span<const CandidateId>) const override {
    TimeDependence dep{kleinberg_breakpoints(k_, window_), std::nullopt};
    if (window_.lo > 0.0) dep.breakpoints.push_back(window_.lo);
    if (window_.hi < 1.0) dep.breakpoints.push_back(window_.hi);
    std::sort(dep.breakpoints.begin(), dep.breakpoints.end());
    return dep;
  }

 private:
  Instance instance_;
  int k_;
  TimeWindow window_;
  double opt_;
};

class LearnedKleinberg final : public OnlineAlgorithm {
 public:
  LearnedKleinberg(const Instance& instance, const MultiParams& params)
      : instance_(instance), params_(params), opt_(offline_opt(instance)) {
    check_theta(params.theta);
    const auto top = top_k_predicted(instance);
    in_top_.assign(instance.size() + 1, 0);
    for (CandidateId c : top) in_top_[c] = 1;
    fires_ = multi_switches(instance, params.theta, params.switch_rule, in_top_,
                            instance.predicted(top.back()));
  }

  Outcome run(const Schedule& schedule) const override {
    const int k = instance_.capacity();
    std::vector<CandidateId> hired;
    for (std::size_t j = 0; j < schedule.order().size(); ++j) {
      const auto a = schedule[j];
      if (fires_[a.candidate]) {
        const int remaining = k - static_cast<int>(hired.size()) - 1;
        hired.push_back(a.candidate);
        Arrivals rest;
        rest.reserve(schedule.order().size() - j - 1);
        for (std::size_t r = j + 1; r < schedule.order().size(); ++r) rest.push_back(schedule[r]);
        kleinberg_window(instance_, rest, remaining, a.time, 1.0, hired);
        break;
      }
      if (in_top_[a.candidate]) {
        hired.push_back(a.candidate);
        if (static_cast<int>(hired.size()) == k) break;
      }
    }
    return make_outcome(instance_, std::move(hired), opt_);
  }

  TimeDependence time_dependence(std::span<const CandidateId> order) const override {
    int taken = 0;
    for (std::size_t j = 0; j < order.size(); ++j) {
      if (fires_[order[j]]) {
        return {kleinberg_breakpoints(instance_.capacity() - taken - 1), j};
      }
      if (in_top_[order[j]] && ++taken == instance_.capacity()) break;
    }
    return {{}, std::nullopt};
  }

 private:
  Instance instance_;
  MultiParams params_;
  std::vector<char> in_top_;
  std::vector<char> fires_;
  double opt_;
};

class TopPrediction final : public OnlineAlgorithm {
 public:
  explicit TopPrediction(const Instance& instance)
      : instance_(instance), opt_(offline_opt(instance)) {
    in_top_.assign(instance.size() + 1, 0);
    for (CandidateId c : top_k_predicted(instance)) in_top_[c] = 1;
  }

  Outcome run(const Schedule& schedule) const override {
    std::vector<CandidateId> hired;
    for (CandidateId c : schedule.order()) {
      if (in_top_[c]) hired.push_back(c);
    }
    return make_outcome(instance_, std::move(hired), opt_);
  }

  TimeDependence time_dependence(std::span<const CandidateId>) const override {
    return {};
  }

 private:
  Instance instance_;
  std::vector<char> in_top_;
  double opt_;
};

// Hiring v > threshold(t) is the same event as max_cdf(v) > alpha(t): the
// product CDF is strictly increasing wherever it lies in (0, 1), and alpha(t)
// stays inside [0.15, 0.53]. Caching max_cdf(v) per candidate makes a run
// linear in n.
class ProphetThreshold final : public OnlineAlgorithm {
 public:
  ProphetThreshold(const Instance& instance, double theta)
      : instance_(instance), opt_(offline_opt(instance)) {
    require_single_hire(instance, "prophet-threshold");
    if (!(theta > 0.0)) throw std::invalid_argument("prophet-threshold needs theta > 0");
    ProphetThresholdModel model(instance.predicted_values(), theta);
    level_.assign(instance.size() + 1, 0.0);
    for (CandidateId i = 1; i <= instance.size(); ++i) {
      level_[i] = model.max_cdf(instance.actual(i));
    }
  }

  Outcome run(const Schedule& schedule) const override {
    std::vector<CandidateId> hired;
    for (std::size_t j = 0; j < schedule.order().size(); ++j) {
      const auto a = schedule[j];
      if (level_[a.candidate] > ProphetThresholdModel::alpha(a.time)) {
        hired.push_back(a.candidate);
        break;
      }
    }
    return make_outcome(instance_, std::move(hired), opt_);
  }

  TimeDependence time_dependence(std::span<const CandidateId>) const override {
    // Candidate i is accepted exactly when t > (0.53 - level_i) / 0.38.
    TimeDependence dep;
    for (CandidateId i = 1; i <= instance_.size(); ++i) {
      const double cut = (0.53 - level_[i]) / 0.38;
      if (cut > 0.0 && cut < 1.0) dep.breakpoints.push_back(cut);
    }
    std::sort(dep.breakpoints.begin(), dep.breakpoints.end());
    dep.breakpoints.erase(std::unique(dep.breakpoints.begin(), dep.breakpoints.end()),
                          dep.breakpoints.end());
    return dep;
  }

 private:
  Instance instance_;
  std::vector<double> level_;
  double opt_;
};

std::string format_number(double x) {
  if (std::isinf(x)) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

}  // namespace

TimeDependence OnlineAlgorithm::time_dependence(std::span<const CandidateId>) const {
  throw std::logic_error("algorithm does not describe its time dependence");
}

ProphetThresholdModel::ProphetThresholdModel(std::span<const double> predicted,
                                             double theta)
    : predicted_(predicted.begin(), predicted.end()), theta_(theta) {
  if (predicted_.empty()) throw std::invalid_argument("prophet model needs candidates");
  if (!(theta > 0.0)) throw std::invalid_argument("prophet model needs theta > 0");
  lo_ = *std::min_element(predicted_.begin(), predicted_.end()) - theta;
  hi_ = *std::max_element(predicted_.begin(), predicted_.end()) + theta;
}

double ProphetThresholdModel::max_cdf(double x) const {
  double p = 1.0;
  for (double c : predicted_) {
    p *= std::clamp((x - (c - theta_)) / (2.0 * theta_), 0.0, 1.0);
    if (p == 0.0) break;
  }
  return p;
}

double ProphetThresholdModel::quantile(double level) const {
  if (!(level > 0.0 && level < 1.0)) {
    throw std::invalid_argument("quantile level must lie in (0, 1)");
  }
  double lo = lo_, hi = hi_;
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    if (max_cdf(mid) < level) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<double> kleinberg_breakpoints(int k, TimeWindow window) {
  std::vector<double> out;
  collect_breakpoints(k, window.lo, window.hi, out);
  std::sort(out.begin(), out.end());
  return out;
}

Outcome dynkin(const Instance& instance, const Schedule& schedule, double tau) {
  return DynkinRule(instance, tau).run(schedule);
}

Outcome learned_dynkin(const Instance& instance, const Schedule& schedule,
                       const ClassicalParams& params) {
  return LearnedDynkin(instance, params).run(schedule);
}

Outcome learned_dynkin(const Instance& instance, const Schedule& schedule,
                       const ClassicalParams& params, SwitchState& state) {
  return LearnedDynkin(instance, params).run(schedule, state);
}

Outcome kleinberg(const Instance& instance, const Schedule& schedule, int k,
                  TimeWindow window) {
  return KleinbergRule(instance, k, window).run(schedule);
}

Outcome learned_kleinberg(const Instance& instance, const Schedule& schedule,
                          const MultiParams& params) {
  return LearnedKleinberg(instance, params).run(schedule);
}

Outcome top_k_prediction(const Instance& instance, const Schedule& schedule) {
  return TopPrediction(instance).run(schedule);
}

Outcome prophet_secretary_threshold(const Instance& instance,
                                    const Schedule& schedule, double theta) {
  return ProphetThreshold(instance, theta).run(schedule);
}

std::string_view to_string(AlgorithmKind kind) {
  switch (kind) {
    case AlgorithmKind::kDynkin: return "dynkin";
    case AlgorithmKind::kLearnedDynkin: return "learned-dynkin";
    case AlgorithmKind::kKleinberg: return "kleinberg";
    case AlgorithmKind::kLearnedKleinberg: return "learned-kleinberg";
    case AlgorithmKind::kTopK: return "top-k";
    case AlgorithmKind::kProphetThreshold: return "prophet-threshold";
    case AlgorithmKind::kCustom: return "custom";
  }
  return "custom";
}

AlgorithmKind parse_algorithm_kind(std::string_view name) {
  for (auto kind : {AlgorithmKind::kDynkin, AlgorithmKind::kLearnedDynkin,
                    AlgorithmKind::kKleinberg, AlgorithmKind::kLearnedKleinberg,
                    AlgorithmKind::kTopK, AlgorithmKind::kProphetThreshold}) {
    if (name == to_string(kind)) return kind;
  }
  throw std::invalid_argument("unknown algorithm: " + std::string(name));
}

std::string AlgorithmSpec::name() const {
  if (kind == AlgorithmKind::kCustom && !custom_name.empty()) return custom_name;
  return std::string(to_string(kind));
}

std::string AlgorithmSpec::params() const {
  switch (kind) {
    case AlgorithmKind::kDynkin:
      return "tau=" + format_number(tau);
    case AlgorithmKind::kLearnedDynkin:
      return "tau=" + format_number(tau) + ";theta=" + format_number(theta) +
             ";rule=" + std::string(to_string(switch_rule));
    case AlgorithmKind::kLearnedKleinberg:
      return "theta=" + format_number(theta) + ";rule=" +
             std::string(to_string(switch_rule));
    case AlgorithmKind::kProphetThreshold:
      return "theta=" + format_number(theta) + (theta_relative ? "p" : "");
    case AlgorithmKind::kKleinberg:
    case AlgorithmKind::kTopK:
    case AlgorithmKind::kCustom:
      return "";
  }
  return "";
}

bool AlgorithmSpec::supports_capacity(int k) const {
  switch (kind) {
    case AlgorithmKind::kDynkin:
    case AlgorithmKind::kLearnedDynkin:
    case AlgorithmKind::kProphetThreshold:
      return k == 1;
    default:
      return k >= 1;
  }
}

void validate(const AlgorithmSpec& spec) {
  switch (spec.kind) {
    case AlgorithmKind::kDynkin:
      check_tau(spec.tau);
      break;
    case AlgorithmKind::kLearnedDynkin:
      check_tau(spec.tau);
      check_theta(spec.theta);
      if (spec.switch_rule == ErrorRule::kRefinedMulti) {
        throw std::invalid_argument("learned-dynkin takes rule global or refined-classical");
      }
      break;
    case AlgorithmKind::kLearnedKleinberg:
      check_theta(spec.theta);
      if (spec.switch_rule == ErrorRule::kRefinedClassical) {
        throw std::invalid_argument("learned-kleinberg takes rule global or refined-multi");
      }
      break;
    case AlgorithmKind::kProphetThreshold:
      if (!(spec.theta > 0.0)) throw std::invalid_argument("prophet-threshold needs theta > 0");
      break;
    case AlgorithmKind::kCustom:
      if (!spec.custom) throw std::invalid_argument("custom algorithm has no factory");
      break;
    case AlgorithmKind::kKleinberg:
    case AlgorithmKind::kTopK:
      break;
  }
}

std::unique_ptr<OnlineAlgorithm> prepare(const AlgorithmSpec& spec,
                                         const Instance& instance) {
  validate(spec);
  switch (spec.kind) {
    case AlgorithmKind::kDynkin:
      return std::make_unique<DynkinRule>(instance, spec.tau);
    case AlgorithmKind::kLearnedDynkin:
      return std::make_unique<LearnedDynkin>(
          instance, ClassicalParams{spec.tau, spec.theta, spec.switch_rule});
    case AlgorithmKind::kKleinberg:
      return std::make_unique<KleinbergRule>(instance, instance.capacity(), TimeWindow{});
    case AlgorithmKind::kLearnedKleinberg:
      return std::make_unique<LearnedKleinberg>(
          instance, MultiParams{spec.theta, spec.switch_rule});
    case AlgorithmKind::kTopK:
      return std::make_unique<TopPrediction>(instance);
    case AlgorithmKind::kProphetThreshold: {
      double theta = spec.theta;
      if (spec.theta_relative) {
        theta *= instance.predicted(best_predicted(instance));
      }
      return std::make_unique<ProphetThreshold>(instance, theta);
    }
    case AlgorithmKind::kCustom:
      return spec.custom(instance);
  }
  throw std::invalid_argument("unknown algorithm kind");
}

Outcome run_algorithm(const AlgorithmSpec& spec, const Instance& instance,
                      const Schedule& schedule) {
  return prepare(spec, instance)->run(schedule);
}

}  // namespace secretary
