#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "secretary/core.hpp"
#include "secretary/lp_text.hpp"
#include "secretary/simplex.hpp"

namespace secretary {

/// A candidate as seen by the algorithm: its index and whether its
/// prediction is inaccurate. Index 1 is never erroneous.
struct SignedIndex {
  int index = 1;
  bool erroneous = false;
  bool operator==(const SignedIndex&) const = default;
};

/// Nonempty sequence of signed indices over distinct candidates.
class PartialPermutation {
 public:
  PartialPermutation() = default;
  explicit PartialPermutation(std::vector<SignedIndex> entries);

  const std::vector<SignedIndex>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  const SignedIndex& back() const { return entries_.back(); }
  const SignedIndex& operator[](std::size_t i) const { return entries_[i]; }

  /// Packs the sequence into 4 bits per entry; distinct for n <= 7.
  std::uint32_t key() const;
  /// "1_2e" for (1, 2-bar).
  std::string label() const;
  /// "x_1_2e" for (1, 2-bar).
  std::string variable_name() const;
  static PartialPermutation from_label(std::string_view label);

  bool operator==(const PartialPermutation&) const = default;

 private:
  std::vector<SignedIndex> entries_;
};

/// Every partial permutation for n candidates, lengths 1..n, in
/// length-major order; each sequence appears after its parent prefix.
struct SigmaSet {
  int n = 0;
  std::vector<PartialPermutation> items;
  std::vector<int> parent;  // -1 for length one
  std::unordered_map<std::uint32_t, int> index;

  std::size_t size() const { return items.size(); }
  /// Position of sigma, or -1 if absent.
  int find(const PartialPermutation& sigma) const;
  /// Position of sigma extended by `next`, or -1.
  int child(int id, SignedIndex next) const;
};

/// Throws std::invalid_argument unless 2 <= n <= 7.
SigmaSet enumerate_sigma(int n);

/// Erroneous candidate set E, a subset of {2..n}, as a bit mask with bit
/// i - 2 standing for candidate i.
using ErrorMask = std::uint32_t;

std::vector<int> error_members(ErrorMask mask);
ErrorMask error_mask(std::span<const int> members);
/// "2_3" for {2, 3}, "empty" for the empty set.
std::string error_label(ErrorMask mask);

/// The candidate that must be hired to succeed on I_{n,E}: max(E), or 1.
SignedIndex optimal_for(ErrorMask mask);

/// True when every index >= 2 in sigma is erroneous exactly if it lies in E.
bool consistent_with(const PartialPermutation& sigma, ErrorMask mask);

enum class RowKind { kReach, kFix, kCover };

struct ModelTerm {
  int variable = 0;
  Rational coefficient;
  bool operator==(const ModelTerm&) const = default;
};

struct ModelRow {
  RowKind kind = RowKind::kReach;
  int sigma = -1;        // reach and fix rows
  ErrorMask subset = 0;  // cover rows
  std::vector<ModelTerm> terms;
  Sense sense = Sense::kLessEqual;
  Rational rhs;
  bool operator==(const ModelRow&) const = default;
};

/// maximize z over x(sigma) >= 0 subject to reach bounds, forced hires of
/// candidate 1 on accurate prefixes, and one coverage row per E. Variables
/// 0..|Sigma|-1 are x(sigma) in SigmaSet order; the last variable is z.
struct LPModel {
  int n = 0;
  SigmaSet sigma;
  std::vector<ModelRow> rows;

  int z_variable() const { return static_cast<int>(sigma.size()); }
  std::size_t variable_count() const { return sigma.size() + 1; }
  std::string variable_name(int variable) const;
};

LPModel build_lp(int n);

/// Largest n solved by the embedded simplex.
inline constexpr int kEmbeddedSolveMaxN = 5;

/// Thrown when a request exceeds an embedded size budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LpSolution {
  LpStatus status = LpStatus::kOptimal;
  double z = 0.0;
  std::vector<double> x;  // one per sigma
  double max_residual = 0.0;
  std::size_t reduced_variables = 0;
  std::size_t iterations = 0;
};

/// Solves the model with the embedded simplex after fixing every variable
/// outside the coverage rows at zero and substituting the forced hires.
/// Throws BudgetExceeded for n > kEmbeddedSolveMaxN.
LpSolution solve_lp(const LPModel& model);

/// Largest violation of any model row (and of x >= 0) at the given point.
double max_violation(const LPModel& model, std::span<const double> x, double z);

/// The model as an LP text problem. Reach and fix rows are multiplied by n!
/// so that every coefficient is an integer.
LpProblem to_lp_problem(const LPModel& model);
/// Inverse of to_lp_problem. Throws std::invalid_argument on unknown names.
LPModel model_from_lp_problem(const LpProblem& problem);

void export_lp(const LPModel& model, const std::filesystem::path& path);
std::string export_lp_text(const LPModel& model);

/// Reads a solution vector ("variable value" lines) for the model; missing
/// variables are zero.
LpSolution import_solution(const LPModel& model, const LpSolutionValues& values);
LpSolutionValues solution_values(const LPModel& model, const LpSolution& solution);

/// Conditional hire probability h(sigma) per sigma of a SigmaSet.
struct RandomizedPolicy {
  SigmaSet sigma;
  std::vector<double> hire;

  explicit RandomizedPolicy(SigmaSet set)
      : sigma(std::move(set)), hire(sigma.size(), 0.0) {}
  int n() const { return sigma.n; }
  double h(int id) const { return id < 0 ? 0.0 : hire[static_cast<std::size_t>(id)]; }
  void set(const PartialPermutation& s, double value);
};

/// h(sigma) = x(sigma) / Pr(reach sigma), with the reach probability built
/// from the prefixes' x values; 0/0 = 0 and results clamped to [0, 1].
/// Throws std::invalid_argument if x is negative or exceeds its reach
/// probability by more than 1e-9.
RandomizedPolicy policy_from_lp(const LPModel& model, std::span<const double> x);

/// Exact probability that the policy hires E's optimal candidate on I_{n,E}
/// under a uniformly random arrival order.
double exact_policy_value(const RandomizedPolicy& policy, ErrorMask subset);

/// Probability of hiring the instance's best candidate on one arrival order,
/// reading signs from the instance (erroneous when v != v-hat).
double policy_success_on_order(const RandomizedPolicy& policy, const Instance& instance,
                               std::span<const CandidateId> order);

/// Per-E values and their minimum, for every E in {2..n}.
struct Certificate {
  std::vector<ErrorMask> subsets;
  std::vector<double> values;
  double min_value = 0.0;
};
Certificate certify(const RandomizedPolicy& policy);

/// v-hat(1) = v(1) = L; for i >= 2, v-hat(i) = 1 and v(i) = L^i if i is in E,
/// else 1. Throws std::invalid_argument if L <= 1 or n < 2, and
/// std::overflow_error if L^n is not finite. Capacity 1.
Instance instance_family(int n, ErrorMask subset, double L);

/// A policy of the restricted class: hire 1 on accurate prefixes, hire the
/// first erroneous arrival at positions >= 2, and at position 1 hire j-bar
/// exactly when bit j - 2 of first_hire is set.
RandomizedPolicy restricted_policy(int n, std::uint32_t first_hire);

struct CeilingEntry {
  std::uint32_t first_hire = 0;
  std::vector<double> values;  // per nonempty E, in mask order 1..2^(n-1)-1
  double min_value = 0.0;
  bool qualifies = false;      // every singleton E scores above 0.25
};

struct CeilingReport {
  int n = 4;
  std::vector<ErrorMask> subsets;
  std::vector<CeilingEntry> policies;
  bool holds = true;  // no qualifying policy has min_value > 0.25
};

/// Evaluates every policy of the restricted class for n = 4.
CeilingReport deterministic_ceiling_check(int n = 4, double L = 10.0);

}  // namespace secretary
