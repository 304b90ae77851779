#include "secretary/hardness.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace secretary {

namespace {

constexpr int kMaxEnumerateN = 7;
constexpr double kPolicyTolerance = 1e-9;

std::int64_t factorial(int n) {
  std::int64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

std::uint32_t code_of(SignedIndex s) {
  return static_cast<std::uint32_t>(s.index * 2 + (s.erroneous ? 1 : 0));
}

double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

bool accurate_ending_in_one(const PartialPermutation& s) {
  if (s.back().index != 1) return false;
  return std::none_of(s.entries().begin(), s.entries().end(),
                      [](const SignedIndex& e) { return e.erroneous; });
}

// Whether sigma can appear in some coverage row with nonempty E.
bool in_some_cover(const PartialPermutation& s) {
  if (!s.back().erroneous) return false;
  const int top = s.back().index;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (s[i].erroneous && s[i].index > top) return false;
  }
  return true;
}

bool in_cover(const PartialPermutation& s, ErrorMask mask) {
  return consistent_with(s, mask) && s.back() == optimal_for(mask);
}

SignedIndex signed_for(int index, ErrorMask mask) {
  return {index, index >= 2 && ((mask >> (index - 2)) & 1u)};
}

void check_n(int n) {
  if (n < 2 || n > kMaxEnumerateN) {
    throw std::invalid_argument("n must satisfy 2 <= n <= 7, got " + std::to_string(n));
  }
}

}  // namespace

PartialPermutation::PartialPermutation(std::vector<SignedIndex> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("partial permutation is empty");
  std::vector<int> seen;
  for (const auto& e : entries_) {
    if (e.index < 1 || e.index > kMaxEnumerateN) {
      throw std::invalid_argument("partial permutation index out of range");
    }
    if (e.index == 1 && e.erroneous) {
      throw std::invalid_argument("candidate 1 cannot be erroneous");
    }
    if (std::find(seen.begin(), seen.end(), e.index) != seen.end()) {
      throw std::invalid_argument("partial permutation repeats an index");
    }
    seen.push_back(e.index);
  }
}

std::uint32_t PartialPermutation::key() const {
  std::uint32_t k = 0;
  for (std::size_t i = 0; i < entries_.size(); ++i) k |= code_of(entries_[i]) << (4 * i);
  return k;
}

std::string PartialPermutation::label() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += '_';
    out += std::to_string(entries_[i].index);
    if (entries_[i].erroneous) out += 'e';
  }
  return out;
}

std::string PartialPermutation::variable_name() const { return "x_" + label(); }

PartialPermutation PartialPermutation::from_label(std::string_view label) {
  std::vector<SignedIndex> entries;
  std::size_t pos = 0;
  while (pos <= label.size()) {
    const std::size_t next = std::min(label.find('_', pos), label.size());
    std::string_view part = label.substr(pos, next - pos);
    SignedIndex s;
    if (!part.empty() && part.back() == 'e') {
      s.erroneous = true;
      part.remove_suffix(1);
    }
    if (part.size() != 1 || part[0] < '1' || part[0] > '9') {
      throw std::invalid_argument("bad partial permutation label: " + std::string(label));
    }
    s.index = part[0] - '0';
    entries.push_back(s);
    pos = next + 1;
  }
  return PartialPermutation(std::move(entries));
}

int SigmaSet::find(const PartialPermutation& sigma) const {
  const auto it = index.find(sigma.key());
  return it == index.end() ? -1 : it->second;
}

int SigmaSet::child(int id, SignedIndex next) const {
  const auto& s = items[static_cast<std::size_t>(id)];
  const std::uint32_t k = s.key() | (code_of(next) << (4 * s.size()));
  const auto it = index.find(k);
  return it == index.end() ? -1 : it->second;
}

SigmaSet enumerate_sigma(int n) {
  check_n(n);
  SigmaSet set;
  set.n = n;
  std::vector<SignedIndex> alphabet;
  for (int i = 1; i <= n; ++i) {
    alphabet.push_back({i, false});
    if (i >= 2) alphabet.push_back({i, true});
  }
  for (const auto& s : alphabet) {
    set.items.push_back(PartialPermutation({s}));
    set.parent.push_back(-1);
  }
  std::size_t level_begin = 0;
  std::size_t level_end = set.items.size();
  for (int len = 2; len <= n; ++len) {
    for (std::size_t p = level_begin; p < level_end; ++p) {
      const std::vector<SignedIndex> base = set.items[p].entries();
      for (const auto& s : alphabet) {
        const bool used = std::any_of(base.begin(), base.end(),
                                      [&](const SignedIndex& e) { return e.index == s.index; });
        if (used) continue;
        std::vector<SignedIndex> entries = base;
        entries.push_back(s);
        set.items.push_back(PartialPermutation(std::move(entries)));
        set.parent.push_back(static_cast<int>(p));
      }
    }
    level_begin = level_end;
    level_end = set.items.size();
  }
  set.index.reserve(set.items.size());
  for (std::size_t i = 0; i < set.items.size(); ++i) {
    set.index.emplace(set.items[i].key(), static_cast<int>(i));
  }
  return set;
}

std::vector<int> error_members(ErrorMask mask) {
  std::vector<int> out;
  for (int bit = 0; bit < 31; ++bit) {
    if ((mask >> bit) & 1u) out.push_back(bit + 2);
  }
  return out;
}

ErrorMask error_mask(std::span<const int> members) {
  ErrorMask mask = 0;
  for (int i : members) {
    if (i < 2 || i > 32) throw std::invalid_argument("error set members must be >= 2");
    mask |= 1u << (i - 2);
  }
  return mask;
}

std::string error_label(ErrorMask mask) {
  if (mask == 0) return "empty";
  std::string out;
  for (int i : error_members(mask)) {
    if (!out.empty()) out += '_';
    out += std::to_string(i);
  }
  return out;
}

SignedIndex optimal_for(ErrorMask mask) {
  if (mask == 0) return {1, false};
  return {error_members(mask).back(), true};
}

bool consistent_with(const PartialPermutation& sigma, ErrorMask mask) {
  return std::all_of(sigma.entries().begin(), sigma.entries().end(),
                     [&](const SignedIndex& e) { return e == signed_for(e.index, mask); });
}

std::string LPModel::variable_name(int variable) const {
  if (variable == z_variable()) return "z";
  return sigma.items[static_cast<std::size_t>(variable)].variable_name();
}

LPModel build_lp(int n) {
  LPModel model;
  model.n = n;
  model.sigma = enumerate_sigma(n);
  const std::int64_t nfact = factorial(n);
  const auto& items = model.sigma.items;

  for (std::size_t id = 0; id < items.size(); ++id) {
    const auto& s = items[id];
    const int len = static_cast<int>(s.size());
    const std::int64_t head = factorial(n - len);
    ModelRow row;
    row.kind = RowKind::kReach;
    row.sigma = static_cast<int>(id);
    row.sense = Sense::kLessEqual;
    row.rhs = Rational(head, nfact);
    std::vector<int> prefixes;
    for (int p = model.sigma.parent[id]; p >= 0; p = model.sigma.parent[static_cast<std::size_t>(p)]) {
      prefixes.push_back(p);
    }
    std::reverse(prefixes.begin(), prefixes.end());
    row.terms.push_back({static_cast<int>(id), Rational(1)});
    for (int p : prefixes) {
      const int i = static_cast<int>(items[static_cast<std::size_t>(p)].size());
      row.terms.push_back({p, Rational(head, factorial(n - i))});
    }
    model.rows.push_back(std::move(row));
  }

  for (std::size_t id = 0; id < items.size(); ++id) {
    if (!accurate_ending_in_one(items[id])) continue;
    ModelRow row;
    row.kind = RowKind::kFix;
    row.sigma = static_cast<int>(id);
    row.sense = Sense::kEqual;
    row.rhs = Rational(factorial(n - static_cast<int>(items[id].size())), nfact);
    row.terms.push_back({static_cast<int>(id), Rational(1)});
    model.rows.push_back(std::move(row));
  }

  const ErrorMask subsets = 1u << (n - 1);
  for (ErrorMask mask = 0; mask < subsets; ++mask) {
    ModelRow row;
    row.kind = RowKind::kCover;
    row.subset = mask;
    row.sense = Sense::kGreaterEqual;
    row.rhs = Rational(0);
    for (std::size_t id = 0; id < items.size(); ++id) {
      if (in_cover(items[id], mask)) row.terms.push_back({static_cast<int>(id), Rational(1)});
    }
    row.terms.push_back({model.z_variable(), Rational(-1)});
    model.rows.push_back(std::move(row));
  }
  return model;
}

double max_violation(const LPModel& model, std::span<const double> x, double z) {
  if (x.size() != model.sigma.size()) throw std::invalid_argument("solution has wrong length");
  double worst = 0.0;
  for (double v : x) worst = std::max(worst, -v);
  for (const auto& row : model.rows) {
    double lhs = 0.0;
    for (const auto& t : row.terms) {
      const double v = t.variable == model.z_variable() ? z : x[static_cast<std::size_t>(t.variable)];
      lhs += to_double(t.coefficient) * v;
    }
    const double rhs = to_double(row.rhs);
    switch (row.sense) {
      case Sense::kLessEqual: worst = std::max(worst, lhs - rhs); break;
      case Sense::kGreaterEqual: worst = std::max(worst, rhs - lhs); break;
      case Sense::kEqual: worst = std::max(worst, std::abs(lhs - rhs)); break;
    }
  }
  return worst;
}

LpSolution solve_lp(const LPModel& model) {
  if (model.n > kEmbeddedSolveMaxN) {
    throw BudgetExceeded("embedded LP solve supports n <= " +
                         std::to_string(kEmbeddedSolveMaxN) + "; export the model instead");
  }
  const auto& items = model.sigma.items;
  const std::size_t count = items.size();

  std::vector<double> fixed(count, 0.0);
  std::vector<int> column(count, -1);
  std::vector<int> kept;
  for (const auto& row : model.rows) {
    if (row.kind == RowKind::kFix) fixed[static_cast<std::size_t>(row.sigma)] = to_double(row.rhs);
  }
  for (std::size_t id = 0; id < count; ++id) {
    if (in_some_cover(items[id])) {
      column[id] = static_cast<int>(kept.size());
      kept.push_back(static_cast<int>(id));
    }
  }
  const std::size_t zcol = kept.size();
  const double scale = static_cast<double>(factorial(model.n));

  std::vector<std::vector<std::pair<std::size_t, double>>> sparse_rows;
  std::vector<double> b;
  for (const auto& row : model.rows) {
    if (row.kind == RowKind::kFix) continue;
    if (row.kind == RowKind::kReach && column[static_cast<std::size_t>(row.sigma)] < 0) continue;
    const double sign = row.sense == Sense::kGreaterEqual ? -1.0 : 1.0;
    const double row_scale = row.kind == RowKind::kReach ? scale : 1.0;
    double rhs = sign * to_double(row.rhs) * row_scale;
    std::vector<std::pair<std::size_t, double>> entries;
    for (const auto& t : row.terms) {
      const double coef = sign * to_double(t.coefficient) * row_scale;
      if (t.variable == model.z_variable()) {
        entries.emplace_back(zcol, coef);
        continue;
      }
      const auto v = static_cast<std::size_t>(t.variable);
      if (column[v] >= 0) {
        entries.emplace_back(static_cast<std::size_t>(column[v]), coef);
      } else {
        rhs -= coef * fixed[v];
      }
    }
    sparse_rows.push_back(std::move(entries));
    b.push_back(rhs);
  }

  DenseMatrix a(sparse_rows.size(), kept.size() + 1);
  for (std::size_t r = 0; r < sparse_rows.size(); ++r) {
    for (const auto& [c, v] : sparse_rows[r]) a(r, c) += v;
  }
  std::vector<double> cost(kept.size() + 1, 0.0);
  cost[zcol] = 1.0;
  const SimplexResult res = simplex_maximize(a, b, cost);

  LpSolution sol;
  sol.status = res.status;
  sol.iterations = res.iterations;
  sol.reduced_variables = kept.size();
  sol.x = fixed;
  if (res.status != LpStatus::kOptimal) return sol;
  for (std::size_t k = 0; k < kept.size(); ++k) {
    sol.x[static_cast<std::size_t>(kept[k])] = std::max(0.0, res.x[k]);
  }
  sol.z = res.x[zcol];
  sol.max_residual = max_violation(model, sol.x, sol.z);
  return sol;
}

LpProblem to_lp_problem(const LPModel& model) {
  LpProblem p;
  std::ostringstream comment;
  std::size_t reach = 0, fix = 0, cover = 0;
  for (const auto& row : model.rows) {
    reach += row.kind == RowKind::kReach;
    fix += row.kind == RowKind::kFix;
    cover += row.kind == RowKind::kCover;
  }
  comment << "hardness LP over partial permutations, n = " << model.n << '\n'
          << "variables: " << model.variable_count() << '\n'
          << "rows: " << model.rows.size() << " (reach " << reach << ", fix " << fix
          << ", cover " << cover << ")\n"
          << "reach and fix rows are scaled by n! = " << factorial(model.n);
  p.comment = comment.str();
  p.maximize = true;
  p.objective_name = "obj";
  p.objective.push_back({"z", Rational(1)});
  const Rational scale(factorial(model.n));
  for (const auto& row : model.rows) {
    LpRow out;
    const Rational f = row.kind == RowKind::kCover ? Rational(1) : scale;
    switch (row.kind) {
      case RowKind::kReach:
        out.name = "reach_" + model.sigma.items[static_cast<std::size_t>(row.sigma)].label();
        break;
      case RowKind::kFix:
        out.name = "fix_" + model.sigma.items[static_cast<std::size_t>(row.sigma)].label();
        break;
      case RowKind::kCover:
        out.name = "cover_" + error_label(row.subset);
        break;
    }
    for (const auto& t : row.terms) out.terms.push_back({model.variable_name(t.variable), t.coefficient * f});
    out.sense = row.sense;
    out.rhs = row.rhs * f;
    p.rows.push_back(std::move(out));
  }
  p.free_variables.push_back("z");
  return p;
}

LPModel model_from_lp_problem(const LpProblem& problem) {
  int n = 0;
  for (const auto& row : problem.rows) {
    for (const auto& t : row.terms) {
      if (t.variable == "z") continue;
      if (t.variable.rfind("x_", 0) != 0) {
        throw std::invalid_argument("unknown LP variable: " + t.variable);
      }
      const PartialPermutation s = PartialPermutation::from_label(t.variable.substr(2));
      for (const auto& e : s.entries()) n = std::max(n, e.index);
    }
  }
  LPModel model;
  model.n = n;
  model.sigma = enumerate_sigma(n);
  const Rational scale(factorial(n));

  auto variable_id = [&](const std::string& name) {
    if (name == "z") return model.z_variable();
    const int id = model.sigma.find(PartialPermutation::from_label(name.substr(2)));
    if (id < 0) throw std::invalid_argument("LP variable outside Sigma: " + name);
    return id;
  };

  for (const auto& in : problem.rows) {
    ModelRow row;
    Rational f = 1;
    if (in.name.rfind("reach_", 0) == 0) {
      row.kind = RowKind::kReach;
      row.sigma = model.sigma.find(PartialPermutation::from_label(in.name.substr(6)));
      f = scale;
    } else if (in.name.rfind("fix_", 0) == 0) {
      row.kind = RowKind::kFix;
      row.sigma = model.sigma.find(PartialPermutation::from_label(in.name.substr(4)));
      f = scale;
    } else if (in.name.rfind("cover_", 0) == 0) {
      row.kind = RowKind::kCover;
      const std::string label = in.name.substr(6);
      if (label != "empty") {
        std::vector<int> members;
        std::istringstream parts(label);
        std::string part;
        while (std::getline(parts, part, '_')) members.push_back(std::stoi(part));
        row.subset = error_mask(members);
      }
    } else {
      throw std::invalid_argument("unknown LP row: " + in.name);
    }
    if (row.kind != RowKind::kCover && row.sigma < 0) {
      throw std::invalid_argument("LP row outside Sigma: " + in.name);
    }
    for (const auto& t : in.terms) row.terms.push_back({variable_id(t.variable), t.coefficient / f});
    row.sense = in.sense;
    row.rhs = in.rhs / f;
    model.rows.push_back(std::move(row));
  }
  return model;
}

std::string export_lp_text(const LPModel& model) { return write_lp(to_lp_problem(model)); }

void export_lp(const LPModel& model, const std::filesystem::path& path) {
  save_lp(to_lp_problem(model), path);
}

LpSolution import_solution(const LPModel& model, const LpSolutionValues& values) {
  LpSolution sol;
  sol.x.assign(model.sigma.size(), 0.0);
  for (const auto& [name, value] : values) {
    if (name == "z") {
      sol.z = value;
      continue;
    }
    if (name.rfind("x_", 0) != 0) throw std::invalid_argument("unknown variable: " + name);
    const int id = model.sigma.find(PartialPermutation::from_label(name.substr(2)));
    if (id < 0) throw std::invalid_argument("variable outside Sigma: " + name);
    sol.x[static_cast<std::size_t>(id)] = value;
  }
  sol.max_residual = max_violation(model, sol.x, sol.z);
  return sol;
}

LpSolutionValues solution_values(const LPModel& model, const LpSolution& solution) {
  LpSolutionValues values;
  values["z"] = solution.z;
  for (std::size_t id = 0; id < solution.x.size(); ++id) {
    if (solution.x[id] != 0.0) values[model.sigma.items[id].variable_name()] = solution.x[id];
  }
  return values;
}

void RandomizedPolicy::set(const PartialPermutation& s, double value) {
  const int id = sigma.find(s);
  if (id < 0) throw std::invalid_argument("sequence outside Sigma: " + s.label());
  hire[static_cast<std::size_t>(id)] = value;
}

RandomizedPolicy policy_from_lp(const LPModel& model, std::span<const double> x) {
  if (x.size() != model.sigma.size()) throw std::invalid_argument("solution has wrong length");
  RandomizedPolicy policy(model.sigma);
  const int n = model.n;
  std::vector<double> reach(x.size(), 0.0);
  for (std::size_t id = 0; id < x.size(); ++id) {
    const int p = model.sigma.parent[id];
    if (p < 0) {
      reach[id] = 1.0 / n;
    } else {
      const auto pid = static_cast<std::size_t>(p);
      const double len = static_cast<double>(model.sigma.items[pid].size());
      reach[id] = std::max(0.0, (reach[pid] - x[pid]) / (n - len));
    }
    if (x[id] < -kPolicyTolerance || x[id] > reach[id] + kPolicyTolerance) {
      throw std::invalid_argument("x is infeasible at " + model.sigma.items[id].label());
    }
    policy.hire[id] = reach[id] > 0.0 ? std::clamp(x[id] / reach[id], 0.0, 1.0) : 0.0;
  }
  return policy;
}

double exact_policy_value(const RandomizedPolicy& policy, ErrorMask subset) {
  const int n = policy.n();
  const SignedIndex target = optimal_for(subset);
  double total = 0.0;
  // Depth-first over E-consistent prefixes, carrying Pr(observe prefix, no hire).
  auto visit = [&](auto&& self, int id, std::uint32_t used, double alive, int len) -> void {
    const double h = policy.h(id);
    if (policy.sigma.items[static_cast<std::size_t>(id)].back() == target) total += alive * h;
    const double rest = alive * (1.0 - h);
    if (rest <= 0.0 || len == n) return;
    const double step = rest / (n - len);
    for (int c = 1; c <= n; ++c) {
      if ((used >> c) & 1u) continue;
      self(self, policy.sigma.child(id, signed_for(c, subset)), used | (1u << c), step, len + 1);
    }
  };
  for (int c = 1; c <= n; ++c) {
    const int id = policy.sigma.find(PartialPermutation({signed_for(c, subset)}));
    visit(visit, id, 1u << c, 1.0 / n, 1);
  }
  return total;
}

double policy_success_on_order(const RandomizedPolicy& policy, const Instance& instance,
                               std::span<const CandidateId> order) {
  if (instance.size() != policy.n() || order.size() != static_cast<std::size_t>(policy.n())) {
    throw std::invalid_argument("policy and instance sizes differ");
  }
  const CandidateId best = best_actual(instance);
  double alive = 1.0;
  double success = 0.0;
  int id = -1;
  for (CandidateId c : order) {
    const SignedIndex s{c, instance.actual(c) != instance.predicted(c)};
    id = id < 0 ? policy.sigma.find(PartialPermutation({s})) : policy.sigma.child(id, s);
    const double h = policy.h(id);
    if (c == best) success += alive * h;
    alive *= 1.0 - h;
  }
  return success;
}

Certificate certify(const RandomizedPolicy& policy) {
  Certificate cert;
  const ErrorMask subsets = 1u << (policy.n() - 1);
  cert.min_value = 1.0;
  for (ErrorMask mask = 0; mask < subsets; ++mask) {
    const double v = exact_policy_value(policy, mask);
    cert.subsets.push_back(mask);
    cert.values.push_back(v);
    cert.min_value = std::min(cert.min_value, v);
  }
  return cert;
}

Instance instance_family(int n, ErrorMask subset, double L) {
  if (n < 2) throw std::invalid_argument("instance family needs n >= 2");
  if (!(L > 1.0)) throw std::invalid_argument("instance family needs L > 1");
  if (!std::isfinite(std::pow(L, n))) throw std::overflow_error("L^n overflows");
  if (subset >> (n - 1)) throw std::invalid_argument("error set exceeds {2..n}");
  std::vector<double> actual(static_cast<std::size_t>(n), 1.0);
  std::vector<double> predicted(static_cast<std::size_t>(n), 1.0);
  actual[0] = predicted[0] = L;
  for (int i : error_members(subset)) actual[static_cast<std::size_t>(i - 1)] = std::pow(L, i);
  return Instance(std::move(actual), std::move(predicted), 1);
}

RandomizedPolicy restricted_policy(int n, std::uint32_t first_hire) {
  RandomizedPolicy policy(enumerate_sigma(n));
  for (std::size_t id = 0; id < policy.sigma.size(); ++id) {
    const auto& s = policy.sigma.items[id];
    const SignedIndex last = s.back();
    double h = 0.0;
    if (last.index == 1) {
      h = accurate_ending_in_one(s) ? 1.0 : 0.0;
    } else if (last.erroneous) {
      h = s.size() >= 2 ? 1.0 : static_cast<double>((first_hire >> (last.index - 2)) & 1u);
    }
    policy.hire[id] = h;
  }
  return policy;
}

CeilingReport deterministic_ceiling_check(int n, double L) {
  if (n != 4) throw std::invalid_argument("deterministic_ceiling_check is defined for n = 4");
  CeilingReport report;
  report.n = n;
  const ErrorMask subsets = 1u << (n - 1);
  for (ErrorMask mask = 1; mask < subsets; ++mask) report.subsets.push_back(mask);

  std::vector<CandidateId> order(static_cast<std::size_t>(n));
  for (std::uint32_t bits = 0; bits < subsets; ++bits) {
    const RandomizedPolicy policy = restricted_policy(n, bits);
    CeilingEntry entry;
    entry.first_hire = bits;
    entry.qualifies = true;
    entry.min_value = 1.0;
    for (ErrorMask mask : report.subsets) {
      const Instance inst = instance_family(n, mask, L);
      std::iota(order.begin(), order.end(), 1);
      double sum = 0.0;
      int orders = 0;
      do {
        sum += policy_success_on_order(policy, inst, order);
        ++orders;
      } while (std::next_permutation(order.begin(), order.end()));
      const double v = sum / orders;
      entry.values.push_back(v);
      entry.min_value = std::min(entry.min_value, v);
      if (std::has_single_bit(mask) && !(v > 0.25)) entry.qualifies = false;
    }
    if (entry.qualifies && entry.min_value > 0.25 + 1e-12) report.holds = false;
    report.policies.push_back(std::move(entry));
  }
  return report;
}

}  // namespace secretary
