#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

namespace secretary {

using Rational = boost::rational<std::int64_t>;

enum class Sense { kLessEqual, kEqual, kGreaterEqual };

struct LpTerm {
  std::string variable;
  Rational coefficient;
  bool operator==(const LpTerm&) const = default;
};

struct LpRow {
  std::string name;
  std::vector<LpTerm> terms;
  Sense sense = Sense::kLessEqual;
  Rational rhs;
  bool operator==(const LpRow&) const = default;
};

/// A linear program in the sections of the CPLEX LP text format. Variables
/// default to the bounds [0, +inf) unless listed as free.
struct LpProblem {
  std::string comment;
  bool maximize = true;
  std::string objective_name = "obj";
  std::vector<LpTerm> objective;
  std::vector<LpRow> rows;
  std::vector<std::string> free_variables;

  bool operator==(const LpProblem& other) const {
    return maximize == other.maximize && objective_name == other.objective_name &&
           objective == other.objective && rows == other.rows &&
           free_variables == other.free_variables;
  }
};

/// Writes Maximize/Minimize, Subject To, Bounds and End sections. Rational
/// coefficients are written as integers when integral, otherwise as p/q.
std::string write_lp(const LpProblem& problem);

/// Parses the subset of the LP format produced by write_lp. Throws
/// std::invalid_argument with a line number on malformed input.
LpProblem parse_lp(std::string_view text);

void save_lp(const LpProblem& problem, const std::filesystem::path& path);
LpProblem load_lp(const std::filesystem::path& path);

/// Solution vectors as whitespace-separated "variable value" lines. Lines
/// starting with '#' or '\' are comments.
using LpSolutionValues = std::map<std::string, double>;

std::string write_solution(const LpSolutionValues& values);
LpSolutionValues parse_solution(std::string_view text);
LpSolutionValues load_solution(const std::filesystem::path& path);

}  // namespace secretary
