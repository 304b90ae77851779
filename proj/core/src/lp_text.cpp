#include "secretary/lp_text.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace secretary {

namespace {

constexpr std::size_t kLineWidth = 80;

enum class Section { kNone, kObjective, kConstraints, kBounds, kEnd };

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& ch : out) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string format_rational(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string_view sense_token(Sense s) {
  switch (s) {
    case Sense::kLessEqual: return "<=";
    case Sense::kEqual: return "=";
    case Sense::kGreaterEqual: return ">=";
  }
  return "<=";
}

// Appends the terms of a linear expression, wrapping long lines.
void write_terms(std::ostringstream& out, std::string line,
                 const std::vector<LpTerm>& terms) {
  bool first = true;
  for (const auto& term : terms) {
    std::string piece;
    Rational coef = term.coefficient;
    if (coef < Rational(0)) {
      piece = "- ";
      coef = -coef;
    } else if (!first) {
      piece = "+ ";
    }
    if (coef != Rational(1)) piece += format_rational(coef) + " ";
    piece += term.variable;
    if (line.size() + piece.size() + 1 > kLineWidth && !first) {
      out << line << '\n';
      line = "   ";
    }
    line += ' ';
    line += piece;
    first = false;
  }
  if (terms.empty()) line += " 0";
  out << line;
}

Rational parse_rational(std::string_view token, std::size_t line_no) {
  auto fail = [&]() -> Rational {
    throw std::invalid_argument("LP line " + std::to_string(line_no) +
                                ": bad number '" + std::string(token) + "'");
  };
  std::int64_t num = 0, den = 1;
  const auto slash = token.find('/');
  const std::string_view a = token.substr(0, slash);
  const char* begin = a.data();
  if (!a.empty() && a.front() == '+') ++begin;
  auto [p, ec] = std::from_chars(begin, a.data() + a.size(), num);
  if (ec != std::errc() || p != a.data() + a.size()) {
    // Decimal fallback, exact for short decimal literals.
    const auto dot = token.find('.');
    if (slash != std::string_view::npos || dot == std::string_view::npos) return fail();
    std::string digits(token.substr(0, dot));
    std::string frac(token.substr(dot + 1));
    if (frac.size() > 15) return fail();
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    std::int64_t whole = 0, part = 0;
    const bool negative = !digits.empty() && digits.front() == '-';
    if (negative || (!digits.empty() && digits.front() == '+')) digits.erase(0, 1);
    if (!digits.empty() &&
        std::from_chars(digits.data(), digits.data() + digits.size(), whole).ec != std::errc()) {
      return fail();
    }
    if (!frac.empty() &&
        std::from_chars(frac.data(), frac.data() + frac.size(), part).ec != std::errc()) {
      return fail();
    }
    Rational r(whole * scale + part, scale);
    return negative ? -r : r;
  }
  if (slash != std::string_view::npos) {
    const std::string_view b = token.substr(slash + 1);
    auto [q, ec2] = std::from_chars(b.data(), b.data() + b.size(), den);
    if (ec2 != std::errc() || q != b.data() + b.size() || den == 0) return fail();
  }
  return Rational(num, den);
}

bool is_number_start(std::string_view token) {
  return !token.empty() &&
         (std::isdigit(static_cast<unsigned char>(token.front())) || token.front() == '.');
}

bool is_sense(std::string_view token) {
  return token == "<=" || token == ">=" || token == "=" || token == "<" ||
         token == ">" || token == "=<" || token == "=>";
}

Sense to_sense(std::string_view token) {
  if (token == "=") return Sense::kEqual;
  if (token == ">=" || token == ">" || token == "=>") return Sense::kGreaterEqual;
  return Sense::kLessEqual;
}

struct Token {
  std::string text;
  std::size_t line;
};

// Parses "[name:] terms" from the token stream, stopping at a sense token or
// the end of the stream.
std::vector<LpTerm> parse_terms(const std::vector<Token>& tokens, std::size_t& pos) {
  std::vector<LpTerm> terms;
  Rational sign = 1;
  Rational coef = 1;
  while (pos < tokens.size() && !is_sense(tokens[pos].text)) {
    const Token& tok = tokens[pos++];
    if (tok.text == "+") continue;
    if (tok.text == "-") {
      sign = -sign;
      continue;
    }
    if (is_number_start(tok.text)) {
      coef = parse_rational(tok.text, tok.line);
      continue;
    }
    terms.push_back({tok.text, sign * coef});
    sign = 1;
    coef = 1;
  }
  return terms;
}

std::vector<Token> tokenize(const std::vector<std::pair<std::string, std::size_t>>& lines) {
  std::vector<Token> tokens;
  for (const auto& [text, line_no] : lines) {
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) tokens.push_back({tok, line_no});
  }
  return tokens;
}

std::string take_name(const std::vector<Token>& tokens, std::size_t& pos) {
  if (pos < tokens.size() && tokens[pos].text.size() > 1 && tokens[pos].text.back() == ':') {
    const std::string& t = tokens[pos++].text;
    return t.substr(0, t.size() - 1);
  }
  return {};
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace

std::string write_lp(const LpProblem& problem) {
  std::ostringstream out;
  if (!problem.comment.empty()) {
    std::istringstream lines(problem.comment);
    std::string line;
    while (std::getline(lines, line)) out << "\\ " << line << '\n';
  }
  out << (problem.maximize ? "Maximize" : "Minimize") << '\n';
  write_terms(out, " " + problem.objective_name + ":", problem.objective);
  out << "\nSubject To\n";
  for (const auto& row : problem.rows) {
    write_terms(out, " " + row.name + ":", row.terms);
    out << ' ' << sense_token(row.sense) << ' ' << format_rational(row.rhs) << '\n';
  }
  if (!problem.free_variables.empty()) {
    out << "Bounds\n";
    for (const auto& v : problem.free_variables) out << ' ' << v << " free\n";
  }
  out << "End\n";
  return out.str();
}

LpProblem parse_lp(std::string_view text) {
  LpProblem problem;
  problem.objective_name.clear();
  Section section = Section::kNone;
  std::vector<std::pair<std::string, std::size_t>> objective_lines, constraint_lines;
  std::vector<std::string> comments;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size() && section != Section::kEnd) {
    const std::size_t nl = text.find('\n', start);
    const std::string_view raw =
        text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
    start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '\\') {
      comments.emplace_back(trim(line.substr(1)));
      continue;
    }
    const std::string key = lower(line);
    if (key == "maximize" || key == "maximum" || key == "max") {
      problem.maximize = true;
      section = Section::kObjective;
    } else if (key == "minimize" || key == "minimum" || key == "min") {
      problem.maximize = false;
      section = Section::kObjective;
    } else if (key == "subject to" || key == "such that" || key == "st" || key == "s.t.") {
      section = Section::kConstraints;
    } else if (key == "bounds" || key == "bound") {
      section = Section::kBounds;
    } else if (key == "end") {
      section = Section::kEnd;
    } else if (section == Section::kObjective) {
      objective_lines.emplace_back(std::string(line), line_no);
    } else if (section == Section::kConstraints) {
      constraint_lines.emplace_back(std::string(line), line_no);
    } else if (section == Section::kBounds) {
      std::istringstream in{std::string(line)};
      std::string var, word, extra;
      in >> var >> word;
      if (lower(word) != "free" || (in >> extra)) {
        throw std::invalid_argument("LP line " + std::to_string(line_no) +
                                    ": only 'name free' bounds are supported");
      }
      problem.free_variables.push_back(var);
    } else {
      throw std::invalid_argument("LP line " + std::to_string(line_no) +
                                  ": content outside any section");
    }
  }
  if (section != Section::kEnd) throw std::invalid_argument("LP text is missing End");

  for (std::size_t i = 0; i < comments.size(); ++i) {
    if (i) problem.comment += '\n';
    problem.comment += comments[i];
  }

  {
    const auto tokens = tokenize(objective_lines);
    std::size_t pos = 0;
    problem.objective_name = take_name(tokens, pos);
    problem.objective = parse_terms(tokens, pos);
    if (pos != tokens.size()) throw std::invalid_argument("LP objective has a relation");
  }

  const auto tokens = tokenize(constraint_lines);
  std::size_t pos = 0;
  while (pos < tokens.size()) {
    LpRow row;
    const std::size_t row_line = tokens[pos].line;
    row.name = take_name(tokens, pos);
    if (row.name.empty()) row.name = "c" + std::to_string(problem.rows.size() + 1);
    row.terms = parse_terms(tokens, pos);
    if (pos + 1 >= tokens.size()) {
      throw std::invalid_argument("LP line " + std::to_string(row_line) +
                                  ": constraint without right-hand side");
    }
    row.sense = to_sense(tokens[pos++].text);
    Rational rhs_sign = 1;
    if (tokens[pos].text == "-") {
      rhs_sign = -1;
      ++pos;
    }
    row.rhs = rhs_sign * parse_rational(tokens[pos].text, tokens[pos].line);
    ++pos;
    problem.rows.push_back(std::move(row));
  }
  return problem;
}

void save_lp(const LpProblem& problem, const std::filesystem::path& path) {
  write_file(path, write_lp(problem));
}

LpProblem load_lp(const std::filesystem::path& path) { return parse_lp(read_file(path)); }

std::string write_solution(const LpSolutionValues& values) {
  std::ostringstream out;
  char buf[64];
  for (const auto& [name, value] : values) {
    std::snprintf(buf, sizeof buf, "%.17g", value);
    out << name << ' ' << buf << '\n';
  }
  return out.str();
}

LpSolutionValues parse_solution(std::string_view text) {
  LpSolutionValues values;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view t = trim(line);
    if (t.empty() || t.front() == '#' || t.front() == '\\') continue;
    std::istringstream fields{std::string(t)};
    std::string name, value, extra;
    fields >> name >> value;
    if (value.empty() || (fields >> extra)) {
      throw std::invalid_argument("solution line " + std::to_string(line_no) +
                                  ": expected 'variable value'");
    }
    try {
      std::size_t used = 0;
      const double v = std::stod(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
      values[name] = v;
    } catch (const std::exception&) {
      throw std::invalid_argument("solution line " + std::to_string(line_no) +
                                  ": bad value '" + value + "'");
    }
  }
  return values;
}

LpSolutionValues load_solution(const std::filesystem::path& path) {
  return parse_solution(read_file(path));
}

}  // namespace secretary
