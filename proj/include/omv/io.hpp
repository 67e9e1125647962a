#pragma once

// Text formats.
//
// Instance file:
//   OMV 1
//   problem <bool|eq|dom|minwit|minmax|bmmp>
//   n <int>
//   monotone <rows|cols|query|stream>      (bmmp only)
//   <n matrix rows of n values>
//   queries <q>
//   <q query rows of n values>
//
// Answer file: one line of n values per query. Values are decimal integers
// or inf / -inf.

#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "omv/error.hpp"
#include "omv/matrix.hpp"
#include "omv/problem.hpp"
#include "omv/value.hpp"

namespace omv {

struct Instance {
  Problem problem = ProblemKind::boolean;
  SquareMatrix matrix;
  std::vector<ColumnVector> queries;

  bool operator==(const Instance&) const = default;
};

namespace io {

/// Reads lines, skipping blank ones, and tracks line numbers for messages.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  /// Next non-blank line with surrounding whitespace removed.
  std::optional<std::string> next() {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos) continue;
      const auto last = line.find_last_not_of(" \t\r");
      return line.substr(first, last - first + 1);
    }
    return std::nullopt;
  }

  std::string require(const char* what) {
    auto line = next();
    if (!line) fail(std::string("unexpected end of input, expected ") + what);
    return *line;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("line " + std::to_string(line_no_) + ": " + msg);
  }

  std::size_t line_no() const { return line_no_; }

 private:
  std::istream& in_;
  std::size_t line_no_ = 0;
};

inline std::vector<Value> split_values(const std::string& line) {
  std::vector<Value> out;
  std::istringstream in(line);
  std::string token;
  while (in >> token) out.push_back(parse_value(token));
  return out;
}

inline ColumnVector parse_row(LineReader& r, const std::string& line, std::size_t n,
                              Domain domain) {
  std::vector<Value> values;
  try {
    values = split_values(line);
  } catch (const ParseError& e) {
    r.fail(e.what());
  }
  if (values.size() != n) {
    r.fail("expected " + std::to_string(n) + " values, got " +
           std::to_string(values.size()));
  }
  return ColumnVector(std::move(values), domain);
}

/// "<keyword> <argument>"; returns the argument.
inline std::string keyword_line(LineReader& r, const std::string& line,
                                const std::string& keyword) {
  std::istringstream in(line);
  std::string key;
  std::string arg;
  std::string extra;
  if (!(in >> key >> arg) || key != keyword || (in >> extra)) {
    r.fail("expected '" + keyword + " <value>'");
  }
  return arg;
}

inline std::size_t parse_count(LineReader& r, const std::string& s) {
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    r.fail("not a count: " + s);
  }
  if (pos != s.size() || v < 0) r.fail("not a count: " + s);
  return static_cast<std::size_t>(v);
}

/// Header, optional monotone line and matrix rows. Leaves the reader just
/// past the last matrix row.
inline Instance read_header_and_matrix(LineReader& r) {
  if (r.require("header") != "OMV 1") r.fail("expected 'OMV 1'");
  ProblemKind kind{};
  try {
    kind = parse_problem_kind(keyword_line(r, r.require("problem line"), "problem"));
  } catch (const ParseError& e) {
    r.fail(e.what());
  }
  const std::size_t n = parse_count(r, keyword_line(r, r.require("dimension line"), "n"));
  if (n == 0) r.fail("dimension must be positive");

  std::string line = r.require("matrix");
  std::optional<Monotonicity> mono;
  if (line.rfind("monotone", 0) == 0) {
    if (kind != ProblemKind::bounded_min_plus) r.fail("monotone line only allowed for bmmp");
    try {
      mono = parse_monotonicity(keyword_line(r, line, "monotone"));
    } catch (const ParseError& e) {
      r.fail(e.what());
    }
    line = r.require("matrix");
  } else if (kind == ProblemKind::bounded_min_plus) {
    r.fail("bmmp instance needs a 'monotone' line");
  }

  Instance inst{mono ? Problem(kind, *mono) : Problem(kind), SquareMatrix(n), {}};
  const Domain domain = domain_of(kind);
  inst.matrix.set_domain(domain);
  for (Index i = 0; i < n; ++i) {
    if (i > 0) line = r.require("matrix row");
    const ColumnVector row = parse_row(r, line, n, domain);
    for (Index k = 0; k < n; ++k) inst.matrix(i, k) = row[k];
  }
  return inst;
}

inline Instance read_instance(std::istream& in) {
  LineReader r(in);
  Instance inst = read_header_and_matrix(r);
  const std::size_t n = inst.matrix.dimension();
  const std::size_t q = parse_count(r, keyword_line(r, r.require("queries line"), "queries"));
  const Domain domain = domain_of(inst.problem.kind());
  for (std::size_t j = 0; j < q; ++j) {
    inst.queries.push_back(parse_row(r, r.require("query row"), n, domain));
  }
  if (auto extra = r.next()) r.fail("trailing content");
  return inst;
}

inline Instance parse_instance(const std::string& text) {
  std::istringstream in(text);
  return read_instance(in);
}

inline void write_row(std::ostream& out, std::span<const Value> values) {
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k > 0) out << ' ';
    out << to_string(values[k]);
  }
  out << '\n';
}

inline void write_header_and_matrix(std::ostream& out, const Instance& inst) {
  out << "OMV 1\n";
  out << "problem " << short_name(inst.problem.kind()) << '\n';
  out << "n " << inst.matrix.dimension() << '\n';
  if (auto mono = inst.problem.monotone()) out << "monotone " << short_name(*mono) << '\n';
  for (Index i = 0; i < inst.matrix.dimension(); ++i) write_row(out, inst.matrix.row(i));
}

inline void write_instance(std::ostream& out, const Instance& inst) {
  write_header_and_matrix(out, inst);
  out << "queries " << inst.queries.size() << '\n';
  for (const auto& v : inst.queries) write_row(out, v.values());
}

inline std::string print_instance(const Instance& inst) {
  std::ostringstream out;
  write_instance(out, inst);
  return out.str();
}

inline std::vector<ColumnVector> read_answers(std::istream& in) {
  LineReader r(in);
  std::vector<ColumnVector> out;
  while (auto line = r.next()) {
    try {
      out.emplace_back(split_values(*line));
    } catch (const ParseError& e) {
      r.fail(e.what());
    }
  }
  return out;
}

inline std::vector<ColumnVector> parse_answers(const std::string& text) {
  std::istringstream in(text);
  return read_answers(in);
}

inline void write_answers(std::ostream& out, const std::vector<ColumnVector>& answers) {
  for (const auto& a : answers) write_row(out, a.values());
}

}  // namespace io

}  // namespace omv
