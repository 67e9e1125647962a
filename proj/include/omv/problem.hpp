#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "omv/error.hpp"

namespace omv {

enum class ProblemKind {
  boolean,
  exists_equality,
  exists_dominance,
  min_witness,
  min_max,
  bounded_min_plus,
};

/// Which monotonicity guarantee a bounded min-plus instance carries.
enum class Monotonicity {
  rows,            // each row of M is nondecreasing
  columns,         // each column of M is nondecreasing
  within_query,    // each query vector is nondecreasing in k
  across_queries,  // v_j[k] is nondecreasing in j for every k
};

/// Value domain an operand is declared over.
enum class Domain { boolean, integer, bounded };

/// A problem kind together with its monotonicity case (present iff the kind
/// is bounded_min_plus).
class Problem {
 public:
  constexpr Problem(ProblemKind kind) : kind_(kind) {  // NOLINT
    if (kind == ProblemKind::bounded_min_plus) {
      throw ValidationError("bounded min-plus needs a monotonicity case");
    }
  }
  constexpr Problem(ProblemKind kind, Monotonicity monotone)
      : kind_(kind), monotone_(monotone) {
    if (kind != ProblemKind::bounded_min_plus) {
      throw ValidationError("monotonicity only applies to bounded min-plus");
    }
  }

  static constexpr Problem min_plus(Monotonicity m) {
    return Problem(ProblemKind::bounded_min_plus, m);
  }

  constexpr ProblemKind kind() const { return kind_; }
  constexpr std::optional<Monotonicity> monotone() const { return monotone_; }

  constexpr bool operator==(const Problem&) const = default;

 private:
  ProblemKind kind_;
  std::optional<Monotonicity> monotone_;
};

constexpr Domain domain_of(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::boolean:
    case ProblemKind::min_witness:
      return Domain::boolean;
    case ProblemKind::bounded_min_plus:
      return Domain::bounded;
    default:
      return Domain::integer;
  }
}

/// True when answers are 0/1 vectors.
constexpr bool has_boolean_output(ProblemKind kind) {
  return kind == ProblemKind::boolean || kind == ProblemKind::exists_equality ||
         kind == ProblemKind::exists_dominance;
}

/// True when +-inf may appear in matrix or query entries.
constexpr bool admits_infinity(ProblemKind kind) {
  return kind == ProblemKind::exists_dominance || kind == ProblemKind::min_max;
}

// Short names used in files, chain strings and the CLI.

inline std::string_view short_name(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::boolean: return "bool";
    case ProblemKind::exists_equality: return "eq";
    case ProblemKind::exists_dominance: return "dom";
    case ProblemKind::min_witness: return "minwit";
    case ProblemKind::min_max: return "minmax";
    case ProblemKind::bounded_min_plus: return "bmmp";
  }
  return "?";
}

inline ProblemKind parse_problem_kind(std::string_view s) {
  for (auto k : {ProblemKind::boolean, ProblemKind::exists_equality,
                 ProblemKind::exists_dominance, ProblemKind::min_witness,
                 ProblemKind::min_max, ProblemKind::bounded_min_plus}) {
    if (short_name(k) == s) return k;
  }
  throw ParseError("unknown problem '" + std::string(s) + "'");
}

inline std::string_view short_name(Monotonicity m) {
  switch (m) {
    case Monotonicity::rows: return "rows";
    case Monotonicity::columns: return "cols";
    case Monotonicity::within_query: return "query";
    case Monotonicity::across_queries: return "stream";
  }
  return "?";
}

inline Monotonicity parse_monotonicity(std::string_view s) {
  for (auto m : {Monotonicity::rows, Monotonicity::columns,
                 Monotonicity::within_query, Monotonicity::across_queries}) {
    if (short_name(m) == s) return m;
  }
  throw ParseError("unknown monotonicity case '" + std::string(s) + "'");
}

}  // namespace omv
