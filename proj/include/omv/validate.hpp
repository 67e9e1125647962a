#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "omv/matrix.hpp"
#include "omv/problem.hpp"

namespace omv {

/// First offending position, 1-based. For vectors `row` is 0.
struct Violation {
  Index row = 0;
  Index col = 0;
  std::string reason;

  std::string describe() const {
    if (row == 0) return "entry " + std::to_string(col) + ": " + reason;
    return "entry (" + std::to_string(row) + "," + std::to_string(col) +
           "): " + reason;
  }
};

struct ValidateOptions {
  /// Bounded entries must lie in [0, bound_constant * n].
  std::int64_t bound_constant = 4;
};

namespace detail {

inline std::optional<std::string> check_entry(Value x, ProblemKind kind,
                                              Domain tag, std::size_t n,
                                              const ValidateOptions& opts) {
  const Domain want = domain_of(kind);
  for (Domain d : {tag, want}) {
    switch (d) {
      case Domain::boolean:
        if (x != Value(0) && x != Value(1)) return "not boolean";
        break;
      case Domain::bounded:
        if (!x.is_finite()) return "infinite entry in bounded domain";
        if (x.finite() < 0 || x.finite() > opts.bound_constant *
                                               static_cast<std::int64_t>(n)) {
          return "outside bounded range [0, " +
                 std::to_string(opts.bound_constant) + "n]";
        }
        break;
      case Domain::integer:
        break;
    }
  }
  if (!x.is_finite()) {
    if (!admits_infinity(kind)) return "infinite entry not permitted";
  } else if (x.finite() > kFiniteLimit || x.finite() < -kFiniteLimit) {
    return "magnitude exceeds 2^40";
  }
  return std::nullopt;
}

}  // namespace detail

/// Checks the matrix against its domain tag and the declared problem,
/// including row/column monotonicity for the bounded min-plus cases that
/// constrain the matrix.
inline std::optional<Violation> validate(const SquareMatrix& m,
                                         const Problem& problem,
                                         const ValidateOptions& opts = {}) {
  const std::size_t n = m.dimension();
  if (n == 0) return Violation{0, 0, "empty matrix"};
  for (Index i = 0; i < n; ++i) {
    for (Index k = 0; k < n; ++k) {
      if (auto why = detail::check_entry(m(i, k), problem.kind(), m.domain(),
                                         n, opts)) {
        return Violation{i + 1, k + 1, *why};
      }
    }
  }
  if (auto mono = problem.monotone()) {
    for (Index i = 0; i < n; ++i) {
      for (Index k = 0; k < n; ++k) {
        if (*mono == Monotonicity::rows && k > 0 && m(i, k) < m(i, k - 1)) {
          return Violation{i + 1, k + 1, "row decreases"};
        }
        if (*mono == Monotonicity::columns && i > 0 && m(i, k) < m(i - 1, k)) {
          return Violation{i + 1, k + 1, "column decreases"};
        }
      }
    }
  }
  return std::nullopt;
}

/// Checks one query vector. `previous` is the prior query of the stream and
/// is consulted only for the across-queries case.
inline std::optional<Violation> validate_query(
    const ColumnVector& v, const Problem& problem, std::size_t n,
    const ColumnVector* previous = nullptr, const ValidateOptions& opts = {}) {
  if (v.size() != n) {
    return Violation{0, 0,
                     "length " + std::to_string(v.size()) + ", expected " +
                         std::to_string(n)};
  }
  for (Index k = 0; k < n; ++k) {
    if (auto why =
            detail::check_entry(v[k], problem.kind(), v.domain(), n, opts)) {
      return Violation{0, k + 1, *why};
    }
  }
  if (auto mono = problem.monotone()) {
    for (Index k = 0; k < n; ++k) {
      if (*mono == Monotonicity::within_query && k > 0 && v[k] < v[k - 1]) {
        return Violation{0, k + 1, "query decreases"};
      }
      if (*mono == Monotonicity::across_queries && previous != nullptr &&
          previous->size() == n && v[k] < (*previous)[k]) {
        return Violation{0, k + 1, "entry decreased since previous query"};
      }
    }
  }
  return std::nullopt;
}

}  // namespace omv
