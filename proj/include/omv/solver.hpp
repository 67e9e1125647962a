#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "omv/counters.hpp"
#include "omv/matrix.hpp"
#include "omv/problem.hpp"
#include "omv/validate.hpp"

namespace omv {

/// Online matrix-vector solver.
///
/// Construction is the preprocessing phase. `query` answers one vector and
/// must not depend on any later vector; the adaptive harness checks this.
/// `query_index()` is the 1-based index j of the query being answered (or
/// about to be), so reductions whose encoding depends on j can read it.
class OnlineSolver {
 public:
  OnlineSolver(Problem problem, std::size_t n, ValidateOptions opts = {})
      : opts_(opts), problem_(problem), n_(n) {}
  virtual ~OnlineSolver() = default;

  OnlineSolver(const OnlineSolver&) = delete;
  OnlineSolver& operator=(const OnlineSolver&) = delete;

  ColumnVector query(const ColumnVector& v) {
    if (v.size() != n_) {
      throw DimensionMismatch("query of length " + std::to_string(v.size()) +
                              " for dimension " + std::to_string(n_));
    }
    if (auto bad = validate_query(v, problem_, n_,
                                  previous_ ? &*previous_ : nullptr, opts_)) {
      throw ValidationError("query " + std::to_string(query_index_) + ", " +
                            bad->describe());
    }
    ColumnVector out = answer(v);
    if (problem_.monotone() == Monotonicity::across_queries) previous_ = v;
    ++query_index_;
    ++counters_.queries;
    return out;
  }

  const Problem& problem() const { return problem_; }
  ProblemKind kind() const { return problem_.kind(); }
  std::size_t dimension() const { return n_; }
  std::uint64_t query_index() const { return query_index_; }
  const CounterLedger& counters() const { return counters_; }

  virtual std::string name() const = 0;

  /// Directly owned inner solvers, for reporting.
  virtual std::vector<const OnlineSolver*> inner_solvers() const { return {}; }

  /// Boolean-output solvers may report, per output 1, one column k that
  /// caused it. Tracking is off until enabled.
  virtual bool supports_witnesses() const { return false; }
  virtual void track_witnesses(bool on) { tracking_ = on && supports_witnesses(); }
  bool tracking_witnesses() const { return tracking_; }

  /// Witness column (0-based) per output index of the last answer; empty
  /// when tracking is off.
  std::span<const std::optional<Index>> witnesses() const { return witnesses_; }

 protected:
  virtual ColumnVector answer(const ColumnVector& v) = 0;

  CounterLedger counters_;
  std::vector<std::optional<Index>> witnesses_;
  bool tracking_ = false;
  ValidateOptions opts_;

 private:
  Problem problem_;
  std::size_t n_;
  std::uint64_t query_index_ = 1;
  std::optional<ColumnVector> previous_;
};

using SolverPtr = std::unique_ptr<OnlineSolver>;

/// Builds the next link of a chain for an inner instance. The seed is the
/// inner instance's own, derived from its parent's.
using InnerFactory =
    std::function<SolverPtr(const Problem&, SquareMatrix, std::uint64_t seed)>;

/// Sum of the counters of a solver and all solvers below it.
inline CounterLedger total_counters(const OnlineSolver& s) {
  CounterLedger total = s.counters();
  for (const OnlineSolver* child : s.inner_solvers()) {
    total += total_counters(*child);
  }
  return total;
}

}  // namespace omv
