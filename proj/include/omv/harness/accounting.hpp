#pragma once

// Structural counter checks for the head link of a chain, query by query.

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "omv/chain.hpp"
#include "omv/harness/generate.hpp"

namespace omv::harness {

struct CounterCheck {
  std::string name;
  std::size_t query = 0;  // 0: whole stream
  std::uint64_t limit = 0;
  std::uint64_t observed = 0;
  bool exact = false;  // observed must equal limit, otherwise <= limit

  bool pass() const { return exact ? observed == limit : observed <= limit; }
};

struct AccountingReport {
  std::string link;
  std::vector<CounterCheck> checks;

  bool pass() const {
    for (const auto& c : checks) {
      if (!c.pass()) return false;
    }
    return !checks.empty();
  }

  const CounterCheck* first_failure() const {
    for (const auto& c : checks) {
      if (!c.pass()) return &c;
    }
    return nullptr;
  }
};

inline std::ostream& operator<<(std::ostream& os, const CounterCheck& c) {
  os << c.name;
  if (c.query > 0) os << " query " << c.query;
  return os << ": " << c.observed << (c.exact ? " == " : " <= ") << c.limit
            << (c.pass() ? "" : "  FAILED");
}

inline std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return (a + b - 1) / b; }

/// Expected per-query counts for the head of `chain` on instance `inst`.
inline AccountingReport accounting_check(const ChainSpec& chain, const Instance& inst,
                                         const ReductionConfig& cfg) {
  SolverPtr solver = make_solver(inst.problem, inst.matrix, chain, cfg);
  const std::uint64_t n = inst.matrix.dimension();
  const Link head = chain.head().link;

  AccountingReport report;
  report.link = chain.head().link == Link::naive ? "naive" : std::string(info(head).name);

  std::uint64_t inner = 0;
  std::uint64_t scan_cap = 0;
  const std::uint64_t t = cfg.resolve_t(n);
  const std::uint64_t delta = cfg.resolve_delta(n);
  const std::uint64_t c = static_cast<std::uint64_t>(cfg.bound_constant);
  switch (head) {
    case Link::eq_from_bool:
      inner = t;
      scan_cap = n * ceil_div(n, t);
      break;
    case Link::minmax_from_dom:
      inner = 2 * t;
      scan_cap = 2 * n * ceil_div(n, t);
      break;
    case Link::dom_from_eq:
      inner = static_cast<const DominanceFromEquality&>(*solver).bit_slices();
      report.checks.push_back(
          {"bit slices = ceil(log2 n^2) + 1", 0, ceil_log2(n * n) + 1, inner, true});
      break;
    case Link::bmmp_from_eq: {
      const auto* b = dynamic_cast<const BoundedMinPlusFromEquality*>(solver.get());
      if (b == nullptr) return report;  // majority vote: no single head
      inner = b->hitting_set().size() * (3 * delta - 1);
      break;
    }
    case Link::minwit_from_minmax:
    case Link::bool_from_bmmp:
    case Link::bool_from_minwit:
      inner = 1;
      break;
    case Link::naive:
      inner = 0;
      break;
  }

  CounterLedger before = solver->counters();
  for (std::size_t j = 0; j < inst.queries.size(); ++j) {
    solver->query(inst.queries[j]);
    const CounterLedger d = solver->counters() - before;
    before = solver->counters();
    report.checks.push_back({"inner queries", j + 1, inner, d.inner_queries, true});
    if (head == Link::eq_from_bool || head == Link::minmax_from_dom) {
      report.checks.push_back({"scan length", j + 1, scan_cap, d.scan_length_total, false});
    }
    if (head == Link::bmmp_from_eq) {
      report.checks.push_back(
          {"candidates listed", j + 1, n * (n / delta), d.candidates_enumerated, false});
      const auto mono = *inst.problem.monotone();
      if (mono != Monotonicity::across_queries) {
        report.checks.push_back(
            {"multiset updates", j + 1, c * n * n / delta, d.multiset_updates, false});
      }
    }
  }
  if (head == Link::bmmp_from_eq &&
      inst.problem.monotone() == Monotonicity::across_queries) {
    // Every rounded coordinate rises at most c*n/delta times over the
    // stream, touching n rows each time: c*n^2/delta per query amortized
    // over n queries.
    report.checks.push_back({"multiset updates, whole stream", 0, n * n * (c * n / delta),
                             solver->counters().multiset_updates, false});
  }
  return report;
}

}  // namespace omv::harness
