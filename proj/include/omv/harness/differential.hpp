#pragma once

// Differential runs of a composed solver against the naive oracle, and the
// line-oriented report format shared with the command-line tool.

#include <cstdint>
#include <iomanip>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "omv/chain.hpp"
#include "omv/harness/generate.hpp"
#include "omv/io.hpp"
#include "omv/oracle.hpp"

namespace omv::harness {

struct Mismatch {
  std::size_t query = 0;  // j, 1-based
  Index row = 0;          // i, 1-based
  Value expected;
  Value got;

  bool operator==(const Mismatch&) const = default;
};

struct TrialReport {
  std::uint64_t seed = 0;
  std::string instance_hash;
  std::size_t queries = 0;
  std::vector<Mismatch> mismatches;
  CounterLedger counters;  // totals over the solver tree
  std::string violation;   // protocol violation or error; empty if none

  bool success() const { return mismatches.empty() && violation.empty(); }
  bool operator==(const TrialReport&) const = default;
};

/// FNV-1a over the printed instance, as 16 hex digits.
inline std::string instance_hash(const Instance& inst) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : io::print_instance(inst)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

/// Appends the entries where `got` differs from `expected`; a length
/// difference is a violation.
inline void compare_answer(std::size_t j, const ColumnVector& expected,
                           const ColumnVector& got, TrialReport& report) {
  if (got.size() != expected.size()) {
    if (report.violation.empty()) {
      report.violation = "query " + std::to_string(j) + ": answer of length " +
                         std::to_string(got.size()) + ", expected " +
                         std::to_string(expected.size());
    }
    return;
  }
  for (Index i = 0; i < expected.size(); ++i) {
    if (got[i] != expected[i]) report.mismatches.push_back({j, i + 1, expected[i], got[i]});
  }
}

/// Feeds the instance's queries in order to `solver` and to a naive oracle.
inline TrialReport run_trial(OnlineSolver& solver, const Instance& inst,
                             std::uint64_t seed = 0) {
  TrialReport report;
  report.seed = seed;
  report.instance_hash = instance_hash(inst);
  NaiveSolver oracle(inst.problem, inst.matrix);
  try {
    for (const auto& v : inst.queries) {
      const ColumnVector expected = oracle.query(v);
      const ColumnVector got = solver.query(v);
      compare_answer(++report.queries, expected, got, report);
    }
  } catch (const std::exception& e) {
    report.violation = e.what();
  }
  report.counters = total_counters(solver);
  return report;
}

/// Trial t draws its instance from seed mix_seed(spec.seed, t) and builds
/// the chain with the same seed, so each report replays from its seed.
inline TrialReport run_seeded_trial(const ChainSpec& chain, InstanceSpec spec,
                                    ReductionConfig cfg, std::uint64_t seed) {
  spec.seed = seed;
  cfg.seed = seed;
  const Instance inst = gen_instance(spec);
  try {
    SolverPtr solver = make_solver(inst.problem, inst.matrix, chain, cfg);
    return run_trial(*solver, inst, seed);
  } catch (const std::exception& e) {
    TrialReport report;
    report.seed = seed;
    report.instance_hash = instance_hash(inst);
    report.violation = e.what();
    return report;
  }
}

inline std::vector<TrialReport> differential_check(const ChainSpec& chain,
                                                   const InstanceSpec& spec,
                                                   std::size_t trials,
                                                   const ReductionConfig& cfg = {}) {
  std::vector<TrialReport> out;
  out.reserve(trials);
  for (std::size_t t = 0; t < trials; ++t) {
    out.push_back(run_seeded_trial(chain, spec, cfg, mix_seed(spec.seed, t)));
  }
  return out;
}

inline std::size_t count_successes(const std::vector<TrialReport>& reports) {
  std::size_t s = 0;
  for (const auto& r : reports) s += r.success() ? 1 : 0;
  return s;
}

// Report format, one trial per block:
//   trial <seed> <hash> queries <q> mismatches <m> success <0|1>
//   counters <queries> <inner> <scan> <updates> <candidates> <rmq>
//   mismatch <j> <i> <expected> <got>          (m lines)
//   violation <text>                           (only if any)
inline void write_report(std::ostream& out, const TrialReport& r) {
  const CounterLedger& c = r.counters;
  out << "trial " << r.seed << ' ' << r.instance_hash << " queries " << r.queries
      << " mismatches " << r.mismatches.size() << " success " << (r.success() ? 1 : 0)
      << '\n';
  out << "counters " << c.queries << ' ' << c.inner_queries << ' ' << c.scan_length_total
      << ' ' << c.multiset_updates << ' ' << c.candidates_enumerated << ' '
      << c.rmq_queries << '\n';
  for (const auto& m : r.mismatches) {
    out << "mismatch " << m.query << ' ' << m.row << ' ' << to_string(m.expected) << ' '
        << to_string(m.got) << '\n';
  }
  if (!r.violation.empty()) {
    std::string flat = r.violation;
    for (char& ch : flat) {
      if (ch == '\n') ch = ' ';
    }
    out << "violation " << flat << '\n';
  }
}

inline std::vector<TrialReport> read_reports(std::istream& in) {
  io::LineReader r(in);
  std::vector<TrialReport> out;
  while (auto line = r.next()) {
    std::istringstream head(*line);
    std::string word;
    head >> word;
    if (word == "trial") {
      TrialReport t;
      std::string q, m, s;
      std::size_t count = 0;
      int success = 0;
      if (!(head >> t.seed >> t.instance_hash >> q >> t.queries >> m >> count >> s >> success) ||
          q != "queries" || m != "mismatches" || s != "success") {
        r.fail("malformed trial line");
      }
      out.push_back(std::move(t));
      continue;
    }
    if (out.empty()) r.fail("expected 'trial' line");
    TrialReport& t = out.back();
    if (word == "counters") {
      CounterLedger& c = t.counters;
      if (!(head >> c.queries >> c.inner_queries >> c.scan_length_total >> c.multiset_updates >>
            c.candidates_enumerated >> c.rmq_queries)) {
        r.fail("malformed counters line");
      }
    } else if (word == "mismatch") {
      Mismatch mm;
      std::string e, g;
      if (!(head >> mm.query >> mm.row >> e >> g)) r.fail("malformed mismatch line");
      try {
        mm.expected = parse_value(e);
        mm.got = parse_value(g);
      } catch (const ParseError& err) {
        r.fail(err.what());
      }
      t.mismatches.push_back(mm);
    } else if (word == "violation") {
      std::getline(head >> std::ws, t.violation);
    } else {
      r.fail("unknown report line '" + word + "'");
    }
  }
  return out;
}

}  // namespace omv::harness
