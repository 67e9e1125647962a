#pragma once

#include <cstdint>
#include <ostream>

namespace omv {

/// Operation counts for one solver instance. Counters only grow; a fresh
/// instance starts at zero.
struct CounterLedger {
  std::uint64_t queries = 0;                // outer queries answered
  std::uint64_t inner_queries = 0;          // queries issued to inner solvers
  std::uint64_t scan_length_total = 0;      // rare-list and bucket entries read
  std::uint64_t multiset_updates = 0;       // key changes in ordered multisets
  std::uint64_t candidates_enumerated = 0;  // entries listed into C_i
  std::uint64_t rmq_queries = 0;

  CounterLedger operator-(const CounterLedger& o) const {
    return {queries - o.queries,
            inner_queries - o.inner_queries,
            scan_length_total - o.scan_length_total,
            multiset_updates - o.multiset_updates,
            candidates_enumerated - o.candidates_enumerated,
            rmq_queries - o.rmq_queries};
  }

  CounterLedger& operator+=(const CounterLedger& o) {
    queries += o.queries;
    inner_queries += o.inner_queries;
    scan_length_total += o.scan_length_total;
    multiset_updates += o.multiset_updates;
    candidates_enumerated += o.candidates_enumerated;
    rmq_queries += o.rmq_queries;
    return *this;
  }

  bool operator==(const CounterLedger&) const = default;
};

inline std::ostream& operator<<(std::ostream& os, const CounterLedger& c) {
  return os << "queries=" << c.queries << " inner_queries=" << c.inner_queries
            << " scan_length=" << c.scan_length_total
            << " multiset_updates=" << c.multiset_updates
            << " candidates=" << c.candidates_enumerated
            << " rmq_queries=" << c.rmq_queries;
}

}  // namespace omv
