#pragma once

// Bounded monotone min-plus products from exists-equality products.
//
// With M^ = floor(M / delta) and v^ = floor(v / delta), every minimizer of
// M[i,.] + v lies in C_i = {k : M^[i,k] + v^[k] in {u^[i], u^[i]+1}}. Small
// candidate sets are listed exactly (step 1); large ones are hit by a random
// column sample R, and for r in R the equality product of M[i,k] - M[i,r]
// against -(v - v[r] + d), d in [0, 3*delta-2], recovers the minimum
// (step 2).

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "omv/config.hpp"
#include "omv/oracle.hpp"
#include "omv/ordered_multiset.hpp"
#include "omv/range_min.hpp"
#include "omv/solver.hpp"

namespace omv {

/// M^ = floor(M / delta), plus rounding of query vectors.
class RoundedView {
 public:
  RoundedView(const SquareMatrix& m, std::int64_t delta)
      : delta_(delta), n_(m.dimension()), m_hat_(n_ * n_) {
    for (Index i = 0; i < n_; ++i) {
      for (Index k = 0; k < n_; ++k) {
        m_hat_[i * n_ + k] = oracle::floor_div(m(i, k).finite(), delta_);
      }
    }
  }

  std::int64_t delta() const { return delta_; }
  std::int64_t at(Index i, Index k) const { return m_hat_[i * n_ + k]; }
  std::span<const std::int64_t> row(Index i) const {
    return std::span<const std::int64_t>(m_hat_).subspan(i * n_, n_);
  }

  std::vector<std::int64_t> round(const ColumnVector& v) const {
    std::vector<std::int64_t> out(v.size());
    for (Index k = 0; k < v.size(); ++k) out[k] = oracle::floor_div(v[k].finite(), delta_);
    return out;
  }

 private:
  std::int64_t delta_;
  std::size_t n_;
  std::vector<std::int64_t> m_hat_;
};

/// C_i for one row: either listed (ascending, at most `cap` columns) or
/// flagged oversize.
struct CandidateEntry {
  std::int64_t u_hat = 0;
  bool oversize = false;
  std::vector<Index> members;
};

struct CandidateReport {
  std::size_t cap = 0;
  std::vector<CandidateEntry> rows;
};

namespace detail {

struct Block {
  std::int64_t value;
  std::size_t lo;  // inclusive
  std::size_t hi;  // inclusive
};

inline std::vector<Block> constant_blocks(std::span<const std::int64_t> a) {
  std::vector<Block> out;
  for (std::size_t p = 0; p < a.size(); ++p) {
    if (out.empty() || out.back().value != a[p]) {
      out.push_back({a[p], p, p});
    } else {
      out.back().hi = p;
    }
  }
  return out;
}

}  // namespace detail

/// Lists every candidate set of size at most floor(n / delta), using the
/// monotonicity case to stay within O(n^2 log n / delta) per query.
class CandidateLister {
 public:
  /// Entries of M and of every query must lie in [0, value_bound].
  CandidateLister(const SquareMatrix& m, std::int64_t delta, Monotonicity mono,
                  std::int64_t value_bound)
      : n_(m.dimension()),
        mono_(mono),
        view_(m, delta),
        cap_(n_ / static_cast<std::size_t>(delta)),
        max_key_(2 * (value_bound / delta)),
        value_bound_(value_bound) {
    for (Index i = 0; i < n_; ++i) {
      for (Index k = 0; k < n_; ++k) {
        const Value x = m(i, k);
        if (!x.is_finite() || x.finite() < 0 || x.finite() > value_bound) {
          throw ValidationError("entry (" + std::to_string(i + 1) + "," +
                                std::to_string(k + 1) + ") outside [0, " +
                                std::to_string(value_bound) + "]");
        }
        if (mono == Monotonicity::rows && k > 0 && x < m(i, k - 1)) {
          throw ValidationError("row decreases at (" + std::to_string(i + 1) +
                                "," + std::to_string(k + 1) + ")");
        }
        if (mono == Monotonicity::columns && i > 0 && x < m(i - 1, k)) {
          throw ValidationError("column decreases at (" + std::to_string(i + 1) +
                                "," + std::to_string(k + 1) + ")");
        }
      }
    }

    switch (mono) {
      case Monotonicity::columns:
        increases_.resize(n_);
        for (Index i = 1; i < n_; ++i) {
          for (Index k = 0; k < n_; ++k) {
            if (view_.at(i, k) > view_.at(i - 1, k)) increases_[i].push_back(k);
          }
        }
        break;
      case Monotonicity::rows:
        for (Index i = 0; i < n_; ++i) row_blocks_.push_back(detail::constant_blocks(view_.row(i)));
        break;
      case Monotonicity::within_query:
        for (Index i = 0; i < n_; ++i) {
          row_rmq_.emplace_back(view_.row(i));
          row_positions_.emplace_back(view_.row(i));
        }
        break;
      case Monotonicity::across_queries:
        break;
    }
  }

  std::size_t cap() const { return cap_; }
  std::int64_t delta() const { return view_.delta(); }
  Monotonicity monotonicity() const { return mono_; }
  const RoundedView& view() const { return view_; }

  CandidateReport list(const ColumnVector& v, CounterLedger& counters) {
    if (v.size() != n_) throw DimensionMismatch("query length differs from n");
    for (Index k = 0; k < n_; ++k) {
      if (!v[k].is_finite() || v[k].finite() < 0 || v[k].finite() > value_bound_) {
        throw ValidationError("query entry " + std::to_string(k + 1) +
                              " outside [0, " + std::to_string(value_bound_) + "]");
      }
      if (mono_ == Monotonicity::within_query && k > 0 && v[k] < v[k - 1]) {
        throw ValidationError("query decreases at entry " + std::to_string(k + 1));
      }
    }
    const std::vector<std::int64_t> v_hat = view_.round(v);

    CandidateReport report;
    report.cap = cap_;
    report.rows.resize(n_);
    switch (mono_) {
      case Monotonicity::columns: list_columns(v_hat, report, counters); break;
      case Monotonicity::across_queries: list_across(v_hat, report, counters); break;
      case Monotonicity::rows: {
        RangeMinIndex rmq(v_hat);
        PositionIndex positions(v_hat);
        for (Index i = 0; i < n_; ++i) {
          report.rows[i] = from_blocks(row_blocks_[i], rmq, positions, counters);
        }
        break;
      }
      case Monotonicity::within_query: {
        const auto blocks = detail::constant_blocks(v_hat);
        for (Index i = 0; i < n_; ++i) {
          report.rows[i] = from_blocks(blocks, row_rmq_[i], row_positions_[i], counters);
        }
        break;
      }
    }
    return report;
  }

 private:
  using Multiset = OrderedMultiset<Index>;

  CandidateEntry from_multiset(const Multiset& ms, CounterLedger& counters) const {
    CandidateEntry e;
    e.u_hat = *ms.min();
    if (ms.count_le(e.u_hat + 1) > cap_) {
      e.oversize = true;
      return e;
    }
    e.members = ms.enumerate_le(e.u_hat + 1, cap_);
    std::sort(e.members.begin(), e.members.end());
    counters.candidates_enumerated += e.members.size();
    return e;
  }

  // Sweep i = 1..n keeping {(M^[i,k] + v^[k], k)}; only the precomputed
  // column increases of M^ change keys.
  void list_columns(const std::vector<std::int64_t>& v_hat, CandidateReport& report,
                    CounterLedger& counters) const {
    Multiset ms(max_key_);
    for (Index k = 0; k < n_; ++k) ms.insert(view_.at(0, k) + v_hat[k], k);
    for (Index i = 0; i < n_; ++i) {
      if (i > 0) {
        for (Index k : increases_[i]) {
          ms.remove(view_.at(i - 1, k) + v_hat[k], k);
          ms.insert(view_.at(i, k) + v_hat[k], k);
          ++counters.multiset_updates;
        }
      }
      report.rows[i] = from_multiset(ms, counters);
    }
  }

  // One multiset per row, kept across the stream; an increase of v^[k]
  // updates the k entry in every row.
  void list_across(const std::vector<std::int64_t>& v_hat, CandidateReport& report,
                   CounterLedger& counters) {
    if (persistent_.empty()) {
      for (Index i = 0; i < n_; ++i) {
        persistent_.emplace_back(max_key_);
        for (Index k = 0; k < n_; ++k) persistent_[i].insert(view_.at(i, k) + v_hat[k], k);
      }
    } else {
      for (Index k = 0; k < n_; ++k) {
        if (v_hat[k] < previous_[k]) {
          throw ValidationError("query entry " + std::to_string(k + 1) +
                                " decreased across queries");
        }
      }
      for (Index k = 0; k < n_; ++k) {
        if (v_hat[k] == previous_[k]) continue;
        for (Index i = 0; i < n_; ++i) {
          persistent_[i].remove(view_.at(i, k) + previous_[k], k);
          persistent_[i].insert(view_.at(i, k) + v_hat[k], k);
          ++counters.multiset_updates;
        }
      }
    }
    previous_ = v_hat;
    for (Index i = 0; i < n_; ++i) report.rows[i] = from_multiset(persistent_[i], counters);
  }

  // Rows and within-query cases: one operand is split into constant blocks,
  // the other is searched by range minimum and per-value position lists.
  CandidateEntry from_blocks(const std::vector<detail::Block>& blocks,
                             const RangeMinIndex& rmq, const PositionIndex& positions,
                             CounterLedger& counters) const {
    std::vector<std::int64_t> mins(blocks.size());
    std::int64_t u_hat = std::numeric_limits<std::int64_t>::max();
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      mins[b] = rmq.range_min(blocks[b].lo, blocks[b].hi).first;
      ++counters.rmq_queries;
      u_hat = std::min(u_hat, blocks[b].value + mins[b]);
    }

    CandidateEntry e;
    e.u_hat = u_hat;
    std::size_t total = 0;
    for (std::size_t b = 0; b < blocks.size() && total <= cap_; ++b) {
      const auto& [x, lo, hi] = blocks[b];
      if (x + mins[b] == u_hat) {
        total += positions.count(mins[b], lo, hi) + positions.count(mins[b] + 1, lo, hi);
      } else if (x + mins[b] == u_hat + 1) {
        total += positions.count(mins[b], lo, hi);
      }
    }
    if (total > cap_) {
      e.oversize = true;
      return e;
    }
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      const auto& [x, lo, hi] = blocks[b];
      if (x + mins[b] == u_hat) {
        positions.append(mins[b], lo, hi, e.members);
        positions.append(mins[b] + 1, lo, hi, e.members);
      } else if (x + mins[b] == u_hat + 1) {
        positions.append(mins[b], lo, hi, e.members);
      }
    }
    std::sort(e.members.begin(), e.members.end());
    counters.candidates_enumerated += e.members.size();
    return e;
  }

  std::size_t n_;
  Monotonicity mono_;
  RoundedView view_;
  std::size_t cap_;
  std::int64_t max_key_;
  std::int64_t value_bound_;

  std::vector<std::vector<Index>> increases_;             // columns
  std::vector<std::vector<detail::Block>> row_blocks_;    // rows
  std::vector<RangeMinIndex> row_rmq_;                    // within-query
  std::vector<PositionIndex> row_positions_;              // within-query
  std::vector<Multiset> persistent_;                      // across-queries
  std::vector<std::int64_t> previous_;                    // across-queries
};

class BoundedMinPlusFromEquality final : public OnlineSolver {
 public:
  BoundedMinPlusFromEquality(SquareMatrix m, Monotonicity mono,
                             const ReductionConfig& cfg, const InnerFactory& inner)
      : OnlineSolver(Problem::min_plus(mono), m.dimension(),
                     ValidateOptions{cfg.bound_constant}),
        lister_(m, static_cast<std::int64_t>(cfg.resolve_delta(m.dimension())), mono,
                cfg.bound_constant * static_cast<std::int64_t>(m.dimension())),
        debug_(cfg.debug),
        m_(std::move(m)) {
    const std::size_t n = dimension();
    if (cfg.hitting.mode == HittingSetSize::Mode::full) {
      for (Index r = 0; r < n; ++r) hitting_.push_back(r);
    } else {
      std::mt19937_64 rng(cfg.seed);
      std::uniform_int_distribution<Index> pick(0, n - 1);
      const std::size_t size = cfg.resolve_hitting(n);
      for (std::size_t s = 0; s < size; ++s) hitting_.push_back(pick(rng));
    }
    for (std::size_t idx = 0; idx < hitting_.size(); ++idx) {
      const Index r = hitting_[idx];
      SquareMatrix shifted(n);
      for (Index i = 0; i < n; ++i) {
        for (Index k = 0; k < n; ++k) {
          shifted(i, k) = Value(m_(i, k).finite() - m_(i, r).finite());
        }
      }
      inner_.push_back(inner(ProblemKind::exists_equality, std::move(shifted),
                             mix_seed(cfg.seed, 0x10000 + idx)));
      if (debug_) inner_.back()->track_witnesses(true);
    }
  }

  std::string name() const override { return "bmmp<-eq"; }

  std::int64_t delta() const { return lister_.delta(); }
  std::size_t cap() const { return lister_.cap(); }
  std::span<const Index> hitting_set() const { return hitting_; }

  /// Number of distinct offsets d tried per sampled column.
  std::size_t offsets() const { return static_cast<std::size_t>(3 * delta() - 1); }

  const CandidateReport& last_report() const { return report_; }
  const ColumnVector& last_step1() const { return u1_; }
  const ColumnVector& last_step2() const { return u2_; }

  /// Step-2 contributions whose inner witness was checked (debug mode).
  std::uint64_t verified_witnesses() const { return verified_; }

  std::vector<const OnlineSolver*> inner_solvers() const override {
    std::vector<const OnlineSolver*> out;
    for (const auto& s : inner_) out.push_back(s.get());
    return out;
  }

 protected:
  ColumnVector answer(const ColumnVector& v) override {
    const std::size_t n = dimension();
    report_ = lister_.list(v, counters_);

    u1_ = ColumnVector(n, kInf);
    for (Index i = 0; i < n; ++i) {
      for (Index k : report_.rows[i].members) {
        u1_[i] = std::min(u1_[i], Value(m_(i, k).finite() + v[k].finite()));
      }
    }

    u2_ = ColumnVector(n, kInf);
    const std::int64_t max_offset = 3 * delta() - 2;
    for (std::size_t idx = 0; idx < hitting_.size(); ++idx) {
      const Index r = hitting_[idx];
      const std::int64_t vr = v[r].finite();
      for (std::int64_t d = 0; d <= max_offset; ++d) {
        ColumnVector probe(n);
        for (Index k = 0; k < n; ++k) probe[k] = Value(-(v[k].finite() - vr + d));
        const ColumnVector hit = inner_[idx]->query(probe);
        ++counters_.inner_queries;
        for (Index i = 0; i < n; ++i) {
          if (hit[i] != Value(1)) continue;
          const Value candidate(m_(i, r).finite() + vr - d);
          if (debug_) check_witness(*inner_[idx], i, v, candidate);
          u2_[i] = std::min(u2_[i], candidate);
        }
      }
    }

    ColumnVector out(n);
    for (Index i = 0; i < n; ++i) out[i] = std::min(u1_[i], u2_[i]);
    return out;
  }

 private:
  void check_witness(const OnlineSolver& eq, Index i, const ColumnVector& v,
                     Value candidate) {
    if (!eq.tracking_witnesses()) return;
    const auto k = eq.witnesses()[i];
    if (!k || Value(m_(i, *k).finite() + v[*k].finite()) != candidate) {
      throw std::logic_error("step 2 contributed a value that is not a row sum");
    }
    ++verified_;
  }

  CandidateLister lister_;
  bool debug_;
  SquareMatrix m_;
  std::vector<Index> hitting_;
  std::vector<SolverPtr> inner_;
  CandidateReport report_;
  ColumnVector u1_;
  ColumnVector u2_;
  std::uint64_t verified_ = 0;
};

/// Runs independent copies and answers each entry by majority (ties go to
/// the smaller value).
class MajorityVote final : public OnlineSolver {
 public:
  MajorityVote(const Problem& problem, std::vector<SolverPtr> copies,
               ValidateOptions opts = {})
      : OnlineSolver(problem, copies.front()->dimension(), opts),
        copies_(std::move(copies)) {}

  std::string name() const override {
    return copies_.front()->name() + " x" + std::to_string(copies_.size());
  }

  std::vector<const OnlineSolver*> inner_solvers() const override {
    std::vector<const OnlineSolver*> out;
    for (const auto& s : copies_) out.push_back(s.get());
    return out;
  }

 protected:
  ColumnVector answer(const ColumnVector& v) override {
    std::vector<ColumnVector> answers;
    for (auto& c : copies_) {
      answers.push_back(c->query(v));
      ++counters_.inner_queries;
    }
    ColumnVector out(dimension());
    for (Index i = 0; i < dimension(); ++i) {
      std::map<Value, std::size_t> votes;
      for (const auto& a : answers) ++votes[a[i]];
      auto best = votes.begin();
      for (auto it = votes.begin(); it != votes.end(); ++it) {
        if (it->second > best->second) best = it;
      }
      out[i] = best->first;
    }
    return out;
  }

 private:
  std::vector<SolverPtr> copies_;
};

}  // namespace omv
