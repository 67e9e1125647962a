#pragma once

// The light reductions: dominance from equality by rank normalization and
// bit decomposition, min-witness from min-max by index encoding, Boolean
// from bounded monotone min-plus by the 2(i+k) encoding, and Boolean from
// min-witness by projection.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "omv/config.hpp"
#include "omv/oracle.hpp"
#include "omv/solver.hpp"

namespace omv {

/// Order-embedding of matrix and query values into small nonnegative
/// integers. With d_0 < ... < d_{m-1} the distinct entries of M:
///   rank(a)       = 1 + #{d : d < a}     (in [1, m] for entries of M)
///   query_rank(y) = #{d : d <= y}        (in [0, m])
/// so that a <= y  iff  rank(a) <= query_rank(y).
class RankMap {
 public:
  explicit RankMap(const SquareMatrix& m)
      : distinct_(m.values().begin(), m.values().end()) {
    std::sort(distinct_.begin(), distinct_.end());
    distinct_.erase(std::unique(distinct_.begin(), distinct_.end()), distinct_.end());
  }

  std::size_t distinct_values() const { return distinct_.size(); }

  std::uint64_t rank(Value a) const {
    return 1 + static_cast<std::uint64_t>(
                   std::lower_bound(distinct_.begin(), distinct_.end(), a) -
                   distinct_.begin());
  }

  std::uint64_t query_rank(Value y) const {
    return static_cast<std::uint64_t>(
        std::upper_bound(distinct_.begin(), distinct_.end(), y) - distinct_.begin());
  }

 private:
  std::vector<Value> distinct_;
};

/// Number of bit slices for dimension n: ceil(log2(n^2)) + 1, widened only
/// when the largest shifted query rank would not fit (n = 1).
inline unsigned dominance_bit_slices(std::size_t n, std::size_t distinct_values) {
  const std::uint64_t n2 = static_cast<std::uint64_t>(n) * n;
  unsigned bits = static_cast<unsigned>(ceil_log2(n2)) + 1;
  const std::uint64_t largest = static_cast<std::uint64_t>(distinct_values) + 1;
  while ((std::uint64_t{1} << bits) <= largest) ++bits;
  return bits;
}

class DominanceFromEquality final : public OnlineSolver {
 public:
  DominanceFromEquality(SquareMatrix m, const ReductionConfig& cfg,
                        const InnerFactory& inner, ValidateOptions opts = {})
      : OnlineSolver(ProblemKind::exists_dominance, m.dimension(), opts),
        ranks_(m),
        bits_(dominance_bit_slices(m.dimension(), ranks_.distinct_values())) {
    const std::size_t n = dimension();
    for (unsigned l = 0; l < bits_; ++l) {
      SquareMatrix slice(n);
      for (Index i = 0; i < n; ++i) {
        for (Index k = 0; k < n; ++k) {
          const std::uint64_t a = ranks_.rank(m(i, k));
          slice(i, k) = ((a >> l) & 1U) == 0 ? Value(static_cast<Value::Rep>(a >> (l + 1)))
                                             : Value(-1);
        }
      }
      inner_.push_back(inner(ProblemKind::exists_equality, std::move(slice),
                             mix_seed(cfg.seed, l)));
    }
  }

  std::string name() const override { return "dom<-eq"; }
  unsigned bit_slices() const { return bits_; }
  const RankMap& ranks() const { return ranks_; }

  std::vector<const OnlineSolver*> inner_solvers() const override {
    std::vector<const OnlineSolver*> out;
    for (const auto& s : inner_) out.push_back(s.get());
    return out;
  }

  bool supports_witnesses() const override {
    return std::all_of(inner_.begin(), inner_.end(),
                       [](const SolverPtr& s) { return s->supports_witnesses(); });
  }

  void track_witnesses(bool on) override {
    OnlineSolver::track_witnesses(on);
    for (auto& s : inner_) s->track_witnesses(tracking_);
  }

 protected:
  ColumnVector answer(const ColumnVector& v) override {
    const std::size_t n = dimension();
    std::vector<std::uint64_t> b(n);
    for (Index k = 0; k < n; ++k) b[k] = ranks_.query_rank(v[k]) + 1;

    ColumnVector out(n, Value(0), Domain::boolean);
    if (tracking_) witnesses_.assign(n, std::nullopt);
    for (unsigned l = 0; l < bits_; ++l) {
      ColumnVector slice(n);
      for (Index k = 0; k < n; ++k) {
        slice[k] = ((b[k] >> l) & 1U) == 1 ? Value(static_cast<Value::Rep>(b[k] >> (l + 1)))
                                           : Value(-2);
      }
      const ColumnVector hit = inner_[l]->query(slice);
      ++counters_.inner_queries;
      for (Index i = 0; i < n; ++i) {
        if (hit[i] != Value(1)) continue;
        out[i] = Value(1);
        if (tracking_ && !witnesses_[i]) witnesses_[i] = inner_[l]->witnesses()[i];
      }
    }
    return out;
  }

 private:
  RankMap ranks_;
  unsigned bits_;
  std::vector<SolverPtr> inner_;
};

namespace detail {

/// k (1-based) where the Boolean entry is 1, +inf elsewhere.
inline Value index_or_inf(Value bit, Index k) {
  return bit == Value(1) ? Value(static_cast<Value::Rep>(k + 1)) : kInf;
}

}  // namespace detail

class MinWitnessFromMinMax final : public OnlineSolver {
 public:
  MinWitnessFromMinMax(const SquareMatrix& m, const ReductionConfig& cfg,
                       const InnerFactory& inner, ValidateOptions opts = {})
      : OnlineSolver(ProblemKind::min_witness, m.dimension(), opts) {
    const std::size_t n = dimension();
    SquareMatrix encoded(n);
    for (Index i = 0; i < n; ++i) {
      for (Index k = 0; k < n; ++k) encoded(i, k) = detail::index_or_inf(m(i, k), k);
    }
    inner_ = inner(ProblemKind::min_max, std::move(encoded), mix_seed(cfg.seed, 0));
  }

  std::string name() const override { return "minwit<-minmax"; }

  std::vector<const OnlineSolver*> inner_solvers() const override {
    return {inner_.get()};
  }

 protected:
  ColumnVector answer(const ColumnVector& v) override {
    const std::size_t n = dimension();
    ColumnVector encoded(n);
    for (Index k = 0; k < n; ++k) encoded[k] = detail::index_or_inf(v[k], k);
    ColumnVector out = inner_->query(encoded);
    ++counters_.inner_queries;
    const Value limit(static_cast<Value::Rep>(n));
    for (Value& x : out) {
      if (x > limit) x = kInf;
    }
    return out;
  }

 private:
  SolverPtr inner_;
};

/// Boolean products through a min-plus instance that is monotone in every
/// direction: M'[i,k] = 2(i+k) - M[i,k] and, for query j,
/// v'[k] = 2(j-k) - v[k] + 2n. The +2n shift keeps entries nonnegative; the
/// tight sum 2(i+j) - 2 + 2n is reached iff some M[i,k] = v[k] = 1.
class BooleanFromMinPlus final : public OnlineSolver {
 public:
  BooleanFromMinPlus(const SquareMatrix& m, const ReductionConfig& cfg,
                     const InnerFactory& inner, ValidateOptions opts = {})
      : OnlineSolver(ProblemKind::boolean, m.dimension(), opts) {
    inner_ = inner(Problem::min_plus(Monotonicity::across_queries), encode_matrix(m),
                   mix_seed(cfg.seed, 0));
  }

  static SquareMatrix encode_matrix(const SquareMatrix& m) {
    const std::size_t n = m.dimension();
    SquareMatrix out(n, Value(0), Domain::bounded);
    for (Index i = 0; i < n; ++i) {
      for (Index k = 0; k < n; ++k) {
        out(i, k) = Value(2 * static_cast<Value::Rep>(i + k + 2) - m(i, k).finite());
      }
    }
    return out;
  }

  /// Query j (1-based), shifted by +2n.
  static ColumnVector encode_query(const ColumnVector& v, std::uint64_t j) {
    const auto n = static_cast<Value::Rep>(v.size());
    ColumnVector out(v.size(), Value(0), Domain::bounded);
    for (Index k = 0; k < v.size(); ++k) {
      out[k] = Value(2 * (static_cast<Value::Rep>(j) - static_cast<Value::Rep>(k + 1)) -
                     v[k].finite() + 2 * n);
    }
    return out;
  }

  std::string name() const override { return "bool<-bmmp"; }

  std::vector<const OnlineSolver*> inner_solvers() const override {
    return {inner_.get()};
  }

 protected:
  ColumnVector answer(const ColumnVector& v) override {
    const std::size_t n = dimension();
    const auto j = static_cast<Value::Rep>(query_index());
    const ColumnVector sums = inner_->query(encode_query(v, query_index()));
    ++counters_.inner_queries;
    ColumnVector out(n, Value(0), Domain::boolean);
    for (Index i = 0; i < n; ++i) {
      const Value target(2 * (static_cast<Value::Rep>(i + 1) + j) - 2 +
                         2 * static_cast<Value::Rep>(n));
      if (sums[i] == target) out[i] = Value(1);
    }
    return out;
  }

 private:
  SolverPtr inner_;
};

/// Boolean products as "min-witness is finite".
class BooleanFromMinWitness final : public OnlineSolver {
 public:
  BooleanFromMinWitness(SquareMatrix m, const ReductionConfig& cfg,
                        const InnerFactory& inner, ValidateOptions opts = {})
      : OnlineSolver(ProblemKind::boolean, m.dimension(), opts) {
    m.set_domain(Domain::boolean);
    inner_ = inner(ProblemKind::min_witness, std::move(m), mix_seed(cfg.seed, 0));
  }

  std::string name() const override { return "bool<-minwit"; }

  std::vector<const OnlineSolver*> inner_solvers() const override {
    return {inner_.get()};
  }

 protected:
  ColumnVector answer(const ColumnVector& v) override {
    ColumnVector out = inner_->query(v);
    ++counters_.inner_queries;
    for (Value& x : out) x = x.is_finite() ? Value(1) : Value(0);
    out.set_domain(Domain::boolean);
    return out;
  }

 private:
  SolverPtr inner_;
};

}  // namespace omv
