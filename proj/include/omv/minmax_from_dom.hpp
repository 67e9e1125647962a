#pragma once

// Min-max products from exists-dominance products. Each row of M is sorted
// and cut into t buckets; the first bucket whose negated slice dominates -v
// holds the smallest M[i,k] >= v[k] (phase u). Symmetrically, v is sorted and
// cut into t buckets to find the smallest v[k] >= M[i,k] (phase w).

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "omv/config.hpp"
#include "omv/oracle.hpp"
#include "omv/solver.hpp"

namespace omv {

enum class FinitizeRole { matrix, query };

/// Replaces infinities by finite stand-ins that leave every comparison
/// "matrix entry <= query entry" unchanged, where W bounds the finite matrix
/// entries: matrix +-inf become +-(3W+2), query entries beyond +-W become
/// +-(2W+1).
constexpr Value finitize(Value x, Value::Rep w, FinitizeRole role) {
  if (role == FinitizeRole::matrix) {
    if (x.is_pos_inf()) return Value(3 * w + 2);
    if (x.is_neg_inf()) return Value(-(3 * w + 2));
    return x;
  }
  if (x > Value(w)) return Value(2 * w + 1);
  if (x < Value(-w)) return Value(-(2 * w + 1));
  return x;
}

/// Maps genuine +-inf entries of M and v onto finite codes within
/// [-(W+2), W+2] before bucket sentinels are introduced, so a genuine
/// infinity can never be confused with a sentinel. Comparisons between a
/// matrix code and a query code agree with the original comparisons.
class ExtendedCoder {
 public:
  explicit ExtendedCoder(Value::Rep w) : w_(w) {}

  Value::Rep bound() const { return w_ + 2; }

  Value matrix(Value x) const {
    if (x.is_pos_inf()) return Value(w_ + 2);
    if (x.is_neg_inf()) return Value(-(w_ + 2));
    return x;
  }

  Value query(Value x) const {
    if (x.is_pos_inf()) return Value(w_ + 2);
    if (x.is_neg_inf()) return Value(-(w_ + 2));
    if (x > Value(w_)) return Value(w_ + 1);
    if (x < Value(-w_)) return Value(-(w_ + 1));
    return x;
  }

 private:
  Value::Rep w_;
};

/// Largest absolute finite entry (0 if there is none).
inline Value::Rep max_abs_finite(const SquareMatrix& m) {
  Value::Rep w = 0;
  for (Value x : m.values()) {
    if (x.is_finite()) w = std::max(w, x.finite() < 0 ? -x.finite() : x.finite());
  }
  return w;
}

/// Start of bucket l when n sorted items are split into t near-equal
/// consecutive buckets.
constexpr std::size_t bucket_begin(std::size_t l, std::size_t n, std::size_t t) {
  return l * n / t;
}

/// Rows sorted by (value, column) and split into t buckets.
class RowBucketIndex {
 public:
  RowBucketIndex(const SquareMatrix& m, std::size_t t)
      : n_(m.dimension()), t_(t), w_(max_abs_finite(m)) {
    order_.resize(n_ * n_);
    bucket_of_.resize(n_ * n_);
    for (Index i = 0; i < n_; ++i) {
      auto first = order_.begin() + static_cast<std::ptrdiff_t>(i * n_);
      std::iota(first, first + static_cast<std::ptrdiff_t>(n_), Index{0});
      std::sort(first, first + static_cast<std::ptrdiff_t>(n_),
                [&](Index a, Index b) {
                  return m(i, a) != m(i, b) ? m(i, a) < m(i, b) : a < b;
                });
      for (std::size_t l = 0; l < t_; ++l) {
        for (std::size_t p = bucket_begin(l, n_, t_); p < bucket_begin(l + 1, n_, t_); ++p) {
          bucket_of_[i * n_ + order_[i * n_ + p]] = l;
        }
      }
    }
  }

  std::size_t buckets() const { return t_; }
  Value::Rep max_abs() const { return w_; }

  /// Columns of bucket l of row i in (value, column) order.
  std::span<const Index> bucket(Index i, std::size_t l) const {
    const std::size_t lo = bucket_begin(l, n_, t_);
    const std::size_t hi = bucket_begin(l + 1, n_, t_);
    return std::span<const Index>(order_).subspan(i * n_ + lo, hi - lo);
  }

  std::size_t bucket_of(Index i, Index k) const { return bucket_of_[i * n_ + k]; }

  /// Row i as columns in sorted order.
  std::span<const Index> sorted_row(Index i) const {
    return std::span<const Index>(order_).subspan(i * n_, n_);
  }

 private:
  std::size_t n_;
  std::size_t t_;
  Value::Rep w_;
  std::vector<Index> order_;
  std::vector<std::size_t> bucket_of_;
};

class MinMaxFromDominance final : public OnlineSolver {
 public:
  MinMaxFromDominance(SquareMatrix m, const ReductionConfig& cfg,
                      const InnerFactory& inner, ValidateOptions opts = {})
      : OnlineSolver(ProblemKind::min_max, m.dimension(), opts),
        index_(m, cfg.resolve_t(m.dimension())),
        coder_(index_.max_abs()),
        m_(std::move(m)) {
    const std::size_t n = dimension();
    const Value::Rep w = coder_.bound();
    for (std::size_t l = 0; l < index_.buckets(); ++l) {
      SquareMatrix slice(n);
      for (Index i = 0; i < n; ++i) {
        for (Index k = 0; k < n; ++k) {
          const Value x = index_.bucket_of(i, k) == l
                              ? negate(coder_.matrix(m_(i, k)))
                              : kInf;
          slice(i, k) = finitize(x, w, FinitizeRole::matrix);
        }
      }
      slices_.push_back(inner(ProblemKind::exists_dominance, std::move(slice),
                              mix_seed(cfg.seed, l)));
    }
    SquareMatrix coded(n);
    for (Index i = 0; i < n; ++i) {
      for (Index k = 0; k < n; ++k) {
        coded(i, k) = finitize(coder_.matrix(m_(i, k)), w, FinitizeRole::matrix);
      }
    }
    whole_ = inner(ProblemKind::exists_dominance, std::move(coded),
                   mix_seed(cfg.seed, index_.buckets()));
  }

  std::string name() const override { return "minmax<-dom"; }
  std::size_t buckets() const { return index_.buckets(); }
  const RowBucketIndex& row_index() const { return index_; }

  /// Candidate vectors of the last query: u[i] = min{M[i,k] : M[i,k] >= v[k]}
  /// and w[i] = min{v[k] : v[k] >= M[i,k]}, +inf when empty.
  const ColumnVector& last_u() const { return u_; }
  const ColumnVector& last_w() const { return w_; }

  std::vector<const OnlineSolver*> inner_solvers() const override {
    std::vector<const OnlineSolver*> out;
    for (const auto& s : slices_) out.push_back(s.get());
    out.push_back(whole_.get());
    return out;
  }

 protected:
  ColumnVector answer(const ColumnVector& v) override {
    const std::size_t n = dimension();
    const std::size_t t = index_.buckets();
    const Value::Rep w = coder_.bound();
    u_ = ColumnVector(n, kInf);
    w_ = ColumnVector(n, kInf);

    // Phase u.
    ColumnVector negated(n);
    for (Index k = 0; k < n; ++k) {
      negated[k] = finitize(negate(coder_.query(v[k])), w, FinitizeRole::query);
    }
    std::vector<ColumnVector> hits;
    hits.reserve(t);
    for (auto& s : slices_) {
      hits.push_back(s->query(negated));
      ++counters_.inner_queries;
    }
    for (Index i = 0; i < n; ++i) {
      const auto first = first_hit(hits, i);
      if (!first) continue;
      bool found = false;
      for (Index k : index_.bucket(i, *first)) {
        ++counters_.scan_length_total;
        if (m_(i, k) >= v[k]) {
          u_[i] = m_(i, k);
          found = true;
          break;
        }
      }
      if (!found) throw std::logic_error("phase u: hit bucket holds no answer");
    }

    // Phase w.
    std::vector<Index> sorted(n);
    std::iota(sorted.begin(), sorted.end(), Index{0});
    std::sort(sorted.begin(), sorted.end(), [&](Index a, Index b) {
      return v[a] != v[b] ? v[a] < v[b] : a < b;
    });
    hits.clear();
    for (std::size_t l = 0; l < t; ++l) {
      ColumnVector part(n, finitize(kNegInf, w, FinitizeRole::query));
      for (std::size_t p = bucket_begin(l, n, t); p < bucket_begin(l + 1, n, t); ++p) {
        part[sorted[p]] = coder_.query(v[sorted[p]]);
      }
      hits.push_back(whole_->query(part));
      ++counters_.inner_queries;
    }
    for (Index i = 0; i < n; ++i) {
      const auto first = first_hit(hits, i);
      if (!first) continue;
      bool found = false;
      for (std::size_t p = bucket_begin(*first, n, t); p < bucket_begin(*first + 1, n, t); ++p) {
        ++counters_.scan_length_total;
        const Index k = sorted[p];
        if (v[k] >= m_(i, k)) {
          w_[i] = v[k];
          found = true;
          break;
        }
      }
      if (!found) throw std::logic_error("phase w: hit bucket holds no answer");
    }

    ColumnVector out(n);
    for (Index i = 0; i < n; ++i) out[i] = std::min(u_[i], w_[i]);
    return out;
  }

 private:
  static std::optional<std::size_t> first_hit(const std::vector<ColumnVector>& hits,
                                              Index i) {
    for (std::size_t l = 0; l < hits.size(); ++l) {
      if (hits[l][i] == Value(1)) return l;
    }
    return std::nullopt;
  }

  RowBucketIndex index_;
  ExtendedCoder coder_;
  SquareMatrix m_;
  std::vector<SolverPtr> slices_;
  SolverPtr whole_;
  ColumnVector u_;
  ColumnVector w_;
};

}  // namespace omv
