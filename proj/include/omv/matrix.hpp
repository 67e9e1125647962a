#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "omv/error.hpp"
#include "omv/problem.hpp"
#include "omv/value.hpp"

namespace omv {

using Index = std::size_t;

/// Length-n column vector over extended values.
///
/// Storage is 0-based; every index reported to users is 1-based.
class ColumnVector {
 public:
  ColumnVector() = default;
  explicit ColumnVector(std::size_t n, Value fill = Value(0),
                        Domain domain = Domain::integer)
      : entries_(n, fill), domain_(domain) {}
  ColumnVector(std::vector<Value> entries, Domain domain = Domain::integer)
      : entries_(std::move(entries)), domain_(domain) {}
  ColumnVector(std::initializer_list<Value> entries,
               Domain domain = Domain::integer)
      : entries_(entries), domain_(domain) {}

  std::size_t size() const { return entries_.size(); }
  Domain domain() const { return domain_; }
  void set_domain(Domain d) { domain_ = d; }

  Value& operator[](Index k) { return entries_[k]; }
  const Value& operator[](Index k) const { return entries_[k]; }

  auto begin() { return entries_.begin(); }
  auto end() { return entries_.end(); }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  std::span<const Value> values() const { return entries_; }

  // Equality is on entries only; the tag is a declaration, not data.
  bool operator==(const ColumnVector& o) const { return entries_ == o.entries_; }

 private:
  std::vector<Value> entries_;
  Domain domain_ = Domain::integer;
};

/// Square n x n matrix over extended values, stored row-major.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n, Value fill = Value(0),
                        Domain domain = Domain::integer)
      : n_(n), entries_(n * n, fill), domain_(domain) {}

  /// Builds from nested rows; throws DimensionMismatch on a ragged input.
  SquareMatrix(std::initializer_list<std::initializer_list<Value>> rows,
               Domain domain = Domain::integer)
      : n_(rows.size()), domain_(domain) {
    entries_.reserve(n_ * n_);
    for (const auto& row : rows) {
      if (row.size() != n_) throw DimensionMismatch("matrix is not square");
      entries_.insert(entries_.end(), row.begin(), row.end());
    }
  }

  static SquareMatrix from_rows(const std::vector<std::vector<Value>>& rows,
                                Domain domain = Domain::integer) {
    SquareMatrix m(rows.size(), Value(0), domain);
    for (Index i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size()) {
        throw DimensionMismatch("matrix is not square");
      }
      for (Index k = 0; k < rows.size(); ++k) m(i, k) = rows[i][k];
    }
    return m;
  }

  std::size_t dimension() const { return n_; }
  Domain domain() const { return domain_; }
  void set_domain(Domain d) { domain_ = d; }

  Value& operator()(Index i, Index k) { return entries_[i * n_ + k]; }
  const Value& operator()(Index i, Index k) const { return entries_[i * n_ + k]; }

  std::span<const Value> row(Index i) const {
    return std::span<const Value>(entries_).subspan(i * n_, n_);
  }
  std::span<const Value> values() const { return entries_; }

  bool operator==(const SquareMatrix& o) const {
    return n_ == o.n_ && entries_ == o.entries_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Value> entries_;
  Domain domain_ = Domain::integer;
};

inline void require_dimension(const SquareMatrix& m, const ColumnVector& v) {
  if (m.dimension() != v.size()) {
    throw DimensionMismatch("vector of length " + std::to_string(v.size()) +
                            " against matrix of dimension " +
                            std::to_string(m.dimension()));
  }
}

}  // namespace omv
