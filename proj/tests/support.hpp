#pragma once

#include <gtest/gtest.h>

#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <random>
#include <vector>

#include "omv/omv.hpp"

namespace omv {

inline void PrintTo(const ColumnVector& v, std::ostream* os) {
  *os << "(";
  for (std::size_t k = 0; k < v.size(); ++k) *os << (k ? ", " : "") << v[k];
  *os << ")";
}

inline void PrintTo(Value v, std::ostream* os) { *os << v; }

}  // namespace omv

namespace testing_support {

using omv::ColumnVector;
using omv::Index;
using omv::SquareMatrix;
using omv::Value;

inline ColumnVector vec(std::initializer_list<Value> xs) { return ColumnVector(xs); }

inline std::mt19937_64 rng_for(std::uint64_t seed) { return std::mt19937_64(seed); }

inline std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline SquareMatrix random_matrix(std::mt19937_64& rng, std::size_t n, std::int64_t lo,
                                  std::int64_t hi) {
  SquareMatrix m(n);
  for (Index i = 0; i < n; ++i) {
    for (Index k = 0; k < n; ++k) m(i, k) = Value(uniform(rng, lo, hi));
  }
  return m;
}

inline ColumnVector random_vector(std::mt19937_64& rng, std::size_t n, std::int64_t lo,
                                  std::int64_t hi) {
  ColumnVector v(n);
  for (Index k = 0; k < n; ++k) v[k] = Value(uniform(rng, lo, hi));
  return v;
}

/// Runs every query through `solver` and a naive oracle; returns the number
/// of differing entries.
inline std::size_t count_mismatches(omv::OnlineSolver& solver, const omv::Instance& inst) {
  omv::NaiveSolver oracle(inst.problem, inst.matrix);
  std::size_t bad = 0;
  for (const auto& v : inst.queries) {
    const ColumnVector expected = oracle.query(v);
    const ColumnVector got = solver.query(v);
    for (Index i = 0; i < expected.size(); ++i) bad += expected[i] != got[i] ? 1 : 0;
  }
  return bad;
}

}  // namespace testing_support
