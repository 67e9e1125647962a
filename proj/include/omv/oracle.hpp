#pragma once

// Naive quadratic-per-query reference products. Every other solver is
// tested against these.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "omv/matrix.hpp"
#include "omv/solver.hpp"

namespace omv {

namespace oracle {

using Witnesses = std::vector<std::optional<Index>>;

namespace detail {

/// Shared loop of the three existential products; records the first
/// witness column per row when `wit` is non-null.
template <typename Pred>
ColumnVector exists_product(const SquareMatrix& m, const ColumnVector& v,
                            Pred pred, Witnesses* wit) {
  require_dimension(m, v);
  const std::size_t n = m.dimension();
  ColumnVector out(n, Value(0), Domain::boolean);
  if (wit) wit->assign(n, std::nullopt);
  for (Index i = 0; i < n; ++i) {
    auto row = m.row(i);
    for (Index k = 0; k < n; ++k) {
      if (pred(row[k], v[k])) {
        out[i] = Value(1);
        if (wit) (*wit)[i] = k;
        break;
      }
    }
  }
  return out;
}

}  // namespace detail

inline ColumnVector bool_mv(const SquareMatrix& m, const ColumnVector& v,
                            Witnesses* wit = nullptr) {
  return detail::exists_product(
      m, v, [](Value a, Value b) { return a == Value(1) && b == Value(1); },
      wit);
}

inline ColumnVector eq_exists_mv(const SquareMatrix& m, const ColumnVector& v,
                                 Witnesses* wit = nullptr) {
  return detail::exists_product(
      m, v, [](Value a, Value b) { return a == b; }, wit);
}

inline ColumnVector dom_exists_mv(const SquareMatrix& m, const ColumnVector& v,
                                  Witnesses* wit = nullptr) {
  return detail::exists_product(
      m, v, [](Value a, Value b) { return a <= b; }, wit);
}

/// Smallest 1-based k with M[i,k] = v[k] = 1, or +inf.
inline ColumnVector minwitness_mv(const SquareMatrix& m, const ColumnVector& v) {
  require_dimension(m, v);
  const std::size_t n = m.dimension();
  ColumnVector out(n, kInf);
  for (Index i = 0; i < n; ++i) {
    for (Index k = 0; k < n; ++k) {
      if (m(i, k) == Value(1) && v[k] == Value(1)) {
        out[i] = Value(static_cast<Value::Rep>(k + 1));
        break;
      }
    }
  }
  return out;
}

inline ColumnVector minmax_mv(const SquareMatrix& m, const ColumnVector& v) {
  require_dimension(m, v);
  const std::size_t n = m.dimension();
  ColumnVector out(n, kInf);
  for (Index i = 0; i < n; ++i) {
    for (Index k = 0; k < n; ++k) {
      out[i] = std::min(out[i], std::max(m(i, k), v[k]));
    }
  }
  return out;
}

inline ColumnVector minplus_mv(const SquareMatrix& m, const ColumnVector& v) {
  require_dimension(m, v);
  const std::size_t n = m.dimension();
  ColumnVector out(n, kInf);
  for (Index i = 0; i < n; ++i) {
    for (Index k = 0; k < n; ++k) {
      out[i] = std::min(out[i], add(m(i, k), v[k]));
    }
  }
  return out;
}

/// Floor division for a positive divisor.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t d) {
  std::int64_t q = a / d;
  return (a % d != 0 && a < 0) ? q - 1 : q;
}

/// C_i by full enumeration: the 0-based columns k whose rounded sum
/// floor(M[i,k]/d) + floor(v[k]/d) is within 1 of the rounded row minimum.
inline std::vector<Index> candidate_set_bruteforce(const SquareMatrix& m,
                                                   const ColumnVector& v,
                                                   std::int64_t delta, Index i) {
  require_dimension(m, v);
  const std::size_t n = m.dimension();
  std::vector<std::int64_t> sums(n);
  for (Index k = 0; k < n; ++k) {
    sums[k] = floor_div(m(i, k).finite(), delta) + floor_div(v[k].finite(), delta);
  }
  const std::int64_t u_hat = *std::min_element(sums.begin(), sums.end());
  std::vector<Index> out;
  for (Index k = 0; k < n; ++k) {
    if (sums[k] == u_hat || sums[k] == u_hat + 1) out.push_back(k);
  }
  return out;
}

/// True iff some bit position l < bits has bit_l(a) = 0, bit_l(b) = 1 and
/// a, b agree above l.
constexpr bool bit_trick_predicate(std::uint64_t a, std::uint64_t b,
                                   unsigned bits) {
  for (unsigned l = 0; l < bits; ++l) {
    if (((a >> l) & 1U) == 0 && ((b >> l) & 1U) == 1 &&
        (a >> (l + 1)) == (b >> (l + 1))) {
      return true;
    }
  }
  return false;
}

}  // namespace oracle

/// Reference solver for any problem kind: stores M and evaluates the
/// defining formula per query.
class NaiveSolver final : public OnlineSolver {
 public:
  NaiveSolver(const Problem& problem, SquareMatrix m, ValidateOptions opts = {})
      : OnlineSolver(problem, m.dimension(), opts), m_(std::move(m)) {}

  std::string name() const override {
    return "naive-" + std::string(short_name(kind()));
  }

  bool supports_witnesses() const override {
    return has_boolean_output(kind());
  }

  const SquareMatrix& matrix() const { return m_; }

 protected:
  ColumnVector answer(const ColumnVector& v) override {
    oracle::Witnesses* wit = tracking_ ? &witnesses_ : nullptr;
    switch (kind()) {
      case ProblemKind::boolean: return oracle::bool_mv(m_, v, wit);
      case ProblemKind::exists_equality: return oracle::eq_exists_mv(m_, v, wit);
      case ProblemKind::exists_dominance:
        return oracle::dom_exists_mv(m_, v, wit);
      case ProblemKind::min_witness: return oracle::minwitness_mv(m_, v);
      case ProblemKind::min_max: return oracle::minmax_mv(m_, v);
      case ProblemKind::bounded_min_plus: return oracle::minplus_mv(m_, v);
    }
    return {};
  }

 private:
  SquareMatrix m_;
};

/// Oracle answer for one (problem, matrix, vector) triple.
inline ColumnVector reference_answer(ProblemKind kind, const SquareMatrix& m,
                                     const ColumnVector& v) {
  switch (kind) {
    case ProblemKind::boolean: return oracle::bool_mv(m, v);
    case ProblemKind::exists_equality: return oracle::eq_exists_mv(m, v);
    case ProblemKind::exists_dominance: return oracle::dom_exists_mv(m, v);
    case ProblemKind::min_witness: return oracle::minwitness_mv(m, v);
    case ProblemKind::min_max: return oracle::minmax_mv(m, v);
    case ProblemKind::bounded_min_plus: return oracle::minplus_mv(m, v);
  }
  return {};
}

}  // namespace omv
