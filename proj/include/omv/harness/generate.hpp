#pragma once

// Seeded instance generators for every problem kind.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "omv/config.hpp"
#include "omv/error.hpp"
#include "omv/io.hpp"
#include "omv/matrix.hpp"
#include "omv/problem.hpp"
#include "omv/validate.hpp"

namespace omv::harness {

struct Distribution {
  enum class Kind { boolean, uniform, skewed };
  Kind kind = Kind::uniform;
  // Value range for uniform and skewed. Unset: [0, n] for integer kinds,
  // [0, c*n] for bmmp.
  std::optional<std::int64_t> lo;
  std::optional<std::int64_t> hi;
  double density = 0.5;  // probability of a 1 for Boolean entries
  std::size_t heavy = 2;  // skewed: heavy values per column
  double heavy_mass = 0.8;

  static Distribution boolean(double density = 0.5) {
    Distribution d;
    d.kind = Kind::boolean;
    d.density = density;
    return d;
  }
  static Distribution uniform(std::int64_t lo, std::int64_t hi) {
    Distribution d;
    d.lo = lo;
    d.hi = hi;
    return d;
  }
  static Distribution skewed() {
    Distribution d;
    d.kind = Kind::skewed;
    return d;
  }
};

struct InstanceSpec {
  Problem problem = ProblemKind::boolean;
  std::size_t n = 4;
  std::optional<std::size_t> queries;  // default n
  Distribution dist;
  double inf_prob = 0.0;  // dom and minmax: chance of an infinite entry
  std::uint64_t seed = 0;
  std::int64_t bound_constant = 4;

  std::size_t query_count() const { return queries.value_or(n); }
};

/// Draws matrices and queries for one spec. The matrix must be drawn first;
/// skewed queries reuse the heavy values of its columns.
class Generator {
 public:
  explicit Generator(const InstanceSpec& spec) : spec_(spec) {
    if (spec.n == 0) throw ValidationError("n must be positive");
    const ProblemKind kind = spec.problem.kind();
    if (domain_of(kind) == Domain::boolean) {
      lo_ = 0;
      hi_ = 1;
    } else {
      const auto n = static_cast<std::int64_t>(spec.n);
      const std::int64_t top =
          kind == ProblemKind::bounded_min_plus ? spec.bound_constant * n : n;
      lo_ = spec.dist.lo.value_or(0);
      hi_ = spec.dist.hi.value_or(top);
      if (lo_ > hi_) throw ValidationError("empty value range");
      if (kind == ProblemKind::bounded_min_plus && (lo_ < 0 || hi_ > spec.bound_constant * n)) {
        throw ValidationError("value range [" + std::to_string(lo_) + ", " +
                              std::to_string(hi_) + "] outside [0, " +
                              std::to_string(spec.bound_constant * n) + "]");
      }
      if (lo_ < -kFiniteLimit || hi_ > kFiniteLimit) {
        throw ValidationError("value range exceeds the finite limit");
      }
    }
    if (spec.inf_prob < 0 || spec.inf_prob > 1 ||
        (spec.inf_prob > 0 && !admits_infinity(kind))) {
      throw ValidationError("infinite entries not allowed for " +
                            std::string(short_name(kind)));
    }
    if (spec.dist.kind == Distribution::Kind::skewed && spec.dist.heavy == 0) {
      throw ValidationError("skewed distribution needs at least one heavy value");
    }
  }

  const InstanceSpec& spec() const { return spec_; }

  SquareMatrix matrix(std::mt19937_64& rng) {
    const std::size_t n = spec_.n;
    const ProblemKind kind = spec_.problem.kind();
    SquareMatrix m(n, Value(0), domain_of(kind));

    if (spec_.dist.kind == Distribution::Kind::skewed) {
      heavy_.assign(n, {});
      for (auto& h : heavy_) {
        for (std::size_t p = 0; p < spec_.dist.heavy; ++p) h.push_back(uniform(rng));
      }
    }
    for (Index k = 0; k < n; ++k) {
      for (Index i = 0; i < n; ++i) m(i, k) = entry(rng, k);
    }

    if (auto mono = spec_.problem.monotone()) {
      if (*mono == Monotonicity::rows) {
        for (Index i = 0; i < n; ++i) {
          std::vector<Value> row(m.row(i).begin(), m.row(i).end());
          std::sort(row.begin(), row.end());
          for (Index k = 0; k < n; ++k) m(i, k) = row[k];
        }
      } else if (*mono == Monotonicity::columns) {
        for (Index k = 0; k < n; ++k) {
          std::vector<Value> col(n);
          for (Index i = 0; i < n; ++i) col[i] = m(i, k);
          std::sort(col.begin(), col.end());
          for (Index i = 0; i < n; ++i) m(i, k) = col[i];
        }
      }
    }
    return m;
  }

  /// Next query; `previous` is the last query of the stream, if any.
  ColumnVector query(std::mt19937_64& rng, const ColumnVector* previous) {
    const std::size_t n = spec_.n;
    const ProblemKind kind = spec_.problem.kind();
    ColumnVector v(n, Value(0), domain_of(kind));
    const auto mono = spec_.problem.monotone();

    if (mono == Monotonicity::across_queries && previous != nullptr) {
      // Small nondecreasing steps keep a stream of about q queries inside
      // the range; entries saturate at hi.
      const std::int64_t step =
          std::max<std::int64_t>(1, (hi_ - lo_) / static_cast<std::int64_t>(2 * spec_.query_count()));
      std::uniform_int_distribution<std::int64_t> inc(0, step);
      for (Index k = 0; k < n; ++k) {
        v[k] = Value(std::min(hi_, (*previous)[k].finite() + inc(rng)));
      }
      return v;
    }
    if (mono == Monotonicity::across_queries) {
      std::uniform_int_distribution<std::int64_t> start(lo_, lo_ + (hi_ - lo_) / 2);
      for (Index k = 0; k < n; ++k) v[k] = Value(start(rng));
      return v;
    }

    for (Index k = 0; k < n; ++k) v[k] = entry(rng, k);
    if (mono == Monotonicity::within_query) std::sort(v.begin(), v.end());
    return v;
  }

  std::int64_t lo() const { return lo_; }
  std::int64_t hi() const { return hi_; }

 private:
  std::int64_t uniform(std::mt19937_64& rng) const {
    return std::uniform_int_distribution<std::int64_t>(lo_, hi_)(rng);
  }

  Value entry(std::mt19937_64& rng, Index column) const {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    if (domain_of(spec_.problem.kind()) == Domain::boolean) {
      const double density =
          spec_.dist.kind == Distribution::Kind::boolean ? spec_.dist.density : 0.5;
      return Value(coin(rng) < density ? 1 : 0);
    }
    if (spec_.inf_prob > 0 && coin(rng) < spec_.inf_prob) {
      return coin(rng) < 0.5 ? kInf : kNegInf;
    }
    if (spec_.dist.kind == Distribution::Kind::skewed && !heavy_.empty() &&
        coin(rng) < spec_.dist.heavy_mass) {
      const auto& h = heavy_[column];
      return Value(h[std::uniform_int_distribution<std::size_t>(0, h.size() - 1)(rng)]);
    }
    return Value(uniform(rng));
  }

  InstanceSpec spec_;
  std::int64_t lo_ = 0;
  std::int64_t hi_ = 0;
  std::vector<std::vector<std::int64_t>> heavy_;
};

/// Matrix and query stream, reproducible from spec.seed.
inline Instance gen_instance(const InstanceSpec& spec) {
  Generator gen(spec);
  std::mt19937_64 rng(spec.seed);
  Instance inst{spec.problem, gen.matrix(rng), {}};
  for (std::size_t j = 0; j < spec.query_count(); ++j) {
    inst.queries.push_back(gen.query(rng, j == 0 ? nullptr : &inst.queries.back()));
  }
  return inst;
}

/// First violation of the instance against its declared problem, if any.
inline std::optional<std::string> check_instance(const Instance& inst,
                                                 ValidateOptions opts = {}) {
  const std::size_t n = inst.matrix.dimension();
  if (auto bad = validate(inst.matrix, inst.problem, opts)) return "matrix, " + bad->describe();
  for (std::size_t j = 0; j < inst.queries.size(); ++j) {
    const ColumnVector* prev = j == 0 ? nullptr : &inst.queries[j - 1];
    if (inst.queries[j].size() != n) {
      return "query " + std::to_string(j + 1) + " has length " +
             std::to_string(inst.queries[j].size());
    }
    if (auto bad = validate_query(inst.queries[j], inst.problem, n, prev, opts)) {
      return "query " + std::to_string(j + 1) + ", " + bad->describe();
    }
  }
  return std::nullopt;
}

}  // namespace omv::harness
