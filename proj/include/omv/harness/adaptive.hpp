#pragma once

// Adaptive adversary. Query j+1 is drawn from an RNG seeded with
// SHA-256(seed, j, answer_j), so a solver that has not produced answer_j
// cannot know what comes next, and any answer it postpones or guesses shows
// up as a mismatch against the oracle on the same stream.
//
// Limitation: a solver that simulates the adversary itself is not caught.

#include <openssl/evp.h>

#include <array>
#include <cstdint>
#include <cstring>
#include <deque>
#include <random>
#include <string>
#include <vector>

#include "omv/harness/differential.hpp"
#include "omv/harness/generate.hpp"

namespace omv::harness {

using Digest = std::array<unsigned char, 32>;

inline Digest sha256(const std::vector<unsigned char>& data) {
  Digest out{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), out.data(), &len, EVP_sha256(), nullptr) != 1 ||
      len != out.size()) {
    throw std::runtime_error("SHA-256 failed");
  }
  return out;
}

namespace detail {

inline void put_u64(std::vector<unsigned char>& buf, std::uint64_t x) {
  for (int b = 0; b < 8; ++b) buf.push_back(static_cast<unsigned char>(x >> (8 * b)));
}

}  // namespace detail

/// Seed for query j+1 given the answer to query j (j = 0: no answer yet).
inline std::uint64_t chain_seed(std::uint64_t seed, std::size_t j, const ColumnVector& answer) {
  std::vector<unsigned char> buf;
  detail::put_u64(buf, seed);
  detail::put_u64(buf, j);
  detail::put_u64(buf, answer.size());
  for (const Value& x : answer) detail::put_u64(buf, static_cast<std::uint64_t>(x.raw()));
  const Digest d = sha256(buf);
  std::uint64_t out = 0;
  std::memcpy(&out, d.data(), sizeof out);
  return out;
}

/// Runs `rounds` adaptively chosen queries against `solver`, whose matrix
/// must be `m`. The same stream is answered by a naive oracle.
inline TrialReport adaptive_session(OnlineSolver& solver, const SquareMatrix& m,
                                    const InstanceSpec& spec, std::size_t rounds) {
  TrialReport report;
  report.seed = spec.seed;
  Instance inst{spec.problem, m, {}};
  NaiveSolver oracle(spec.problem, m);
  Generator gen(spec);
  ColumnVector last_answer;
  try {
    for (std::size_t j = 1; j <= rounds; ++j) {
      std::mt19937_64 rng(chain_seed(spec.seed, j - 1, last_answer));
      inst.queries.push_back(gen.query(rng, j == 1 ? nullptr : &inst.queries.back()));
      const ColumnVector& v = inst.queries.back();
      const ColumnVector expected = oracle.query(v);
      last_answer = solver.query(v);
      ++report.queries;
      if (last_answer.size() == 0) {
        report.violation = "query " + std::to_string(j) + ": no answer before the next query";
        break;
      }
      compare_answer(j, expected, last_answer, report);
    }
  } catch (const std::exception& e) {
    report.violation = e.what();
  }
  report.instance_hash = instance_hash(inst);
  report.counters = total_counters(solver);
  return report;
}

/// Generates the matrix from spec.seed, builds the chain on it and runs an
/// adaptive session.
inline TrialReport adaptive_session(const ChainSpec& chain, const InstanceSpec& spec,
                                    std::size_t rounds, ReductionConfig cfg = {}) {
  Generator gen(spec);
  std::mt19937_64 rng(spec.seed);
  const SquareMatrix m = gen.matrix(rng);
  cfg.seed = spec.seed;
  try {
    SolverPtr solver = make_solver(spec.problem, m, chain, cfg);
    return adaptive_session(*solver, m, spec, rounds);
  } catch (const std::exception& e) {
    TrialReport report;
    report.seed = spec.seed;
    report.violation = e.what();
    return report;
  }
}

/// Negative control: collects queries and produces no answer until
/// `flush`, when it answers them all at once.
class BatchingSolver final : public OnlineSolver {
 public:
  explicit BatchingSolver(SolverPtr inner)
      : OnlineSolver(inner->problem(), inner->dimension()), inner_(std::move(inner)) {}

  std::string name() const override { return "batching(" + inner_->name() + ")"; }

  std::vector<ColumnVector> flush() {
    std::vector<ColumnVector> out;
    for (const auto& v : pending_) out.push_back(inner_->query(v));
    pending_.clear();
    return out;
  }

 protected:
  ColumnVector answer(const ColumnVector& v) override {
    pending_.push_back(v);
    return {};
  }

 private:
  SolverPtr inner_;
  std::vector<ColumnVector> pending_;
};

/// Negative control: answers each query with the answer to the previous one
/// (all zeros first), as a solver that lags one query behind would.
class DeferringSolver final : public OnlineSolver {
 public:
  explicit DeferringSolver(SolverPtr inner)
      : OnlineSolver(inner->problem(), inner->dimension()), inner_(std::move(inner)) {}

  std::string name() const override { return "deferring(" + inner_->name() + ")"; }

 protected:
  ColumnVector answer(const ColumnVector& v) override {
    ColumnVector out = held_.value_or(ColumnVector(dimension()));
    held_ = inner_->query(v);
    return out;
  }

 private:
  SolverPtr inner_;
  std::optional<ColumnVector> held_;
};

}  // namespace omv::harness
