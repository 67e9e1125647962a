#pragma once

// Success rate of the randomized min-plus reduction over seeded trials.

#include <cmath>
#include <cstdint>
#include <optional>
#include <ostream>

#include "omv/harness/differential.hpp"

namespace omv::harness {

struct Interval {
  double lo = 0;
  double hi = 1;
};

/// Wilson score interval for s successes in n trials.
inline Interval wilson_interval(std::size_t s, std::size_t n, double z = 1.96) {
  if (n == 0) return {};
  const double p = static_cast<double>(s) / static_cast<double>(n);
  const double nn = static_cast<double>(n);
  const double denom = 1 + z * z / nn;
  const double centre = (p + z * z / (2 * nn)) / denom;
  const double half = z * std::sqrt(p * (1 - p) / nn + z * z / (4 * nn * nn)) / denom;
  return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

struct ExperimentConfig {
  std::size_t n = 32;
  std::optional<std::size_t> delta;
  HittingSetSize hitting;
  Monotonicity monotone = Monotonicity::rows;
  std::size_t trials = 200;
  std::uint64_t seed = 1;
  // Entries drawn from [lo, hi]; a narrow range makes candidate sets large,
  // which is where the sampled columns matter.
  std::optional<std::int64_t> lo;
  std::optional<std::int64_t> hi;
};

struct SuccessRate {
  std::size_t trials = 0;
  std::size_t successes = 0;
  Interval ci;
  std::uint64_t entries = 0;
  std::uint64_t entry_failures = 0;
  double predicted_entry_failure = 0;  // 1/n^3

  double rate() const {
    return trials == 0 ? 0.0 : static_cast<double>(successes) / static_cast<double>(trials);
  }
  double entry_failure_rate() const {
    return entries == 0 ? 0.0
                        : static_cast<double>(entry_failures) / static_cast<double>(entries);
  }
};

inline std::ostream& operator<<(std::ostream& os, const SuccessRate& r) {
  return os << "trials=" << r.trials << " success=" << r.successes << " rate=" << r.rate()
            << " ci95=[" << r.ci.lo << "," << r.ci.hi << "] entry_failures="
            << r.entry_failures << "/" << r.entries
            << " predicted_entry_failure<=" << r.predicted_entry_failure;
}

/// Runs bmmp<-eq over naive equality solvers on fresh instances with n
/// queries each.
inline SuccessRate success_rate_experiment(const ExperimentConfig& ec) {
  const auto n = static_cast<std::int64_t>(ec.n);
  InstanceSpec spec;
  spec.problem = Problem::min_plus(ec.monotone);
  spec.n = ec.n;
  spec.dist = Distribution::uniform(ec.lo.value_or(1), ec.hi.value_or(n));
  spec.seed = ec.seed;

  ReductionConfig cfg;
  cfg.delta = ec.delta;
  cfg.hitting = ec.hitting;

  const ChainSpec chain = ChainSpec::parse("bmmp<-eq,naive");
  SuccessRate out;
  out.trials = ec.trials;
  out.predicted_entry_failure = 1.0 / (static_cast<double>(n) * n * n);
  for (std::size_t t = 0; t < ec.trials; ++t) {
    const TrialReport r = run_seeded_trial(chain, spec, cfg, mix_seed(ec.seed, t));
    if (r.success()) ++out.successes;
    out.entries += r.queries * ec.n;
    out.entry_failures += r.mismatches.size();
  }
  out.ci = wilson_interval(out.successes, out.trials);
  return out;
}

}  // namespace omv::harness
