// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "omv/omv.hpp"

using namespace omv;
using namespace omv::harness;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

constexpr Monotonicity kCases[] = {Monotonicity::rows, Monotonicity::columns,
                                   Monotonicity::within_query, Monotonicity::across_queries};

std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

/// Parameter settings {1, 2, default, n}, cycled by trial number.
std::optional<std::size_t> setting(std::size_t trial, std::size_t n) {
  switch (trial % 4) {
    case 0: return 1;
    case 1: return std::min<std::size_t>(2, n);
    case 2: return std::nullopt;
    default: return n;
  }
}

/// Value distributions cycled by trial number: narrow, wide, skewed.
Distribution mixed(std::size_t trial, ProblemKind kind) {
  switch (trial % 3) {
    case 0: return Distribution::uniform(-3, 3);
    case 1: return Distribution::uniform(-1000, 1000);
    default:
      return kind == ProblemKind::exists_dominance || kind == ProblemKind::min_max
                 ? Distribution::uniform(-10, 10)
                 : Distribution::skewed();
  }
}

std::string label(const Problem& p) {
  std::string out(short_name(p.kind()));
  if (p.monotone()) out += " " + std::string(short_name(*p.monotone()));
  return out;
}

std::size_t mismatches(OnlineSolver& solver, const Instance& inst) {
  const TrialReport r = run_trial(solver, inst, 0);
  return r.mismatches.size() + (r.violation.empty() ? 0 : 1);
}

Outcome deterministic_reductions() {
  struct Target {
    const char* chain;
    ProblemKind kind;
    bool uses_t;
  };
  const Target targets[] = {
      {"eq<-bool,naive", ProblemKind::exists_equality, true},
      {"minmax<-dom,naive", ProblemKind::min_max, true},
      {"dom<-eq,naive", ProblemKind::exists_dominance, false},
      {"minwit<-minmax,naive", ProblemKind::min_witness, false},
  };
  std::ostringstream detail;
  bool pass = true;
  for (const auto& target : targets) {
    std::size_t bad = 0;
    for (std::size_t trial = 0; trial < 200; ++trial) {
      InstanceSpec spec;
      spec.problem = target.kind;
      spec.n = 2 + trial % 31;
      spec.seed = mix_seed(101, trial);
      if (target.kind != ProblemKind::min_witness) spec.dist = mixed(trial, target.kind);
      if (admits_infinity(target.kind) && trial % 2 == 1) spec.inf_prob = 0.1;
      const Instance inst = gen_instance(spec);
      ReductionConfig cfg;
      if (target.uses_t) cfg.t = setting(trial, spec.n);
      cfg.seed = spec.seed;
      auto solver = make_solver(inst.problem, inst.matrix, target.chain, cfg);
      bad += mismatches(*solver, inst) > 0 ? 1 : 0;
    }
    detail << target.chain << " " << 200 - bad << "/200; ";
    pass = pass && bad == 0;
  }

  std::size_t bad = 0;
  for (std::size_t trial = 0; trial < 200; ++trial) {
    InstanceSpec spec;
    spec.problem = ProblemKind::boolean;
    spec.n = 2 + trial % 31;
    spec.dist = Distribution::boolean(trial % 3 == 0 ? 0.1 : 0.5);
    spec.seed = mix_seed(102, trial);
    const Instance inst = gen_instance(spec);
    ReductionConfig cfg;
    cfg.delta = setting(trial, spec.n);
    cfg.hitting = HittingSetSize::full();
    cfg.seed = spec.seed;
    auto solver = make_solver(inst.problem, inst.matrix, "bool<-bmmp,bmmp<-eq,naive", cfg);
    bad += mismatches(*solver, inst) > 0 ? 1 : 0;
  }
  detail << "bool<-bmmp,bmmp<-eq (all columns sampled) " << 200 - bad << "/200";
  return {pass && bad == 0, detail.str()};
}

Outcome candidate_sets_hold_the_minimum() {
  std::mt19937_64 rng(201);
  std::size_t bad = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto n = static_cast<std::size_t>(draw(rng, 1, 32));
    const auto bound = 4 * static_cast<std::int64_t>(n);
    const std::int64_t hi = trial % 2 ? bound : static_cast<std::int64_t>(n) / 2;
    SquareMatrix m(n);
    ColumnVector v(n);
    for (Index i = 0; i < n; ++i) {
      for (Index k = 0; k < n; ++k) m(i, k) = Value(draw(rng, 0, hi));
    }
    for (Index k = 0; k < n; ++k) v[k] = Value(draw(rng, 0, hi));
    const std::int64_t delta = draw(rng, 1, 8);
    const auto i = static_cast<Index>(draw(rng, 0, static_cast<std::int64_t>(n) - 1));
    Value best = kInf;
    for (Index k : oracle::candidate_set_bruteforce(m, v, delta, i)) {
      best = std::min(best, add(m(i, k), v[k]));
    }
    bad += best != oracle::minplus_mv(m, v)[i] ? 1 : 0;
  }
  return {bad == 0, std::to_string(1000 - bad) + "/1000 exact"};
}

Outcome candidate_listing() {
  std::ostringstream detail;
  bool pass = true;
  for (auto mono : kCases) {
    std::size_t rows = 0;
    std::size_t bad = 0;
    std::size_t oversize = 0;
    for (std::uint64_t seed = 0; rows < 1000; ++seed) {
      InstanceSpec spec;
      spec.problem = Problem::min_plus(mono);
      spec.n = 1 + seed % 24;
      spec.seed = mix_seed(301, seed);
      const auto n = static_cast<std::int64_t>(spec.n);
      spec.dist = Distribution::uniform(0, seed % 3 == 0 ? n / 2 : 4 * n);
      const Instance inst = gen_instance(spec);
      const std::int64_t delta = 1 + static_cast<std::int64_t>(seed % 5);
      CandidateLister lister(inst.matrix, delta, mono, 4 * n);
      for (const auto& v : inst.queries) {
        CounterLedger counters;
        const CandidateReport report = lister.list(v, counters);
        for (Index i = 0; i < spec.n; ++i) {
          const auto expect = oracle::candidate_set_bruteforce(inst.matrix, v, delta, i);
          const auto& row = report.rows[i];
          const bool over = expect.size() > spec.n / static_cast<std::size_t>(delta);
          oversize += over ? 1 : 0;
          if (row.oversize != over || (!over && row.members != expect)) ++bad;
          ++rows;
        }
      }
    }
    detail << short_name(mono) << " " << rows - bad << "/" << rows << " (" << oversize
           << " oversize); ";
    pass = pass && bad == 0;
  }
  return {pass, detail.str()};
}

Outcome success_probability() {
  ExperimentConfig ec;
  ec.n = 32;
  ec.trials = 200;
  ec.seed = 401;
  const SuccessRate sampled = success_rate_experiment(ec);
  ec.hitting = HittingSetSize::full();
  const SuccessRate full = success_rate_experiment(ec);
  std::ostringstream detail;
  detail << "sampled: " << sampled << "; all columns: " << full.successes << "/" << full.trials;
  return {sampled.rate() >= 0.90 && full.successes == full.trials, detail.str()};
}

Outcome bit_trick_and_ranks() {
  std::size_t bad = 0;
  for (std::uint64_t a = 0; a < 1024; ++a) {
    for (std::uint64_t b = 0; b < 1024; ++b) {
      bad += oracle::bit_trick_predicate(a, b, 10) != (a < b) ? 1 : 0;
    }
  }
  // The rank map depends only on the set of distinct entries, and every
  // nonempty subset of [-4, 4] is the entry set of some matrix with n <= 4.
  std::size_t sets = 0;
  std::vector<Value> queries{kInf, kNegInf};
  for (int b = -6; b <= 6; ++b) queries.push_back(Value(b));
  for (unsigned mask = 1; mask < (1U << 9); ++mask) {
    std::vector<Value> values;
    for (int x = -4; x <= 4; ++x) {
      if (mask & (1U << (x + 4))) values.push_back(Value(x));
    }
    const std::size_t n = values.size() <= 4 ? 2 : 3;
    SquareMatrix m(n, values.front());
    for (std::size_t p = 0; p < values.size(); ++p) m(p / n, p % n) = values[p];
    const RankMap ranks(m);
    for (Value a : values) {
      for (Value b : queries) bad += (a <= b) != (ranks.rank(a) <= ranks.query_rank(b)) ? 1 : 0;
    }
    ++sets;
  }
  // Random matrices of every size up to 4, through the full dominance link.
  std::mt19937_64 rng(501);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto n = static_cast<std::size_t>(1 + trial % 4);
    SquareMatrix m(n);
    for (Index i = 0; i < n; ++i) {
      for (Index k = 0; k < n; ++k) m(i, k) = Value(draw(rng, -4, 4));
    }
    auto solver = make_solver(ProblemKind::exists_dominance, m, "dom<-eq,naive", {});
    for (int j = 0; j < 4; ++j) {
      ColumnVector v(n);
      for (Index k = 0; k < n; ++k) v[k] = Value(draw(rng, -5, 5));
      bad += solver->query(v) != oracle::dom_exists_mv(m, v) ? 1 : 0;
    }
  }
  return {bad == 0, "1048576 pairs, " + std::to_string(sets) +
                        " value sets, 2000 random matrices; " + std::to_string(bad) +
                        " disagreements"};
}

Outcome counter_accounting() {
  std::size_t checks = 0;
  std::ostringstream failures;
  auto record = [&](const AccountingReport& r, const std::string& label) {
    checks += r.checks.size();
    if (!r.pass()) {
      failures << label << ": ";
      if (const auto* c = r.first_failure()) failures << *c;
      failures << "; ";
    }
  };
  const std::pair<const char*, ProblemKind> links[] = {
      {"eq<-bool,naive", ProblemKind::exists_equality},
      {"minmax<-dom,naive", ProblemKind::min_max},
      {"dom<-eq,naive", ProblemKind::exists_dominance},
  };
  for (std::size_t n : {8, 16, 32}) {
    for (std::size_t s = 0; s < 4; ++s) {
      ReductionConfig cfg;
      cfg.t = setting(s, n);
      for (const auto& [chain, kind] : links) {
        InstanceSpec spec;
        spec.problem = kind;
        spec.n = n;
        spec.seed = mix_seed(601, n * 4 + s);
        if (admits_infinity(kind)) spec.inf_prob = 0.1;
        record(accounting_check(ChainSpec::parse(chain), gen_instance(spec), cfg),
               std::string(chain) + " n=" + std::to_string(n));
      }
      for (auto mono : kCases) {
        InstanceSpec spec;
        spec.problem = Problem::min_plus(mono);
        spec.n = n;
        spec.seed = mix_seed(602, n * 4 + s);
        ReductionConfig b;
        b.delta = setting(s, n);
        b.seed = spec.seed;
        record(accounting_check(ChainSpec::parse("bmmp<-eq,naive"), gen_instance(spec), b),
               "bmmp<-eq " + std::string(short_name(mono)) + " n=" + std::to_string(n));
      }
    }
  }
  const std::string f = failures.str();
  return {f.empty(), std::to_string(checks) + " counter checks" + (f.empty() ? "" : "; " + f)};
}

Outcome full_cycle() {
  struct Cycle {
    Problem problem;
    const char* chain;
  };
  const Cycle cycles[] = {
      {ProblemKind::exists_equality, "eq<-bool,naive"},
      {ProblemKind::exists_dominance, "dom<-eq,eq<-bool,naive"},
      {ProblemKind::min_max, "minmax<-dom,dom<-eq,eq<-bool,naive"},
      {ProblemKind::min_witness, "minwit<-minmax,minmax<-dom,dom<-eq,eq<-bool,naive"},
      {Problem::min_plus(Monotonicity::rows), "bmmp<-eq,eq<-bool,naive"},
      {Problem::min_plus(Monotonicity::columns), "bmmp<-eq,eq<-bool,naive"},
      {Problem::min_plus(Monotonicity::within_query), "bmmp<-eq,eq<-bool,naive"},
      {Problem::min_plus(Monotonicity::across_queries), "bmmp<-eq,eq<-bool,naive"},
      {ProblemKind::boolean, "bool<-bmmp,bmmp<-eq,eq<-bool,naive"},
      {ProblemKind::boolean,
       "bool<-minwit,minwit<-minmax,minmax<-dom,dom<-eq,eq<-bool,naive"},
  };
  std::ostringstream detail;
  bool pass = true;
  std::size_t index = 0;
  for (const auto& cycle : cycles) {
    std::size_t bad = 0;
    for (std::size_t trial = 0; trial < 50; ++trial) {
      InstanceSpec spec;
      spec.problem = cycle.problem;
      spec.n = 1 + trial % 24;
      spec.seed = mix_seed(701 + index, trial);
      if (admits_infinity(cycle.problem.kind())) spec.inf_prob = 0.1;
      ReductionConfig cfg;
      cfg.hitting = HittingSetSize::full();
      cfg.seed = spec.seed;
      const Instance inst = gen_instance(spec);
      auto solver = make_solver(inst.problem, inst.matrix, cycle.chain, cfg);
      bad += mismatches(*solver, inst) > 0 ? 1 : 0;
    }
    detail << label(cycle.problem) << " " << 50 - bad << "/50; ";
    pass = pass && bad == 0;
    ++index;
  }
  return {pass, detail.str()};
}

Outcome online_sessions() {
  struct Target {
    Problem problem;
    const char* chain;
  };
  const Target targets[] = {
      {ProblemKind::exists_equality, "eq<-bool,naive"},
      {ProblemKind::exists_dominance, "dom<-eq,naive"},
      {ProblemKind::min_max, "minmax<-dom,naive"},
      {ProblemKind::min_witness, "minwit<-minmax,naive"},
      {Problem::min_plus(Monotonicity::rows), "bmmp<-eq,naive"},
      {Problem::min_plus(Monotonicity::columns), "bmmp<-eq,naive"},
      {Problem::min_plus(Monotonicity::within_query), "bmmp<-eq,naive"},
      {Problem::min_plus(Monotonicity::across_queries), "bmmp<-eq,naive"},
      {ProblemKind::boolean, "bool<-bmmp,naive"},
      {ProblemKind::boolean, "bool<-minwit,naive"},
  };
  std::ostringstream detail;
  bool pass = true;
  std::size_t index = 0;
  for (const auto& target : targets) {
    std::size_t ok = 0;
    for (std::uint64_t s = 0; s < 20; ++s) {
      InstanceSpec spec;
      spec.problem = target.problem;
      spec.n = 4 + s % 13;
      spec.seed = mix_seed(801 + index, s);
      if (admits_infinity(target.problem.kind())) spec.inf_prob = 0.1;
      ReductionConfig cfg;
      cfg.hitting = HittingSetSize::full();
      // The Boolean-from-min-plus encoding stays in range for n + 1 queries.
      const std::size_t rounds = target.problem.kind() == ProblemKind::boolean &&
                                         std::string(target.chain).starts_with("bool<-bmmp")
                                     ? spec.n + 1
                                     : 2 * spec.n;
      ok += adaptive_session(ChainSpec::parse(target.chain), spec, rounds, cfg).success() ? 1 : 0;
    }
    detail << target.chain << "/" << label(target.problem) << " " << ok << "/20; ";
    pass = pass && ok == 20;
    ++index;
  }

  InstanceSpec spec;
  spec.problem = ProblemKind::exists_equality;
  spec.n = 8;
  spec.seed = 899;
  Generator gen(spec);
  std::mt19937_64 rng(spec.seed);
  const SquareMatrix m = gen.matrix(rng);
  BatchingSolver batching(std::make_unique<NaiveSolver>(spec.problem, m));
  const TrialReport b = adaptive_session(batching, m, spec, 16);
  DeferringSolver deferring(std::make_unique<NaiveSolver>(spec.problem, m));
  const TrialReport d = adaptive_session(deferring, m, spec, 16);
  const bool rejected = !b.success() && !d.success();
  detail << "batching control " << (b.success() ? "accepted" : "rejected (" + b.violation + ")")
         << "; deferring control " << (d.success() ? "accepted" : "rejected");
  return {pass && rejected, detail.str()};
}

Outcome encoding_monotonicity() {
  std::size_t bad = 0;
  for (std::uint64_t trial = 0; trial < 100; ++trial) {
    InstanceSpec spec;
    spec.problem = ProblemKind::boolean;
    spec.n = 1 + trial % 32;
    spec.seed = mix_seed(901, trial);
    spec.queries = spec.n + 1;
    const Instance inst = gen_instance(spec);
    const std::size_t n = spec.n;
    const SquareMatrix m = BooleanFromMinPlus::encode_matrix(inst.matrix);
    for (Index i = 0; i < n; ++i) {
      for (Index k = 0; k < n; ++k) {
        if (k + 1 < n && m(i, k) > m(i, k + 1)) ++bad;
        if (i + 1 < n && m(i, k) > m(i + 1, k)) ++bad;
      }
    }
    ColumnVector previous;
    for (std::size_t j = 1; j <= inst.queries.size(); ++j) {
      const ColumnVector v = BooleanFromMinPlus::encode_query(inst.queries[j - 1], j);
      for (Index k = 0; k < n; ++k) {
        if (k + 1 < n && v[k] < v[k + 1]) ++bad;
        if (j > 1 && previous[k] > v[k]) ++bad;
      }
      previous = v;
    }
    bad += validate(m, Problem::min_plus(Monotonicity::across_queries)) ? 1 : 0;
  }
  return {bad == 0, "100 instances; " + std::to_string(bad) + " violations"};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"deterministic reductions are exact", deterministic_reductions},
      {"candidate sets hold the minimum", candidate_sets_hold_the_minimum},
      {"candidate listing matches brute force", candidate_listing},
      {"sampled columns succeed with high probability", success_probability},
      {"bit trick and rank map are order-embeddings", bit_trick_and_ranks},
      {"counter accounting", counter_accounting},
      {"full cycle down to Boolean products", full_cycle},
      {"online sessions and negative controls", online_sessions},
      {"Boolean encoding is monotone", encoding_monotonicity},
  };
  int failed = 0;
  int number = 0;
  for (const auto& c : criteria) {
    ++number;
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    std::cout << (out.pass ? "PASS" : "FAIL") << " " << number << " " << c.name << " ("
              << ms << " ms): " << out.detail << std::endl;
    failed += out.pass ? 0 : 1;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
            << std::endl;
  return failed == 0 ? 0 : 1;
}
