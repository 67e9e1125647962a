// omv: generate, solve, verify and benchmark online matrix-vector instances.
//
// Exit codes: 0 success, 1 verification mismatch, 2 parse error,
// 3 validation error, 4 protocol error, 5 incompatible chain.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "omv/omv.hpp"

namespace {

enum Exit : int {
  kOk = 0,
  kMismatch = 1,
  kParse = 2,
  kValidation = 3,
  kProtocol = 4,
  kChain = 5,
};

struct SolverFlags {
  std::string chain = "naive";
  std::optional<std::size_t> t;
  std::optional<std::size_t> delta;
  std::string hitting = "auto";
  std::uint64_t seed = 0;
  std::size_t repeats = 1;
  bool debug = false;

  void add_to(CLI::App& app) {
    app.add_option("--chain", chain, "Reduction chain, e.g. \"eq<-bool,naive\"");
    app.add_option("--t", t, "Buckets / frequent values per column (default ceil(sqrt n))");
    app.add_option("--delta", delta, "Rounding granularity (default ceil(n^(1/3)))");
    app.add_option("--hitting", hitting, "Sampled columns: auto, full, or a count");
    app.add_option("--seed", seed, "Seed for randomized links");
    app.add_option("--repeats", repeats, "Independent copies with majority vote");
    app.add_flag("--debug", debug, "Witness checks inside the min-plus reduction");
  }

  omv::ReductionConfig config() const {
    omv::ReductionConfig cfg;
    cfg.t = t;
    cfg.delta = delta;
    cfg.hitting = omv::HittingSetSize::parse(hitting);
    cfg.seed = seed;
    cfg.repeats = std::max<std::size_t>(repeats, 1);
    cfg.debug = debug;
    return cfg;
  }
};

omv::Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw omv::ParseError("cannot open " + path);
  return omv::io::read_instance(in);
}

/// Runs `body`, mapping library errors to exit codes.
template <typename F>
int guarded(F&& body) {
  try {
    return body();
  } catch (const omv::ChainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kChain;
  } catch (const omv::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const omv::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << '\n';
    return kValidation;
  } catch (const omv::ProtocolError& e) {
    std::cerr << "protocol error: " << e.what() << '\n';
    return kProtocol;
  }
}

void print_counters(std::ostream& os, const omv::OnlineSolver& s, int depth = 0) {
  os << std::string(2 * depth, ' ') << s.name() << ": " << s.counters() << '\n';
  // Inner instances of one link share a shape; show the first and the sum.
  const auto inner = s.inner_solvers();
  if (inner.empty()) return;
  omv::CounterLedger sum;
  for (const auto* c : inner) sum += omv::total_counters(*c);
  os << std::string(2 * depth + 2, ' ') << inner.size() << " inner, subtree total: " << sum
     << '\n';
  print_counters(os, *inner.front(), depth + 1);
}

int cmd_gen(const omv::harness::InstanceSpec& spec, const std::string& out_path) {
  return guarded([&] {
    const omv::Instance inst = omv::harness::gen_instance(spec);
    if (out_path.empty() || out_path == "-") {
      omv::io::write_instance(std::cout, inst);
    } else {
      std::ofstream out(out_path);
      omv::io::write_instance(out, inst);
    }
    return kOk;
  });
}

int cmd_solve(const std::string& path, const SolverFlags& flags, const std::string& out_path) {
  return guarded([&] {
    const omv::Instance inst = load_instance(path);
    auto solver = omv::make_solver(inst.problem, inst.matrix, flags.chain, flags.config());
    std::ofstream file;
    if (!out_path.empty() && out_path != "-") file.open(out_path);
    std::ostream& out = file.is_open() ? file : std::cout;
    for (const auto& v : inst.queries) {
      omv::io::write_row(out, solver->query(v).values());
    }
    out.flush();
    print_counters(std::cerr, *solver);
    return kOk;
  });
}

int cmd_verify(const std::string& instance_path, const std::string& answers_path) {
  return guarded([&] {
    const omv::Instance inst = load_instance(instance_path);
    std::ifstream in(answers_path);
    if (!in) throw omv::ParseError("cannot open " + answers_path);
    const auto answers = omv::io::read_answers(in);
    if (auto bad = omv::harness::check_instance(inst)) throw omv::ValidationError(*bad);

    const std::size_t n = inst.matrix.dimension();
    if (answers.size() != inst.queries.size()) {
      throw omv::DimensionMismatch(std::to_string(answers.size()) + " answers for " +
                                   std::to_string(inst.queries.size()) + " queries");
    }
    for (std::size_t j = 0; j < answers.size(); ++j) {
      if (answers[j].size() != n) {
        throw omv::DimensionMismatch("answer " + std::to_string(j + 1) + " has " +
                                     std::to_string(answers[j].size()) + " values, n = " +
                                     std::to_string(n));
      }
    }
    omv::NaiveSolver oracle(inst.problem, inst.matrix);
    for (std::size_t j = 0; j < answers.size(); ++j) {
      const omv::ColumnVector expected = oracle.query(inst.queries[j]);
      for (omv::Index i = 0; i < n; ++i) {
        if (expected[i] != answers[j][i]) {
          std::cout << "mismatch at query " << j + 1 << " row " << i + 1 << ": expected "
                    << expected[i] << ", got " << answers[j][i] << '\n';
          return kMismatch;
        }
      }
    }
    std::cout << "ok " << answers.size() << " answers\n";
    return kOk;
  });
}

int cmd_protocol(const SolverFlags& flags) {
  omv::io::LineReader reader(std::cin);
  omv::SolverPtr solver;
  std::size_t n = 0;
  const int setup = guarded([&] {
    const omv::Instance inst = omv::io::read_header_and_matrix(reader);
    n = inst.matrix.dimension();
    solver = omv::make_solver(inst.problem, inst.matrix, flags.chain, flags.config());
    return kOk;
  });
  if (setup != kOk) {
    std::cout << "error setup failed" << std::endl;
    return setup;
  }

  const omv::Domain domain = omv::domain_of(solver->kind());
  while (auto line = reader.next()) {
    if (line->rfind("queries", 0) == 0) continue;
    try {
      std::vector<omv::Value> values = omv::io::split_values(*line);
      if (values.size() != n) {
        throw omv::ProtocolError("expected " + std::to_string(n) + " values, got " +
                                 std::to_string(values.size()));
      }
      const omv::ColumnVector answer = solver->query(omv::ColumnVector(std::move(values), domain));
      omv::io::write_row(std::cout, answer.values());
      std::cout.flush();
    } catch (const omv::Error& e) {
      std::cout << "error line " << reader.line_no() << ": " << e.what() << std::endl;
      std::cerr << "protocol error: " << e.what() << '\n';
      return kProtocol;
    }
  }
  return kOk;
}

struct BenchFlags {
  std::string problem;
  std::string monotone = "rows";
  std::vector<std::size_t> sizes{8, 16, 32};
  std::size_t trials = 3;
};

int cmd_bench(const SolverFlags& flags, const BenchFlags& bench) {
  return guarded([&] {
    const omv::ChainSpec chain = omv::ChainSpec::parse(flags.chain);
    omv::ProblemKind kind{};
    if (!bench.problem.empty()) {
      kind = omv::parse_problem_kind(bench.problem);
    } else if (auto solves = chain.solves()) {
      kind = *solves;
    } else {
      throw omv::ParseError("chain \"naive\" needs --problem");
    }
    const omv::Problem problem = kind == omv::ProblemKind::bounded_min_plus
                                     ? omv::Problem::min_plus(omv::parse_monotonicity(bench.monotone))
                                     : omv::Problem(kind);
    chain.check(kind);

    std::cout << "n\ttrial\tqueries\tinner_per_query\tscan_per_query\tupdates_per_query"
                 "\tcandidates_per_query\trmq_per_query\tsubtree_inner_total\telapsed_ms\n";
    for (std::size_t n : bench.sizes) {
      for (std::size_t trial = 0; trial < bench.trials; ++trial) {
        omv::harness::InstanceSpec spec;
        spec.problem = problem;
        spec.n = n;
        spec.seed = omv::mix_seed(flags.seed, n * 1000 + trial);
        const omv::Instance inst = omv::harness::gen_instance(spec);
        omv::ReductionConfig cfg = flags.config();
        cfg.seed = spec.seed;

        const auto start = std::chrono::steady_clock::now();
        auto solver = omv::make_solver(inst.problem, inst.matrix, chain, cfg);
        for (const auto& v : inst.queries) solver->query(v);
        const auto elapsed = std::chrono::duration<double, std::milli>(
                                 std::chrono::steady_clock::now() - start)
                                 .count();

        const omv::CounterLedger& c = solver->counters();
        const double q = static_cast<double>(std::max<std::uint64_t>(c.queries, 1));
        std::cout << n << '\t' << trial << '\t' << c.queries << '\t' << c.inner_queries / q
                  << '\t' << c.scan_length_total / q << '\t' << c.multiset_updates / q << '\t'
                  << c.candidates_enumerated / q << '\t' << c.rmq_queries / q << '\t'
                  << omv::total_counters(*solver).inner_queries << '\t' << elapsed << '\n';
      }
    }
    return kOk;
  });
}

int cmd_check(const SolverFlags& flags, const omv::harness::InstanceSpec& spec,
              std::size_t trials, const std::string& out_path) {
  return guarded([&] {
    const omv::ChainSpec chain = omv::ChainSpec::parse(flags.chain);
    chain.check(spec.problem.kind());
    const auto reports = omv::harness::differential_check(chain, spec, trials, flags.config());
    std::ofstream file;
    if (!out_path.empty() && out_path != "-") file.open(out_path);
    std::ostream& out = file.is_open() ? file : std::cout;
    for (const auto& r : reports) omv::harness::write_report(out, r);
    const std::size_t ok = omv::harness::count_successes(reports);
    std::cerr << ok << "/" << reports.size() << " trials correct\n";
    return ok == reports.size() ? kOk : kMismatch;
  });
}

int cmd_summary(const std::string& path) {
  return guarded([&] {
    std::ifstream in(path);
    if (!in) throw omv::ParseError("cannot open " + path);
    const auto reports = omv::harness::read_reports(in);
    std::size_t mismatches = 0;
    for (const auto& r : reports) {
      mismatches += r.mismatches.size();
      if (!r.success()) {
        std::cout << "failed trial seed " << r.seed << " instance " << r.instance_hash;
        if (!r.mismatches.empty()) {
          const auto& m = r.mismatches.front();
          std::cout << ", first mismatch at query " << m.query << " row " << m.row;
        }
        if (!r.violation.empty()) std::cout << ", " << r.violation;
        std::cout << '\n';
      }
    }
    const std::size_t ok = omv::harness::count_successes(reports);
    std::cout << ok << "/" << reports.size() << " trials correct, " << mismatches
              << " mismatched entries\n";
    return ok == reports.size() ? kOk : kMismatch;
  });
}

void add_spec_options(CLI::App& app, omv::harness::InstanceSpec& spec, std::string& monotone, std::optional<std::int64_t>& lo,
                      std::optional<std::int64_t>& hi, bool& skewed,
                      std::optional<double>& density) {
  app.add_option("--monotone", monotone, "bmmp case: rows, cols, query or stream");
  app.add_option("--queries", spec.queries, "Number of queries (default n)");
  app.add_option("--lo", lo, "Smallest value");
  app.add_option("--hi", hi, "Largest value");
  app.add_flag("--skewed", skewed, "Two heavy values per column carry 80% of the mass");
  app.add_option("--density", density, "Probability of a 1 in Boolean entries");
  app.add_option("--inf-prob", spec.inf_prob, "Chance of an infinite entry (dom, minmax)");
  app.add_option("--seed", spec.seed, "Seed");
}

void finish_spec(omv::harness::InstanceSpec& spec, const std::string& problem,
                 const std::string& monotone, std::optional<std::int64_t> lo,
                 std::optional<std::int64_t> hi, bool skewed, std::optional<double> density) {
  const omv::ProblemKind kind = omv::parse_problem_kind(problem);
  spec.problem = kind == omv::ProblemKind::bounded_min_plus
                     ? omv::Problem::min_plus(omv::parse_monotonicity(monotone))
                     : omv::Problem(kind);
  if (skewed) {
    spec.dist = omv::harness::Distribution::skewed();
  } else if (density) {
    spec.dist = omv::harness::Distribution::boolean(*density);
  }
  spec.dist.lo = lo;
  spec.dist.hi = hi;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Online matrix-vector problems and the reductions between them"};
  app.require_subcommand(1);

  omv::harness::InstanceSpec spec;
  std::string problem;
  std::string monotone = "rows";
  std::optional<std::int64_t> lo;
  std::optional<std::int64_t> hi;
  bool skewed = false;
  std::optional<double> density;
  std::string out_path;

  auto* gen = app.add_subcommand("gen", "Generate an instance");
  gen->add_option("problem", problem, "bool, eq, dom, minwit, minmax or bmmp")->required();
  gen->add_option("n", spec.n, "Dimension")->required();
  add_spec_options(*gen, spec, monotone, lo, hi, skewed, density);
  gen->add_option("-o,--out", out_path, "Output file (default stdout)");

  SolverFlags flags;
  std::string instance_path;
  auto* solve = app.add_subcommand("solve", "Answer every query of an instance");
  solve->add_option("instance", instance_path, "Instance file")->required();
  flags.add_to(*solve);
  solve->add_option("-o,--out", out_path, "Answer file (default stdout)");

  std::string answers_path;
  auto* verify = app.add_subcommand("verify", "Check answers against the naive oracle");
  verify->add_option("instance", instance_path, "Instance file")->required();
  verify->add_option("answers", answers_path, "Answer file")->required();

  auto* protocol = app.add_subcommand(
      "protocol", "Read header and matrix, then answer one query line at a time");
  flags.add_to(*protocol);

  BenchFlags bench;
  auto* bench_cmd = app.add_subcommand("bench", "Counter table per size and trial");
  flags.add_to(*bench_cmd);
  bench_cmd->add_option("--problem", bench.problem, "Problem when the chain is naive");
  bench_cmd->add_option("--monotone", bench.monotone, "bmmp case");
  bench_cmd->add_option("--sizes", bench.sizes, "Dimensions")->delimiter(',');
  bench_cmd->add_option("--trials", bench.trials, "Trials per size");

  std::size_t trials = 20;
  auto* check = app.add_subcommand("check", "Differential trials, written as a report");
  flags.add_to(*check);
  check->add_option("problem", problem, "Problem")->required();
  check->add_option("n", spec.n, "Dimension")->required();
  check->add_option("--trials", trials, "Number of trials");
  check->add_option("--monotone", monotone, "bmmp case");
  check->add_option("-o,--out", out_path, "Report file (default stdout)");

  std::string report_path;
  auto* summary = app.add_subcommand("summary", "Summarize a report file");
  summary->add_option("report", report_path, "Report file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  if (*gen || *check) {
    const int rc = guarded([&] {
      finish_spec(spec, problem, monotone, lo, hi, skewed, density);
      return kOk;
    });
    if (rc != kOk) return rc;
  }
  if (*gen) return cmd_gen(spec, out_path);
  if (*solve) return cmd_solve(instance_path, flags, out_path);
  if (*verify) return cmd_verify(instance_path, answers_path);
  if (*protocol) return cmd_protocol(flags);
  if (*bench_cmd) return cmd_bench(flags, bench);
  if (*check) {
    spec.seed = flags.seed;
    return cmd_check(flags, spec, trials, out_path);
  }
  if (*summary) return cmd_summary(report_path);
  return kParse;
}
