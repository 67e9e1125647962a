#include "support.hpp"

using namespace omv;
using testing_support::vec;

TEST(Value, Ordering) {
  EXPECT_EQ(compare(kNegInf, Value(0)), std::strong_ordering::less);
  EXPECT_EQ(compare(kInf, kInf), std::strong_ordering::equal);
  EXPECT_EQ(compare(Value(5), Value(3)), std::strong_ordering::greater);
  EXPECT_LT(Value(-kFiniteLimit), Value(kFiniteLimit));
  EXPECT_LT(kNegInf, Value(-kFiniteLimit));
  EXPECT_LT(Value(kFiniteLimit), kInf);
}

TEST(Value, NegateAndAdd) {
  EXPECT_EQ(negate(kInf), kNegInf);
  EXPECT_EQ(negate(kNegInf), kInf);
  EXPECT_EQ(negate(Value(7)), Value(-7));
  EXPECT_EQ(add(Value(3), Value(4)), Value(7));
  EXPECT_EQ(add(kInf, Value(-4)), kInf);
  EXPECT_EQ(add(kInf, kNegInf), kInf);
  EXPECT_EQ(add(kNegInf, Value(9)), kNegInf);
}

TEST(Value, TextRoundTrip) {
  for (Value x : {Value(0), Value(-1), Value(kFiniteLimit), Value(-kFiniteLimit), kInf, kNegInf}) {
    EXPECT_EQ(parse_value(to_string(x)), x);
  }
  EXPECT_EQ(parse_value("+12"), Value(12));
  EXPECT_EQ(parse_value("+inf"), kInf);
  for (const char* bad : {"", "x", "1.5", "--1", "inff", "9223372036854775807", "12a"}) {
    EXPECT_THROW(parse_value(bad), ParseError) << bad;
  }
}

TEST(Problem, Names) {
  for (auto k : {ProblemKind::boolean, ProblemKind::exists_equality, ProblemKind::exists_dominance,
                 ProblemKind::min_witness, ProblemKind::min_max, ProblemKind::bounded_min_plus}) {
    EXPECT_EQ(parse_problem_kind(short_name(k)), k);
  }
  for (auto m : {Monotonicity::rows, Monotonicity::columns, Monotonicity::within_query,
                 Monotonicity::across_queries}) {
    EXPECT_EQ(parse_monotonicity(short_name(m)), m);
  }
  EXPECT_THROW(parse_problem_kind("matmul"), ParseError);
  EXPECT_THROW(Problem(ProblemKind::bounded_min_plus), std::exception);
  EXPECT_FALSE(Problem(ProblemKind::min_max).monotone().has_value());
  EXPECT_EQ(Problem::min_plus(Monotonicity::columns).monotone(), Monotonicity::columns);
}

TEST(Validate, BooleanEntryOutOfDomain) {
  SquareMatrix m{{1, 0, 1}, {0, 1, 2}, {1, 1, 1}};
  auto bad = validate(m, ProblemKind::boolean);
  ASSERT_TRUE(bad);
  EXPECT_EQ(bad->row, 2u);
  EXPECT_EQ(bad->col, 3u);
}

TEST(Validate, RowsCase) {
  const Problem rows = Problem::min_plus(Monotonicity::rows);
  EXPECT_FALSE(validate(SquareMatrix{{1, 2}, {5, 5}}, rows));
  auto bad = validate(SquareMatrix{{2, 1}, {5, 5}}, rows);
  ASSERT_TRUE(bad);
  EXPECT_EQ(bad->row, 1u);
  EXPECT_EQ(bad->col, 2u);
}

TEST(Validate, ColumnsCase) {
  const Problem cols = Problem::min_plus(Monotonicity::columns);
  EXPECT_FALSE(validate(SquareMatrix{{1, 5}, {2, 5}}, cols));
  auto bad = validate(SquareMatrix{{1, 5}, {2, 4}}, cols);
  ASSERT_TRUE(bad);
  EXPECT_EQ(bad->row, 2u);
  EXPECT_EQ(bad->col, 2u);
}

TEST(Validate, BoundedRange) {
  const Problem q = Problem::min_plus(Monotonicity::within_query);
  // c = 4, n = 2: entries in [0, 8]
  EXPECT_FALSE(validate(SquareMatrix{{0, 8}, {3, 1}}, q));
  EXPECT_TRUE(validate(SquareMatrix{{0, 9}, {3, 1}}, q));
  EXPECT_TRUE(validate(SquareMatrix{{0, -1}, {3, 1}}, q));
  EXPECT_FALSE(validate(SquareMatrix{{0, 9}, {3, 1}}, q, ValidateOptions{5}));
}

TEST(Validate, InfinityOnlyWhereAllowed) {
  SquareMatrix m{{1, kInf}, {kNegInf, 2}};
  EXPECT_FALSE(validate(m, ProblemKind::min_max));
  EXPECT_FALSE(validate(m, ProblemKind::exists_dominance));
  EXPECT_TRUE(validate(m, ProblemKind::exists_equality));
  EXPECT_TRUE(validate(SquareMatrix{{1, Value(kFiniteLimit + 1)}, {0, 0}},
                       ProblemKind::exists_equality));
  EXPECT_FALSE(validate(SquareMatrix{{1, Value(-kFiniteLimit)}, {0, 0}},
                        ProblemKind::exists_equality));
}

TEST(Validate, Queries) {
  const Problem within = Problem::min_plus(Monotonicity::within_query);
  EXPECT_FALSE(validate_query(vec({1, 1, 3}), within, 3, nullptr));
  auto bad = validate_query(vec({1, 3, 2}), within, 3, nullptr);
  ASSERT_TRUE(bad);
  EXPECT_EQ(bad->col, 3u);

  const Problem across = Problem::min_plus(Monotonicity::across_queries);
  const ColumnVector prev = vec({2, 2, 2});
  EXPECT_FALSE(validate_query(vec({2, 5, 3}), across, 3, &prev));
  bad = validate_query(vec({2, 1, 3}), across, 3, &prev);
  ASSERT_TRUE(bad);
  EXPECT_EQ(bad->col, 2u);

  EXPECT_TRUE(validate_query(vec({0, 2}), ProblemKind::boolean, 2, nullptr));
  EXPECT_TRUE(validate_query(vec({0, 1, 1}), ProblemKind::boolean, 2, nullptr));
}

TEST(Config, Defaults) {
  ReductionConfig cfg;
  EXPECT_EQ(cfg.resolve_t(16), 4u);
  EXPECT_EQ(cfg.resolve_t(17), 5u);
  EXPECT_EQ(cfg.resolve_t(1), 1u);
  EXPECT_EQ(cfg.resolve_delta(8), 2u);
  EXPECT_EQ(cfg.resolve_delta(9), 3u);
  EXPECT_EQ(cfg.resolve_delta(27), 3u);
  EXPECT_EQ(cfg.resolve_delta(32), 4u);
  cfg.delta = 2;
  EXPECT_EQ(cfg.resolve_hitting(16), 17u);  // ceil(6 ln 16) = ceil(16.64)
  cfg.t = 40;
  EXPECT_EQ(cfg.resolve_t(16), 16u);
  cfg.hitting = HittingSetSize::parse("full");
  EXPECT_EQ(cfg.resolve_hitting(16), 16u);
  cfg.hitting = HittingSetSize::parse("0");
  EXPECT_EQ(cfg.resolve_hitting(16), 0u);
  EXPECT_THROW(HittingSetSize::parse("many"), ParseError);
}

TEST(Config, IntegerRoots) {
  for (std::size_t n = 1; n < 2000; ++n) {
    const std::size_t r = ceil_sqrt(n);
    EXPECT_GE(r * r, n);
    EXPECT_LT((r - 1) * (r - 1), n);
    const std::size_t c = ceil_cbrt(n);
    EXPECT_GE(c * c * c, n);
    EXPECT_LT((c - 1) * (c - 1) * (c - 1), n);
  }
  EXPECT_EQ(ceil_log2(1), 0u);
  EXPECT_EQ(ceil_log2(64), 6u);
  EXPECT_EQ(ceil_log2(65), 7u);
}

TEST(Counters, Arithmetic) {
  CounterLedger a{5, 10, 3, 2, 1, 0};
  CounterLedger b{2, 4, 1, 1, 1, 0};
  EXPECT_EQ(a - b, (CounterLedger{3, 6, 2, 1, 0, 0}));
  b += CounterLedger{3, 6, 2, 1, 0, 0};
  EXPECT_EQ(a, b);
}

TEST(SolverContract, QueryIndexAndErrors) {
  NaiveSolver s(ProblemKind::boolean, SquareMatrix{{1, 0}, {0, 1}});
  EXPECT_EQ(s.query_index(), 1u);
  EXPECT_EQ(s.query(vec({0, 1})), vec({0, 1}));
  EXPECT_EQ(s.query_index(), 2u);
  EXPECT_THROW(s.query(vec({0, 1, 1})), DimensionMismatch);
  EXPECT_THROW(s.query(vec({0, 3})), ValidationError);
  EXPECT_EQ(s.query_index(), 2u);
  EXPECT_EQ(s.counters().queries, 1u);
}

TEST(SolverContract, AcrossQueriesIsEnforced) {
  NaiveSolver s(Problem::min_plus(Monotonicity::across_queries), SquareMatrix{{1, 2}, {2, 1}});
  s.query(vec({1, 1}));
  s.query(vec({1, 2}));
  EXPECT_THROW(s.query(vec({0, 2})), ValidationError);
}

// Instances for every kind and monotonicity case, with and without
// infinities and skew.
std::vector<harness::InstanceSpec> generator_specs() {
  std::vector<harness::InstanceSpec> specs;
  std::vector<Problem> problems = {ProblemKind::boolean, ProblemKind::exists_equality,
                                   ProblemKind::exists_dominance, ProblemKind::min_witness,
                                   ProblemKind::min_max};
  for (auto m : {Monotonicity::rows, Monotonicity::columns, Monotonicity::within_query,
                 Monotonicity::across_queries}) {
    problems.push_back(Problem::min_plus(m));
  }
  for (const auto& p : problems) {
    harness::InstanceSpec s;
    s.problem = p;
    specs.push_back(s);
    if (admits_infinity(p.kind())) {
      s.inf_prob = 0.2;
      specs.push_back(s);
      s.inf_prob = 0;
    }
    if (domain_of(p.kind()) != Domain::boolean) {
      s.dist = harness::Distribution::skewed();
      specs.push_back(s);
    }
  }
  return specs;
}

TEST(Generator, InstancesValidate) {
  const auto specs = generator_specs();
  std::size_t count = 0;
  for (std::uint64_t seed = 0; count < 1200; ++seed) {
    for (auto spec : specs) {
      spec.seed = seed;
      spec.n = 1 + seed % 12;
      const Instance inst = harness::gen_instance(spec);
      ASSERT_EQ(inst.queries.size(), spec.n);
      const auto bad = harness::check_instance(inst);
      ASSERT_FALSE(bad) << short_name(spec.problem.kind()) << " seed " << seed << ": " << *bad;
      ++count;
    }
  }
}

TEST(Generator, Deterministic) {
  harness::InstanceSpec spec;
  spec.n = 4;
  spec.seed = 7;
  EXPECT_EQ(harness::gen_instance(spec), harness::gen_instance(spec));
  spec.seed = 8;
  const Instance other = harness::gen_instance(spec);
  spec.seed = 7;
  EXPECT_NE(harness::gen_instance(spec), other);
}

TEST(Generator, RejectsUnsatisfiableSpecs) {
  harness::InstanceSpec spec;
  spec.problem = Problem::min_plus(Monotonicity::across_queries);
  spec.n = 4;
  spec.dist = harness::Distribution::uniform(0, 17);  // above c * n = 16
  EXPECT_THROW(harness::gen_instance(spec), ValidationError);
  spec.dist = harness::Distribution::uniform(5, 4);
  EXPECT_THROW(harness::gen_instance(spec), ValidationError);
  spec = {};
  spec.problem = ProblemKind::exists_equality;
  spec.inf_prob = 0.5;
  EXPECT_THROW(harness::gen_instance(spec), ValidationError);
  spec.inf_prob = 0;
  spec.n = 0;
  EXPECT_THROW(harness::gen_instance(spec), ValidationError);
}

TEST(InstanceFile, PrintParseRoundTrip) {
  const auto specs = generator_specs();
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    for (auto spec : specs) {
      spec.seed = seed;
      spec.n = 1 + seed % 7;
      spec.queries = seed % 5;
      const Instance inst = harness::gen_instance(spec);
      const std::string text = io::print_instance(inst);
      const Instance back = io::parse_instance(text);
      ASSERT_EQ(back, inst) << text;
      ASSERT_EQ(io::print_instance(back), text);
    }
  }
}

TEST(InstanceFile, Format) {
  Instance inst{ProblemKind::min_max, SquareMatrix{{1, kInf}, {kNegInf, 2}},
                {vec({3, -4}), vec({kInf, 0})}};
  EXPECT_EQ(io::print_instance(inst),
            "OMV 1\nproblem minmax\nn 2\n1 inf\n-inf 2\nqueries 2\n3 -4\ninf 0\n");
  Instance b{Problem::min_plus(Monotonicity::across_queries), SquareMatrix{{1}}, {}};
  EXPECT_EQ(io::print_instance(b), "OMV 1\nproblem bmmp\nn 1\nmonotone stream\n1\nqueries 0\n");
}

TEST(InstanceFile, ParseErrorsNameTheLine) {
  auto message = [](const std::string& text) {
    try {
      io::parse_instance(text);
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_EQ(message("OMV 2\n"), "line 1: expected 'OMV 1'");
  EXPECT_EQ(message("OMV 1\nproblem bmmp\nn 1\n1\nqueries 0\n"),
            "line 4: bmmp instance needs a 'monotone' line");
  EXPECT_EQ(message("OMV 1\nproblem eq\nn 2\n1 2\n3\nqueries 0\n"),
            "line 5: expected 2 values, got 1");
  EXPECT_EQ(message("OMV 1\nproblem eq\nn 1\n1\nqueries 1\nx\n"),
            "line 6: not a value: 'x'");
  EXPECT_EQ(message("OMV 1\nproblem eq\nn 1\n1\nqueries 2\n1\n"),
            "line 6: unexpected end of input, expected query row");
  EXPECT_EQ(message("OMV 1\nproblem eq\nn 1\nmonotone rows\n1\nqueries 0\n"),
            "line 4: monotone line only allowed for bmmp");
}

TEST(AnswerFile, RoundTrip) {
  std::vector<ColumnVector> answers{vec({1, kInf, 3}), vec({kInf, kInf, 2})};
  std::ostringstream out;
  io::write_answers(out, answers);
  EXPECT_EQ(out.str(), "1 inf 3\ninf inf 2\n");
  EXPECT_EQ(io::parse_answers(out.str()), answers);
}
