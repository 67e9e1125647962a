#pragma once

// Composition of reductions. A chain such as
//   minmax<-dom, dom<-eq, eq<-bool, naive
// builds a min-max solver whose inner dominance instances are themselves
// built from equality instances, and so on, down to naive solvers.

#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "omv/bmmp_from_eq.hpp"
#include "omv/config.hpp"
#include "omv/eq_from_bool.hpp"
#include "omv/folklore.hpp"
#include "omv/minmax_from_dom.hpp"
#include "omv/oracle.hpp"
#include "omv/solver.hpp"
#include "omv/validate.hpp"

namespace omv {

/// A chain whose adjacent links do not fit together, or whose head does not
/// solve the requested problem.
class ChainError : public Error {
 public:
  using Error::Error;
};

enum class Link {
  naive,
  eq_from_bool,
  dom_from_eq,
  minmax_from_dom,
  minwit_from_minmax,
  bmmp_from_eq,
  bool_from_bmmp,
  bool_from_minwit,
};

struct LinkInfo {
  Link link;
  std::string_view name;
  ProblemKind solves;
  ProblemKind uses;
};

inline constexpr LinkInfo kLinks[] = {
    {Link::eq_from_bool, "eq<-bool", ProblemKind::exists_equality, ProblemKind::boolean},
    {Link::dom_from_eq, "dom<-eq", ProblemKind::exists_dominance, ProblemKind::exists_equality},
    {Link::minmax_from_dom, "minmax<-dom", ProblemKind::min_max, ProblemKind::exists_dominance},
    {Link::minwit_from_minmax, "minwit<-minmax", ProblemKind::min_witness, ProblemKind::min_max},
    {Link::bmmp_from_eq, "bmmp<-eq", ProblemKind::bounded_min_plus, ProblemKind::exists_equality},
    {Link::bool_from_bmmp, "bool<-bmmp", ProblemKind::boolean, ProblemKind::bounded_min_plus},
    {Link::bool_from_minwit, "bool<-minwit", ProblemKind::boolean, ProblemKind::min_witness},
};

inline const LinkInfo& info(Link link) {
  for (const auto& l : kLinks) {
    if (l.link == link) return l;
  }
  throw ChainError("naive has no reduction signature");
}

struct ChainLink {
  Link link = Link::naive;
  std::optional<ProblemKind> naive_kind;  // from "naive-<problem>"
};

/// Ordered reduction names ending in a naive solver.
class ChainSpec {
 public:
  ChainSpec() : links_{ChainLink{}} {}
  explicit ChainSpec(std::vector<ChainLink> links) : links_(std::move(links)) {
    if (links_.empty() || links_.back().link != Link::naive) links_.push_back({});
  }

  /// Comma-separated link names; "naive" is appended when missing.
  static ChainSpec parse(std::string_view text) {
    std::vector<ChainLink> links;
    std::string token;
    std::istringstream in{std::string(text)};
    while (std::getline(in, token, ',')) {
      token.erase(0, token.find_first_not_of(" \t"));
      token.erase(token.find_last_not_of(" \t") + 1);
      if (token.empty()) continue;
      links.push_back(parse_link(token));
    }
    if (links.empty()) throw ParseError("empty chain");
    for (std::size_t p = 0; p + 1 < links.size(); ++p) {
      if (links[p].link == Link::naive) throw ParseError("naive must be the last link");
    }
    return ChainSpec(std::move(links));
  }

  const std::vector<ChainLink>& links() const { return links_; }
  const ChainLink& head() const { return links_.front(); }

  ChainSpec tail() const {
    return ChainSpec(std::vector<ChainLink>(links_.begin() + 1, links_.end()));
  }

  /// Problem solved by the head, if the head is a reduction.
  std::optional<ProblemKind> solves() const {
    if (head().link == Link::naive) return head().naive_kind;
    return info(head().link).solves;
  }

  /// Throws ChainError unless every adjacent pair matches and the head
  /// solves `top`.
  void check(ProblemKind top) const {
    ProblemKind want = top;
    for (const auto& l : links_) {
      if (l.link == Link::naive) {
        if (l.naive_kind && *l.naive_kind != want) {
          throw ChainError("naive-" + std::string(short_name(*l.naive_kind)) +
                           " cannot solve " + std::string(short_name(want)));
        }
        return;
      }
      const auto& li = info(l.link);
      if (li.solves != want) {
        throw ChainError(std::string(li.name) + " cannot solve " +
                         std::string(short_name(want)));
      }
      want = li.uses;
    }
  }

  std::string to_string() const {
    std::string out;
    for (const auto& l : links_) {
      if (!out.empty()) out += ",";
      if (l.link == Link::naive) {
        out += "naive";
        if (l.naive_kind) out += "-" + std::string(short_name(*l.naive_kind));
      } else {
        out += info(l.link).name;
      }
    }
    return out;
  }

 private:
  static ChainLink parse_link(const std::string& token) {
    if (token == "naive") return {};
    if (token.rfind("naive-", 0) == 0) {
      return {Link::naive, parse_problem_kind(std::string_view(token).substr(6))};
    }
    // Accept both "<-" and the unicode arrow.
    std::string norm = token;
    if (auto p = norm.find("\xE2\x86\x90"); p != std::string::npos) norm.replace(p, 3, "<-");
    for (const auto& l : kLinks) {
      if (l.name == norm) return {l.link, std::nullopt};
    }
    throw ParseError("unknown chain link '" + token + "'");
  }

  std::vector<ChainLink> links_;
};

/// Validates M for `problem`, then builds the head of `chain` on it with
/// inner instances built from the rest of the chain.
inline SolverPtr make_solver(const Problem& problem, SquareMatrix m,
                             const ChainSpec& chain, const ReductionConfig& cfg) {
  chain.check(problem.kind());
  const ValidateOptions opts{cfg.bound_constant};
  m.set_domain(domain_of(problem.kind()));
  if (auto bad = validate(m, problem, opts)) {
    throw ValidationError(std::string(short_name(problem.kind())) + " matrix, " +
                          bad->describe());
  }

  const ChainLink& head = chain.head();
  if (head.link == Link::naive) return std::make_unique<NaiveSolver>(problem, std::move(m), opts);

  const ChainSpec rest = chain.tail();
  InnerFactory inner = [rest, cfg](const Problem& p, SquareMatrix sub, std::uint64_t seed) {
    ReductionConfig child = cfg;
    child.seed = seed;
    return make_solver(p, std::move(sub), rest, child);
  };

  switch (head.link) {
    case Link::eq_from_bool:
      return std::make_unique<EqualityFromBoolean>(std::move(m), cfg, inner, opts);
    case Link::dom_from_eq:
      return std::make_unique<DominanceFromEquality>(std::move(m), cfg, inner, opts);
    case Link::minmax_from_dom:
      return std::make_unique<MinMaxFromDominance>(std::move(m), cfg, inner, opts);
    case Link::minwit_from_minmax:
      return std::make_unique<MinWitnessFromMinMax>(m, cfg, inner, opts);
    case Link::bool_from_bmmp:
      return std::make_unique<BooleanFromMinPlus>(m, cfg, inner, opts);
    case Link::bool_from_minwit:
      return std::make_unique<BooleanFromMinWitness>(std::move(m), cfg, inner, opts);
    case Link::bmmp_from_eq: {
      const Monotonicity mono = *problem.monotone();
      if (cfg.repeats <= 1) {
        return std::make_unique<BoundedMinPlusFromEquality>(std::move(m), mono, cfg, inner);
      }
      std::vector<SolverPtr> copies;
      for (std::size_t c = 0; c < cfg.repeats; ++c) {
        ReductionConfig copy = cfg;
        copy.seed = mix_seed(cfg.seed, 0x20000 + c);
        copies.push_back(std::make_unique<BoundedMinPlusFromEquality>(m, mono, copy, inner));
      }
      return std::make_unique<MajorityVote>(problem, std::move(copies), opts);
    }
    case Link::naive:
      break;
  }
  throw ChainError("unhandled link");
}

inline SolverPtr make_solver(const Problem& problem, SquareMatrix m,
                             std::string_view chain, const ReductionConfig& cfg = {}) {
  return make_solver(problem, std::move(m), ChainSpec::parse(chain), cfg);
}

}  // namespace omv
