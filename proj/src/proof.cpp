#include "infinitary/proof.hpp"

#include <algorithm>
#include <array>

#include "infinitary/error.hpp"
#include "infinitary/syntax.hpp"

namespace infinitary {

Sequent::Sequent(std::vector<Formula> assumptions, Formula conclusion)
    : assumptions(makeSet(std::move(assumptions))), conclusion(std::move(conclusion)) {}

namespace {

struct RuleInfo {
  Rule rule;
  std::string_view name;
};

constexpr std::array<RuleInfo, 14> kRules = {{
    {Rule::Axiom, "Axiom"},
    {Rule::ConjI, "ConjI"},
    {Rule::ConjE, "ConjE"},
    {Rule::DisjI, "DisjI"},
    {Rule::DisjE, "DisjE"},
    {Rule::ImplI, "ImplI"},
    {Rule::ImplE, "ImplE"},
    {Rule::Weaken, "Weaken"},
    {Rule::SchemaLEM, "SchemaLEM"},
    {Rule::SchemaILEM, "SchemaILEM"},
    {Rule::SchemaHT, "SchemaHT"},
    {Rule::SchemaDeMorganConv, "SchemaDeMorganConv"},
    {Rule::SchemaDistConjOverDisj, "SchemaDistConjOverDisj"},
    {Rule::SchemaDistDisjOverConj, "SchemaDistDisjOverConj"},
}};

constexpr std::size_t kMaxSelectors = 1u << 20;

// Every choice of one element per group, each returned as a set.
std::vector<FormulaSet> selections(const std::vector<FormulaSet>& groups) {
  std::size_t total = 1;
  for (const auto& g : groups) {
    if (g.empty()) return {};
    if (total > kMaxSelectors / g.size()) throw Error(ErrorCode::InvalidArgument, "Cartesian product too large");
    total *= g.size();
  }
  std::vector<FormulaSet> out;
  out.reserve(total);
  std::vector<std::size_t> idx(groups.size(), 0);
  while (true) {
    std::vector<Formula> pick;
    pick.reserve(groups.size());
    for (std::size_t i = 0; i < groups.size(); ++i) pick.push_back(groups[i][idx[i]]);
    out.push_back(makeSet(std::move(pick)));
    std::size_t i = groups.size();
    while (i > 0) {
      --i;
      if (++idx[i] < groups[i].size()) break;
      idx[i] = 0;
      if (i == 0) return out;
    }
    if (groups.empty()) return out;
  }
}

std::vector<FormulaSet> groupSets(const SchemaParams& params) {
  std::vector<FormulaSet> out;
  out.reserve(params.size());
  for (const auto& g : params) out.push_back(makeSet(g));
  return out;
}

void requireGroups(const SchemaParams& params, std::size_t n, std::string_view rule) {
  if (params.size() != n)
    throw Error(ErrorCode::InvalidArgument,
                std::string(rule) + " takes " + std::to_string(n) + " parameter group(s), got " +
                    std::to_string(params.size()));
}

void requireDistFamily(const SchemaParams& params) {
  if (params.empty()) throw Error(ErrorCode::EmptyFamily, "distributivity needs a non-empty family of sets");
  bool anyMember = std::any_of(params.begin(), params.end(), [](const auto& g) { return !g.empty(); });
  if (!anyMember) throw Error(ErrorCode::EmptyFamily, "distributivity needs a family with non-empty union");
}

}  // namespace

std::string_view ruleName(Rule rule) {
  for (const auto& info : kRules)
    if (info.rule == rule) return info.name;
  return "?";
}

std::optional<Rule> ruleFromName(std::string_view name) {
  for (const auto& info : kRules)
    if (info.name == name) return info.rule;
  return std::nullopt;
}

bool isSchema(Rule rule) { return rule >= Rule::SchemaLEM; }

bool admits(SystemLevel level, Rule rule) {
  if (!isSchema(rule)) return true;
  switch (level) {
    case SystemLevel::Basic:
      return false;
    case SystemLevel::BasicILEM:
      return rule == Rule::SchemaILEM;
    case SystemLevel::Extended:
      return rule == Rule::SchemaHT || rule == Rule::SchemaDeMorganConv || rule == Rule::SchemaDistConjOverDisj ||
             rule == Rule::SchemaDistDisjOverConj;
    case SystemLevel::ClassicalExtended:
      return rule == Rule::SchemaLEM || rule == Rule::SchemaDeMorganConv || rule == Rule::SchemaDistConjOverDisj ||
             rule == Rule::SchemaDistDisjOverConj;
  }
  return false;
}

std::string_view levelName(SystemLevel level) {
  switch (level) {
    case SystemLevel::Basic:
      return "Basic";
    case SystemLevel::BasicILEM:
      return "BasicILEM";
    case SystemLevel::Extended:
      return "Extended";
    case SystemLevel::ClassicalExtended:
      return "ClassicalExtended";
  }
  return "?";
}

std::optional<SystemLevel> levelFromName(std::string_view name) {
  for (auto level : {SystemLevel::Basic, SystemLevel::BasicILEM, SystemLevel::Extended, SystemLevel::ClassicalExtended})
    if (levelName(level) == name) return level;
  return std::nullopt;
}

std::string_view diagnosticName(DiagnosticKind kind) {
  switch (kind) {
    case DiagnosticKind::BadPremiseIndex:
      return "BadPremiseIndex";
    case DiagnosticKind::RuleMismatch:
      return "RuleMismatch";
    case DiagnosticKind::SchemaInstanceMismatch:
      return "SchemaInstanceMismatch";
    case DiagnosticKind::AssumptionSetMismatch:
      return "AssumptionSetMismatch";
    case DiagnosticKind::RuleNotAdmitted:
      return "RuleNotAdmitted";
    case DiagnosticKind::EmptyProof:
      return "EmptyProof";
  }
  return "?";
}

Formula instantiateSchema(Rule rule, const SchemaParams& params) {
  switch (rule) {
    case Rule::SchemaLEM: {
      requireGroups(params, 1, "SchemaLEM");
      if (params[0].size() != 1) throw Error(ErrorCode::InvalidArgument, "SchemaLEM takes exactly one formula");
      const Formula& f = params[0][0];
      return disj({f, neg(f)});
    }
    case Rule::SchemaILEM: {
      requireGroups(params, 1, "SchemaILEM");
      const auto& family = params[0];
      if (family.empty()) throw Error(ErrorCode::EmptyFamily, "SchemaILEM needs a non-empty family");
      if (family.size() > 20) throw Error(ErrorCode::InvalidArgument, "SchemaILEM family too large");
      std::vector<Formula> disjuncts;
      std::uint64_t total = std::uint64_t{1} << family.size();
      disjuncts.reserve(total);
      for (std::uint64_t j = 0; j < total; ++j) {
        std::vector<Formula> in, out;
        for (std::size_t k = 0; k < family.size(); ++k) {
          if ((j >> k) & 1u) in.push_back(family[k]);
          else out.push_back(neg(family[k]));
        }
        disjuncts.push_back(conj({conj(std::move(in)), conj(std::move(out))}));
      }
      return disj(std::move(disjuncts));
    }
    case Rule::SchemaHT: {
      requireGroups(params, 1, "SchemaHT");
      if (params[0].size() != 2) throw Error(ErrorCode::InvalidArgument, "SchemaHT takes exactly two formulas");
      const Formula& f = params[0][0];
      const Formula& g = params[0][1];
      return disj({f, impl(f, g), neg(g)});
    }
    case Rule::SchemaDeMorganConv: {
      requireGroups(params, 1, "SchemaDeMorganConv");
      std::vector<Formula> negs;
      for (const auto& f : params[0]) negs.push_back(neg(f));
      return impl(neg(conj(params[0])), disj(std::move(negs)));
    }
    case Rule::SchemaDistConjOverDisj: {
      requireDistFamily(params);
      auto groups = groupSets(params);
      std::vector<Formula> ante;
      for (const auto& g : groups) ante.push_back(disj(g));
      std::vector<Formula> cons;
      for (auto& sel : selections(groups)) cons.push_back(conj(std::move(sel)));
      return impl(conj(std::move(ante)), disj(std::move(cons)));
    }
    case Rule::SchemaDistDisjOverConj: {
      requireDistFamily(params);
      auto groups = groupSets(params);
      std::vector<Formula> ante;
      for (auto& sel : selections(groups)) ante.push_back(disj(std::move(sel)));
      std::vector<Formula> cons;
      for (const auto& g : groups) cons.push_back(conj(g));
      return impl(conj(std::move(ante)), disj(std::move(cons)));
    }
    default:
      throw Error(ErrorCode::InvalidArgument, std::string(ruleName(rule)) + " is not an axiom schema");
  }
}

const Sequent& Proof::conclusion() const {
  if (steps.empty()) throw Error(ErrorCode::InvalidArgument, "empty proof has no conclusion");
  return steps.back().sequent;
}

namespace {

struct DisjElimMatch {
  FormulaSet delta;
  std::vector<Formula> cases;  // per minor premise
};

// Finds a shared Delta and an assignment of minor premises to disjuncts such
// that minor m has assumptions Delta + {H_m} and the conclusion's assumptions
// are gamma + Delta.
std::optional<DisjElimMatch> matchDisjElim(std::span<const Formula> children,
                                           const std::vector<const FormulaSet*>& minors, const FormulaSet& gamma,
                                           const FormulaSet& concl) {
  DisjElimMatch match;
  if (children.empty()) {
    if (!minors.empty() || !isSubset(gamma, concl)) return std::nullopt;
    match.delta = concl;
    return match;
  }
  if (minors.size() != children.size()) return std::nullopt;
  if (children.size() == 1) {
    const FormulaSet& a = *minors[0];
    for (auto delta : {setMinus(a, children[0]), a}) {
      if (setUnion(gamma, delta) == concl) {
        match.delta = std::move(delta);
        match.cases = {children[0]};
        return match;
      }
    }
    return std::nullopt;
  }

  FormulaSet delta = *minors[0];
  for (std::size_t m = 1; m < minors.size(); ++m) {
    FormulaSet meet;
    std::set_intersection(delta.begin(), delta.end(), minors[m]->begin(), minors[m]->end(), std::back_inserter(meet));
    delta = std::move(meet);
  }
  std::vector<bool> used(children.size(), false);
  std::vector<std::optional<Formula>> cases(minors.size());
  auto childIndex = [&](const Formula& f) -> std::optional<std::size_t> {
    auto it = std::lower_bound(children.begin(), children.end(), f);
    if (it == children.end() || *it != f) return std::nullopt;
    return static_cast<std::size_t>(it - children.begin());
  };
  for (std::size_t m = 0; m < minors.size(); ++m) {
    FormulaSet extra;
    std::set_difference(minors[m]->begin(), minors[m]->end(), delta.begin(), delta.end(), std::back_inserter(extra));
    if (extra.empty()) continue;
    if (extra.size() > 1) return std::nullopt;
    auto k = childIndex(extra[0]);
    if (!k || used[*k]) return std::nullopt;
    used[*k] = true;
    cases[m] = extra[0];
  }
  std::size_t next = 0;
  for (std::size_t m = 0; m < minors.size(); ++m) {
    if (cases[m]) continue;
    while (next < children.size() && used[next]) ++next;
    if (next == children.size() || !setContains(delta, children[next])) return std::nullopt;
    used[next] = true;
    cases[m] = children[next];
  }
  if (setUnion(gamma, delta) != concl) return std::nullopt;
  match.delta = std::move(delta);
  for (auto& c : cases) match.cases.push_back(*c);
  return match;
}

std::string show(const Formula& f) { return printFormula(f); }

class Checker {
 public:
  Checker(const Proof& proof, SystemLevel level) : proof_(proof), level_(level) {}

  CheckResult run() {
    if (proof_.steps.empty()) {
      result_.diagnostics.push_back({0, DiagnosticKind::EmptyProof, "proof has no steps"});
      return result_;
    }
    for (std::size_t i = 0; i < proof_.steps.size(); ++i) checkStep(i);
    return result_;
  }

 private:
  void report(std::size_t i, DiagnosticKind kind, std::string message) {
    result_.diagnostics.push_back({i, kind, std::move(message)});
  }

  bool premiseCount(std::size_t i, const Step& s, std::size_t n) {
    if (s.premises.size() == n) return true;
    report(i, DiagnosticKind::RuleMismatch,
           std::string(ruleName(s.rule)) + " expects " + std::to_string(n) + " premise(s), found " +
               std::to_string(s.premises.size()));
    return false;
  }

  bool sameAssumptions(std::size_t i, const FormulaSet& expected, const FormulaSet& found) {
    if (expected == found) return true;
    report(i, DiagnosticKind::AssumptionSetMismatch, "assumptions differ from those the rule yields");
    return false;
  }

  const Sequent& premise(const Step& s, std::size_t k) const { return proof_.steps[s.premises[k]].sequent; }

  void checkStep(std::size_t i) {
    const Step& s = proof_.steps[i];
    for (auto p : s.premises) {
      if (p >= i) {
        report(i, DiagnosticKind::BadPremiseIndex,
               "premise " + std::to_string(p + 1) + " does not precede step " + std::to_string(i + 1));
        return;
      }
    }
    if (!admits(level_, s.rule)) {
      report(i, DiagnosticKind::RuleNotAdmitted,
             std::string(ruleName(s.rule)) + " is not admitted at level " + std::string(levelName(level_)));
      return;
    }
    if (!isSchema(s.rule) && !s.params.empty()) {
      report(i, DiagnosticKind::RuleMismatch, std::string(ruleName(s.rule)) + " takes no parameters");
      return;
    }
    const FormulaSet& gamma = s.sequent.assumptions;
    const Formula& f = s.sequent.conclusion;

    switch (s.rule) {
      case Rule::Axiom:
        if (!premiseCount(i, s, 0)) return;
        if (gamma.size() != 1 || gamma[0] != f)
          report(i, DiagnosticKind::RuleMismatch, "axiom must have the form F |- F");
        return;

      case Rule::ConjI: {
        if (!f.isConj()) {
          report(i, DiagnosticKind::RuleMismatch, "ConjI must conclude a conjunction, found " + show(f));
          return;
        }
        auto kids = f.children();
        if (!premiseCount(i, s, kids.size())) return;
        std::vector<bool> covered(kids.size(), false);
        for (std::size_t k = 0; k < s.premises.size(); ++k) {
          const Sequent& p = premise(s, k);
          auto it = std::lower_bound(kids.begin(), kids.end(), p.conclusion);
          if (it == kids.end() || *it != p.conclusion) {
            report(i, DiagnosticKind::RuleMismatch, "premise concludes " + show(p.conclusion) + ", not a conjunct");
            return;
          }
          std::size_t idx = static_cast<std::size_t>(it - kids.begin());
          if (covered[idx]) {
            report(i, DiagnosticKind::RuleMismatch, "conjunct " + show(*it) + " is proved twice");
            return;
          }
          covered[idx] = true;
          if (!sameAssumptions(i, gamma, p.assumptions)) return;
        }
        return;
      }

      case Rule::ConjE: {
        if (!premiseCount(i, s, 1)) return;
        const Sequent& p = premise(s, 0);
        if (!p.conclusion.isConj() || !p.conclusion.contains(f)) {
          report(i, DiagnosticKind::RuleMismatch, show(f) + " is not a conjunct of " + show(p.conclusion));
          return;
        }
        sameAssumptions(i, gamma, p.assumptions);
        return;
      }

      case Rule::DisjI: {
        if (!premiseCount(i, s, 1)) return;
        const Sequent& p = premise(s, 0);
        if (!f.isDisj() || !f.contains(p.conclusion)) {
          report(i, DiagnosticKind::RuleMismatch, show(p.conclusion) + " is not a disjunct of " + show(f));
          return;
        }
        sameAssumptions(i, gamma, p.assumptions);
        return;
      }

      case Rule::DisjE: {
        if (s.premises.empty()) {
          report(i, DiagnosticKind::RuleMismatch, "DisjE needs a major premise");
          return;
        }
        const Sequent& major = premise(s, 0);
        if (!major.conclusion.isDisj()) {
          report(i, DiagnosticKind::RuleMismatch, "major premise concludes " + show(major.conclusion) +
                                                       ", not a disjunction");
          return;
        }
        auto kids = major.conclusion.children();
        if (s.premises.size() - 1 != kids.size()) {
          report(i, DiagnosticKind::RuleMismatch,
                 "DisjE needs one minor premise per disjunct (" + std::to_string(kids.size()) + "), found " +
                     std::to_string(s.premises.size() - 1));
          return;
        }
        std::vector<const FormulaSet*> minors;
        for (std::size_t k = 1; k < s.premises.size(); ++k) {
          const Sequent& m = premise(s, k);
          if (m.conclusion != f) {
            report(i, DiagnosticKind::RuleMismatch, "minor premise concludes " + show(m.conclusion) +
                                                         " instead of " + show(f));
            return;
          }
          minors.push_back(&m.assumptions);
        }
        if (!matchDisjElim(kids, minors, major.assumptions, gamma))
          report(i, DiagnosticKind::AssumptionSetMismatch,
                 "minor premises do not discharge the disjuncts over a shared assumption set");
        return;
      }

      case Rule::ImplI: {
        if (!premiseCount(i, s, 1)) return;
        if (!f.isImpl()) {
          report(i, DiagnosticKind::RuleMismatch, "ImplI must conclude an implication, found " + show(f));
          return;
        }
        const Sequent& p = premise(s, 0);
        if (p.conclusion != f.consequent()) {
          report(i, DiagnosticKind::RuleMismatch, "premise concludes " + show(p.conclusion) + ", expected " +
                                                       show(f.consequent()));
          return;
        }
        FormulaSet expected = setUnion(gamma, FormulaSet{f.antecedent()});
        if (p.assumptions != expected)
          report(i, DiagnosticKind::RuleMismatch,
                 "premise assumptions must be the conclusion's plus the discharged " + show(f.antecedent()));
        return;
      }

      case Rule::ImplE: {
        if (!premiseCount(i, s, 2)) return;
        const Sequent& minor = premise(s, 0);
        const Sequent& major = premise(s, 1);
        if (!major.conclusion.isImpl() || major.conclusion.antecedent() != minor.conclusion ||
            major.conclusion.consequent() != f) {
          report(i, DiagnosticKind::RuleMismatch, "ImplE needs premises F and F -> " + show(f));
          return;
        }
        sameAssumptions(i, gamma, setUnion(minor.assumptions, major.assumptions));
        return;
      }

      case Rule::Weaken: {
        if (!premiseCount(i, s, 1)) return;
        const Sequent& p = premise(s, 0);
        if (p.conclusion != f) {
          report(i, DiagnosticKind::RuleMismatch, "Weaken must keep the conclusion");
          return;
        }
        if (!isSubset(p.assumptions, gamma))
          report(i, DiagnosticKind::AssumptionSetMismatch, "Weaken can only add assumptions");
        return;
      }

      default: {
        if (!premiseCount(i, s, 0)) return;
        if (!gamma.empty()) {
          report(i, DiagnosticKind::AssumptionSetMismatch, "axiom schema instances have no assumptions");
          return;
        }
        try {
          Formula instance = instantiateSchema(s.rule, s.params);
          if (instance != f)
            report(i, DiagnosticKind::SchemaInstanceMismatch,
                   "parameters give " + show(instance) + ", step states " + show(f));
        } catch (const Error& e) {
          report(i, DiagnosticKind::SchemaInstanceMismatch, e.what());
        }
        return;
      }
    }
  }

  const Proof& proof_;
  SystemLevel level_;
  CheckResult result_;
};

}  // namespace

CheckResult checkProof(const Proof& proof, SystemLevel level) { return Checker(proof, level).run(); }

std::vector<Formula> disjElimCases(const Proof& proof, std::size_t step) {
  const Step& s = proof.steps.at(step);
  if (s.rule != Rule::DisjE || s.premises.empty())
    throw Error(ErrorCode::InvalidArgument, "step is not a disjunction elimination");
  const Sequent& major = proof.steps.at(s.premises[0]).sequent;
  std::vector<const FormulaSet*> minors;
  for (std::size_t k = 1; k < s.premises.size(); ++k) minors.push_back(&proof.steps.at(s.premises[k]).sequent.assumptions);
  auto match = matchDisjElim(major.conclusion.children(), minors, major.assumptions, s.sequent.assumptions);
  if (!match) throw Error(ErrorCode::PreconditionViolated, "disjunction elimination step does not check");
  return match->cases;
}

}  // namespace infinitary
