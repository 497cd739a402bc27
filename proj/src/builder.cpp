#include "infinitary/builder.hpp"

#include <algorithm>

#include "infinitary/error.hpp"
#include "infinitary/syntax.hpp"

namespace infinitary {

namespace {

[[noreturn]] void misuse(const std::string& what) { throw Error(ErrorCode::Internal, "proof builder: " + what); }

std::size_t combine(std::size_t h, std::size_t v) { return h ^ (v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2)); }

}  // namespace

std::size_t ProofBuilder::KeyHash::operator()(const Step& s) const noexcept {
  std::size_t h = static_cast<std::size_t>(s.rule);
  h = combine(h, s.sequent.conclusion.hash());
  for (const auto& a : s.sequent.assumptions) h = combine(h, a.hash());
  for (auto p : s.premises) h = combine(h, p);
  for (const auto& g : s.params) {
    h = combine(h, g.size());
    for (const auto& f : g) h = combine(h, f.hash());
  }
  return h;
}

ProofBuilder::StepId ProofBuilder::add(Step step) {
  auto it = index_.find(step);
  if (it != index_.end()) return it->second;
  StepId id = steps_.size();
  steps_.push_back(step);
  index_.emplace(std::move(step), id);
  return id;
}

ProofBuilder::StepId ProofBuilder::axiom(const Formula& f) { return add({Sequent({f}, f), Rule::Axiom, {}, {}}); }

ProofBuilder::StepId ProofBuilder::conjIntro(const std::vector<StepId>& parts) {
  FormulaSet gamma;
  for (auto p : parts) gamma = setUnion(gamma, assumptions(p));
  if (parts.empty()) return conjIntroEmpty(gamma);
  std::vector<Formula> seen;
  std::vector<StepId> premises;
  std::vector<Formula> kids;
  for (auto p : parts) {
    const Formula& c = conclusion(p);
    if (std::find(seen.begin(), seen.end(), c) != seen.end()) continue;
    seen.push_back(c);
    premises.push_back(weakenTo(p, gamma));
    kids.push_back(c);
  }
  return add({Sequent(gamma, conj(std::move(kids))), Rule::ConjI, std::move(premises), {}});
}

ProofBuilder::StepId ProofBuilder::conjIntroEmpty(const FormulaSet& assumptions) {
  return add({Sequent(assumptions, top()), Rule::ConjI, {}, {}});
}

ProofBuilder::StepId ProofBuilder::conjElim(StepId p, const Formula& conjunct) {
  const Formula& c = conclusion(p);
  if (!c.isConj() || !c.contains(conjunct)) misuse(printFormula(conjunct) + " is not a conjunct of " + printFormula(c));
  return add({Sequent(assumptions(p), conjunct), Rule::ConjE, {p}, {}});
}

ProofBuilder::StepId ProofBuilder::disjIntro(StepId p, const Formula& disjunction) {
  if (!disjunction.isDisj() || !disjunction.contains(conclusion(p)))
    misuse(printFormula(conclusion(p)) + " is not a disjunct of " + printFormula(disjunction));
  return add({Sequent(assumptions(p), disjunction), Rule::DisjI, {p}, {}});
}

ProofBuilder::StepId ProofBuilder::disjElim(StepId major, const std::vector<std::pair<Formula, StepId>>& cases,
                                            const Formula& conclusion) {
  const Formula& d = this->conclusion(major);
  if (!d.isDisj()) misuse("major premise is not a disjunction");
  std::vector<StepId> chosen;
  FormulaSet delta;
  for (const auto& child : d.children()) {
    auto it = std::find_if(cases.begin(), cases.end(), [&](const auto& c) { return c.first == child; });
    if (it == cases.end()) misuse("no case for disjunct " + printFormula(child));
    if (this->conclusion(it->second) != conclusion) misuse("case does not conclude the goal");
    chosen.push_back(it->second);
    delta = setUnion(delta, setMinus(assumptions(it->second), child));
  }
  std::vector<StepId> premises{major};
  auto kids = d.children();
  for (std::size_t k = 0; k < kids.size(); ++k)
    premises.push_back(weakenTo(chosen[k], setUnion(delta, FormulaSet{kids[k]})));
  return add({Sequent(setUnion(assumptions(major), delta), conclusion), Rule::DisjE, std::move(premises), {}});
}

ProofBuilder::StepId ProofBuilder::implIntro(StepId p, const Formula& f) {
  FormulaSet rest = setMinus(assumptions(p), f);
  StepId premise = weakenTo(p, setUnion(rest, FormulaSet{f}));
  return add({Sequent(rest, impl(f, conclusion(p))), Rule::ImplI, {premise}, {}});
}

ProofBuilder::StepId ProofBuilder::implElim(StepId minor, StepId major) {
  const Formula& m = conclusion(major);
  if (!m.isImpl() || m.antecedent() != conclusion(minor)) misuse("implication elimination premises do not fit");
  return add({Sequent(setUnion(assumptions(minor), assumptions(major)), m.consequent()), Rule::ImplE, {minor, major}, {}});
}

ProofBuilder::StepId ProofBuilder::weakenTo(StepId p, const FormulaSet& target) {
  if (assumptions(p) == target) return p;
  if (!isSubset(assumptions(p), target)) misuse("weakening cannot drop assumptions");
  return add({Sequent(target, conclusion(p)), Rule::Weaken, {p}, {}});
}

ProofBuilder::StepId ProofBuilder::weaken(StepId p, const std::vector<Formula>& extra) {
  return weakenTo(p, setUnion(assumptions(p), makeSet(extra)));
}

ProofBuilder::StepId ProofBuilder::contradiction(StepId p, const Formula& f) {
  if (!conclusion(p).isBottom()) misuse("contradiction needs a derivation of bot");
  if (f.isBottom()) return p;
  return add({Sequent(assumptions(p), f), Rule::DisjE, {p}, {}});
}

ProofBuilder::StepId ProofBuilder::cut(StepId p, StepId q) {
  StepId lifted = implIntro(q, conclusion(p));
  return implElim(p, lifted);
}

ProofBuilder::StepId ProofBuilder::schema(Rule rule, SchemaParams params) {
  Formula instance = instantiateSchema(rule, params);
  return add({Sequent(instance), rule, {}, std::move(params)});
}

std::vector<ProofBuilder::StepId> ProofBuilder::import(const Proof& proof) {
  std::vector<StepId> ids;
  ids.reserve(proof.steps.size());
  for (const auto& s : proof.steps) {
    Step copy = s;
    for (auto& p : copy.premises) p = ids.at(p);
    ids.push_back(add(std::move(copy)));
  }
  return ids;
}

Proof ProofBuilder::finish(StepId root) const {
  std::vector<bool> needed(steps_.size(), false);
  needed[root] = true;
  for (std::size_t i = root + 1; i-- > 0;) {
    if (!needed[i]) continue;
    for (auto p : steps_[i].premises) needed[p] = true;
  }
  std::vector<std::size_t> renumber(steps_.size(), 0);
  Proof out;
  for (std::size_t i = 0; i <= root; ++i) {
    if (!needed[i]) continue;
    Step s = steps_[i];
    for (auto& p : s.premises) p = renumber[p];
    renumber[i] = out.steps.size();
    out.steps.push_back(std::move(s));
  }
  return out;
}

}  // namespace infinitary
