#pragma once

#include <deque>
#include <unordered_map>
#include <utility>
#include <vector>

#include "infinitary/proof.hpp"

namespace infinitary {

// Assembles proofs step by step. Identical steps are shared, and the helpers
// insert weakening steps where a rule needs matching assumption sets, so
// callers can combine sub-derivations freely. Helpers throw Internal when the
// requested inference does not fit the premises.
class ProofBuilder {
 public:
  using StepId = std::size_t;

  StepId add(Step step);
  const Sequent& sequent(StepId id) const { return steps_[id].sequent; }
  const FormulaSet& assumptions(StepId id) const { return steps_[id].sequent.assumptions; }
  const Formula& conclusion(StepId id) const { return steps_[id].sequent.conclusion; }
  std::size_t size() const noexcept { return steps_.size(); }

  StepId axiom(const Formula& f);
  // Conclusion is the conjunction of the parts' conclusions under the union of
  // their assumptions.
  StepId conjIntro(const std::vector<StepId>& parts);
  StepId conjIntroEmpty(const FormulaSet& assumptions);
  StepId conjElim(StepId p, const Formula& conjunct);
  StepId disjIntro(StepId p, const Formula& disjunction);
  // cases pairs each disjunct of the major premise with a derivation of the
  // conclusion that may use it as an assumption.
  StepId disjElim(StepId major, const std::vector<std::pair<Formula, StepId>>& cases, const Formula& conclusion);
  // Discharges f (weakening it in first if absent).
  StepId implIntro(StepId p, const Formula& f);
  StepId implElim(StepId minor, StepId major);
  StepId weakenTo(StepId p, const FormulaSet& target);
  StepId weaken(StepId p, const std::vector<Formula>& extra);
  // From Gamma => bot derive Gamma => f.
  StepId contradiction(StepId p, const Formula& f);
  // From Gamma => F and Delta, F => G derive Gamma, Delta => G.
  StepId cut(StepId p, StepId q);
  StepId schema(Rule rule, SchemaParams params);

  // Copies a whole proof; returns the ids of its steps.
  std::vector<StepId> import(const Proof& proof);

  // The steps the root depends on, renumbered in order.
  Proof finish(StepId root) const;

 private:
  struct KeyHash {
    std::size_t operator()(const Step& s) const noexcept;
  };

  std::deque<Step> steps_;  // stable references across add()
  std::unordered_map<Step, StepId, KeyHash> index_;
};

}  // namespace infinitary
