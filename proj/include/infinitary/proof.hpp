#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "infinitary/formula.hpp"

namespace infinitary {

// Gamma => F with a finite assumption set.
struct Sequent {
  FormulaSet assumptions;
  Formula conclusion;

  Sequent(std::vector<Formula> assumptions, Formula conclusion);
  explicit Sequent(Formula conclusion) : conclusion(std::move(conclusion)) {}

  friend bool operator==(const Sequent&, const Sequent&) = default;
};

enum class Rule {
  Axiom,
  ConjI,
  ConjE,
  DisjI,
  DisjE,
  ImplI,
  ImplE,
  Weaken,
  SchemaLEM,
  SchemaILEM,
  SchemaHT,
  SchemaDeMorganConv,
  SchemaDistConjOverDisj,
  SchemaDistDisjOverConj,
};

enum class SystemLevel { Basic, BasicILEM, Extended, ClassicalExtended };

std::string_view ruleName(Rule rule);
std::optional<Rule> ruleFromName(std::string_view name);
bool isSchema(Rule rule);
bool admits(SystemLevel level, Rule rule);
std::string_view levelName(SystemLevel level);
std::optional<SystemLevel> levelFromName(std::string_view name);

// Schema parameters are groups of formulas:
//   SchemaLEM               [F]
//   SchemaILEM              [F_1; ...; F_k]            (indexed family, k >= 1)
//   SchemaHT                [F; G]
//   SchemaDeMorganConv      [H...]                     (the set H)
//   SchemaDist*             [H_1...] [H_2...] ...      (one group per index)
using SchemaParams = std::vector<std::vector<Formula>>;

// The axiom instance determined by the parameters. Throws EmptyFamily where a
// family must be non-empty and InvalidArgument for malformed parameters.
Formula instantiateSchema(Rule rule, const SchemaParams& params);

struct Step {
  Sequent sequent;
  Rule rule;
  std::vector<std::size_t> premises;  // 0-based indices of earlier steps
  SchemaParams params;

  friend bool operator==(const Step&, const Step&) = default;
};

struct Proof {
  std::vector<Step> steps;

  bool empty() const noexcept { return steps.empty(); }
  // The sequent of the last step.
  const Sequent& conclusion() const;

  friend bool operator==(const Proof&, const Proof&) = default;
};

enum class DiagnosticKind {
  BadPremiseIndex,
  RuleMismatch,
  SchemaInstanceMismatch,
  AssumptionSetMismatch,
  RuleNotAdmitted,
  EmptyProof,
};

std::string_view diagnosticName(DiagnosticKind kind);

struct Diagnostic {
  std::size_t step;  // 0-based
  DiagnosticKind kind;
  std::string message;
};

struct CheckResult {
  std::vector<Diagnostic> diagnostics;
  bool ok() const noexcept { return diagnostics.empty(); }
};

// Checks every step locally; all failures are reported.
CheckResult checkProof(const Proof& proof, SystemLevel level);

// For a valid disjunction-elimination step, the disjunct discharged by each
// minor premise (premises[1..]), in premise order.
std::vector<Formula> disjElimCases(const Proof& proof, std::size_t step);

}  // namespace infinitary
