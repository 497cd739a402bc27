#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "infinitary/formula.hpp"
#include "infinitary/reduct.hpp"
#include "infinitary/stable.hpp"

namespace infinitary {

// Variable, constant, or function application. Ground terms have no variables.
struct Term {
  std::string symbol;
  std::vector<Term> args;
  bool variable = false;

  static Term var(std::string name) { return {std::move(name), {}, true}; }
  static Term constant(std::string name) { return {std::move(name), {}, false}; }

  bool isGround() const;
  std::size_t depth() const;  // constants have depth 1
  std::string toString() const;

  friend bool operator==(const Term&, const Term&) = default;
};

using GroundTerm = Term;

struct AtomSchema {
  std::string predicate;
  std::vector<Term> args;

  std::string toString() const;
  friend bool operator==(const AtomSchema&, const AtomSchema&) = default;
};

struct Literal {
  AtomSchema atom;
  bool negated = false;
  friend bool operator==(const Literal&, const Literal&) = default;
};

// X != Y
struct Guard {
  std::string lhs;
  std::string rhs;
  friend bool operator==(const Guard&, const Guard&) = default;
};

struct CardinalityAggregate {
  std::optional<std::size_t> lower;
  std::optional<std::size_t> upper;
  AtomSchema schema;
  std::vector<Guard> guards;
  friend bool operator==(const CardinalityAggregate&, const CardinalityAggregate&) = default;
};

using BodyElement = std::variant<Literal, CardinalityAggregate, Guard>;

struct ProgramRule {
  std::optional<AtomSchema> head;  // empty for #false
  std::vector<BodyElement> body;
  std::vector<std::string> globalVars;  // sorted
  std::vector<std::string> localVars;   // sorted; only inside aggregates

  friend bool operator==(const ProgramRule&, const ProgramRule&) = default;
};

struct Program {
  std::vector<ProgramRule> rules;
  friend bool operator==(const Program&, const Program&) = default;
};

struct GroundUniverse {
  std::vector<GroundTerm> terms;  // by depth, then by printed form
  std::size_t depthBound = 0;
};

// Rules use '%' comments. Throws SyntaxError.
Program parseProgram(std::string_view text);
std::string printProgram(const Program& program);
std::string printRule(const ProgramRule& rule);

// Recomputes globalVars/localVars from the rule's structure.
void classifyVariables(ProgramRule& rule);

// Throws NoConstants when the program mentions no constant.
GroundUniverse herbrandUniverse(const Program& program, std::size_t depthBound);

// Conjunction over every A subset of domain violating the bounds of
// (and{A} -> or{domain \ A}).
Formula translateAggregate(std::optional<std::size_t> lower, std::optional<std::size_t> upper,
                           const std::vector<Formula>& domain);

// Throws UnsafeVariable.
Theory ground(const Program& program, const GroundUniverse& universe);

// Grounds over the depth-bounded universe; a program without constants or
// variables grounds over the empty universe.
Theory groundAtDepth(const Program& program, std::size_t depthBound);

StableModelReport solve(const Program& program, std::size_t depthBound, const EnumerationLimits& limits = {});

}  // namespace infinitary
