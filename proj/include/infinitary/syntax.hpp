#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "infinitary/formula.hpp"

namespace infinitary {

struct ParseOptions {
  // Value of `n` inside family bounds, e.g. and{ p(I) : I in 1..n }.
  std::optional<long long> size;
};

// Grammar (whitespace-insensitive):
//   formula ::= atom | bot | top | not formula | and{list} | or{list}
//             | formula -> formula | formula <-> formula | ( formula )
//   list    ::= [item (; item)*]
//   item    ::= formula | formula : VAR in bound..bound
// "->" and "<->" associate to the right; "not" binds tightest, "<->" loosest.
// Throws SyntaxError with a 1-based line and column.
Formula parseFormula(std::string_view text, const ParseOptions& options = {});

// One formula per non-blank line; '#' starts a comment.
std::vector<Formula> parseTheory(std::string_view text, const ParseOptions& options = {});

std::string printFormula(const Formula& f);
std::string printTheory(const std::vector<Formula>& formulas);

}  // namespace infinitary
