#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "infinitary/proof.hpp"
#include "infinitary/syntax.hpp"

namespace infinitary {

// Proof scripts are line oriented:
//
//   level Basic
//   step 1 p |- p by Axiom
//   step 2 |- p -> p by ImplI from 1
//   step 3 |- or{p; not p} by SchemaLEM with [p]
//
// Step numbers are 1-based and consecutive; '#' starts a comment. The rule
// name C is accepted as contradiction and stored as DisjE.
struct ProofScript {
  Proof proof;
  std::optional<SystemLevel> level;
};

ProofScript parseProofScript(std::string_view text, const ParseOptions& options = {});
std::string printProofScript(const Proof& proof, std::optional<SystemLevel> level = std::nullopt);

// "G1, G2 |- F"; "|- F" for no assumptions.
Sequent parseSequent(std::string_view text, const ParseOptions& options = {});
std::string printSequent(const Sequent& s);

}  // namespace infinitary
