#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "infinitary/formula.hpp"
#include "infinitary/reduct.hpp"
#include "infinitary/signature.hpp"

namespace infinitary {

struct EnumerationLimits {
  std::size_t maxAtoms = 20;
  // Worker threads for candidate enumeration; results do not depend on it.
  unsigned jobs = 1;
};

struct CandidateRecord {
  std::uint64_t mask = 0;
  bool satisfiesReduct = false;
  bool minimal = false;
  // For a candidate that satisfies its reduct but is not minimal: the first
  // proper subset (by size, then lexicographically) that also satisfies it.
  std::optional<std::uint64_t> witness;
};

struct StableModelReport {
  SignaturePtr signature;
  std::vector<Interpretation> models;
  std::size_t candidatesExamined = 0;
  std::vector<CandidateRecord> candidates;
};

// All subsets of an n-element set ordered by size, then lexicographically by
// their sorted index sequences.
std::vector<std::uint64_t> subsetsInOrder(std::size_t n);
// The (size, lexicographic) order used above.
bool subsetPrecedes(std::uint64_t a, std::uint64_t b);

// Definition-level check: builds the reduct theory and tries every proper
// subset of i.
bool isStable(const Theory& t, const Interpretation& i);

// Enumerates every interpretation of the theory's signature. Throws
// SignatureTooLarge when the signature exceeds limits.maxAtoms.
StableModelReport stableModels(const Theory& t, const EnumerationLimits& limits = {});

bool isTautological(const Formula& f, std::size_t maxAtoms = 20);
// First falsifying interpretation over atoms(f), in increasing mask order.
std::optional<Interpretation> falsifyingInterpretation(const Formula& f, std::size_t maxAtoms = 20);

struct SeCounterexample {
  Interpretation there;  // I
  Interpretation here;   // J, a subset of I
  bool firstSatisfied;   // J |= f^I
};

// f and g are strongly equivalent over sig iff for all J within I within sig,
// J |= f^I exactly when J |= g^I.
bool stronglyEquivalent(const Formula& f, const Formula& g, const Signature& sig, const EnumerationLimits& limits = {});
std::optional<SeCounterexample> seCounterexample(const Formula& f, const Formula& g, const Signature& sig,
                                                 const EnumerationLimits& limits = {});

bool sameStableModels(const Theory& a, const Theory& b, const EnumerationLimits& limits = {});

}  // namespace infinitary
