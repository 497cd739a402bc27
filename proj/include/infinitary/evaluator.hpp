#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "infinitary/formula.hpp"
#include "infinitary/signature.hpp"

namespace infinitary {

// A formula flattened into a post-ordered DAG over signature indices, for
// enumeration-heavy checks. Interpretations are bit masks over the signature
// (at most 64 atoms).
//
// Besides plain satisfaction it evaluates reduct satisfaction J |= f^I for 64
// candidate subsets J at once without building the reduct: for a fixed I,
// prepare() computes I |= g for every subformula g, and reductWord() then folds
// one 64-bit lane per atom through the reduct clauses.
class CompiledFormula {
 public:
  // Throws UnknownAtom if f mentions an atom outside sig.
  CompiledFormula(const Formula& f, const Signature& sig);

  bool satisfiedBy(std::uint64_t mask) const;

  struct Workspace {
    std::vector<char> there;
    std::vector<std::uint64_t> here;
  };
  Workspace workspace() const;

  // Fills ws.there for interpretation i and returns whether i satisfies f.
  bool prepare(std::uint64_t i, Workspace& ws) const;
  // Lane b of the result is set iff the subset J whose atom lanes are given in
  // atomLanes (indexed by signature position) satisfies the reduct f^I.
  std::uint64_t reductWord(std::span<const std::uint64_t> atomLanes, Workspace& ws) const;

  std::size_t nodeCount() const noexcept { return ops_.size(); }

 private:
  struct Op {
    Kind kind;
    std::uint32_t atom;   // signature index for atoms
    std::uint32_t first;  // range into args_
    std::uint32_t count;
  };

  std::uint32_t add(const Formula& f, const Signature& sig, std::unordered_map<const void*, std::uint32_t>& seen);

  std::vector<Op> ops_;
  std::vector<std::uint32_t> args_;
};

// Enumerates the subsets J of a fixed interpretation I in chunks of 64: subset
// number m (0 <= m < 2^|I|) contains the k-th true atom of I iff bit k of m is set.
class SubsetLanes {
 public:
  SubsetLanes(std::uint64_t i, std::size_t signatureSize);

  std::size_t chunkCount() const noexcept { return chunks_; }
  // Mask of meaningful lanes (all ones unless |I| < 6).
  std::uint64_t validLanes() const noexcept { return valid_; }
  // Atom lanes for chunk c, indexed by signature position.
  std::span<const std::uint64_t> lanes(std::size_t c);
  // Interpretation mask of subset number m.
  std::uint64_t subsetMask(std::uint64_t m) const;

 private:
  std::vector<std::uint32_t> positions_;  // signature indices of I's atoms
  std::vector<std::uint64_t> lanes_;
  std::size_t chunks_;
  std::uint64_t valid_;
};

}  // namespace infinitary
