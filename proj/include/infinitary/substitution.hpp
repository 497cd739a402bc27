#pragma once

#include <map>
#include <string>

#include "infinitary/formula.hpp"
#include "infinitary/signature.hpp"

namespace infinitary {

// A family of formulas over a base signature, indexed by auxiliary atoms that
// are disjoint from the base.
class Substitution {
 public:
  // Throws InvalidArgument if an index atom belongs to the base, UnknownAtom if
  // an image mentions an atom outside the base.
  Substitution(Signature base, std::map<std::string, Formula> mapping);

  const Signature& base() const noexcept { return base_; }
  const std::map<std::string, Formula>& mapping() const noexcept { return mapping_; }
  Signature indexAtoms() const;

  // Replaces index atoms by their images; base atoms are kept. Throws
  // UnknownAtom for atoms in neither signature.
  Formula apply(const Formula& f) const;

 private:
  Signature base_;
  std::map<std::string, Formula> mapping_;
};

Formula substitute(const Substitution& s, const Formula& f);

}  // namespace infinitary
