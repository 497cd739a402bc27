#pragma once

#include <vector>

#include "infinitary/formula.hpp"
#include "infinitary/signature.hpp"

namespace infinitary {

// A finite set of formulas together with the signature it is read over.
struct Theory {
  FormulaSet formulas;
  SignaturePtr signature;

  // Throws UnknownAtom if a formula mentions an atom outside the signature.
  Theory(std::vector<Formula> formulas, Signature signature);
  // Signature taken from the atoms of the formulas.
  static Theory over(std::vector<Formula> formulas);

  Theory with(const Formula& extra) const;
};

// Atoms false in i and implications false in i become bottom; conjunctions and
// disjunctions are reduced childwise.
Formula reduct(const Formula& f, const Interpretation& i);
Theory reductTheory(const Theory& t, const Interpretation& i);

}  // namespace infinitary
