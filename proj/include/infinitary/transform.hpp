#pragma once

#include "infinitary/builder.hpp"
#include "infinitary/proof.hpp"
#include "infinitary/signature.hpp"
#include "infinitary/substitution.hpp"

namespace infinitary {

// Basic proof of f^I |- bot for an interpretation that does not satisfy f.
// Throws PreconditionViolated if i satisfies f.
Proof lemma1Proof(const Formula& f, const Interpretation& i);
ProofBuilder::StepId lemma1Into(ProofBuilder& b, const Formula& f, const Interpretation& i);

// Maps a Basic proof of S to a Basic proof of the reduct S^I.
Proof lemma2Transform(const Proof& p, const Interpretation& i);
// Maps an Extended proof of S to a ClassicalExtended proof of S^I.
Proof lemma3Transform(const Proof& p, const Interpretation& i);

// Reduct of a sequent: each assumption and the conclusion.
Sequent reductSequent(const Sequent& s, const Interpretation& i);

// Applies s to every formula of a proof that checks at level. Throws
// PreconditionViolated if the input does not check.
Proof substituteProof(const Substitution& s, const Proof& p, SystemLevel level);
Sequent substituteSequent(const Substitution& s, const Sequent& seq);

// Basic proof of and{phi_p <-> psi_p : p} -> (phi F <-> psi F), by structural
// induction on f. phi and psi must share their index atoms and base signature.
Proof replacementProof(const Substitution& phi, const Substitution& psi, const Formula& f);

// BasicILEM proof of |- f for a tautology, by a case split over the
// excluded-middle instance for the atoms of f. Throws NotTautological (message
// names the first falsifying interpretation) or AtomLimitExceeded.
Proof kalmarSynthesize(const Formula& f, std::size_t maxAtoms = 10);

}  // namespace infinitary
