#include "infinitary/transform.hpp"

#include <map>
#include <unordered_map>

#include "infinitary/error.hpp"
#include "infinitary/reduct.hpp"
#include "infinitary/stable.hpp"
#include "infinitary/syntax.hpp"

namespace infinitary {

using StepId = ProofBuilder::StepId;

namespace {

void requireChecks(const Proof& p, SystemLevel level) {
  auto result = checkProof(p, level);
  if (!result.ok()) {
    const auto& d = result.diagnostics.front();
    throw Error(ErrorCode::PreconditionViolated, "input proof does not check at " + std::string(levelName(level)) +
                                                     ": step " + std::to_string(d.step + 1) + ": " + d.message);
  }
}

class Reducts {
 public:
  explicit Reducts(const Interpretation& i) : i_(i) {}

  const Formula& operator()(const Formula& f) {
    auto it = cache_.find(f);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(f, reduct(f, i_)).first->second;
  }
  bool holds(const Formula& f) const { return detail::evaluate(i_, f); }
  const Interpretation& interpretation() const { return i_; }

 private:
  const Interpretation& i_;
  std::unordered_map<Formula, Formula> cache_;
};

class FalsityProver {
 public:
  FalsityProver(ProofBuilder& b, Reducts& red) : b_(b), red_(red) {}

  // Proof of {f^I} |- bot.
  StepId prove(const Formula& f) {
    auto it = cache_.find(f);
    if (it != cache_.end()) return it->second;
    if (red_.holds(f))
      throw Error(ErrorCode::PreconditionViolated, "interpretation " + red_.interpretation().toString() +
                                                       " satisfies " + printFormula(f));
    Formula r = red_(f);
    StepId out;
    if (r.isBottom()) {
      out = b_.axiom(r);
    } else if (f.isDisj()) {
      std::vector<std::pair<Formula, StepId>> cases;
      for (const auto& c : f.children()) {
        const Formula& rc = red_(c);
        bool have = false;
        for (const auto& existing : cases) have = have || existing.first == rc;
        if (!have) cases.emplace_back(rc, prove(c));
      }
      out = b_.disjElim(b_.axiom(r), cases, bottom());
    } else {
      // Unsatisfied conjunction: eliminate to an unsatisfied conjunct.
      const Formula* bad = nullptr;
      for (const auto& c : f.children()) {
        if (!red_.holds(c)) {
          bad = &c;
          break;
        }
      }
      StepId part = b_.conjElim(b_.axiom(r), red_(*bad));
      out = b_.cut(part, prove(*bad));
    }
    cache_.emplace(f, out);
    return out;
  }

 private:
  ProofBuilder& b_;
  Reducts& red_;
  std::unordered_map<Formula, StepId> cache_;
};

class ReductTransformer {
 public:
  ReductTransformer(const Interpretation& i, bool extended) : red_(i), falsity_(b_, red_), extended_(extended) {}

  Proof run(const Proof& p) {
    requireChecks(p, extended_ ? SystemLevel::Extended : SystemLevel::Basic);
    std::vector<StepId> mapped(p.steps.size());
    for (std::size_t k = 0; k < p.steps.size(); ++k) {
      const Step& s = p.steps[k];
      Sequent target = sequentReduct(s.sequent);
      StepId out = step(p, k, mapped, target);
      if (b_.conclusion(out) != target.conclusion)
        throw Error(ErrorCode::Internal, "reduct transformer produced " + printFormula(b_.conclusion(out)) +
                                             " instead of " + printFormula(target.conclusion));
      mapped[k] = b_.weakenTo(out, target.assumptions);
    }
    return b_.finish(mapped.back());
  }

  Sequent sequentReduct(const Sequent& s) {
    std::vector<Formula> as;
    for (const auto& a : s.assumptions) as.push_back(red_(a));
    return Sequent(std::move(as), red_(s.conclusion));
  }

 private:
  StepId step(const Proof& p, std::size_t k, const std::vector<StepId>& mapped, const Sequent& target) {
    const Step& s = p.steps[k];
    auto premise = [&](std::size_t j) { return mapped[s.premises[j]]; };
    const Formula& f = s.sequent.conclusion;
    switch (s.rule) {
      case Rule::Axiom:
        return b_.axiom(red_(f));
      case Rule::ConjI: {
        if (s.premises.empty()) return b_.conjIntroEmpty(target.assumptions);
        std::vector<StepId> parts;
        for (std::size_t j = 0; j < s.premises.size(); ++j) parts.push_back(premise(j));
        return b_.conjIntro(parts);
      }
      case Rule::ConjE:
        return b_.conjElim(premise(0), red_(f));
      case Rule::DisjI:
        return b_.disjIntro(premise(0), red_(f));
      case Rule::DisjE: {
        if (s.premises.size() == 1) return b_.contradiction(premise(0), red_(f));
        auto disjuncts = disjElimCases(p, k);
        std::vector<std::pair<Formula, StepId>> cases;
        for (std::size_t j = 0; j < disjuncts.size(); ++j) {
          const Formula& rc = red_(disjuncts[j]);
          bool have = false;
          for (const auto& c : cases) have = have || c.first == rc;
          if (!have) cases.emplace_back(rc, premise(j + 1));
        }
        return b_.disjElim(premise(0), cases, red_(f));
      }
      case Rule::ImplI: {
        for (const auto& h : s.sequent.assumptions) {
          if (!red_.holds(h)) return b_.contradiction(falsity_.prove(h), red_(f));
        }
        return b_.implIntro(premise(0), red_(f.antecedent()));
      }
      case Rule::ImplE: {
        const Formula& major = p.steps[s.premises[1]].sequent.conclusion;
        if (red_.holds(major)) return b_.implElim(premise(0), premise(1));
        return b_.contradiction(premise(1), red_(f));
      }
      case Rule::Weaken:
        return premise(0);
      case Rule::SchemaHT:
        return hereThere(s.params[0][0], s.params[0][1], red_(f));
      case Rule::SchemaDeMorganConv:
        return deMorgan(s.params[0], red_(f));
      case Rule::SchemaDistConjOverDisj:
      case Rule::SchemaDistDisjOverConj: {
        SchemaParams reduced;
        for (const auto& g : s.params) {
          std::vector<Formula> rg;
          for (const auto& x : g) rg.push_back(red_(x));
          reduced.push_back(std::move(rg));
        }
        return b_.schema(s.rule, std::move(reduced));
      }
      default:
        throw Error(ErrorCode::PreconditionViolated, std::string(ruleName(s.rule)) + " steps have no reduct mapping");
    }
  }

  // Reduct of F or (F -> G) or not G.
  StepId hereThere(const Formula& f, const Formula& g, const Formula& goal) {
    const Formula& fr = red_(f);
    if (!red_.holds(g)) {
      StepId negated = b_.implIntro(falsity_.prove(g), red_(g));
      return b_.disjIntro(negated, goal);
    }
    StepId lem = b_.schema(Rule::SchemaLEM, {{fr}});
    StepId left = b_.disjIntro(b_.axiom(fr), goal);
    StepId absurd = b_.implElim(b_.axiom(fr), b_.axiom(neg(fr)));
    StepId middle = b_.implIntro(b_.contradiction(absurd, red_(g)), fr);
    StepId right = b_.disjIntro(middle, goal);
    return b_.disjElim(lem, {{fr, left}, {neg(fr), right}}, goal);
  }

  // Reduct of not and{H} -> or{not F : F in H}.
  StepId deMorgan(const std::vector<Formula>& family, const Formula& goal) {
    const Formula& ante = goal.antecedent();
    const Formula& cons = goal.consequent();
    for (const auto& h : family) {
      if (red_.holds(h)) continue;
      StepId negated = b_.implIntro(falsity_.prove(h), red_(h));
      return b_.implIntro(b_.disjIntro(negated, cons), ante);
    }
    StepId absurd = b_.contradiction(b_.axiom(ante), cons);
    return b_.implIntro(absurd, ante);
  }

  ProofBuilder b_;
  Reducts red_;
  FalsityProver falsity_;
  bool extended_;
};

}  // namespace

StepId lemma1Into(ProofBuilder& b, const Formula& f, const Interpretation& i) {
  Reducts red(i);
  FalsityProver l(b, red);
  return l.prove(f);
}

Proof lemma1Proof(const Formula& f, const Interpretation& i) {
  ProofBuilder b;
  return b.finish(lemma1Into(b, f, i));
}

Sequent reductSequent(const Sequent& s, const Interpretation& i) {
  std::vector<Formula> as;
  for (const auto& a : s.assumptions) as.push_back(reduct(a, i));
  return Sequent(std::move(as), reduct(s.conclusion, i));
}

Proof lemma2Transform(const Proof& p, const Interpretation& i) { return ReductTransformer(i, false).run(p); }

Proof lemma3Transform(const Proof& p, const Interpretation& i) { return ReductTransformer(i, true).run(p); }

Sequent substituteSequent(const Substitution& s, const Sequent& seq) {
  std::vector<Formula> as;
  for (const auto& a : seq.assumptions) as.push_back(s.apply(a));
  return Sequent(std::move(as), s.apply(seq.conclusion));
}

Proof substituteProof(const Substitution& s, const Proof& p, SystemLevel level) {
  requireChecks(p, level);
  ProofBuilder b;
  std::vector<StepId> mapped(p.steps.size());
  for (std::size_t k = 0; k < p.steps.size(); ++k) {
    const Step& step = p.steps[k];
    Step out{substituteSequent(s, step.sequent), step.rule, {}, {}};
    if (step.rule == Rule::ConjI) {
      std::vector<Formula> seen;
      for (auto q : step.premises) {
        Formula c = s.apply(p.steps[q].sequent.conclusion);
        if (std::find(seen.begin(), seen.end(), c) != seen.end()) continue;
        seen.push_back(c);
        out.premises.push_back(mapped[q]);
      }
    } else if (step.rule == Rule::DisjE && step.premises.size() > 1) {
      auto cases = disjElimCases(p, k);
      out.premises.push_back(mapped[step.premises[0]]);
      std::vector<Formula> seen;
      for (std::size_t j = 0; j < cases.size(); ++j) {
        Formula c = s.apply(cases[j]);
        if (std::find(seen.begin(), seen.end(), c) != seen.end()) continue;
        seen.push_back(c);
        out.premises.push_back(mapped[step.premises[j + 1]]);
      }
    } else {
      for (auto q : step.premises) out.premises.push_back(mapped[q]);
    }
    for (const auto& g : step.params) {
      std::vector<Formula> mg;
      for (const auto& f : g) mg.push_back(s.apply(f));
      out.params.push_back(std::move(mg));
    }
    mapped[k] = b.add(std::move(out));
  }
  return b.finish(mapped.back());
}

namespace {

class Replacement {
 public:
  Replacement(const Substitution& phi, const Substitution& psi) : phi_(phi), psi_(psi) {
    std::vector<Formula> parts;
    for (const auto& [name, image] : phi.mapping()) parts.push_back(iff(image, psi.mapping().at(name)));
    e_ = conj(std::move(parts));
    eSet_ = FormulaSet{e_};
  }

  StepId prove(const Formula& f) {
    StepId forward = side(f, true);
    StepId backward = side(f, false);
    return b_.implIntro(b_.conjIntro({forward, backward}), e_);
  }

  ProofBuilder& builder() { return b_; }

 private:
  const Substitution& from(bool phiFirst) const { return phiFirst ? phi_ : psi_; }

  // {E} |- X g -> Y g, where X is phi when phiFirst.
  StepId side(const Formula& g, bool phiFirst) {
    auto key = std::make_pair(g, phiFirst);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    const Substitution& x = from(phiFirst);
    const Substitution& y = from(!phiFirst);
    Formula xg = x.apply(g);
    Formula yg = y.apply(g);
    StepId out;
    if (g.isAtom() && x.mapping().count(g.name())) {
      Formula both = iff(phi_.mapping().at(g.name()), psi_.mapping().at(g.name()));
      StepId pair = b_.conjElim(b_.axiom(e_), both);
      out = b_.conjElim(pair, impl(xg, yg));
    } else if (g.isAtom()) {
      out = b_.implIntro(b_.axiom(g), g);
    } else if (g.isConj()) {
      StepId hyp = b_.axiom(xg);
      std::vector<StepId> parts;
      for (const auto& h : g.children()) parts.push_back(b_.implElim(b_.conjElim(hyp, x.apply(h)), side(h, phiFirst)));
      StepId joined = parts.empty() ? b_.conjIntroEmpty(setUnion(eSet_, FormulaSet{xg})) : b_.conjIntro(parts);
      out = b_.implIntro(joined, xg);
    } else if (g.isDisj()) {
      std::vector<std::pair<Formula, StepId>> cases;
      for (const auto& h : g.children()) {
        Formula xh = x.apply(h);
        bool have = false;
        for (const auto& c : cases) have = have || c.first == xh;
        if (have) continue;
        StepId yh = b_.implElim(b_.axiom(xh), side(h, phiFirst));
        cases.emplace_back(xh, b_.disjIntro(yh, yg));
      }
      out = b_.implIntro(b_.disjElim(b_.axiom(xg), cases, yg), xg);
    } else {
      const Formula& a = g.antecedent();
      const Formula& c = g.consequent();
      Formula ya = y.apply(a);
      Formula xImpl = impl(x.apply(a), x.apply(c));
      StepId xa = b_.implElim(b_.axiom(ya), side(a, !phiFirst));
      StepId xc = b_.implElim(xa, b_.axiom(xImpl));
      StepId yc = b_.implElim(xc, side(c, phiFirst));
      out = b_.implIntro(b_.implIntro(yc, ya), xImpl);
    }
    out = b_.weakenTo(out, eSet_);
    cache_.emplace(key, out);
    return out;
  }

  struct KeyHash {
    std::size_t operator()(const std::pair<Formula, bool>& k) const noexcept { return k.first.hash() * 2 + k.second; }
  };

  const Substitution& phi_;
  const Substitution& psi_;
  Formula e_ = top();
  FormulaSet eSet_;
  ProofBuilder b_;
  std::unordered_map<std::pair<Formula, bool>, StepId, KeyHash> cache_;
};

class Kalmar {
 public:
  Kalmar(ProofBuilder& b, const SignaturePtr& sig) : b_(b), sig_(sig) {}

  // {D} |- g when j satisfies g, {D} |- not g otherwise.
  StepId prove(const Formula& g) {
    auto it = cache_.find(g);
    if (it != cache_.end()) return it->second;
    StepId out = b_.weakenTo(build(g), dSet_);
    cache_.emplace(g, out);
    return out;
  }

  void reset(std::uint64_t mask, const Formula& d, const Formula& positives, const Formula& negatives) {
    j_ = Interpretation::fromMask(sig_, mask);
    d_ = d;
    dSet_ = FormulaSet{d};
    positives_ = positives;
    negatives_ = negatives;
    cache_.clear();
  }

 private:
  bool holds(const Formula& g) const { return detail::evaluate(*j_, g); }

  StepId refute(StepId negation, const Formula& g) {
    // From {D} |- not g and {g} |- g derive {D, g} |- bot.
    return b_.implElim(b_.axiom(g), negation);
  }

  StepId build(const Formula& g) {
    if (g.isAtom()) {
      StepId d = b_.axiom(d_);
      if (holds(g)) return b_.conjElim(b_.conjElim(d, positives_), g);
      return b_.conjElim(b_.conjElim(d, negatives_), neg(g));
    }
    if (g.isConj()) {
      if (holds(g)) {
        std::vector<StepId> parts;
        for (const auto& c : g.children()) parts.push_back(prove(c));
        return parts.empty() ? b_.conjIntroEmpty(dSet_) : b_.conjIntro(parts);
      }
      for (const auto& c : g.children()) {
        if (holds(c)) continue;
        StepId part = b_.conjElim(b_.axiom(g), c);
        StepId absurd = b_.implElim(part, prove(c));
        return b_.implIntro(absurd, g);
      }
    }
    if (g.isDisj()) {
      if (holds(g)) {
        for (const auto& c : g.children())
          if (holds(c)) return b_.disjIntro(prove(c), g);
      }
      std::vector<std::pair<Formula, StepId>> cases;
      for (const auto& c : g.children()) cases.emplace_back(c, refute(prove(c), c));
      return b_.implIntro(b_.disjElim(b_.axiom(g), cases, bottom()), g);
    }
    const Formula& a = g.antecedent();
    const Formula& c = g.consequent();
    if (!holds(a)) {
      StepId absurd = refute(prove(a), a);
      return b_.implIntro(b_.contradiction(absurd, c), a);
    }
    if (holds(c)) return b_.implIntro(prove(c), a);
    StepId cons = b_.implElim(prove(a), b_.axiom(g));
    StepId absurd = b_.implElim(cons, prove(c));
    return b_.implIntro(absurd, g);
  }

  ProofBuilder& b_;
  SignaturePtr sig_;
  std::optional<Interpretation> j_;
  Formula d_ = top();
  FormulaSet dSet_;
  Formula positives_ = top();
  Formula negatives_ = top();
  std::unordered_map<Formula, StepId> cache_;
};

}  // namespace

Proof replacementProof(const Substitution& phi, const Substitution& psi, const Formula& f) {
  if (phi.indexAtoms() != psi.indexAtoms())
    throw Error(ErrorCode::InvalidArgument, "replacement needs substitutions with the same index set");
  Replacement r(phi, psi);
  StepId root = r.prove(f);
  return r.builder().finish(root);
}

Proof kalmarSynthesize(const Formula& f, std::size_t maxAtoms) {
  if (auto bad = falsifyingInterpretation(f, maxAtoms))
    throw Error(ErrorCode::NotTautological, printFormula(f) + " is falsified by " + bad->toString());
  auto sig = std::make_shared<const Signature>(Signature::of(f));
  ProofBuilder b;
  Kalmar k(b, sig);
  if (sig->empty()) {
    k.reset(0, top(), top(), top());
    return b.finish(b.cut(b.conjIntroEmpty({}), k.prove(f)));
  }
  std::vector<Formula> family;
  for (const auto& name : sig->atoms()) family.push_back(atom(name));
  StepId ilem = b.schema(Rule::SchemaILEM, {family});
  std::vector<std::pair<Formula, StepId>> cases;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << family.size()); ++mask) {
    std::vector<Formula> in, out;
    for (std::size_t i = 0; i < family.size(); ++i) {
      if ((mask >> i) & 1u) in.push_back(family[i]);
      else out.push_back(neg(family[i]));
    }
    Formula positives = conj(std::move(in));
    Formula negatives = conj(std::move(out));
    Formula d = conj({positives, negatives});
    k.reset(mask, d, positives, negatives);
    cases.emplace_back(d, k.prove(f));
  }
  return b.finish(b.disjElim(ilem, cases, f));
}

}  // namespace infinitary
