#include "infinitary/library.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include "infinitary/builder.hpp"
#include "infinitary/error.hpp"
#include "infinitary/substitution.hpp"
#include "infinitary/transform.hpp"

namespace infinitary {

using StepId = ProofBuilder::StepId;

Formula indexedAtom(std::string_view predicate, int i) {
  return atom(std::string(predicate) + "(" + std::to_string(i) + ")");
}

namespace {

std::vector<Formula> family(std::string_view predicate, int from, int to) {
  std::vector<Formula> out;
  for (int i = from; i <= to; ++i) out.push_back(indexedAtom(predicate, i));
  return out;
}

std::vector<Formula> negations(const std::vector<Formula>& fs) {
  std::vector<Formula> out;
  for (const auto& f : fs) out.push_back(neg(f));
  return out;
}

StepId biconditional(ProofBuilder& b, StepId forward, StepId backward) { return b.conjIntro({forward, backward}); }

// and{F_0; and{F_i -> F_i+1 : i < n}} <-> and{F_i : i <= n}
StepId example1(ProofBuilder& b, int n) {
  auto fs = family("p", 0, n);
  std::vector<Formula> steps;
  for (int i = 0; i < n; ++i) steps.push_back(impl(fs[i], fs[i + 1]));
  Formula chain = conj(steps);
  Formula left = conj({fs[0], chain});
  Formula right = conj(fs);

  StepId l = b.axiom(left);
  StepId links = b.conjElim(l, chain);
  std::vector<StepId> derived{b.conjElim(l, fs[0])};
  for (int i = 0; i < n; ++i) derived.push_back(b.implElim(derived.back(), b.conjElim(links, steps[i])));
  StepId forward = b.implIntro(b.conjIntro(derived), left);

  StepId r = b.axiom(right);
  std::vector<StepId> implications;
  for (int i = 0; i < n; ++i) implications.push_back(b.implIntro(b.conjElim(r, fs[i + 1]), fs[i]));
  StepId backward = b.implIntro(b.conjIntro({b.conjElim(r, fs[0]), b.conjIntro(implications)}), right);
  return biconditional(b, forward, backward);
}

// (or{F_a} -> G) <-> and{F_a -> G}
StepId example2(ProofBuilder& b, int n) {
  auto fs = family("p", 1, n);
  Formula g = atom("q");
  Formula any = disj(fs);
  Formula left = impl(any, g);
  std::vector<Formula> each;
  for (const auto& f : fs) each.push_back(impl(f, g));
  Formula right = conj(each);

  StepId l = b.axiom(left);
  std::vector<StepId> parts;
  for (const auto& f : fs) parts.push_back(b.implIntro(b.implElim(b.disjIntro(b.axiom(f), any), l), f));
  StepId forward = b.implIntro(b.conjIntro(parts), left);

  StepId r = b.axiom(right);
  std::vector<std::pair<Formula, StepId>> cases;
  for (const auto& f : fs) cases.emplace_back(f, b.implElim(b.axiom(f), b.conjElim(r, impl(f, g))));
  StepId backward = b.implIntro(b.implIntro(b.disjElim(b.axiom(any), cases, g), any), right);
  return biconditional(b, forward, backward);
}

// or{not F} -> not and{F}
StepId demorgan1(ProofBuilder& b, const std::vector<Formula>& fs) {
  Formula some = disj(negations(fs));
  Formula all = conj(fs);
  StepId c = b.axiom(all);
  std::vector<std::pair<Formula, StepId>> cases;
  for (const auto& f : fs) cases.emplace_back(neg(f), b.implElim(b.conjElim(c, f), b.axiom(neg(f))));
  StepId absurd = b.disjElim(b.axiom(some), cases, bottom());
  return b.implIntro(b.implIntro(absurd, all), some);
}

// {and{not F}} |- not or{F}, given a step for each not F under the same assumptions.
StepId refuteDisjunction(ProofBuilder& b, const std::vector<Formula>& fs, const std::function<StepId(const Formula&)>& negated) {
  Formula any = disj(fs);
  std::vector<std::pair<Formula, StepId>> cases;
  for (const auto& f : fs) cases.emplace_back(f, b.implElim(b.axiom(f), negated(f)));
  return b.implIntro(b.disjElim(b.axiom(any), cases, bottom()), any);
}

// and{not F} <-> not or{F}
StepId demorgan2(ProofBuilder& b, const std::vector<Formula>& fs) {
  Formula nots = conj(negations(fs));
  Formula any = disj(fs);
  StepId a = b.axiom(nots);
  StepId forward = b.implIntro(refuteDisjunction(b, fs, [&](const Formula& f) { return b.conjElim(a, neg(f)); }), nots);

  StepId n = b.axiom(neg(any));
  std::vector<StepId> parts;
  for (const auto& f : fs) parts.push_back(b.implIntro(b.implElim(b.disjIntro(b.axiom(f), any), n), f));
  StepId backward = b.implIntro(b.conjIntro(parts), neg(any));
  return biconditional(b, forward, backward);
}

std::vector<std::vector<Formula>> distFamily(int families, int width) {
  std::vector<std::vector<Formula>> groups;
  for (int i = 1; i <= families; ++i) {
    std::vector<Formula> g;
    for (int j = 1; j <= width; ++j) g.push_back(atom("p(" + std::to_string(i) + "," + std::to_string(j) + ")"));
    groups.push_back(std::move(g));
  }
  return groups;
}

// or{and{F_i} : selections} -> and{or{H_i}}
StepId distributivity1(ProofBuilder& b, const std::vector<std::vector<Formula>>& groups) {
  // The converse schema's consequent lists exactly the selections.
  Formula selectionsDisj = instantiateSchema(Rule::SchemaDistConjOverDisj, groups).consequent();
  std::vector<Formula> ors;
  for (const auto& g : groups) ors.push_back(disj(g));
  Formula goal = conj(ors);
  std::vector<std::pair<Formula, StepId>> cases;
  for (const auto& sel : selectionsDisj.children()) {
    StepId s = b.axiom(sel);
    std::vector<StepId> parts;
    for (const auto& g : groups) {
      Formula d = disj(g);
      for (const auto& f : sel.children()) {
        if (d.contains(f)) {
          parts.push_back(b.disjIntro(b.conjElim(s, f), d));
          break;
        }
      }
    }
    cases.emplace_back(sel, b.conjIntro(parts));
  }
  return b.implIntro(b.disjElim(b.axiom(selectionsDisj), cases, goal), selectionsDisj);
}

// or{and{H_i}} -> and{or{F_i} : selections}
StepId distributivity2(ProofBuilder& b, const std::vector<std::vector<Formula>>& groups) {
  Formula selectionsConj = instantiateSchema(Rule::SchemaDistDisjOverConj, groups).antecedent();
  std::vector<Formula> ands;
  for (const auto& g : groups) ands.push_back(conj(g));
  Formula any = disj(ands);
  std::vector<std::pair<Formula, StepId>> cases;
  for (const auto& a : any.children()) {
    StepId s = b.axiom(a);
    std::vector<StepId> parts;
    for (const auto& sel : selectionsConj.children()) {
      for (const auto& f : sel.children()) {
        if (a.contains(f)) {
          parts.push_back(b.disjIntro(b.conjElim(s, f), sel));
          break;
        }
      }
    }
    cases.emplace_back(a, b.conjIntro(parts));
  }
  return b.implIntro(b.disjElim(b.axiom(any), cases, selectionsConj), any);
}

// ((p -> not p) <-> not p) for one atom.
StepId selfRefutation(ProofBuilder& b, const Formula& p) {
  Formula pn = impl(p, neg(p));
  StepId ap = b.axiom(p);
  StepId notP = b.implIntro(b.implElim(ap, b.implElim(ap, b.axiom(pn))), p);
  StepId forward = b.implIntro(notP, pn);
  StepId backward = b.implIntro(b.implIntro(b.axiom(neg(p)), p), neg(p));
  return biconditional(b, forward, backward);
}

StepId example4(ProofBuilder& b, int n) {
  Signature base(std::vector<std::string>{});
  std::vector<std::string> baseAtoms;
  std::map<std::string, Formula> phi, psi;
  std::vector<Formula> qs;
  for (int k = 0; k <= n; ++k) baseAtoms.push_back(indexedAtom("p", k).name());
  for (int k = 1; k <= n; ++k) {
    Formula p = indexedAtom("p", k);
    Formula q = indexedAtom("q", k);
    qs.push_back(q);
    phi.emplace(q.name(), impl(p, neg(p)));
    psi.emplace(q.name(), neg(p));
  }
  Substitution sphi(Signature(baseAtoms), phi);
  Substitution spsi(Signature(baseAtoms), psi);
  Formula schema = impl(conj(qs), indexedAtom("p", 0));
  auto replacement = b.import(replacementProof(sphi, spsi, schema));
  std::vector<StepId> pieces;
  for (int k = 1; k <= n; ++k) pieces.push_back(selfRefutation(b, indexedAtom("p", k)));
  return b.implElim(b.conjIntro(pieces), replacement.back());
}

// not F or not not F from F or (F -> not F) or not not F.
StepId weakExcludedMiddle(ProofBuilder& b, const Formula& f) {
  Formula nf = neg(f);
  Formula goal = disj({nf, neg(nf)});
  StepId ht = b.schema(Rule::SchemaHT, {{f, nf}});
  StepId af = b.axiom(f);
  StepId caseF = b.disjIntro(b.implIntro(b.implElim(af, b.axiom(nf)), nf), goal);
  Formula fnf = impl(f, nf);
  StepId caseImpl = b.disjIntro(b.implIntro(b.implElim(af, b.implElim(af, b.axiom(fnf))), f), goal);
  StepId caseNN = b.disjIntro(b.axiom(neg(nf)), goal);
  return b.disjElim(ht, {{f, caseF}, {fnf, caseImpl}, {neg(nf), caseNN}}, goal);
}

Formula iwemFormula(const std::vector<Formula>& fs) {
  std::vector<Formula> disjuncts;
  for (std::uint64_t j = 0; j < (std::uint64_t{1} << fs.size()); ++j) {
    std::vector<Formula> in, out;
    for (std::size_t k = 0; k < fs.size(); ++k) ((j >> k) & 1u ? in : out).push_back(fs[k]);
    disjuncts.push_back(conj({neg(disj(out)), neg(neg(conj(in)))}));
  }
  return disj(std::move(disjuncts));
}

// or{J subset of I}(not or{F_j : j not in J} and not not and{F_j : j in J})
StepId iwem(ProofBuilder& b, const std::vector<Formula>& fs) {
  Formula goal = iwemFormula(fs);
  SchemaParams groups;
  std::vector<StepId> wems;
  for (const auto& f : fs) {
    wems.push_back(weakExcludedMiddle(b, f));
    groups.push_back({neg(f), neg(neg(f))});
  }
  StepId dist = b.schema(Rule::SchemaDistConjOverDisj, groups);
  StepId selections = b.implElim(b.conjIntro(wems), dist);

  std::vector<std::pair<Formula, StepId>> cases;
  for (const auto& sel : b.conclusion(selections).children()) {
    std::vector<Formula> in, out;
    for (const auto& f : fs) (sel.contains(neg(neg(f))) ? in : out).push_back(f);
    StepId s = b.axiom(sel);
    StepId none = refuteDisjunction(b, out, [&](const Formula& f) { return b.conjElim(s, neg(f)); });

    // not not and{in}: assume not and{in}, split with the converse De Morgan law.
    Formula notAll = neg(conj(in));
    StepId dm = b.schema(Rule::SchemaDeMorganConv, {in});
    StepId someNot = b.implElim(b.axiom(notAll), dm);
    std::vector<std::pair<Formula, StepId>> refutations;
    for (const auto& f : in) refutations.emplace_back(neg(f), b.implElim(b.axiom(neg(f)), b.conjElim(s, neg(neg(f)))));
    StepId doubleNeg = b.implIntro(b.disjElim(someNot, refutations, bottom()), notAll);

    cases.emplace_back(sel, b.disjIntro(b.conjIntro({none, doubleNeg}), goal));
  }
  return b.disjElim(selections, cases, goal);
}

// (F -> or{G_i}) -> or{F -> G_i}
StepId distIoo(ProofBuilder& b, const Formula& f, const std::vector<Formula>& gs) {
  Formula anyG = disj(gs);
  Formula ante = impl(f, anyG);
  std::vector<Formula> each;
  for (const auto& g : gs) each.push_back(impl(f, g));
  Formula goal = disj(each);

  SchemaParams groups;
  std::vector<StepId> hts;
  for (const auto& g : gs) {
    hts.push_back(b.schema(Rule::SchemaHT, {{f, g}}));
    groups.push_back({f, impl(f, g), neg(g)});
  }
  StepId selections = b.implElim(b.conjIntro(hts), b.schema(Rule::SchemaDistConjOverDisj, groups));
  StepId a = b.axiom(ante);

  std::vector<std::pair<Formula, StepId>> cases;
  for (const auto& sel : b.conclusion(selections).children()) {
    StepId s = b.axiom(sel);
    StepId result;
    if (sel.contains(f)) {
      std::vector<std::pair<Formula, StepId>> byG;
      for (const auto& g : gs) byG.emplace_back(g, b.disjIntro(b.implIntro(b.axiom(g), f), goal));
      result = b.disjElim(b.implElim(b.conjElim(s, f), a), byG, goal);
    } else {
      const Formula* direct = nullptr;
      for (const auto& e : each)
        if (sel.contains(e)) direct = &e;
      if (direct) {
        result = b.disjIntro(b.conjElim(s, *direct), goal);
      } else {
        // Every G_i is refuted, so F is too.
        std::vector<std::pair<Formula, StepId>> refuted;
        for (const auto& g : gs) refuted.emplace_back(g, b.implElim(b.axiom(g), b.conjElim(s, neg(g))));
        StepId absurd = b.disjElim(b.implElim(b.axiom(f), a), refuted, bottom());
        result = b.disjIntro(b.implIntro(b.contradiction(absurd, gs.front()), f), goal);
      }
    }
    cases.emplace_back(sel, result);
  }
  return b.implIntro(b.disjElim(selections, cases, goal), ante);
}

std::vector<std::vector<Formula>> nonEmptySubsets(const std::vector<Formula>& fs) {
  std::vector<std::vector<Formula>> out;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << fs.size()); ++m) {
    std::vector<Formula> s;
    for (std::size_t k = 0; k < fs.size(); ++k)
      if ((m >> k) & 1u) s.push_back(fs[k]);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<Formula> complement(const std::vector<Formula>& all, const std::vector<Formula>& some) {
  std::vector<Formula> out;
  for (const auto& f : all)
    if (std::find(some.begin(), some.end(), f) == some.end()) out.push_back(f);
  return out;
}

// and{not p(a)} -> and{and{A} -> or{C \ A} : A non-empty}
StepId example7(ProofBuilder& b, int n) {
  auto ps = family("p", 1, n);
  Formula right = allFalse(n);
  Formula left = cardinalityAtMostZero(n);
  StepId r = b.axiom(right);
  std::vector<StepId> parts;
  for (const auto& a : nonEmptySubsets(ps)) {
    Formula all = conj(a);
    Formula rest = disj(complement(ps, a));
    StepId absurd = b.implElim(b.conjElim(b.axiom(all), a.front()), b.conjElim(r, neg(a.front())));
    parts.push_back(b.implIntro(b.contradiction(absurd, rest), all));
  }
  StepId derived = b.conjIntro(parts);
  if (b.conclusion(derived) != left) throw Error(ErrorCode::Internal, "example7 conclusion mismatch");
  return b.implIntro(derived, right);
}

StepId example7Converse(ProofBuilder& b, int n) {
  auto ps = family("p", 1, n);
  Formula right = allFalse(n);
  Formula left = cardinalityAtMostZero(n);
  StepId split = iwem(b, ps);
  StepId l = b.axiom(left);
  std::vector<std::pair<Formula, StepId>> cases;
  for (const auto& d : b.conclusion(split).children()) {
    // d = and{not or{C \ A}; not not and{A}}
    Formula noneOutside = top(), maybeInside = top();
    for (const auto& c : d.children()) {
      if (c.antecedent().isDisj()) noneOutside = c;
      else maybeInside = c;
    }
    Formula all = maybeInside.antecedent().antecedent();
    StepId dax = b.axiom(d);
    StepId result;
    if (all.isTop()) {
      Formula any = noneOutside.antecedent();
      StepId n0 = b.conjElim(dax, noneOutside);
      std::vector<StepId> parts;
      for (const auto& p : ps) parts.push_back(b.implIntro(b.implElim(b.disjIntro(b.axiom(p), any), n0), p));
      result = b.conjIntro(parts);
    } else {
      Formula rest = noneOutside.antecedent();
      StepId consequence = b.implElim(b.axiom(all), b.conjElim(l, impl(all, rest)));
      StepId absurd = b.implElim(consequence, b.conjElim(dax, noneOutside));
      StepId notAll = b.implIntro(absurd, all);
      StepId contradiction = b.implElim(notAll, b.conjElim(dax, maybeInside));
      result = b.contradiction(contradiction, right);
    }
    cases.emplace_back(d, result);
  }
  return b.implIntro(b.disjElim(split, cases, right), left);
}

Formula p() { return atom("p"); }
Formula q() { return atom("q"); }
Formula r() { return atom("r"); }

using Generator = std::function<StepId(ProofBuilder&)>;

Generator intuitionistic(int k) {
  switch (k) {
    case 1:
      return [](ProofBuilder& b) { return b.implIntro(b.axiom(p()), p()); };
    case 2:
      return [](ProofBuilder& b) { return b.implIntro(b.implIntro(b.axiom(p()), q()), p()); };
    case 3:
      return [](ProofBuilder& b) {
        Formula pqr = impl(p(), impl(q(), r()));
        Formula pq = impl(p(), q());
        StepId a = b.axiom(p());
        StepId res = b.implElim(b.implElim(a, b.axiom(pq)), b.implElim(a, b.axiom(pqr)));
        return b.implIntro(b.implIntro(b.implIntro(res, p()), pq), pqr);
      };
    case 4:
      return [](ProofBuilder& b) {
        Formula pq = conj({p(), q()});
        return b.implIntro(b.conjElim(b.axiom(pq), p()), pq);
      };
    case 5:
      return [](ProofBuilder& b) { return b.implIntro(b.disjIntro(b.axiom(p()), disj({p(), q()})), p()); };
    case 6:
      return [](ProofBuilder& b) {
        Formula pr = impl(p(), r());
        Formula qr = impl(q(), r());
        Formula pq = disj({p(), q()});
        StepId cp = b.implElim(b.axiom(p()), b.axiom(pr));
        StepId cq = b.implElim(b.axiom(q()), b.axiom(qr));
        StepId res = b.disjElim(b.axiom(pq), {{p(), cp}, {q(), cq}}, r());
        return b.implIntro(b.implIntro(b.implIntro(res, pq), qr), pr);
      };
    case 7:
      return [](ProofBuilder& b) {
        StepId absurd = b.implElim(b.axiom(p()), b.axiom(neg(p())));
        return b.implIntro(b.implIntro(absurd, neg(p())), p());
      };
    case 8:
      return [](ProofBuilder& b) {
        Formula nnn = neg(neg(neg(p())));
        StepId nn = b.implIntro(b.implElim(b.axiom(p()), b.axiom(neg(p()))), neg(p()));
        StepId absurd = b.implElim(nn, b.axiom(nnn));
        return b.implIntro(b.implIntro(absurd, p()), nnn);
      };
    case 9:
      return [](ProofBuilder& b) {
        Formula pq = impl(p(), q());
        StepId absurd = b.implElim(b.implElim(b.axiom(p()), b.axiom(pq)), b.axiom(neg(q())));
        return b.implIntro(b.implIntro(b.implIntro(absurd, p()), neg(q())), pq);
      };
    case 10:
      return [](ProofBuilder& b) { return demorgan2(b, {p(), q()}); };
    case 11:
      return [](ProofBuilder& b) { return demorgan1(b, {p(), q()}); };
    case 12:
      return [](ProofBuilder& b) { return b.implIntro(b.contradiction(b.axiom(bottom()), p()), bottom()); };
    case 13:
      return [](ProofBuilder& b) {
        Formula qr = disj({q(), r()});
        Formula a = conj({p(), qr});
        StepId ax = b.axiom(a);
        StepId pp = b.conjElim(ax, p());
        Formula goal = disj({conj({p(), q()}), conj({p(), r()})});
        StepId cq = b.disjIntro(b.conjIntro({pp, b.axiom(q())}), goal);
        StepId cr = b.disjIntro(b.conjIntro({pp, b.axiom(r())}), goal);
        return b.implIntro(b.disjElim(b.conjElim(ax, qr), {{q(), cq}, {r(), cr}}, goal), a);
      };
    case 14:
      return [](ProofBuilder& b) {
        Formula pq = conj({p(), q()});
        Formula uncurried = impl(pq, r());
        Formula curried = impl(p(), impl(q(), r()));
        StepId res = b.implElim(b.conjIntro({b.axiom(p()), b.axiom(q())}), b.axiom(uncurried));
        StepId forward = b.implIntro(b.implIntro(b.implIntro(res, q()), p()), uncurried);
        StepId both = b.axiom(pq);
        StepId res2 = b.implElim(b.conjElim(both, q()), b.implElim(b.conjElim(both, p()), b.axiom(curried)));
        StepId backward = b.implIntro(b.implIntro(res2, pq), curried);
        return biconditional(b, forward, backward);
      };
    case 15:
      return [](ProofBuilder& b) {
        Formula lem = disj({p(), neg(p())});
        StepId n = b.axiom(neg(lem));
        StepId notP = b.implIntro(b.implElim(b.disjIntro(b.axiom(p()), lem), n), p());
        StepId absurd = b.implElim(b.disjIntro(notP, lem), n);
        return b.implIntro(absurd, neg(lem));
      };
  }
  throw Error(ErrorCode::UnknownTheoremName, "no intuitionistic theorem " + std::to_string(k));
}

const char* const kIntSummaries[] = {
    "p -> p",
    "p -> (q -> p)",
    "(p -> (q -> r)) -> ((p -> q) -> (p -> r))",
    "p and q -> p",
    "p -> p or q",
    "(p -> r) -> ((q -> r) -> (p or q -> r))",
    "p -> not not p",
    "not not not p -> not p",
    "(p -> q) -> (not q -> not p)",
    "not (p or q) <-> not p and not q",
    "not p or not q -> not (p and q)",
    "bot -> p",
    "p and (q or r) -> (p and q) or (p and r)",
    "(p and q -> r) <-> (p -> (q -> r))",
    "not not (p or not p)",
};

std::string intName(int k) { return std::string(k < 10 ? "int0" : "int") + std::to_string(k); }

}  // namespace

Formula cardinalityAtMostZero(int size) {
  auto ps = family("p", 1, size);
  std::vector<Formula> parts;
  for (const auto& a : nonEmptySubsets(ps)) parts.push_back(impl(conj(a), disj(complement(ps, a))));
  return conj(std::move(parts));
}

Formula allFalse(int size) { return conj(negations(family("p", 1, size))); }

const std::vector<TheoremInfo>& theoremCatalog() {
  static const std::vector<TheoremInfo> catalog = [] {
    using L = SystemLevel;
    std::vector<TheoremInfo> c = {
        {"example1", L::Basic, "and{p(0); and{p(i) -> p(i+1)}} <-> and{p(i)}", true, 3, 1, 6},
        {"example2", L::Basic, "(or{p(a)} -> q) <-> and{p(a) -> q}", true, 3, 1, 6},
        {"demorgan1", L::Basic, "or{not p(i)} -> not and{p(i)}", true, 3, 1, 6},
        {"demorgan2", L::Basic, "and{not p(i)} <-> not or{p(i)}", true, 3, 1, 6},
        {"distributivity1", L::Basic, "or over selections of and -> and of or", true, 2, 1, 6},
        {"distributivity2", L::Basic, "or of and -> and over selections of or", true, 2, 1, 6},
        {"example3", L::Basic, "not (F or G) <-> not F and not G, by substitution", false, 0, 0, 0},
        {"example4", L::Basic, "(and{p(k) -> not p(k)} -> p(0)) <-> (and{not p(k)} -> p(0)), by replacement", true, 3,
         1, 6},
        {"iwem", L::Extended, "or{J}(not or{F_j : j not in J} and not not and{F_j : j in J})", true, 2, 1, 6},
        {"dist_ioo", L::Extended, "(F -> or{G_i}) -> or{F -> G_i}", true, 2, 1, 6},
        {"example7", L::Basic, "and{not p(a)} -> cardinality-at-most-0 formula", true, 2, 1, 4},
        {"example7_converse", L::Extended, "cardinality-at-most-0 formula -> and{not p(a)}", true, 2, 1, 4},
    };
    for (int k = 1; k <= 15; ++k) c.push_back({intName(k), L::Basic, kIntSummaries[k - 1], false, 0, 0, 0});
    return c;
  }();
  return catalog;
}

LibraryTheorem theoremLibrary(std::string_view name, const SizeParams& params) {
  const auto& catalog = theoremCatalog();
  auto it = std::find_if(catalog.begin(), catalog.end(), [&](const auto& t) { return t.name == name; });
  if (it == catalog.end()) throw Error(ErrorCode::UnknownTheoremName, "unknown theorem '" + std::string(name) + "'");
  int n = it->sized ? params.size.value_or(it->defaultSize) : 0;
  if (it->sized && (n < it->minSize || n > it->maxSize))
    throw Error(ErrorCode::SizeOutOfRange, it->name + " size must be within " + std::to_string(it->minSize) + ".." +
                                               std::to_string(it->maxSize) + ", got " + std::to_string(n));
  int width = params.width.value_or(2);
  bool dist = name == "distributivity1" || name == "distributivity2";
  if (dist) {
    if (width < 1 || width > 6) throw Error(ErrorCode::SizeOutOfRange, "width must be within 1..6");
    double selections = std::pow(static_cast<double>(width), n);
    if (selections > 4096) throw Error(ErrorCode::SizeOutOfRange, "too many selections for distributivity");
  }

  ProofBuilder b;
  StepId root;
  Proof proof;
  if (name == "example1") root = example1(b, n);
  else if (name == "example2") root = example2(b, n);
  else if (name == "demorgan1") root = demorgan1(b, family("p", 1, n));
  else if (name == "demorgan2") root = demorgan2(b, family("p", 1, n));
  else if (name == "distributivity1") root = distributivity1(b, distFamily(n, width));
  else if (name == "distributivity2") root = distributivity2(b, distFamily(n, width));
  else if (name == "example4") root = example4(b, n);
  else if (name == "iwem") root = iwem(b, family("p", 1, n));
  else if (name == "dist_ioo") root = distIoo(b, atom("p"), family("q", 1, n));
  else if (name == "example7") root = example7(b, n);
  else if (name == "example7_converse") root = example7Converse(b, n);
  else if (name == "example3") {
    ProofBuilder base;
    Proof schema = base.finish(intuitionistic(10)(base));
    Substitution s(Signature({"r(1)", "r(2)", "r(3)"}),
                   {{"p", impl(indexedAtom("r", 1), indexedAtom("r", 2))}, {"q", neg(indexedAtom("r", 3))}});
    root = b.import(substituteProof(s, schema, SystemLevel::Basic)).back();
  } else {
    root = intuitionistic(std::stoi(std::string(name.substr(3))))(b);
  }
  proof = b.finish(root);
  if (!proof.conclusion().assumptions.empty())
    throw Error(ErrorCode::Internal, it->name + " generator left open assumptions");
  Formula theorem = proof.conclusion().conclusion;
  return {it->name, it->level, std::move(proof), theorem};
}

}  // namespace infinitary
