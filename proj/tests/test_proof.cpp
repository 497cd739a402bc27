#include <doctest.h>

#include "infinitary/builder.hpp"
#include "infinitary/error.hpp"
#include "infinitary/library.hpp"
#include "infinitary/proof_io.hpp"
#include "infinitary/random.hpp"
#include "infinitary/reduct.hpp"
#include "infinitary/stable.hpp"
#include "infinitary/syntax.hpp"
#include "infinitary/transform.hpp"
#include "oracle.hpp"
#include "seed.hpp"

using namespace infinitary;

namespace {

using StepId = ProofBuilder::StepId;

Formula P(const char* text) { return parseFormula(text); }

SignaturePtr sigOf(std::vector<std::string> atoms) { return std::make_shared<const Signature>(Signature(std::move(atoms))); }

bool hasKind(const CheckResult& r, DiagnosticKind k) {
  for (const auto& d : r.diagnostics)
    if (d.kind == k) return true;
  return false;
}

Formula sequentFormula(const Sequent& s) { return impl(conj(s.assumptions), s.conclusion); }

ErrorCode codeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

constexpr const char* kModusPonens =
    "level Basic\n"
    "step 1 and{p; p -> q} |- and{p; p -> q} by Axiom\n"
    "step 2 and{p; p -> q} |- p by ConjE from 1\n"
    "step 3 and{p; p -> q} |- p -> q by ConjE from 1\n"
    "step 4 and{p; p -> q} |- q by ImplE from 2,3\n"
    "step 5 and{p; p -> q} |- and{p; q} by ConjI from 2,4\n"
    "step 6 |- and{p; p -> q} -> and{p; q} by ImplI from 5\n";

}  // namespace

TEST_SUITE("checker") {
  TEST_CASE("hand-written script") {
    auto script = parseProofScript(kModusPonens);
    REQUIRE(script.level == SystemLevel::Basic);
    auto r = checkProof(script.proof, SystemLevel::Basic);
    CHECK(r.ok());
    CHECK(script.proof.conclusion() == Sequent(P("and{p; p -> q} -> and{p; q}")));
    CHECK(isTautological(sequentFormula(script.proof.conclusion())));
  }

  TEST_CASE("single axiom") {
    Proof p{{Step{Sequent({atom("p")}, atom("p")), Rule::Axiom, {}, {}}}};
    CHECK(checkProof(p, SystemLevel::Basic).ok());
  }

  TEST_CASE("implication introduction needs the discharged assumption") {
    Proof p{{Step{Sequent({atom("q")}, atom("q")), Rule::Axiom, {}, {}},
             Step{Sequent({atom("q")}, P("p -> q")), Rule::ImplI, {0}, {}}}};
    auto r = checkProof(p, SystemLevel::Basic);
    REQUIRE_FALSE(r.ok());
    CHECK(r.diagnostics.front().step == 1);
    CHECK(r.diagnostics.front().kind == DiagnosticKind::RuleMismatch);
  }

  TEST_CASE("diagnostics") {
    Formula p = atom("p"), q = atom("q");
    SUBCASE("premise index") {
      Proof bad{{Step{Sequent({p}, p), Rule::ConjE, {0}, {}}}};
      CHECK(hasKind(checkProof(bad, SystemLevel::Basic), DiagnosticKind::BadPremiseIndex));
    }
    SUBCASE("assumption sets of ConjI premises") {
      Proof bad{{Step{Sequent({p}, p), Rule::Axiom, {}, {}}, Step{Sequent({q}, q), Rule::Axiom, {}, {}},
                 Step{Sequent({p, q}, conj({p, q})), Rule::ConjI, {0, 1}, {}}}};
      CHECK(hasKind(checkProof(bad, SystemLevel::Basic), DiagnosticKind::AssumptionSetMismatch));
    }
    SUBCASE("schema instance") {
      Proof bad{{Step{Sequent(P("or{p; q}")), Rule::SchemaHT, {}, {{p, q}}}}};
      CHECK(hasKind(checkProof(bad, SystemLevel::Extended), DiagnosticKind::SchemaInstanceMismatch));
    }
    SUBCASE("level") {
      Proof ht{{Step{Sequent(instantiateSchema(Rule::SchemaHT, {{p, q}})), Rule::SchemaHT, {}, {{p, q}}}}};
      CHECK(checkProof(ht, SystemLevel::Extended).ok());
      CHECK(hasKind(checkProof(ht, SystemLevel::Basic), DiagnosticKind::RuleNotAdmitted));
      CHECK(hasKind(checkProof(ht, SystemLevel::ClassicalExtended), DiagnosticKind::RuleNotAdmitted));
      Proof lem{{Step{Sequent(instantiateSchema(Rule::SchemaLEM, {{p}})), Rule::SchemaLEM, {}, {{p}}}}};
      CHECK(checkProof(lem, SystemLevel::ClassicalExtended).ok());
      CHECK_FALSE(checkProof(lem, SystemLevel::Extended).ok());
    }
    SUBCASE("empty proof") { CHECK(hasKind(checkProof(Proof{}, SystemLevel::Basic), DiagnosticKind::EmptyProof)); }
    SUBCASE("every failing step is reported") {
      Proof bad{{Step{Sequent({p}, q), Rule::Axiom, {}, {}}, Step{Sequent({q}, p), Rule::Axiom, {}, {}}}};
      CHECK(checkProof(bad, SystemLevel::Basic).diagnostics.size() == 2);
    }
  }

  TEST_CASE("contradiction is disjunction elimination over the empty family") {
    auto script = parseProofScript(
        "step 1 bot |- bot by Axiom\n"
        "step 2 bot |- p by C from 1\n");
    CHECK(script.proof.steps[1].rule == Rule::DisjE);
    CHECK(checkProof(script.proof, SystemLevel::Basic).ok());
  }
}

TEST_SUITE("schemas") {
  TEST_CASE("instances") {
    Formula p = atom("p"), q = atom("q");
    CHECK(instantiateSchema(Rule::SchemaLEM, {{p}}) == disj({p, neg(p)}));
    CHECK(instantiateSchema(Rule::SchemaILEM, {{p}}) ==
          disj({conj({top(), conj({neg(p)})}), conj({conj({p}), top()})}));
    CHECK(instantiateSchema(Rule::SchemaHT, {{p, q}}) == P("or{p; p -> q; not q}"));
    CHECK(instantiateSchema(Rule::SchemaDistConjOverDisj, {{p}, {q}}) == P("and{or{p}; or{q}} -> or{and{p; q}}"));
    CHECK(instantiateSchema(Rule::SchemaDistDisjOverConj, {{p}, {q}}) == P("and{or{p; q}} -> or{and{p}; and{q}}"));
    CHECK(instantiateSchema(Rule::SchemaDeMorganConv, {{p, q}}) == P("not and{p; q} -> or{not p; not q}"));
  }

  TEST_CASE("ILEM enumerates every split of the family") {
    Formula f = instantiateSchema(Rule::SchemaILEM, {{atom("p"), atom("q"), atom("r")}});
    CHECK(f.children().size() == 8);
    CHECK(isTautological(f));
  }

  TEST_CASE("empty families") {
    CHECK(codeOf([] { instantiateSchema(Rule::SchemaILEM, {{}}); }) == ErrorCode::EmptyFamily);
    CHECK(codeOf([] { instantiateSchema(Rule::SchemaDistConjOverDisj, {}); }) == ErrorCode::EmptyFamily);
    CHECK(codeOf([] { instantiateSchema(Rule::SchemaDistConjOverDisj, {{}, {}}); }) == ErrorCode::EmptyFamily);
  }

  TEST_CASE("every schema instance is a tautology") {
    RandomSource rng(testSeed());
    std::vector<Formula> base{atom("p"), atom("q")};
    for (int n = 0; n < 100; ++n) {
      Formula f = rng.formula(base, 2), g = rng.formula(base, 2), h = rng.formula(base, 2);
      CHECK(isTautological(instantiateSchema(Rule::SchemaLEM, {{f}})));
      CHECK(isTautological(instantiateSchema(Rule::SchemaILEM, {{f, g}})));
      CHECK(isTautological(instantiateSchema(Rule::SchemaHT, {{f, g}})));
      CHECK(isTautological(instantiateSchema(Rule::SchemaDeMorganConv, {{f, g, h}})));
      CHECK(isTautological(instantiateSchema(Rule::SchemaDistConjOverDisj, {{f, g}, {h}})));
      CHECK(isTautological(instantiateSchema(Rule::SchemaDistDisjOverConj, {{f, g}, {h}})));
    }
  }
}

TEST_SUITE("falsity-proofs") {
  TEST_CASE("examples") {
    auto sig = sigOf({"p", "q"});
    Interpretation none(sig), justP(sig, {"p"});
    Proof atomProof = lemma1Proof(atom("p"), none);
    CHECK(atomProof.steps.size() == 1);
    CHECK(atomProof.conclusion() == Sequent({bottom()}, bottom()));

    Proof disjProof = lemma1Proof(P("or{p; q}"), none);
    CHECK(checkProof(disjProof, SystemLevel::Basic).ok());
    CHECK(disjProof.conclusion() == Sequent({disj({bottom()})}, bottom()));

    Proof implProof = lemma1Proof(P("p -> q"), justP);
    CHECK(implProof.steps.size() == 1);
    CHECK(implProof.conclusion() == Sequent({bottom()}, bottom()));

    CHECK(codeOf([&] { lemma1Proof(atom("p"), justP); }) == ErrorCode::PreconditionViolated);
  }

  TEST_CASE("random unsatisfied formulas") {
    RandomSource rng(testSeed() + 1);
    std::vector<Formula> base{atom("p"), atom("q"), atom("r")};
    auto sig = sigOf({"p", "q", "r"});
    int built = 0;
    for (int n = 0; n < 200; ++n) {
      Formula f = rng.formula(base, 4);
      auto i = Interpretation::fromMask(sig, rng.below(8));
      if (satisfies(i, f)) continue;
      Proof p = lemma1Proof(f, i);
      CHECK(checkProof(p, SystemLevel::Basic).ok());
      CHECK(p.conclusion() == Sequent({reduct(f, i)}, bottom()));
      ++built;
    }
    CHECK(built > 50);
  }
}

TEST_SUITE("basic-reducts") {
  TEST_CASE("identity proof") {
    ProofBuilder b;
    Proof p = b.finish(b.implIntro(b.axiom(atom("p")), atom("p")));
    auto sig = sigOf({"p"});
    for (std::uint64_t m = 0; m < 2; ++m) {
      auto i = Interpretation::fromMask(sig, m);
      Proof out = lemma2Transform(p, i);
      CHECK(checkProof(out, SystemLevel::Basic).ok());
      CHECK(out.conclusion() == Sequent(reduct(P("p -> p"), i)));
    }
    CHECK(lemma2Transform(p, Interpretation(sig, {"p"})).conclusion() == Sequent(P("p -> p")));
  }

  TEST_CASE("implication chain of size 2 under the empty interpretation") {
    auto t = theoremLibrary("example1", {2, std::nullopt});
    auto i = Interpretation(std::make_shared<const Signature>(Signature::of(t.theorem)));
    Proof out = lemma2Transform(t.proof, i);
    CHECK(checkProof(out, SystemLevel::Basic).ok());
    CHECK(out.conclusion() == Sequent(reduct(t.theorem, i)));
    CHECK(out.conclusion() == Sequent(oracle::reduct(t.theorem, {})));
  }

  TEST_CASE("contradictory assumptions") {
    ProofBuilder b;
    StepId a = b.axiom(P("and{p; not p}"));
    Proof p = b.finish(b.implElim(b.conjElim(a, atom("p")), b.conjElim(a, P("not p"))));
    REQUIRE(p.conclusion() == Sequent({P("and{p; not p}")}, bottom()));
    Proof out = lemma2Transform(p, Interpretation(sigOf({"p"})));
    CHECK(checkProof(out, SystemLevel::Basic).ok());
    CHECK(out.conclusion() == Sequent({P("and{bot; bot -> bot}")}, bottom()));
  }

  TEST_CASE("rejects invalid input") {
    Proof bad{{Step{Sequent({atom("p")}, atom("q")), Rule::Axiom, {}, {}}}};
    CHECK(codeOf([&] { lemma2Transform(bad, Interpretation(sigOf({"p", "q"}))); }) == ErrorCode::PreconditionViolated);
  }

  TEST_CASE("random basic proofs") {
    RandomSource rng(testSeed() + 2);
    for (int n = 0; n < 60; ++n) {
      Proof p = rng.proof(12, false);
      REQUIRE(checkProof(p, SystemLevel::Basic).ok());
      std::vector<Formula> all;
      for (const auto& s : p.steps) all.push_back(sequentFormula(s.sequent));
      auto sig = std::make_shared<const Signature>(Signature::of(all));
      auto i = Interpretation::fromMask(sig, rng.below(std::size_t{1} << sig->size()));
      Proof out = lemma2Transform(p, i);
      CHECK(checkProof(out, SystemLevel::Basic).ok());
      CHECK(out.conclusion() == reductSequent(p.conclusion(), i));
    }
  }
}

TEST_SUITE("extended-reducts") {
  TEST_CASE("here-and-there axiom") {
    Proof p{{Step{Sequent(instantiateSchema(Rule::SchemaHT, {{atom("p"), atom("q")}})), Rule::SchemaHT, {}, {{atom("p"), atom("q")}}}}};
    auto sig = sigOf({"p", "q"});
    for (std::uint64_t m = 0; m < 4; ++m) {
      auto i = Interpretation::fromMask(sig, m);
      Proof out = lemma3Transform(p, i);
      CHECK(checkProof(out, SystemLevel::ClassicalExtended).ok());
      CHECK(out.conclusion() == reductSequent(p.conclusion(), i));
    }
    Proof withQ = lemma3Transform(p, Interpretation(sig, {"q"}));
    bool usesLem = false;
    for (const auto& s : withQ.steps) usesLem |= s.rule == Rule::SchemaLEM;
    CHECK(usesLem);
  }

  TEST_CASE("distributivity is re-instantiated") {
    SchemaParams groups{{atom("p")}, {atom("q")}};
    Proof p{{Step{Sequent(instantiateSchema(Rule::SchemaDistConjOverDisj, groups)), Rule::SchemaDistConjOverDisj, {}, groups}}};
    auto sig = sigOf({"p", "q"});
    for (std::uint64_t m = 0; m < 4; ++m) {
      Proof out = lemma3Transform(p, Interpretation::fromMask(sig, m));
      CHECK(out.steps.size() == 1);
      CHECK(out.steps[0].rule == Rule::SchemaDistConjOverDisj);
      CHECK(checkProof(out, SystemLevel::ClassicalExtended).ok());
    }
  }

  TEST_CASE("iwem over one atom") {
    auto t = theoremLibrary("iwem", {1, std::nullopt});
    Proof out = lemma3Transform(t.proof, Interpretation(sigOf({"p(1)"})));
    CHECK(checkProof(out, SystemLevel::ClassicalExtended).ok());
  }

  TEST_CASE("random extended proofs") {
    RandomSource rng(testSeed() + 3);
    for (int n = 0; n < 60; ++n) {
      Proof p = rng.proof(12, true);
      REQUIRE(checkProof(p, SystemLevel::Extended).ok());
      std::vector<Formula> all;
      for (const auto& s : p.steps) all.push_back(sequentFormula(s.sequent));
      auto sig = std::make_shared<const Signature>(Signature::of(all));
      auto i = Interpretation::fromMask(sig, rng.below(std::size_t{1} << sig->size()));
      Proof out = lemma3Transform(p, i);
      CHECK(checkProof(out, SystemLevel::ClassicalExtended).ok());
      CHECK(out.conclusion() == reductSequent(p.conclusion(), i));
    }
  }
}

TEST_SUITE("kalmar") {
  TEST_CASE("examples") {
    for (const char* text : {"or{p; not p}", "((p -> q) -> p) -> p", "not not p -> p", "top", "or{p -> q; q -> p}"}) {
      CAPTURE(text);
      Proof pr = kalmarSynthesize(P(text));
      CHECK(checkProof(pr, SystemLevel::BasicILEM).ok());
      CHECK(pr.conclusion() == Sequent(P(text)));
    }
  }

  TEST_CASE("non-tautologies and limits") {
    try {
      kalmarSynthesize(atom("p"));
      FAIL("expected NotTautological");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotTautological);
      CHECK(std::string(e.what()).find("{}") != std::string::npos);
    }
    std::vector<Formula> many;
    for (int k = 0; k < 11; ++k) many.push_back(atom("a" + std::to_string(k)));
    CHECK(codeOf([&] { kalmarSynthesize(impl(conj(many), conj(many))); }) == ErrorCode::AtomLimitExceeded);
  }
}

TEST_SUITE("library") {
  TEST_CASE("catalog at default sizes") {
    for (const auto& info : theoremCatalog()) {
      CAPTURE(info.name);
      auto t = theoremLibrary(info.name);
      CHECK(t.level == info.level);
      CHECK(checkProof(t.proof, t.level).ok());
      CHECK(t.proof.conclusion() == Sequent(t.theorem));
      CHECK(oracle::tautology(t.theorem));
    }
  }

  TEST_CASE("intuitionistic corpus is basic") {
    int count = 0;
    for (const auto& info : theoremCatalog()) {
      if (info.name.rfind("int", 0) != 0) continue;
      ++count;
      CHECK(checkProof(theoremLibrary(info.name).proof, SystemLevel::Basic).ok());
    }
    CHECK(count == 15);
    CHECK(theoremLibrary("int10").theorem == P("not or{p; q} <-> and{not p; not q}"));
  }

  TEST_CASE("statements") {
    CHECK(theoremLibrary("example1", {2, std::nullopt}).theorem ==
          P("and{p(0); and{p(0) -> p(1); p(1) -> p(2)}} <-> and{p(0); p(1); p(2)}"));
    CHECK(theoremLibrary("example2", {2, std::nullopt}).theorem == P("(or{p(1); p(2)} -> q) <-> and{p(1) -> q; p(2) -> q}"));
    CHECK(theoremLibrary("demorgan1", {2, std::nullopt}).theorem == P("or{not p(1); not p(2)} -> not and{p(1); p(2)}"));
    CHECK(theoremLibrary("dist_ioo", {2, std::nullopt}).theorem == P("(p -> or{q(1); q(2)}) -> or{p -> q(1); p -> q(2)}"));
    CHECK(theoremLibrary("example3").theorem ==
          P("not or{r(1) -> r(2); not r(3)} <-> and{not (r(1) -> r(2)); not not r(3)}"));
    CHECK(theoremLibrary("example4", {2, std::nullopt}).theorem ==
          P("(and{p(1) -> not p(1); p(2) -> not p(2)} -> p(0)) <-> (and{not p(1); not p(2)} -> p(0))"));

    // iwem over {p(1), p(2)}, built from its definition.
    std::vector<Formula> fs{atom("p(1)"), atom("p(2)")};
    std::vector<Formula> disjuncts;
    for (unsigned j = 0; j < 4; ++j) {
      std::vector<Formula> in, out;
      for (unsigned k = 0; k < 2; ++k) ((j >> k) & 1u ? in : out).push_back(fs[k]);
      disjuncts.push_back(conj({neg(disj(out)), neg(neg(conj(in)))}));
    }
    auto iwem = theoremLibrary("iwem", {2, std::nullopt});
    CHECK(iwem.theorem == disj(disjuncts));
    CHECK(iwem.level == SystemLevel::Extended);

    auto e7 = theoremLibrary("example7", {2, std::nullopt});
    CHECK(e7.theorem == impl(allFalse(2), cardinalityAtMostZero(2)));
    CHECK(checkProof(e7.proof, SystemLevel::Basic).ok());
    auto e7c = theoremLibrary("example7_converse", {2, std::nullopt});
    CHECK(e7c.theorem == impl(cardinalityAtMostZero(2), allFalse(2)));
    CHECK(checkProof(e7c.proof, SystemLevel::Extended).ok());
    CHECK_FALSE(checkProof(e7c.proof, SystemLevel::Basic).ok());
  }

  TEST_CASE("biconditional sides are strongly equivalent") {
    auto t = theoremLibrary("example1", {3, std::nullopt});
    auto sides = asBiconditional(t.theorem);
    REQUIRE(sides);
    CHECK(stronglyEquivalent(sides->first, sides->second, Signature::of(t.theorem)));
  }

  TEST_CASE("errors") {
    CHECK(codeOf([] { theoremLibrary("no_such_theorem"); }) == ErrorCode::UnknownTheoremName);
    CHECK(codeOf([] { theoremLibrary("example1", {7, std::nullopt}); }) == ErrorCode::SizeOutOfRange);
    CHECK(codeOf([] { theoremLibrary("example7", {5, std::nullopt}); }) == ErrorCode::SizeOutOfRange);
    CHECK(codeOf([] { theoremLibrary("example1", {0, std::nullopt}); }) == ErrorCode::SizeOutOfRange);
  }

  TEST_CASE("all sizes check") {
    for (const auto& info : theoremCatalog()) {
      if (!info.sized) continue;
      int top = std::min(info.maxSize, info.name == "example4" || info.name == "iwem" || info.name == "example7_converse" ? 3 : 4);
      for (int n = info.minSize; n <= top; ++n) {
        CAPTURE(info.name);
        CAPTURE(n);
        auto t = theoremLibrary(info.name, {n, std::nullopt});
        CHECK(checkProof(t.proof, t.level).ok());
      }
    }
  }
}

TEST_SUITE("substitution-proofs") {
  TEST_CASE("random substitutions preserve checkability") {
    RandomSource rng(testSeed() + 4);
    std::vector<Formula> base{atom("a"), atom("b")};
    for (const char* name : {"int03", "int06", "int10", "int13", "int14", "demorgan2", "example2", "dist_ioo"}) {
      auto t = theoremLibrary(name, {2, std::nullopt});
      auto idx = Signature::of(t.theorem);
      for (int n = 0; n < 5; ++n) {
        std::map<std::string, Formula> m;
        for (const auto& a : idx.atoms()) m.emplace(a, rng.formula(base, 2));
        Substitution s(Signature({"a", "b"}), m);
        Proof out = substituteProof(s, t.proof, t.level);
        CAPTURE(name);
        CHECK(checkProof(out, t.level).ok());
        CHECK(out.conclusion() == Sequent(substitute(s, t.theorem)));
      }
    }
  }

  TEST_CASE("collapsing substitution") {
    auto t = theoremLibrary("int10");
    Substitution s(Signature({"a"}), {{"p", atom("a")}, {"q", atom("a")}});
    Proof out = substituteProof(s, t.proof, SystemLevel::Basic);
    CHECK(checkProof(out, SystemLevel::Basic).ok());
    CHECK(out.conclusion() == Sequent(P("not or{a} <-> and{not a}")));
  }

  TEST_CASE("renaming") {
    auto t = theoremLibrary("int06");
    Substitution s(Signature({"x", "y", "z"}), {{"p", atom("x")}, {"q", atom("y")}, {"r", atom("z")}});
    CHECK(checkProof(substituteProof(s, t.proof, SystemLevel::Basic), SystemLevel::Basic).ok());
  }
}

TEST_SUITE("replacement") {
  TEST_CASE("random formulas up to rank 3") {
    RandomSource rng(testSeed() + 5);
    std::vector<Formula> base{atom("a"), atom("b")};
    std::vector<Formula> idx{atom("a"), atom("x"), atom("y")};
    int checked = 0;
    for (int n = 0; n < 150; ++n) {
      Formula f = rng.formula(idx, 3);
      if (f.rank() > 3) continue;
      Substitution phi(Signature({"a", "b"}), {{"x", rng.formula(base, 2)}, {"y", rng.formula(base, 2)}});
      Substitution psi(Signature({"a", "b"}), {{"x", rng.formula(base, 2)}, {"y", rng.formula(base, 2)}});
      Proof pr = replacementProof(phi, psi, f);
      CHECK(checkProof(pr, SystemLevel::Basic).ok());
      Formula e = conj({iff(phi.mapping().at("x"), psi.mapping().at("x")), iff(phi.mapping().at("y"), psi.mapping().at("y"))});
      CHECK(pr.conclusion() == Sequent(impl(e, iff(substitute(phi, f), substitute(psi, f)))));
      ++checked;
    }
    CHECK(checked > 50);
  }

  TEST_CASE("index sets must agree") {
    Substitution phi(Signature({"a"}), {{"x", atom("a")}});
    Substitution psi(Signature({"a"}), {{"y", atom("a")}});
    CHECK(codeOf([&] { replacementProof(phi, psi, atom("x")); }) == ErrorCode::InvalidArgument);
  }
}

TEST_SUITE("proof-scripts") {
  TEST_CASE("library round trip") {
    for (const auto& info : theoremCatalog()) {
      auto t = theoremLibrary(info.name);
      auto script = parseProofScript(printProofScript(t.proof, t.level));
      CHECK(script.proof == t.proof);
      CHECK(script.level == t.level);
    }
  }

  TEST_CASE("sequents") {
    CHECK(parseSequent("|- p") == Sequent(atom("p")));
    CHECK(parseSequent("q, p |- p") == Sequent({atom("p"), atom("q")}, atom("p")));
    CHECK(printSequent(Sequent({atom("q"), atom("p")}, atom("p"))) == "p, q |- p");
  }

  TEST_CASE("schema parameters in family notation") {
    auto script = parseProofScript("step 1 |- or{ and{ and{p(I) : I in 1..1}; top }; and{ top; and{ not p(1) } } } by SchemaILEM with [p(I) : I in 1..n]\n",
                                   {1});
    CHECK(checkProof(script.proof, SystemLevel::BasicILEM).ok());
  }

  TEST_CASE("malformed scripts") {
    CHECK_THROWS_AS(parseProofScript("step 2 p |- p by Axiom\n"), SyntaxError);
    CHECK_THROWS_AS(parseProofScript("step 1 p |- p by Frobnicate\n"), SyntaxError);
    CHECK_THROWS_AS(parseProofScript("step 1 p |- p by ConjE from 1\n"), SyntaxError);
    CHECK_THROWS_AS(parseProofScript("step 1 p |- p by Axiom\nlevel Basic\n"), SyntaxError);
  }

  TEST_CASE("random proofs round trip") {
    RandomSource rng(testSeed() + 6);
    for (int n = 0; n < 50; ++n) {
      Proof p = rng.proof(15);
      CHECK(parseProofScript(printProofScript(p, SystemLevel::Extended)).proof == p);
    }
  }
}
