#include <doctest.h>

#include <algorithm>
#include <set>

#include "infinitary/error.hpp"
#include "infinitary/random.hpp"
#include "infinitary/reduct.hpp"
#include "infinitary/stable.hpp"
#include "infinitary/syntax.hpp"
#include "oracle.hpp"
#include "seed.hpp"

using namespace infinitary;

namespace {

Formula P(const char* text) { return parseFormula(text); }

SignaturePtr sigOf(std::vector<std::string> atoms) { return std::make_shared<const Signature>(Signature(std::move(atoms))); }

std::set<oracle::Interp> modelsOf(const StableModelReport& r) {
  std::set<oracle::Interp> out;
  for (const auto& m : r.models) {
    auto t = m.trueAtoms();
    out.insert(oracle::Interp(t.begin(), t.end()));
  }
  return out;
}

}  // namespace

TEST_SUITE("reduct") {
  TEST_CASE("reduct clauses") {
    auto sig = sigOf({"p", "q"});
    Interpretation none(sig), justP(sig, {"p"}), both(sig, {"p", "q"});
    CHECK(reduct(atom("p"), none) == bottom());
    CHECK(reduct(P("p -> q"), justP) == bottom());
    CHECK(reduct(P("and{p; q}"), both) == P("and{p; q}"));
    CHECK(reduct(P("not p"), none) == P("bot -> bot"));
    // Pointwise reduction merges children.
    CHECK(reduct(P("or{p; q}"), none) == disj({bottom()}));
  }

  TEST_CASE("reduct of a theory") {
    auto sig = Signature({"p", "q"});
    Theory t({P("p"), P("p -> q")}, sig);
    auto ptr = std::make_shared<const Signature>(sig);
    CHECK(reductTheory(t, Interpretation(ptr, {"p", "q"})).formulas == makeSet({P("p"), P("p -> q")}));
    CHECK(reductTheory(t, Interpretation(ptr, {"p"})).formulas == makeSet({P("p"), bottom()}));
    Theory empty({}, sig);
    CHECK(reductTheory(empty, Interpretation(ptr)).formulas.empty());
  }

  TEST_CASE("reduct agrees with the reference clauses") {
    RandomSource rng(testSeed());
    std::vector<Formula> base{atom("p"), atom("q"), atom("r")};
    auto sig = sigOf({"p", "q", "r"});
    for (int n = 0; n < 300; ++n) {
      Formula f = rng.formula(base, 4);
      for (std::uint64_t m = 0; m < 8; ++m) {
        auto i = Interpretation::fromMask(sig, m);
        auto t = i.trueAtoms();
        CHECK(reduct(f, i) == oracle::reduct(f, oracle::Interp(t.begin(), t.end())));
      }
    }
  }

  TEST_CASE("unsatisfied formulas have unsatisfiable reducts") {
    RandomSource rng(testSeed() + 1);
    std::vector<Formula> base{atom("p"), atom("q"), atom("r")};
    auto sig = sigOf({"p", "q", "r"});
    for (int n = 0; n < 300; ++n) {
      Formula f = rng.formula(base, 4);
      for (std::uint64_t m = 0; m < 8; ++m) {
        auto i = Interpretation::fromMask(sig, m);
        if (satisfies(i, f)) continue;
        Formula r = reduct(f, i);
        for (std::uint64_t j = 0; j < 8; ++j) CHECK_FALSE(satisfies(Interpretation::fromMask(sig, j), r));
      }
    }
  }
}

TEST_SUITE("stable") {
  TEST_CASE("isStable examples") {
    auto s = Signature({"p", "q"});
    auto ptr = std::make_shared<const Signature>(s);
    CHECK(isStable(Theory({P("p")}, s), Interpretation(ptr, {"p"})));
    CHECK(isStable(Theory({P("p -> q"), P("p")}, s), Interpretation(ptr, {"p", "q"})));
    CHECK(oracle::isStable({P("p -> q"), P("p")}, {"p", "q"}));
    CHECK_FALSE(isStable(Theory({P("q -> q")}, s), Interpretation(ptr, {"q"})));
    CHECK_FALSE(oracle::isStable({P("q -> q")}, {"q"}));
  }

  TEST_CASE("introductory theory") {
    std::vector<Formula> fs{P("p(f(a))"), P("or{p(a); p(f(a))} -> q")};
    auto rep = stableModels(Theory::over(fs));
    std::set<oracle::Interp> expected{{"p(f(a))", "q"}};
    CHECK(modelsOf(rep) == expected);
    CHECK(oracle::stableModels(fs, oracle::atomsOf(fs)) == expected);
  }

  TEST_CASE("empty theory") {
    auto rep = stableModels(Theory({}, Signature({"p"})));
    CHECK(modelsOf(rep) == std::set<oracle::Interp>{{}});
  }

  TEST_CASE("excluded middle has two stable models") {
    // Reference value: under {} the reduct is or{bot; bot -> bot}, satisfied by {};
    // under {p} it is or{p; bot}, whose only satisfier within {p} is {p}.
    std::vector<Formula> fs{P("or{p; not p}")};
    auto reference = oracle::stableModels(fs, {"p"});
    std::set<oracle::Interp> frozen{{}, {"p"}};
    REQUIRE(reference == frozen);
    CHECK(modelsOf(stableModels(Theory(fs, Signature({"p"})))) == frozen);
  }

  TEST_CASE("candidate records") {
    auto rep = stableModels(Theory({P("p -> q"), P("p")}, Signature({"p", "q"})));
    REQUIRE(rep.candidates.size() == 4);
    CHECK(rep.candidatesExamined == 4);
    // Popcount order: {}, {p}, {q}, {p, q}.
    CHECK(rep.candidates[0].mask == 0);
    CHECK(rep.candidates[3].mask == 3);
    CHECK(rep.candidates[3].satisfiesReduct);
    CHECK(rep.candidates[3].minimal);
    CHECK_FALSE(rep.candidates[3].witness.has_value());
    CHECK_FALSE(rep.candidates[1].satisfiesReduct);
  }

  TEST_CASE("limits") {
    std::vector<std::string> many;
    for (int k = 0; k < 25; ++k) many.push_back("a" + std::to_string(k));
    try {
      stableModels(Theory({}, Signature(many)));
      FAIL("expected a limit error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::SignatureTooLarge);
    }
  }

  TEST_CASE("agreement with the reference enumeration") {
    RandomSource rng(testSeed() + 2);
    std::vector<Formula> base{atom("p"), atom("q"), atom("r")};
    for (int n = 0; n < 150; ++n) {
      std::vector<Formula> fs;
      for (std::size_t k = 1 + rng.below(3); k > 0; --k) fs.push_back(rng.formula(base, 3));
      Theory t(fs, Signature({"p", "q", "r"}));
      auto expected = oracle::stableModels(std::vector<Formula>(t.formulas.begin(), t.formulas.end()), {"p", "q", "r"});
      CHECK(modelsOf(stableModels(t)) == expected);
      CHECK(modelsOf(stableModels(t, {20, 3})) == expected);
    }
  }

  TEST_CASE("parallel enumeration is deterministic") {
    RandomSource rng(testSeed() + 3);
    std::vector<Formula> base;
    std::vector<std::string> names;
    for (int k = 0; k < 9; ++k) {
      names.push_back("a" + std::to_string(k));
      base.push_back(atom(names.back()));
    }
    std::vector<Formula> fs;
    for (int k = 0; k < 6; ++k) fs.push_back(rng.formula(base, 3));
    Theory t(fs, Signature(names));
    auto one = stableModels(t, {20, 1});
    auto four = stableModels(t, {20, 4});
    CHECK(one.models == four.models);
    REQUIRE(one.candidates.size() == four.candidates.size());
    for (std::size_t k = 0; k < one.candidates.size(); ++k) {
      CHECK(one.candidates[k].mask == four.candidates[k].mask);
      CHECK(one.candidates[k].witness == four.candidates[k].witness);
    }
  }
}

TEST_SUITE("tautology") {
  TEST_CASE("examples") {
    CHECK(isTautological(P("p -> p")));
    CHECK(isTautological(parseFormula("and{ not p(K) : K in 1..3 } <-> not or{ p(K) : K in 1..3 }")));
    CHECK_FALSE(isTautological(P("or{p; q}")));
    auto w = falsifyingInterpretation(P("p"));
    REQUIRE(w);
    CHECK(w->trueAtoms().empty());
  }

  TEST_CASE("agreement with the reference") {
    RandomSource rng(testSeed() + 4);
    std::vector<Formula> base{atom("p"), atom("q")};
    for (int n = 0; n < 400; ++n) {
      Formula f = rng.formula(base, 4);
      CHECK(isTautological(f) == oracle::tautology(f));
    }
  }
}

TEST_SUITE("strong-equivalence") {
  TEST_CASE("examples") {
    Signature p({"p"});
    CHECK(stronglyEquivalent(P("p"), P("p"), p));
    CHECK_FALSE(stronglyEquivalent(P("p"), P("not not p"), p));
    CHECK_FALSE(oracle::stronglyEquivalent(P("p"), P("not not p"), {"p"}));
    auto cx = seCounterexample(P("p"), P("not not p"), p);
    REQUIRE(cx);
    CHECK(cx->there.trueAtoms() == std::vector<std::string>{"p"});
    CHECK(cx->here.trueAtoms().empty());
    CHECK_FALSE(cx->firstSatisfied);

    ParseOptions three{3};
    Formula left = parseFormula("and{ p(0); and{ p(I) -> p(I+1) : I in 0..n-1 } }", three);
    Formula right = parseFormula("and{ p(I) : I in 0..n }", three);
    CHECK(stronglyEquivalent(left, right, Signature::of(std::vector<Formula>{left, right})));
    CHECK(oracle::stronglyEquivalent(left, right, atoms(conj({left, right}))));
  }

  TEST_CASE("agreement with the reference") {
    RandomSource rng(testSeed() + 5);
    std::vector<Formula> base{atom("p"), atom("q")};
    int positives = 0;
    for (int n = 0; n < 400; ++n) {
      Formula f = rng.formula(base, 3), g = rng.formula(base, 3);
      bool expected = oracle::stronglyEquivalent(f, g, {"p", "q"});
      positives += expected;
      CHECK(stronglyEquivalent(f, g, Signature({"p", "q"})) == expected);
      CHECK(stronglyEquivalent(f, g, Signature({"p", "q"}), {20, 2}) == expected);
    }
    CHECK(positives > 0);
  }

  TEST_CASE("strong equivalence implies equal stable models in every context") {
    RandomSource rng(testSeed() + 6);
    std::vector<Formula> base{atom("p"), atom("q")};
    std::vector<Formula> pool{P("p"), P("q"), P("not p -> q"), P("not q -> p"), P("p -> q"), P("or{p; q}")};
    int tested = 0;
    for (int n = 0; n < 300 && tested < 40; ++n) {
      Formula f = rng.formula(base, 3), g = rng.formula(base, 3);
      Signature sig({"p", "q"});
      if (!stronglyEquivalent(f, g, sig)) continue;
      ++tested;
      for (std::uint64_t m = 0; m < (1u << pool.size()); ++m) {
        std::vector<Formula> h;
        for (std::size_t k = 0; k < pool.size(); ++k)
          if ((m >> k) & 1u) h.push_back(pool[k]);
        Theory t(h, sig);
        CHECK(sameStableModels(t.with(f), t.with(g)));
      }
    }
    CHECK(tested > 5);
  }

  TEST_CASE("sameStableModels") {
    Signature pq({"p", "q"});
    Theory t({P("p"), P("not q -> p")}, pq);
    CHECK(sameStableModels(t, t));
    CHECK_FALSE(sameStableModels(Theory({P("p")}, pq), Theory({P("q")}, pq)));
    CHECK(sameStableModels(t.with(P("p -> p")), t));
  }
}
