#include "infinitary/random.hpp"

#include "infinitary/builder.hpp"

namespace infinitary {

Formula RandomSource::formula(const std::vector<Formula>& atoms, std::size_t depth) {
  if (depth == 0 || below(4) == 0) {
    std::size_t k = below(atoms.size() + 2);
    if (k == atoms.size()) return bottom();
    if (k == atoms.size() + 1) return top();
    return atoms[k];
  }
  switch (below(3)) {
    case 0: {
      Formula a = formula(atoms, depth - 1);
      return impl(a, formula(atoms, depth - 1));
    }
    case 1: {
      std::vector<Formula> kids;
      for (std::size_t n = below(4); n > 0; --n) kids.push_back(formula(atoms, depth - 1));
      return conj(std::move(kids));
    }
    default: {
      std::vector<Formula> kids;
      for (std::size_t n = below(4); n > 0; --n) kids.push_back(formula(atoms, depth - 1));
      return disj(std::move(kids));
    }
  }
}

namespace {

const char* const kConstants[] = {"a", "b", "c", "1", "2"};
const char* const kVariables[] = {"X", "Y", "Z"};
const char* const kPredicates[] = {"p", "q", "r", "s"};

}  // namespace

Program RandomSource::program(std::size_t rules) {
  auto term = [&](auto&& self, std::size_t depth) -> Term {
    std::size_t k = below(depth > 0 ? 4 : 3);
    if (k == 0) return Term::var(kVariables[below(3)]);
    if (k == 3) {
      Term t = Term::constant(coin() ? "f" : "g");
      t.args.push_back(self(self, depth - 1));
      if (coin()) t.args.push_back(self(self, depth - 1));
      return t;
    }
    return Term::constant(kConstants[below(5)]);
  };
  auto schema = [&] {
    AtomSchema a{kPredicates[below(4)], {}};
    std::size_t arity = below(3);
    for (std::size_t k = 0; k < arity; ++k) a.args.push_back(term(term, 1));
    return a;
  };
  Program p;
  for (std::size_t i = 0; i < rules; ++i) {
    ProgramRule r;
    if (below(5) != 0) r.head = schema();
    std::size_t body = below(4);
    for (std::size_t k = 0; k < body; ++k) {
      switch (below(4)) {
        case 0: {
          CardinalityAggregate a;
          if (coin()) a.lower = below(3);
          if (!a.lower || coin()) a.upper = a.lower.value_or(0) + below(3);
          a.schema = schema();
          if (coin()) a.guards.push_back({kVariables[below(3)], kVariables[below(3)]});
          r.body.emplace_back(std::move(a));
          break;
        }
        case 1:
          r.body.emplace_back(Guard{kVariables[below(3)], kVariables[below(3)]});
          break;
        default:
          r.body.emplace_back(Literal{schema(), coin()});
      }
    }
    classifyVariables(r);
    p.rules.push_back(std::move(r));
  }
  return p;
}

Proof RandomSource::proof(std::size_t steps, bool withSchemas) {
  std::vector<Formula> atoms{atom("p"), atom("q"), atom("r(1)"), atom("s(a,f(b))")};
  ProofBuilder b;
  std::vector<ProofBuilder::StepId> pool;
  auto pick = [&] { return pool[below(pool.size())]; };
  pool.push_back(b.axiom(formula(atoms, 2)));
  while (b.size() < steps) {
    std::size_t choice = below(9);
    if (!withSchemas && (choice == 6 || choice == 7)) choice = 0;
    switch (choice) {
      case 0:
        pool.push_back(b.axiom(formula(atoms, 2)));
        break;
      case 1:
        pool.push_back(b.conjIntro({pick(), pick()}));
        break;
      case 2: {
        auto s = pick();
        pool.push_back(b.disjIntro(s, disj({b.conclusion(s), formula(atoms, 1)})));
        break;
      }
      case 3: {
        auto s = pick();
        Formula f = b.assumptions(s).empty() ? formula(atoms, 1) : b.assumptions(s)[below(b.assumptions(s).size())];
        pool.push_back(b.implIntro(s, f));
        break;
      }
      case 4: {
        auto s = pick();
        Formula c = b.conclusion(s);
        if (c.isConj() && !c.children().empty()) pool.push_back(b.conjElim(s, c.children()[below(c.children().size())]));
        break;
      }
      case 5: {
        auto s = pick();
        pool.push_back(b.weaken(s, {formula(atoms, 1)}));
        break;
      }
      case 6: {
        Formula f = formula(atoms, 1), g = formula(atoms, 1);
        pool.push_back(b.schema(Rule::SchemaHT, {{f, g}}));
        break;
      }
      case 7: {
        std::vector<Formula> fam;
        for (std::size_t n = 1 + below(3); n > 0; --n) fam.push_back(formula(atoms, 1));
        pool.push_back(b.schema(Rule::SchemaDeMorganConv, {fam}));
        break;
      }
      default: {
        // Modus ponens against a fresh implication axiom.
        auto s = pick();
        auto major = b.axiom(impl(b.conclusion(s), formula(atoms, 1)));
        pool.push_back(b.implElim(s, major));
      }
    }
  }
  return b.finish(pool.back());
}

}  // namespace infinitary
