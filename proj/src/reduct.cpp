#include "infinitary/reduct.hpp"

#include <unordered_map>

#include "infinitary/error.hpp"

namespace infinitary {

Theory::Theory(std::vector<Formula> fs, Signature sig)
    : formulas(makeSet(std::move(fs))), signature(std::make_shared<const Signature>(std::move(sig))) {
  for (const auto& f : formulas) signature->requireCovers(f);
}

Theory Theory::over(std::vector<Formula> fs) {
  Signature sig = Signature::of(fs);
  return Theory(std::move(fs), std::move(sig));
}

Theory Theory::with(const Formula& extra) const {
  std::vector<Formula> fs = formulas;
  fs.push_back(extra);
  return Theory(std::move(fs), *signature);
}

namespace {

class Reducer {
 public:
  explicit Reducer(const Interpretation& i) : i_(i) {}

  Formula run(const Formula& f) {
    if (auto it = memo_.find(f.id()); it != memo_.end()) return it->second;
    Formula out = compute(f);
    memo_.emplace(f.id(), out);
    return out;
  }

 private:
  Formula compute(const Formula& f) {
    switch (f.kind()) {
      case Kind::Atom:
        return i_.holds(f.name()) ? f : bottom();
      case Kind::Conj:
      case Kind::Disj: {
        std::vector<Formula> kids;
        kids.reserve(f.children().size());
        for (const auto& k : f.children()) kids.push_back(run(k));
        return f.isConj() ? conj(std::move(kids)) : disj(std::move(kids));
      }
      case Kind::Impl:
        if (!detail::evaluate(i_, f)) return bottom();
        return impl(run(f.antecedent()), run(f.consequent()));
    }
    throw Error(ErrorCode::Internal, "unreachable formula kind");
  }

  const Interpretation& i_;
  std::unordered_map<const void*, Formula> memo_;
};

}  // namespace

Formula reduct(const Formula& f, const Interpretation& i) {
  detail::requireAtomsKnown(i.signature(), f);
  return Reducer(i).run(f);
}

Theory reductTheory(const Theory& t, const Interpretation& i) {
  Reducer r(i);
  std::vector<Formula> out;
  out.reserve(t.formulas.size());
  for (const auto& f : t.formulas) {
    detail::requireAtomsKnown(i.signature(), f);
    out.push_back(r.run(f));
  }
  return Theory(std::move(out), *t.signature);
}

}  // namespace infinitary
