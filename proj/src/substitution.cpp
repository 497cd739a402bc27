#include "infinitary/substitution.hpp"

#include <unordered_map>

#include "infinitary/error.hpp"

namespace infinitary {

Substitution::Substitution(Signature base, std::map<std::string, Formula> mapping)
    : base_(std::move(base)), mapping_(std::move(mapping)) {
  for (const auto& [index, image] : mapping_) {
    if (base_.contains(index))
      throw Error(ErrorCode::InvalidArgument, "index atom '" + index + "' also belongs to the base signature");
    base_.requireCovers(image);
  }
}

Signature Substitution::indexAtoms() const {
  std::vector<std::string> names;
  for (const auto& [index, image] : mapping_) names.push_back(index);
  return Signature(std::move(names));
}

namespace {

class Applier {
 public:
  explicit Applier(const Substitution& s) : s_(s) {}

  Formula run(const Formula& f) {
    if (auto it = memo_.find(f.id()); it != memo_.end()) return it->second;
    Formula out = compute(f);
    memo_.emplace(f.id(), out);
    return out;
  }

 private:
  Formula compute(const Formula& f) {
    switch (f.kind()) {
      case Kind::Atom: {
        if (auto it = s_.mapping().find(f.name()); it != s_.mapping().end()) return it->second;
        if (s_.base().contains(f.name())) return f;
        throw Error(ErrorCode::UnknownAtom, "atom '" + f.name() + "' is neither a base nor an index atom");
      }
      case Kind::Conj:
      case Kind::Disj: {
        std::vector<Formula> kids;
        kids.reserve(f.children().size());
        for (const auto& k : f.children()) kids.push_back(run(k));
        return f.isConj() ? conj(std::move(kids)) : disj(std::move(kids));
      }
      case Kind::Impl:
        return impl(run(f.antecedent()), run(f.consequent()));
    }
    throw Error(ErrorCode::Internal, "unreachable formula kind");
  }

  const Substitution& s_;
  std::unordered_map<const void*, Formula> memo_;
};

}  // namespace

Formula Substitution::apply(const Formula& f) const { return Applier(*this).run(f); }

Formula substitute(const Substitution& s, const Formula& f) { return s.apply(f); }

}  // namespace infinitary
