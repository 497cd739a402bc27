#include "infinitary/signature.hpp"

#include <algorithm>

#include "infinitary/error.hpp"

namespace infinitary {

Signature::Signature(std::vector<std::string> atoms) : atoms_(std::move(atoms)) {
  std::sort(atoms_.begin(), atoms_.end());
  atoms_.erase(std::unique(atoms_.begin(), atoms_.end()), atoms_.end());
}

Signature Signature::of(const Formula& f) { return Signature(infinitary::atoms(f)); }
Signature Signature::of(std::span<const Formula> fs) { return Signature(infinitary::atoms(fs)); }

std::optional<std::size_t> Signature::indexOf(std::string_view name) const {
  auto it = std::lower_bound(atoms_.begin(), atoms_.end(), name);
  if (it == atoms_.end() || *it != name) return std::nullopt;
  return static_cast<std::size_t>(it - atoms_.begin());
}

bool Signature::includes(const Signature& other) const {
  return std::includes(atoms_.begin(), atoms_.end(), other.atoms_.begin(), other.atoms_.end());
}

Signature Signature::merged(const Signature& other) const {
  std::vector<std::string> all = atoms_;
  all.insert(all.end(), other.atoms_.begin(), other.atoms_.end());
  return Signature(std::move(all));
}

void Signature::requireCovers(const Formula& f) const {
  for (const auto& a : infinitary::atoms(f))
    if (!contains(a)) throw Error(ErrorCode::UnknownAtom, "atom '" + a + "' is not in the signature");
}

Interpretation::Interpretation(SignaturePtr signature)
    : signature_(std::move(signature)), truth_(signature_->size(), false) {}

Interpretation::Interpretation(SignaturePtr signature, const std::vector<std::string>& trueAtoms)
    : Interpretation(std::move(signature)) {
  for (const auto& name : trueAtoms) {
    auto idx = signature_->indexOf(name);
    if (!idx) throw Error(ErrorCode::UnknownAtom, "atom '" + name + "' is not in the signature");
    truth_[*idx] = true;
  }
}

Interpretation Interpretation::fromMask(SignaturePtr signature, std::uint64_t mask) {
  Interpretation i(std::move(signature));
  for (std::size_t k = 0; k < i.truth_.size() && k < 64; ++k) i.truth_[k] = (mask >> k) & 1u;
  return i;
}

bool Interpretation::holds(std::string_view name) const {
  auto idx = signature_->indexOf(name);
  if (!idx) throw Error(ErrorCode::UnknownAtom, "atom '" + std::string(name) + "' is not in the signature");
  return truth_[*idx];
}

std::vector<std::string> Interpretation::trueAtoms() const {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < truth_.size(); ++k)
    if (truth_[k]) out.push_back((*signature_)[k]);
  return out;
}

std::size_t Interpretation::count() const { return static_cast<std::size_t>(std::count(truth_.begin(), truth_.end(), true)); }

std::uint64_t Interpretation::mask() const {
  if (truth_.size() > 64) throw Error(ErrorCode::SignatureTooLarge, "interpretation does not fit a 64-bit mask");
  std::uint64_t m = 0;
  for (std::size_t k = 0; k < truth_.size(); ++k)
    if (truth_[k]) m |= std::uint64_t{1} << k;
  return m;
}

bool Interpretation::isSubsetOf(const Interpretation& other) const {
  for (std::size_t k = 0; k < truth_.size(); ++k)
    if (truth_[k] && !other.holds((*signature_)[k])) return false;
  return true;
}

std::string Interpretation::toString() const {
  std::string out = "{";
  bool first = true;
  for (const auto& a : trueAtoms()) {
    if (!first) out += ", ";
    out += a;
    first = false;
  }
  return out + "}";
}

namespace detail {

bool evaluate(const Interpretation& i, const Formula& f) {
  switch (f.kind()) {
    case Kind::Atom:
      return i.holds(f.name());
    case Kind::Conj:
      for (const auto& k : f.children())
        if (!evaluate(i, k)) return false;
      return true;
    case Kind::Disj:
      for (const auto& k : f.children())
        if (evaluate(i, k)) return true;
      return false;
    case Kind::Impl:
      return !evaluate(i, f.antecedent()) || evaluate(i, f.consequent());
  }
  return false;
}

void requireAtomsKnown(const Signature& sig, const Formula& f) {
  if (f.isAtom()) {
    if (!sig.contains(f.name()))
      throw Error(ErrorCode::UnknownAtom, "atom '" + f.name() + "' is not in the signature");
    return;
  }
  for (const auto& k : f.children()) requireAtomsKnown(sig, k);
}

}  // namespace detail

bool satisfies(const Interpretation& i, const Formula& f) {
  detail::requireAtomsKnown(i.signature(), f);
  return detail::evaluate(i, f);
}

bool satisfiesAll(const Interpretation& i, std::span<const Formula> fs) {
  return std::all_of(fs.begin(), fs.end(), [&](const Formula& f) { return satisfies(i, f); });
}

}  // namespace infinitary
