#include "infinitary/evaluator.hpp"

#include <algorithm>
#include <bit>

#include "infinitary/error.hpp"

namespace infinitary {

CompiledFormula::CompiledFormula(const Formula& f, const Signature& sig) {
  if (sig.size() > 64) throw Error(ErrorCode::SignatureTooLarge, "compiled evaluation supports at most 64 atoms");
  std::unordered_map<const void*, std::uint32_t> seen;
  add(f, sig, seen);
}

std::uint32_t CompiledFormula::add(const Formula& f, const Signature& sig,
                                   std::unordered_map<const void*, std::uint32_t>& seen) {
  if (auto it = seen.find(f.id()); it != seen.end()) return it->second;
  Op op{f.kind(), 0, 0, 0};
  if (f.isAtom()) {
    auto idx = sig.indexOf(f.name());
    if (!idx) throw Error(ErrorCode::UnknownAtom, "atom '" + f.name() + "' is not in the signature");
    op.atom = static_cast<std::uint32_t>(*idx);
  } else {
    std::vector<std::uint32_t> kids;
    for (const auto& k : f.children()) kids.push_back(add(k, sig, seen));
    op.first = static_cast<std::uint32_t>(args_.size());
    op.count = static_cast<std::uint32_t>(kids.size());
    args_.insert(args_.end(), kids.begin(), kids.end());
  }
  ops_.push_back(op);
  auto index = static_cast<std::uint32_t>(ops_.size() - 1);
  seen.emplace(f.id(), index);
  return index;
}

CompiledFormula::Workspace CompiledFormula::workspace() const {
  return Workspace{std::vector<char>(ops_.size()), std::vector<std::uint64_t>(ops_.size())};
}

bool CompiledFormula::satisfiedBy(std::uint64_t mask) const {
  Workspace ws = workspace();
  return prepare(mask, ws);
}

bool CompiledFormula::prepare(std::uint64_t i, Workspace& ws) const {
  auto& v = ws.there;
  for (std::size_t n = 0; n < ops_.size(); ++n) {
    const Op& op = ops_[n];
    const std::uint32_t* a = args_.data() + op.first;
    switch (op.kind) {
      case Kind::Atom:
        v[n] = static_cast<char>((i >> op.atom) & 1u);
        break;
      case Kind::Conj: {
        char r = 1;
        for (std::uint32_t k = 0; k < op.count && r; ++k) r = v[a[k]];
        v[n] = r;
        break;
      }
      case Kind::Disj: {
        char r = 0;
        for (std::uint32_t k = 0; k < op.count && !r; ++k) r = v[a[k]];
        v[n] = r;
        break;
      }
      case Kind::Impl:
        v[n] = static_cast<char>(!v[a[0]] || v[a[1]]);
        break;
    }
  }
  return v.back() != 0;
}

std::uint64_t CompiledFormula::reductWord(std::span<const std::uint64_t> atomLanes, Workspace& ws) const {
  auto& h = ws.here;
  const auto& there = ws.there;
  for (std::size_t n = 0; n < ops_.size(); ++n) {
    const Op& op = ops_[n];
    const std::uint32_t* a = args_.data() + op.first;
    switch (op.kind) {
      case Kind::Atom:
        h[n] = there[n] ? atomLanes[op.atom] : 0;
        break;
      case Kind::Conj: {
        std::uint64_t r = ~std::uint64_t{0};
        for (std::uint32_t k = 0; k < op.count; ++k) r &= h[a[k]];
        h[n] = r;
        break;
      }
      case Kind::Disj: {
        std::uint64_t r = 0;
        for (std::uint32_t k = 0; k < op.count; ++k) r |= h[a[k]];
        h[n] = r;
        break;
      }
      case Kind::Impl:
        h[n] = there[n] ? (~h[a[0]] | h[a[1]]) : 0;
        break;
    }
  }
  return h.back();
}

namespace {

constexpr std::uint64_t kLanePattern[6] = {
    0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
    0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull,
};

}  // namespace

SubsetLanes::SubsetLanes(std::uint64_t i, std::size_t signatureSize) : lanes_(signatureSize, 0) {
  for (std::uint32_t k = 0; k < signatureSize; ++k)
    if ((i >> k) & 1u) positions_.push_back(k);
  std::size_t n = positions_.size();
  chunks_ = n <= 6 ? 1 : std::size_t{1} << (n - 6);
  valid_ = n >= 6 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (std::size_t{1} << n)) - 1);
}

std::span<const std::uint64_t> SubsetLanes::lanes(std::size_t c) {
  for (std::size_t k = 0; k < positions_.size(); ++k) {
    std::uint64_t lane = k < 6 ? kLanePattern[k] : (((c >> (k - 6)) & 1u) ? ~std::uint64_t{0} : 0);
    lanes_[positions_[k]] = lane;
  }
  return lanes_;
}

std::uint64_t SubsetLanes::subsetMask(std::uint64_t m) const {
  std::uint64_t out = 0;
  for (std::size_t k = 0; k < positions_.size(); ++k)
    if ((m >> k) & 1u) out |= std::uint64_t{1} << positions_[k];
  return out;
}

}  // namespace infinitary
