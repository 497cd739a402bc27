#include "infinitary/formula.hpp"

#include <algorithm>
#include <cassert>
#include <mutex>
#include <unordered_map>

#include "infinitary/error.hpp"

namespace infinitary {

namespace detail {

struct Node {
  Kind kind;
  std::string name;
  std::vector<Formula> kids;
  std::size_t rank = 0;
  std::size_t hash = 0;
  std::size_t size = 1;
};

}  // namespace detail

namespace {

constexpr std::uint64_t kFnvOffset = 1469598103934665603ull;
constexpr std::uint64_t kFnvPrime = 1099511628211ull;

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) {
    h ^= (v >> (8 * i)) & 0xffu;
    h *= kFnvPrime;
  }
  return h;
}

std::uint64_t hashString(std::string_view s) {
  std::uint64_t h = kFnvOffset;
  for (unsigned char c : s) {
    h ^= c;
    h *= kFnvPrime;
  }
  return h;
}

int compareNodes(const detail::Node* a, const detail::Node* b);

int compareFormulas(const Formula& a, const Formula& b) { return compareNodes(a.id(), b.id()); }

int compareNodes(const detail::Node* a, const detail::Node* b) {
  if (a == b) return 0;
  if (a->kind != b->kind) return a->kind < b->kind ? -1 : 1;
  switch (a->kind) {
    case Kind::Atom:
      return a->name < b->name ? -1 : 1;
    case Kind::Impl: {
      int c = compareFormulas(a->kids[0], b->kids[0]);
      return c != 0 ? c : compareFormulas(a->kids[1], b->kids[1]);
    }
    case Kind::Conj:
    case Kind::Disj: {
      std::size_t n = std::min(a->kids.size(), b->kids.size());
      for (std::size_t i = 0; i < n; ++i) {
        int c = compareFormulas(a->kids[i], b->kids[i]);
        if (c != 0) return c;
      }
      return a->kids.size() < b->kids.size() ? -1 : 1;
    }
  }
  return 0;
}

}  // namespace

// Global hash-consing table. Entries are weak so formulas no longer referenced
// anywhere are released; the deleter erases the node's own entry before freeing.
class Interner {
 public:
  static Interner& instance() {
    static Interner* table = new Interner();  // never destroyed: nodes may outlive statics
    return *table;
  }

  Formula make(Kind kind, std::string name, std::vector<Formula> kids) {
    std::uint64_t h = mix(kFnvOffset, static_cast<std::uint64_t>(kind));
    h = mix(h, hashString(name));
    for (const auto& k : kids) h = mix(h, k.hash());

    std::lock_guard lock(mutex_);
    auto [first, last] = table_.equal_range(h);
    for (auto it = first; it != last; ++it) {
      const detail::Node* cand = it->second.raw;
      if (cand->kind != kind || cand->name != name || cand->kids != kids) continue;
      if (auto node = it->second.weak.lock()) return Formula(std::move(node));
    }

    auto* raw = new detail::Node{kind, std::move(name), std::move(kids)};
    raw->hash = h;
    if (kind != Kind::Atom) {
      std::size_t maxRank = 0;
      for (const auto& k : raw->kids) {
        maxRank = std::max(maxRank, k.rank());
        raw->size += k.size();
      }
      raw->rank = raw->kids.empty() ? 1 : maxRank + 1;
    }
    std::shared_ptr<const detail::Node> node(raw, [this](const detail::Node* n) { release(n); });
    table_.emplace(h, Entry{raw, node});
    return Formula(std::move(node));
  }

  std::size_t size() {
    std::lock_guard lock(mutex_);
    return table_.size();
  }

 private:
  struct Entry {
    const detail::Node* raw;
    std::weak_ptr<const detail::Node> weak;
  };

  void release(const detail::Node* n) {
    {
      std::lock_guard lock(mutex_);
      auto [first, last] = table_.equal_range(n->hash);
      for (auto it = first; it != last; ++it) {
        if (it->second.raw == n) {
          table_.erase(it);
          break;
        }
      }
    }
    delete n;  // children are released outside the lock
  }

  std::mutex mutex_;
  std::unordered_multimap<std::uint64_t, Entry> table_;
};

Kind Formula::kind() const noexcept { return node_->kind; }
bool Formula::isBottom() const noexcept { return node_->kind == Kind::Disj && node_->kids.empty(); }
bool Formula::isTop() const noexcept { return node_->kind == Kind::Conj && node_->kids.empty(); }
const std::string& Formula::name() const noexcept { return node_->name; }
std::span<const Formula> Formula::children() const noexcept { return node_->kids; }

const Formula& Formula::antecedent() const {
  if (!isImpl()) throw Error(ErrorCode::Internal, "antecedent of a non-implication");
  return node_->kids[0];
}

const Formula& Formula::consequent() const {
  if (!isImpl()) throw Error(ErrorCode::Internal, "consequent of a non-implication");
  return node_->kids[1];
}

std::size_t Formula::rank() const noexcept { return node_->rank; }
std::size_t Formula::hash() const noexcept { return node_->hash; }
std::size_t Formula::size() const noexcept { return node_->size; }

bool Formula::contains(const Formula& child) const {
  if (!isConj() && !isDisj()) return false;
  return setContains(node_->kids, child);
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) noexcept {
  int c = compareFormulas(a, b);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

void canonicalize(FormulaSet& set) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
}

FormulaSet makeSet(std::vector<Formula> formulas) {
  canonicalize(formulas);
  return formulas;
}

FormulaSet setUnion(const FormulaSet& a, const FormulaSet& b) {
  FormulaSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

FormulaSet setMinus(const FormulaSet& a, const Formula& f) {
  FormulaSet out;
  out.reserve(a.size());
  for (const auto& x : a)
    if (x != f) out.push_back(x);
  return out;
}

bool setContains(const FormulaSet& set, const Formula& f) { return std::binary_search(set.begin(), set.end(), f); }

bool isSubset(const FormulaSet& sub, const FormulaSet& super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

Formula atom(std::string name) {
  if (name.empty()) throw Error(ErrorCode::InvalidArgument, "atom name must be non-empty");
  return Interner::instance().make(Kind::Atom, std::move(name), {});
}

Formula conj(std::vector<Formula> children) {
  canonicalize(children);
  return Interner::instance().make(Kind::Conj, {}, std::move(children));
}

Formula disj(std::vector<Formula> children) {
  canonicalize(children);
  return Interner::instance().make(Kind::Disj, {}, std::move(children));
}

Formula impl(Formula antecedent, Formula consequent) {
  return Interner::instance().make(Kind::Impl, {}, {std::move(antecedent), std::move(consequent)});
}

Formula bottom() { return disj({}); }
Formula top() { return conj({}); }
Formula neg(Formula f) { return impl(std::move(f), bottom()); }

Formula iff(Formula lhs, Formula rhs) {
  auto forward = impl(lhs, rhs);
  auto backward = impl(std::move(rhs), std::move(lhs));
  return conj({std::move(forward), std::move(backward)});
}

namespace {

void collectAtoms(const Formula& f, std::vector<std::string>& out) {
  if (f.isAtom()) {
    out.push_back(f.name());
    return;
  }
  for (const auto& k : f.children()) collectAtoms(k, out);
}

}  // namespace

std::vector<std::string> atoms(const Formula& f) {
  std::vector<std::string> out;
  collectAtoms(f, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::string> atoms(std::span<const Formula> fs) {
  std::vector<std::string> out;
  for (const auto& f : fs) collectAtoms(f, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<std::pair<Formula, Formula>> asBiconditional(const Formula& f) {
  if (!f.isConj() || f.children().size() != 2) return std::nullopt;
  const auto& a = f.children()[0];
  const auto& b = f.children()[1];
  if (!a.isImpl() || !b.isImpl()) return std::nullopt;
  if (a.antecedent() != b.consequent() || a.consequent() != b.antecedent()) return std::nullopt;
  return std::make_pair(a.antecedent(), a.consequent());
}

std::optional<Formula> asNegation(const Formula& f) {
  if (f.isImpl() && f.consequent().isBottom()) return f.antecedent();
  return std::nullopt;
}

std::size_t internedCount() { return Interner::instance().size(); }

}  // namespace infinitary
