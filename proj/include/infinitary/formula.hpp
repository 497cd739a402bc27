#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace infinitary {

enum class Kind : std::uint8_t { Atom, Conj, Disj, Impl };

namespace detail {
struct Node;
}

// Immutable, hash-consed formula handle.
//
// Conjunction and disjunction nodes hold a true set of children: duplicates
// collapse and children are kept sorted by the structural order below, so two
// formulas are structurally equal exactly when they share a node. Falsity is
// the empty disjunction and truth the empty conjunction; negation and the
// biconditional are abbreviations built from implication and conjunction.
class Formula {
 public:
  Kind kind() const noexcept;
  bool isAtom() const noexcept { return kind() == Kind::Atom; }
  bool isConj() const noexcept { return kind() == Kind::Conj; }
  bool isDisj() const noexcept { return kind() == Kind::Disj; }
  bool isImpl() const noexcept { return kind() == Kind::Impl; }
  bool isBottom() const noexcept;
  bool isTop() const noexcept;

  // Atom name; empty for compound formulas.
  const std::string& name() const noexcept;
  // Children of a conjunction or disjunction in canonical order; the two
  // operands of an implication.
  std::span<const Formula> children() const noexcept;
  const Formula& antecedent() const;
  const Formula& consequent() const;

  // Least i with the formula in level i of the hierarchy.
  std::size_t rank() const noexcept;
  std::size_t hash() const noexcept;
  // Number of nodes in the tree (shared subterms counted each time).
  std::size_t size() const noexcept;

  bool contains(const Formula& child) const;

  const detail::Node* id() const noexcept { return node_.get(); }

  friend bool operator==(const Formula& a, const Formula& b) noexcept { return a.node_ == b.node_; }
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b) noexcept;

 private:
  friend struct detail::Node;
  friend class Interner;
  explicit Formula(std::shared_ptr<const detail::Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const detail::Node> node_;
};

using FormulaSet = std::vector<Formula>;  // sorted, duplicate-free

Formula atom(std::string name);
Formula conj(std::vector<Formula> children);
Formula disj(std::vector<Formula> children);
Formula impl(Formula antecedent, Formula consequent);
Formula bottom();
Formula top();
Formula neg(Formula f);
Formula iff(Formula lhs, Formula rhs);

// Sorts and deduplicates in place.
void canonicalize(FormulaSet& set);
FormulaSet makeSet(std::vector<Formula> formulas);
FormulaSet setUnion(const FormulaSet& a, const FormulaSet& b);
FormulaSet setMinus(const FormulaSet& a, const Formula& f);
bool setContains(const FormulaSet& set, const Formula& f);
bool isSubset(const FormulaSet& sub, const FormulaSet& super);

// Sorted atom names occurring in f.
std::vector<std::string> atoms(const Formula& f);
std::vector<std::string> atoms(std::span<const Formula> fs);

// If f is F <-> G, returns (F, G) with F -> G the first child.
std::optional<std::pair<Formula, Formula>> asBiconditional(const Formula& f);
// If f is F -> bot, returns F.
std::optional<Formula> asNegation(const Formula& f);

// Number of formulas currently interned (for diagnostics).
std::size_t internedCount();

}  // namespace infinitary

template <>
struct std::hash<infinitary::Formula> {
  std::size_t operator()(const infinitary::Formula& f) const noexcept { return f.hash(); }
};
