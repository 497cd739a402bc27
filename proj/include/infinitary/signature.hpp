#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "infinitary/formula.hpp"

namespace infinitary {

// Finite, explicitly enumerated set of atom names, kept sorted.
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<std::string> atoms);

  static Signature of(const Formula& f);
  static Signature of(std::span<const Formula> fs);

  std::size_t size() const noexcept { return atoms_.size(); }
  bool empty() const noexcept { return atoms_.empty(); }
  const std::vector<std::string>& atoms() const noexcept { return atoms_; }
  const std::string& operator[](std::size_t i) const { return atoms_[i]; }

  bool contains(std::string_view name) const { return indexOf(name).has_value(); }
  std::optional<std::size_t> indexOf(std::string_view name) const;
  bool includes(const Signature& other) const;

  Signature merged(const Signature& other) const;

  // Throws UnknownAtom unless every atom of f belongs to this signature.
  void requireCovers(const Formula& f) const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::vector<std::string> atoms_;
};

using SignaturePtr = std::shared_ptr<const Signature>;

// A subset of a signature's atoms.
class Interpretation {
 public:
  explicit Interpretation(SignaturePtr signature);
  Interpretation(SignaturePtr signature, const std::vector<std::string>& trueAtoms);
  // Bit i of mask sets atom i of the signature (signature size <= 64).
  static Interpretation fromMask(SignaturePtr signature, std::uint64_t mask);

  const Signature& signature() const noexcept { return *signature_; }
  const SignaturePtr& signaturePtr() const noexcept { return signature_; }

  bool holds(std::size_t index) const { return truth_[index]; }
  // Throws UnknownAtom for names outside the signature.
  bool holds(std::string_view name) const;
  void set(std::size_t index, bool value) { truth_[index] = value; }

  std::vector<std::string> trueAtoms() const;
  std::size_t count() const;
  std::uint64_t mask() const;
  bool isSubsetOf(const Interpretation& other) const;

  // "{p, q}"
  std::string toString() const;

  friend bool operator==(const Interpretation& a, const Interpretation& b) {
    return a.signature() == b.signature() && a.truth_ == b.truth_;
  }

 private:
  SignaturePtr signature_;
  std::vector<bool> truth_;
};

// Throws UnknownAtom if f mentions an atom outside the interpretation's signature.
bool satisfies(const Interpretation& i, const Formula& f);
bool satisfiesAll(const Interpretation& i, std::span<const Formula> fs);

namespace detail {
// Evaluation without the up-front signature check.
bool evaluate(const Interpretation& i, const Formula& f);
void requireAtomsKnown(const Signature& sig, const Formula& f);
}  // namespace detail

}  // namespace infinitary
