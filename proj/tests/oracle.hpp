#pragma once

// Naive reference semantics, written directly from the satisfaction and
// reduct clauses over std::set interpretations. Shares nothing with the
// library's evaluator beyond the Formula data type.

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "infinitary/formula.hpp"

namespace oracle {

using infinitary::Formula;
using Interp = std::set<std::string>;

inline bool sat(const Interp& i, const Formula& f) {
  switch (f.kind()) {
    case infinitary::Kind::Atom:
      return i.count(f.name()) > 0;
    case infinitary::Kind::Conj:
      for (const auto& k : f.children())
        if (!sat(i, k)) return false;
      return true;
    case infinitary::Kind::Disj:
      for (const auto& k : f.children())
        if (sat(i, k)) return true;
      return false;
    case infinitary::Kind::Impl:
      return !sat(i, f.antecedent()) || sat(i, f.consequent());
  }
  return false;
}

inline Formula reduct(const Formula& f, const Interp& i) {
  switch (f.kind()) {
    case infinitary::Kind::Atom:
      return sat(i, f) ? f : infinitary::bottom();
    case infinitary::Kind::Conj:
    case infinitary::Kind::Disj: {
      std::vector<Formula> kids;
      for (const auto& k : f.children()) kids.push_back(reduct(k, i));
      return f.isConj() ? infinitary::conj(kids) : infinitary::disj(kids);
    }
    case infinitary::Kind::Impl:
      if (!sat(i, f)) return infinitary::bottom();
      return infinitary::impl(reduct(f.antecedent(), i), reduct(f.consequent(), i));
  }
  return f;
}

inline std::vector<Interp> subsets(const std::vector<std::string>& atoms) {
  std::vector<Interp> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << atoms.size()); ++m) {
    Interp s;
    for (std::size_t k = 0; k < atoms.size(); ++k)
      if ((m >> k) & 1u) s.insert(atoms[k]);
    out.push_back(s);
  }
  return out;
}

inline std::vector<Interp> subsets(const Interp& i) { return subsets(std::vector<std::string>(i.begin(), i.end())); }

inline bool satAll(const Interp& i, const std::vector<Formula>& fs) {
  for (const auto& f : fs)
    if (!sat(i, f)) return false;
  return true;
}

inline bool isStable(const std::vector<Formula>& theory, const Interp& i) {
  std::vector<Formula> red;
  for (const auto& f : theory) red.push_back(reduct(f, i));
  if (!satAll(i, red)) return false;
  for (const auto& j : subsets(i))
    if (j != i && satAll(j, red)) return false;
  return true;
}

inline std::set<Interp> stableModels(const std::vector<Formula>& theory, const std::vector<std::string>& atoms) {
  std::set<Interp> out;
  for (const auto& i : subsets(atoms))
    if (isStable(theory, i)) out.insert(i);
  return out;
}

inline bool tautology(const Formula& f) {
  for (const auto& i : subsets(infinitary::atoms(f)))
    if (!sat(i, f)) return false;
  return true;
}

inline bool stronglyEquivalent(const Formula& f, const Formula& g, const std::vector<std::string>& atoms) {
  for (const auto& i : subsets(atoms)) {
    Formula rf = reduct(f, i), rg = reduct(g, i);
    for (const auto& j : subsets(i))
      if (sat(j, rf) != sat(j, rg)) return false;
  }
  return true;
}

inline std::vector<std::string> atomsOf(const std::vector<Formula>& fs) {
  std::set<std::string> s;
  for (const auto& f : fs)
    for (const auto& a : infinitary::atoms(f)) s.insert(a);
  return {s.begin(), s.end()};
}

}  // namespace oracle
