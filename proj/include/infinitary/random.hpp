#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "infinitary/formula.hpp"
#include "infinitary/program.hpp"
#include "infinitary/proof.hpp"

namespace infinitary {

inline constexpr std::uint64_t kDefaultSeed = 20120716;

// Seeded generators for the property tests. Draws use
// raw engine output modulo a bound so sequences match across standard libraries.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed = kDefaultSeed) : rng_(seed) {}

  std::size_t below(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(rng_() % n); }
  bool coin() { return below(2) == 1; }

  Formula formula(const std::vector<Formula>& atoms, std::size_t depth);
  Program program(std::size_t rules);
  // Valid proof built from random inference steps; with schemas it needs the
  // Extended level, otherwise Basic suffices.
  Proof proof(std::size_t steps, bool withSchemas = true);

 private:
  std::mt19937_64 rng_;
};

}  // namespace infinitary
