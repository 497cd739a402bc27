#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "infinitary/proof.hpp"

namespace infinitary {

struct TheoremInfo {
  std::string name;
  SystemLevel level;
  std::string summary;
  bool sized;
  int defaultSize;
  int minSize;
  int maxSize;
};

// All generators, in a fixed order.
const std::vector<TheoremInfo>& theoremCatalog();

struct SizeParams {
  std::optional<int> size;
  // Formulas per family, for the distributivity laws.
  std::optional<int> width;
};

struct LibraryTheorem {
  std::string name;
  SystemLevel level;
  Proof proof;
  // Conclusion of the proof (no assumptions).
  Formula theorem;
};

// Throws UnknownTheoremName or SizeOutOfRange.
LibraryTheorem theoremLibrary(std::string_view name, const SizeParams& params = {});

// Indexed atom p(i).
Formula indexedAtom(std::string_view predicate, int i);

// The formulas the aggregate {p(X)}0 and the conditional literal bot : p(X)
// stand for over the universe 1..size.
Formula cardinalityAtMostZero(int size);
Formula allFalse(int size);

}  // namespace infinitary
