#include "infinitary/stable.hpp"

#include <algorithm>
#include <bit>
#include <thread>

#include "infinitary/error.hpp"
#include "infinitary/evaluator.hpp"

namespace infinitary {

namespace {

void requireWithinLimit(std::size_t n, std::size_t limit, ErrorCode code) {
  if (n > limit || n > 62)
    throw Error(code, std::to_string(n) + " atoms exceed the enumeration limit of " + std::to_string(limit));
}

// Runs body(begin, end) over [0, total) split into contiguous blocks.
template <typename Body>
void parallelFor(std::size_t total, unsigned jobs, Body body) {
  jobs = std::max(1u, jobs);
  if (jobs == 1 || total < 2 * jobs) {
    body(std::size_t{0}, total);
    return;
  }
  std::vector<std::jthread> workers;
  std::size_t block = (total + jobs - 1) / jobs;
  for (unsigned w = 0; w < jobs; ++w) {
    std::size_t begin = w * block;
    std::size_t end = std::min(total, begin + block);
    if (begin >= end) break;
    workers.emplace_back([=, &body] { body(begin, end); });
  }
}

}  // namespace

bool subsetPrecedes(std::uint64_t a, std::uint64_t b) {
  int pa = std::popcount(a);
  int pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  if (a == b) return false;
  std::uint64_t lowest = (a ^ b) & ~((a ^ b) - 1);
  return (a & lowest) != 0;
}

std::vector<std::uint64_t> subsetsInOrder(std::size_t n) {
  if (n > 62) throw Error(ErrorCode::SignatureTooLarge, "cannot enumerate subsets of more than 62 atoms");
  std::vector<std::uint64_t> out;
  out.reserve(std::size_t{1} << n);
  for (std::size_t k = 0; k <= n; ++k) {
    // Lexicographic k-combinations of {0..n-1}.
    std::vector<std::size_t> comb(k);
    for (std::size_t j = 0; j < k; ++j) comb[j] = j;
    while (true) {
      std::uint64_t m = 0;
      for (auto c : comb) m |= std::uint64_t{1} << c;
      out.push_back(m);
      std::size_t j = k;
      while (j > 0 && comb[j - 1] == n - k + (j - 1)) --j;
      if (j == 0) break;
      ++comb[j - 1];
      for (std::size_t t = j; t < k; ++t) comb[t] = comb[t - 1] + 1;
    }
  }
  return out;
}

bool isStable(const Theory& t, const Interpretation& i) {
  Theory red = reductTheory(t, i);
  if (!satisfiesAll(i, red.formulas)) return false;
  auto trueAtoms = i.trueAtoms();
  std::size_t n = trueAtoms.size();
  requireWithinLimit(n, 62, ErrorCode::SignatureTooLarge);
  for (std::uint64_t m = 0; m + 1 < (std::uint64_t{1} << n); ++m) {
    std::vector<std::string> subset;
    for (std::size_t k = 0; k < n; ++k)
      if ((m >> k) & 1u) subset.push_back(trueAtoms[k]);
    Interpretation j(i.signaturePtr(), subset);
    if (satisfiesAll(j, red.formulas)) return false;
  }
  return true;
}

StableModelReport stableModels(const Theory& t, const EnumerationLimits& limits) {
  const Signature& sig = *t.signature;
  requireWithinLimit(sig.size(), limits.maxAtoms, ErrorCode::SignatureTooLarge);
  CompiledFormula whole(conj(t.formulas), sig);
  auto order = subsetsInOrder(sig.size());

  StableModelReport report;
  report.signature = t.signature;
  report.candidatesExamined = order.size();
  report.candidates.resize(order.size());

  parallelFor(order.size(), limits.jobs, [&](std::size_t begin, std::size_t end) {
    auto ws = whole.workspace();
    for (std::size_t c = begin; c < end; ++c) {
      CandidateRecord rec;
      rec.mask = order[c];
      rec.satisfiesReduct = whole.prepare(rec.mask, ws);
      if (rec.satisfiesReduct) {
        SubsetLanes subsets(rec.mask, sig.size());
        std::uint64_t fullIndex = (std::uint64_t{1} << std::popcount(rec.mask)) - 1;
        for (std::size_t chunk = 0; chunk < subsets.chunkCount(); ++chunk) {
          std::uint64_t word = whole.reductWord(subsets.lanes(chunk), ws) & subsets.validLanes();
          while (word) {
            std::uint64_t m = chunk * 64 + static_cast<std::uint64_t>(std::countr_zero(word));
            word &= word - 1;
            if (m == fullIndex) continue;
            std::uint64_t j = subsets.subsetMask(m);
            if (!rec.witness || subsetPrecedes(j, *rec.witness)) rec.witness = j;
          }
        }
        rec.minimal = !rec.witness.has_value();
      }
      report.candidates[c] = rec;
    }
  });

  for (const auto& rec : report.candidates)
    if (rec.satisfiesReduct && rec.minimal) report.models.push_back(Interpretation::fromMask(t.signature, rec.mask));
  return report;
}

std::optional<Interpretation> falsifyingInterpretation(const Formula& f, std::size_t maxAtoms) {
  auto sig = std::make_shared<const Signature>(Signature::of(f));
  requireWithinLimit(sig->size(), maxAtoms, ErrorCode::AtomLimitExceeded);
  CompiledFormula compiled(f, *sig);
  auto ws = compiled.workspace();
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << sig->size()); ++m)
    if (!compiled.prepare(m, ws)) return Interpretation::fromMask(sig, m);
  return std::nullopt;
}

bool isTautological(const Formula& f, std::size_t maxAtoms) { return !falsifyingInterpretation(f, maxAtoms); }

std::optional<SeCounterexample> seCounterexample(const Formula& f, const Formula& g, const Signature& sig,
                                                 const EnumerationLimits& limits) {
  sig.requireCovers(f);
  sig.requireCovers(g);
  // Atoms occurring in neither formula cannot influence any reduct, so the
  // enumeration runs over the occurring atoms only.
  auto relevant = std::make_shared<const Signature>(Signature::of(f).merged(Signature::of(g)));
  requireWithinLimit(relevant->size(), limits.maxAtoms, ErrorCode::SignatureTooLarge);
  CompiledFormula cf(f, *relevant);
  CompiledFormula cg(g, *relevant);
  std::uint64_t total = std::uint64_t{1} << relevant->size();

  struct Found {
    std::uint64_t i = 0, j = 0;
    bool firstSatisfied = false;
  };
  unsigned jobs = std::max(1u, limits.jobs);
  std::vector<std::optional<Found>> perWorker(jobs);
  std::size_t block = (total + jobs - 1) / jobs;

  parallelFor(jobs, jobs, [&](std::size_t wb, std::size_t we) {
    for (std::size_t w = wb; w < we; ++w) {
      auto wsf = cf.workspace();
      auto wsg = cg.workspace();
      std::uint64_t begin = w * block;
      std::uint64_t end = std::min<std::uint64_t>(total, begin + block);
      for (std::uint64_t i = begin; i < end && !perWorker[w]; ++i) {
        bool tf = cf.prepare(i, wsf);
        bool tg = cg.prepare(i, wsg);
        if (tf != tg) {
          perWorker[w] = Found{i, i, tf};
          break;
        }
        // A reduct with respect to an interpretation that falsifies the
        // formula is unsatisfiable, so only common models need the inner loop.
        if (!tf) continue;
        SubsetLanes subsets(i, relevant->size());
        for (std::size_t chunk = 0; chunk < subsets.chunkCount(); ++chunk) {
          auto lanes = subsets.lanes(chunk);
          std::uint64_t a = cf.reductWord(lanes, wsf);
          std::uint64_t b = cg.reductWord(lanes, wsg);
          std::uint64_t diff = (a ^ b) & subsets.validLanes();
          if (diff) {
            auto bit = static_cast<std::uint64_t>(std::countr_zero(diff));
            perWorker[w] = Found{i, subsets.subsetMask(chunk * 64 + bit), ((a >> bit) & 1u) != 0};
            break;
          }
        }
      }
    }
  });

  for (const auto& found : perWorker) {
    if (!found) continue;
    // Report over the caller's signature.
    auto full = std::make_shared<const Signature>(sig);
    auto expand = [&](std::uint64_t mask) {
      std::vector<std::string> names;
      for (std::size_t k = 0; k < relevant->size(); ++k)
        if ((mask >> k) & 1u) names.push_back((*relevant)[k]);
      return Interpretation(full, names);
    };
    return SeCounterexample{expand(found->i), expand(found->j), found->firstSatisfied};
  }
  return std::nullopt;
}

bool stronglyEquivalent(const Formula& f, const Formula& g, const Signature& sig, const EnumerationLimits& limits) {
  return !seCounterexample(f, g, sig, limits).has_value();
}

bool sameStableModels(const Theory& a, const Theory& b, const EnumerationLimits& limits) {
  if (!(*a.signature == *b.signature))
    throw Error(ErrorCode::InvalidArgument, "theories must share a signature");
  auto ma = stableModels(a, limits).models;
  auto mb = stableModels(b, limits).models;
  return ma == mb;
}

}  // namespace infinitary
