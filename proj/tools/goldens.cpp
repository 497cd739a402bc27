#include <fstream>

#include "cli.hpp"
#include "infinitary/error.hpp"
#include "infinitary/library.hpp"
#include "infinitary/program.hpp"
#include "infinitary/proof_io.hpp"
#include "infinitary/syntax.hpp"

namespace infinitary::cli {

namespace fs = std::filesystem;

namespace {

constexpr const char* kIntroProgram =
    "% A program whose grounding needs an infinite disjunction without the depth bound.\n"
    "p(f(a)).\n"
    "q :- 1{p(X)}.\n";

struct Sized {
  const char* file;
  const char* theorem;
  int size;
  int width;
};

// Instances exercised by the acceptance suite.
constexpr Sized kSized[] = {
    {"example1_n2", "example1", 2, 0},   {"example1_n3", "example1", 3, 0},
    {"example1_n4", "example1", 4, 0},   {"example2_n1", "example2", 1, 0},
    {"example2_n2", "example2", 2, 0},   {"example2_n3", "example2", 3, 0},
    {"demorgan1_n3", "demorgan1", 3, 0}, {"demorgan2_n3", "demorgan2", 3, 0},
    {"distributivity1_2x2", "distributivity1", 2, 2}, {"distributivity2_2x2", "distributivity2", 2, 2},
    {"iwem_n1", "iwem", 1, 0},           {"iwem_n2", "iwem", 2, 0},
    {"dist_ioo_n2", "dist_ioo", 2, 0},   {"example7_n2", "example7", 2, 0},
    {"example7_converse_n2", "example7_converse", 2, 0},
};

void write(const fs::path& path, const std::string& text, std::vector<fs::path>& written) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IOError, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorCode::IOError, "write failed for " + path.string());
  written.push_back(path);
}

std::string proofFile(const LibraryTheorem& t) { return printProofScript(t.proof, t.level); }

}  // namespace

std::vector<fs::path> emitGoldens(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::IOError, "cannot create " + dir.string() + ": " + ec.message());

  std::vector<fs::path> written;
  for (const auto& info : theoremCatalog())
    write(dir / (info.name + ".proof"), proofFile(theoremLibrary(info.name)), written);
  for (const auto& s : kSized) {
    SizeParams params;
    params.size = s.size;
    if (s.width) params.width = s.width;
    write(dir / (std::string(s.file) + ".proof"), proofFile(theoremLibrary(s.theorem, params)), written);
  }

  // Both sides of the Example 2 biconditional at |A| = 3, for se-check.
  auto ex2 = theoremLibrary("example2", {3, std::nullopt}).theorem;
  auto sides = asBiconditional(ex2);
  write(dir / "example2_left.fml", printFormula(sides->first) + "\n", written);
  write(dir / "example2_right.fml", printFormula(sides->second) + "\n", written);
  write(dir / "atom_p.fml", "p\n", written);
  write(dir / "double_negation_p.fml", "not not p\n", written);

  write(dir / "intro.lp", kIntroProgram, written);
  std::string expected;
  for (const auto& m : solve(parseProgram(kIntroProgram), 2).models) {
    std::string line;
    for (const auto& a : m.trueAtoms()) line += (line.empty() ? "" : " ") + a;
    expected += line + "\n";
  }
  write(dir / "intro.lp.expected", expected, written);

  write(dir / "aggregate_one.lp", "p(a,b).\np(b,c).\nq(X) :- 1{p(X,Y)}.\n", written);
  write(dir / "aggregate_two.lp", "p(a,b).\np(a,c).\nq :- 2{p(a,Y)}.\n", written);
  write(dir / "pairs_two.lp", "p(a,b).\np(a,c).\nq(X) :- p(X,Y1), p(X,Y2), Y1 != Y2.\n", written);
  return written;
}

}  // namespace infinitary::cli
