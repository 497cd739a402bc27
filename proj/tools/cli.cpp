#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "infinitary/error.hpp"
#include "infinitary/library.hpp"
#include "infinitary/program.hpp"
#include "infinitary/proof_io.hpp"
#include "infinitary/random.hpp"
#include "infinitary/reduct.hpp"
#include "infinitary/stable.hpp"
#include "infinitary/syntax.hpp"
#include "infinitary/transform.hpp"

namespace infinitary::cli {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kFalse = 1, kUsage = 2, kLimit = 3 };

int exitFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::SignatureTooLarge:
    case ErrorCode::AtomLimitExceeded:
    case ErrorCode::SizeOutOfRange:
      return kLimit;
    case ErrorCode::NotTautological:
      return kFalse;
    default:
      return kUsage;
  }
}

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IOError, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void writeFile(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IOError, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorCode::IOError, "write failed for " + path.string());
}

std::string digest(const std::vector<std::string>& inputs) {
  std::uint64_t h = 1469598103934665603ull;
  for (const auto& s : inputs) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
    h ^= 0xff;
    h *= 1099511628211ull;
  }
  std::ostringstream o;
  o << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
  return o.str();
}

std::vector<std::string> splitList(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::string modelLine(const Interpretation& i) {
  std::string out;
  for (const auto& a : i.trueAtoms()) out += (out.empty() ? "" : " ") + a;
  return out.empty() ? "{}" : out;
}

json atomList(const Interpretation& i) { return i.trueAtoms(); }

struct Options {
  std::optional<long long> size;
  std::optional<int> width;
  std::size_t depth = 2;
  std::size_t maxAtoms = 20;
  unsigned jobs = 1;
  std::uint64_t seed = kDefaultSeed;
  std::string records;
  bool recordsRequested = false;
  std::string level;
  std::string signature;
  std::string interp;
  std::string output;
  bool candidates = false;

  ParseOptions parse() const { return {size}; }
  EnumerationLimits limits() const { return {maxAtoms, jobs}; }
};

struct Outcome {
  int code = kOk;
  std::vector<std::string> inputs;
  json payload = json::object();
};

std::optional<SystemLevel> levelOption(const Options& o) {
  if (o.level.empty()) return std::nullopt;
  auto l = levelFromName(o.level);
  if (!l) throw Error(ErrorCode::InvalidArgument, "unknown level '" + o.level + "'");
  return l;
}

Formula conjunctionOf(const std::vector<Formula>& fs) { return fs.size() == 1 ? fs.front() : conj(fs); }

Signature signatureFor(const Options& o, const std::vector<Formula>& fs) {
  Signature sig = Signature::of(fs);
  return sig.merged(Signature(splitList(o.signature)));
}

json diagnosticsJson(const CheckResult& r) {
  json out = json::array();
  for (const auto& d : r.diagnostics)
    out.push_back({{"step", d.step + 1}, {"kind", std::string(diagnosticName(d.kind))}, {"message", d.message}});
  return out;
}

// Emits proof text to --output or the text stream.
void deliverProof(const Options& o, const std::string& text, std::ostream& human) {
  if (o.output.empty()) human << text;
  else writeFile(o.output, text);
}

Outcome checkProofVerb(const Options& o, const std::string& path, std::ostream& human) {
  Outcome r;
  std::string text = readFile(path);
  r.inputs.push_back(text);
  auto script = parseProofScript(text, o.parse());
  SystemLevel level = levelOption(o).value_or(script.level.value_or(SystemLevel::Basic));
  auto result = checkProof(script.proof, level);
  r.payload = {{"level", std::string(levelName(level))}, {"steps", script.proof.steps.size()}, {"valid", result.ok()}};
  if (result.ok()) {
    std::string concl = printSequent(script.proof.conclusion());
    r.payload["conclusion"] = concl;
    human << "valid: " << script.proof.steps.size() << " steps at level " << levelName(level) << "\n";
    human << "proves " << concl << "\n";
  } else {
    for (const auto& d : result.diagnostics)
      human << "step " << d.step + 1 << ": " << diagnosticName(d.kind) << ": " << d.message << "\n";
    human << "invalid: " << result.diagnostics.size() << " diagnostic(s)\n";
    r.code = kFalse;
  }
  r.payload["diagnostics"] = diagnosticsJson(result);
  return r;
}

json reportJson(const StableModelReport& rep, bool withCandidates) {
  json models = json::array();
  for (const auto& m : rep.models) models.push_back(atomList(m));
  json out = {{"signature", rep.signature->atoms()}, {"models", models}, {"candidates_examined", rep.candidatesExamined}};
  if (withCandidates) {
    json cands = json::array();
    for (const auto& c : rep.candidates) {
      json w = nullptr;
      if (c.witness) w = atomList(Interpretation::fromMask(rep.signature, *c.witness));
      cands.push_back({{"interpretation", atomList(Interpretation::fromMask(rep.signature, c.mask))},
                       {"satisfies_reduct", c.satisfiesReduct},
                       {"minimal", c.minimal},
                       {"witness", w}});
    }
    out["candidates"] = cands;
  }
  return out;
}

void printModels(const StableModelReport& rep, std::ostream& human, std::ostream& err) {
  for (const auto& m : rep.models) human << modelLine(m) << "\n";
  err << rep.models.size() << " stable model(s) over " << rep.signature->size() << " atoms, "
      << rep.candidatesExamined << " candidates examined\n";
}

Outcome stableModelsVerb(const Options& o, const std::string& path, std::ostream& human, std::ostream& err) {
  Outcome r;
  std::string text = readFile(path);
  r.inputs.push_back(text);
  auto fs = parseTheory(text, o.parse());
  Theory t(fs, signatureFor(o, fs));
  auto rep = stableModels(t, o.limits());
  printModels(rep, human, err);
  r.payload = reportJson(rep, o.candidates);
  return r;
}

Outcome seCheckVerb(const Options& o, const std::string& a, const std::string& b, std::ostream& human) {
  Outcome r;
  std::string ta = readFile(a), tb = readFile(b);
  r.inputs = {ta, tb};
  Formula f = conjunctionOf(parseTheory(ta, o.parse()));
  Formula g = conjunctionOf(parseTheory(tb, o.parse()));
  std::vector<Formula> both{f, g};
  Signature sig = signatureFor(o, both);
  auto cx = seCounterexample(f, g, sig, o.limits());
  r.payload = {{"signature", sig.atoms()}, {"strongly_equivalent", !cx.has_value()}};
  if (!cx) {
    human << "strongly equivalent over " << sig.size() << " atoms\n";
    return r;
  }
  r.code = kFalse;
  r.payload["there"] = atomList(cx->there);
  r.payload["here"] = atomList(cx->here);
  r.payload["satisfied_by"] = cx->firstSatisfied ? "first" : "second";
  human << "not strongly equivalent: J = " << cx->here.toString() << " satisfies the reduct under I = "
        << cx->there.toString() << " of the " << (cx->firstSatisfied ? "first" : "second") << " formula only\n";
  return r;
}

Outcome reductVerb(const Options& o, const std::string& path, std::ostream& human) {
  Outcome r;
  std::string text = readFile(path);
  r.inputs.push_back(text);
  auto fs = parseTheory(text, o.parse());
  auto trueAtoms = splitList(o.interp);
  Signature sig = signatureFor(o, fs).merged(Signature(trueAtoms));
  Interpretation i(std::make_shared<const Signature>(sig), trueAtoms);
  json out = json::array();
  for (const auto& f : fs) {
    std::string line = printFormula(reduct(f, i));
    human << line << "\n";
    out.push_back(line);
  }
  r.payload = {{"interpretation", atomList(i)}, {"reducts", out}};
  return r;
}

json universeJson(const Theory& t, const Program& p, std::size_t depth) {
  json universe = json::array();
  bool ground = std::all_of(p.rules.begin(), p.rules.end(), [](const auto& rule) { return rule.globalVars.empty() && rule.localVars.empty(); });
  try {
    for (const auto& term : herbrandUniverse(p, depth).terms) universe.push_back(term.toString());
  } catch (const Error& e) {
    if (!ground || e.code() != ErrorCode::NoConstants) throw;
  }
  json formulas = json::array();
  for (const auto& f : t.formulas) formulas.push_back(printFormula(f));
  return {{"depth", depth}, {"universe", universe}, {"signature", t.signature->atoms()}, {"formulas", formulas}};
}

Outcome groundVerb(const Options& o, const std::string& path, const std::string& emit, std::ostream& human) {
  Outcome r;
  std::string text = readFile(path);
  r.inputs.push_back(text);
  auto program = parseProgram(text);
  Theory t = groundAtDepth(program, o.depth);
  r.payload = universeJson(t, program, o.depth);
  if (emit == "records") human << r.payload.dump(2) << "\n";
  else human << printTheory(t.formulas);
  return r;
}

Outcome solveVerb(const Options& o, const std::string& path, std::ostream& human, std::ostream& err) {
  Outcome r;
  std::string text = readFile(path);
  r.inputs.push_back(text);
  auto rep = solve(parseProgram(text), o.depth, o.limits());
  printModels(rep, human, err);
  r.payload = reportJson(rep, o.candidates);
  r.payload["depth"] = o.depth;
  return r;
}

Outcome translateVerb(const Options& o, std::optional<std::size_t> lower, std::optional<std::size_t> upper,
                      const std::string& domainText, std::ostream& human) {
  Outcome r;
  r.inputs = {domainText, lower ? std::to_string(*lower) : "-", upper ? std::to_string(*upper) : "-"};
  if (!lower && !upper) throw Error(ErrorCode::InvalidArgument, "give --lower, --upper or both");
  if (lower && upper && *lower > *upper) throw Error(ErrorCode::InvalidArgument, "--lower exceeds --upper");
  Formula wrapped = parseFormula("and{" + domainText + "}", o.parse());
  std::vector<Formula> domain(wrapped.children().begin(), wrapped.children().end());
  for (const auto& d : domain)
    if (!d.isAtom()) throw Error(ErrorCode::InvalidArgument, "domain element " + printFormula(d) + " is not an atom");
  Formula f = translateAggregate(lower, upper, domain);
  human << printFormula(f) << "\n";
  r.payload = {{"formula", printFormula(f)}, {"conjuncts", f.children().size()}};
  return r;
}

Outcome synthesizeVerb(const Options& o, bool maxAtomsGiven, const std::string& path, std::ostream& human) {
  Outcome r;
  std::string text = readFile(path);
  r.inputs.push_back(text);
  Formula f = conjunctionOf(parseTheory(text, o.parse()));
  Proof p = kalmarSynthesize(f, maxAtomsGiven ? o.maxAtoms : 10);
  deliverProof(o, printProofScript(p, SystemLevel::BasicILEM), human);
  r.payload = {{"formula", printFormula(f)}, {"steps", p.steps.size()}, {"level", "BasicILEM"}};
  return r;
}

Outcome libraryVerb(const Options& o, const std::string& name, bool list, std::ostream& human) {
  Outcome r;
  r.inputs = {name, o.size ? std::to_string(*o.size) : "-", o.width ? std::to_string(*o.width) : "-"};
  if (list) {
    json names = json::array();
    for (const auto& t : theoremCatalog()) {
      human << std::left << std::setw(18) << t.name << " " << std::setw(9) << levelName(t.level) << " ";
      if (t.sized) human << "size " << t.minSize << ".." << t.maxSize << " (default " << t.defaultSize << ")  ";
      human << t.summary << "\n";
      names.push_back(t.name);
    }
    r.payload = {{"theorems", names}};
    return r;
  }
  if (name.empty()) throw Error(ErrorCode::InvalidArgument, "library needs a theorem name or --list");
  SizeParams params;
  if (o.size) params.size = static_cast<int>(std::clamp<long long>(*o.size, -1, 1'000'000));
  params.width = o.width;
  auto t = theoremLibrary(name, params);
  deliverProof(o, printProofScript(t.proof, t.level), human);
  r.payload = {{"name", t.name}, {"level", std::string(levelName(t.level))}, {"steps", t.proof.steps.size()},
               {"theorem", printFormula(t.theorem)}};
  return r;
}

Outcome transformVerb(const Options& o, const std::string& path, std::ostream& human) {
  Outcome r;
  std::string text = readFile(path);
  r.inputs = {text, o.interp};
  auto script = parseProofScript(text, o.parse());
  SystemLevel level = levelOption(o).value_or(script.level.value_or(SystemLevel::Basic));
  auto trueAtoms = splitList(o.interp);
  const auto& concl = script.proof.conclusion();
  std::vector<Formula> all(concl.assumptions.begin(), concl.assumptions.end());
  all.push_back(concl.conclusion);
  for (const auto& s : script.proof.steps) all.push_back(s.sequent.conclusion);
  Signature sig = signatureFor(o, all).merged(Signature(trueAtoms));
  Interpretation i(std::make_shared<const Signature>(sig), trueAtoms);
  Proof out;
  SystemLevel target;
  if (level == SystemLevel::Basic) {
    out = lemma2Transform(script.proof, i);
    target = SystemLevel::Basic;
  } else if (level == SystemLevel::Extended) {
    out = lemma3Transform(script.proof, i);
    target = SystemLevel::ClassicalExtended;
  } else {
    throw Error(ErrorCode::InvalidArgument, "transform-reduct accepts Basic or Extended proofs, not " + std::string(levelName(level)));
  }
  deliverProof(o, printProofScript(out, target), human);
  r.payload = {{"interpretation", atomList(i)}, {"level", std::string(levelName(target))}, {"steps", out.steps.size()},
               {"conclusion", printSequent(out.conclusion())}};
  return r;
}

Outcome goldensVerb(const std::string& dir, std::ostream& human) {
  Outcome r;
  r.inputs = {dir};
  json files = json::array();
  for (const auto& p : emitGoldens(dir)) {
    human << p.string() << "\n";
    files.push_back(p.filename().string());
  }
  r.payload = {{"files", files}};
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stable models, proofs and grounding for infinitary propositional formulas", "infinitary"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "key=value configuration file; flags override it");

  Options o;
  app.add_option("--size", o.size, "Family size n for ..n bounds and library theorems");
  app.add_option("--width", o.width, "Formulas per family for the distributivity theorems");
  app.add_option("--depth", o.depth, "Herbrand depth bound")->check(CLI::PositiveNumber);
  auto* maxAtoms = app.add_option("--max-atoms", o.maxAtoms, "Largest signature to enumerate");
  app.add_option("--jobs", o.jobs, "Parallel enumeration workers")->check(CLI::Range(1u, 256u));
  app.add_option("--seed", o.seed, "Seed recorded in the run report");
  auto* records = app.add_option("--records", o.records, "Write the machine-readable report to FILE (stdout if no FILE)")
                      ->expected(0, 1);
  app.add_option("--level", o.level, "System level: Basic, BasicILEM, Extended, ClassicalExtended");
  app.add_option("--signature", o.signature, "Extra atoms, comma separated");
  app.add_option("--interp", o.interp, "True atoms of the interpretation, comma separated");
  app.add_option("-o,--output", o.output, "Output file for generated proofs");
  app.add_flag("--candidates", o.candidates, "Include every examined candidate in the records");

  std::string file1, file2, name, emit = "formulas";
  std::optional<std::size_t> lower, upper;
  std::string domain;
  bool list = false;

  auto* checkCmd = app.add_subcommand("check-proof", "Check a proof script");
  checkCmd->add_option("proof", file1, "Proof script")->required();
  auto* stableCmd = app.add_subcommand("stable-models", "Enumerate the stable models of a theory file");
  stableCmd->add_option("theory", file1, "Theory file, one formula per line")->required();
  std::string reportFormat = "text";
  stableCmd->add_option("--report-format", reportFormat, "text, or records: the report with every candidate on stdout")
      ->check(CLI::IsMember({"text", "records"}));
  auto* seCmd = app.add_subcommand("se-check", "Decide strong equivalence of two formula files");
  seCmd->add_option("first", file1)->required();
  seCmd->add_option("second", file2)->required();
  auto* reductCmd = app.add_subcommand("reduct", "Print the reduct of each formula under --interp");
  reductCmd->add_option("theory", file1)->required();
  auto* groundCmd = app.add_subcommand("ground", "Ground a program to formulas");
  groundCmd->add_option("program", file1)->required();
  groundCmd->add_option("--emit", emit, "formulas or records")->check(CLI::IsMember({"formulas", "records"}));
  auto* solveCmd = app.add_subcommand("solve", "Ground a program and enumerate its stable models");
  solveCmd->add_option("program", file1)->required();
  auto* translateCmd = app.add_subcommand("translate-aggregate", "Translate a cardinality aggregate");
  translateCmd->add_option("--lower", lower);
  translateCmd->add_option("--upper", upper);
  translateCmd->add_option("--domain", domain, "Ground atoms separated by ';' (family notation allowed)")->required();
  auto* synthCmd = app.add_subcommand("synthesize", "Build a BasicILEM proof of a tautology");
  synthCmd->add_option("formula", file1)->required();
  auto* libraryCmd = app.add_subcommand("library", "Print a library theorem as a proof script");
  libraryCmd->add_option("name", name);
  libraryCmd->add_flag("--list", list, "List the catalog");
  auto* transformCmd = app.add_subcommand("transform-reduct", "Map a proof of S to a proof of its reduct under --interp");
  transformCmd->add_option("proof", file1)->required();
  auto* goldensCmd = app.add_subcommand("emit-goldens", "Regenerate golden artifacts");
  goldensCmd->add_option("dir", file1)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  auto* cmd = app.get_subcommands().front();
  std::string verb = cmd->get_name();
  bool wantRecords = records->count() > 0 || reportFormat == "records";
  if (reportFormat == "records") {
    o.records.clear();
    o.candidates = true;
  }
  bool toStdout = wantRecords && (o.records.empty() || o.records == "-");
  std::ostringstream discard;
  std::ostream& human = toStdout ? static_cast<std::ostream&>(discard) : out;

  auto start = std::chrono::steady_clock::now();
  Outcome result;
  std::string failure;
  try {
    if (cmd == checkCmd) result = checkProofVerb(o, file1, human);
    else if (cmd == stableCmd) result = stableModelsVerb(o, file1, human, err);
    else if (cmd == seCmd) result = seCheckVerb(o, file1, file2, human);
    else if (cmd == reductCmd) result = reductVerb(o, file1, human);
    else if (cmd == groundCmd) result = groundVerb(o, file1, emit, human);
    else if (cmd == solveCmd) result = solveVerb(o, file1, human, err);
    else if (cmd == translateCmd) result = translateVerb(o, lower, upper, domain, human);
    else if (cmd == synthCmd) result = synthesizeVerb(o, maxAtoms->count() > 0, file1, human);
    else if (cmd == libraryCmd) result = libraryVerb(o, name, list, human);
    else if (cmd == transformCmd) result = transformVerb(o, file1, human);
    else result = goldensVerb(file1, human);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    result.code = exitFor(e.code());
    failure = e.what();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    result.code = kUsage;
    failure = e.what();
  }

  if (wantRecords) {
    double elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    static const char* const outcomes[] = {"ok", "false", "usage-error", "resource-limit"};
    json report = {{"verb", verb},
                   {"inputs_digest", digest(result.inputs)},
                   {"outcome", outcomes[result.code]},
                   {"elapsed_ms", std::round(elapsed * 1000) / 1000},
                   {"seed", o.seed},
                   {"payload", result.payload}};
    if (!failure.empty()) report["error"] = failure;
    if (toStdout) {
      out << report.dump(2) << "\n";
    } else {
      try {
        writeFile(o.records, report.dump(2) + "\n");
      } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
      }
    }
  }
  return result.code;
}

}  // namespace infinitary::cli
