#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "infinitary/error.hpp"
#include "infinitary/library.hpp"
#include "infinitary/program.hpp"
#include "infinitary/proof_io.hpp"
#include "infinitary/reduct.hpp"
#include "infinitary/stable.hpp"
#include "infinitary/syntax.hpp"
#include "infinitary/transform.hpp"

namespace py = pybind11;
using namespace infinitary;

namespace {

SystemLevel levelArg(const std::string& name) {
  auto level = levelFromName(name);
  if (!level) throw Error(ErrorCode::InvalidArgument, "unknown level '" + name + "'");
  return *level;
}

std::vector<std::vector<std::string>> modelList(const StableModelReport& r) {
  std::vector<std::vector<std::string>> out;
  for (const auto& m : r.models) out.push_back(m.trueAtoms());
  return out;
}

Signature signatureFor(const Formula& f, const Formula& g, const std::vector<std::string>& extra) {
  return Signature::of(f).merged(Signature::of(g)).merged(Signature(extra));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Infinitary propositional formulas, stable models, proofs and aggregate grounding";

  py::register_exception<Error>(m, "InfinitaryError", PyExc_ValueError);

  py::class_<Formula>(m, "Formula")
      .def(py::init([](const std::string& text) { return parseFormula(text); }), py::arg("text"))
      .def_property_readonly("rank", &Formula::rank)
      .def_property_readonly("atoms", [](const Formula& f) { return atoms(f); })
      .def("__str__", [](const Formula& f) { return printFormula(f); })
      .def("__repr__", [](const Formula& f) { return "Formula('" + printFormula(f) + "')"; })
      .def("__eq__", [](const Formula& a, const Formula& b) { return a == b; })
      .def("__hash__", [](const Formula& f) { return f.hash(); });

  m.def("parse_formula", [](const std::string& text) { return parseFormula(text); }, py::arg("text"));
  m.def("print_formula", &printFormula, py::arg("formula"));

  m.def(
      "reduct",
      [](const Formula& f, const std::vector<std::string>& trueAtoms) {
        auto sig = std::make_shared<const Signature>(Signature::of(f).merged(Signature(trueAtoms)));
        return reduct(f, Interpretation(sig, trueAtoms));
      },
      py::arg("formula"), py::arg("true_atoms"));

  m.def(
      "stable_models",
      [](const std::vector<Formula>& theory, const std::vector<std::string>& extraAtoms, std::size_t maxAtoms) {
        std::vector<Formula> all = theory;
        Signature sig = Signature(atoms(all)).merged(Signature(extraAtoms));
        EnumerationLimits limits;
        limits.maxAtoms = maxAtoms;
        return modelList(stableModels(Theory(theory, sig), limits));
      },
      py::arg("theory"), py::arg("extra_atoms") = std::vector<std::string>{}, py::arg("max_atoms") = 20);

  m.def("is_tautological", [](const Formula& f) { return isTautological(f); }, py::arg("formula"));

  m.def(
      "strongly_equivalent",
      [](const Formula& f, const Formula& g, const std::vector<std::string>& extraAtoms) {
        return stronglyEquivalent(f, g, signatureFor(f, g, extraAtoms));
      },
      py::arg("f"), py::arg("g"), py::arg("extra_atoms") = std::vector<std::string>{});

  m.def(
      "se_counterexample",
      [](const Formula& f, const Formula& g) -> std::optional<py::tuple> {
        auto c = seCounterexample(f, g, signatureFor(f, g, {}));
        if (!c) return std::nullopt;
        return py::make_tuple(c->there.trueAtoms(), c->here.trueAtoms(), c->firstSatisfied);
      },
      py::arg("f"), py::arg("g"));

  m.def(
      "check_proof",
      [](const std::string& script, const std::optional<std::string>& level) {
        auto parsed = parseProofScript(script);
        SystemLevel l = level ? levelArg(*level) : parsed.level.value_or(SystemLevel::Basic);
        std::vector<std::string> messages;
        for (const auto& d : checkProof(parsed.proof, l).diagnostics)
          messages.push_back("step " + std::to_string(d.step + 1) + ": " + std::string(diagnosticName(d.kind)) + ": " +
                             d.message);
        return messages;
      },
      py::arg("script"), py::arg("level") = std::nullopt,
      "Diagnostics for a proof script; an empty list means the proof checks.");

  m.def(
      "library",
      [](const std::string& name, std::optional<int> size, std::optional<int> width) {
        auto t = theoremLibrary(name, {size, width});
        return printProofScript(t.proof, t.level);
      },
      py::arg("name"), py::arg("size") = std::nullopt, py::arg("width") = std::nullopt);

  m.def("library_names", [] {
    std::vector<std::string> names;
    for (const auto& info : theoremCatalog()) names.push_back(info.name);
    return names;
  });

  m.def(
      "synthesize",
      [](const Formula& f, std::size_t maxAtoms) { return printProofScript(kalmarSynthesize(f, maxAtoms), SystemLevel::BasicILEM); },
      py::arg("formula"), py::arg("max_atoms") = 10);

  m.def(
      "transform_reduct",
      [](const std::string& script, const std::vector<std::string>& trueAtoms) {
        auto parsed = parseProofScript(script);
        SystemLevel level = parsed.level.value_or(SystemLevel::Basic);
        std::vector<Formula> all;
        for (const auto& s : parsed.proof.steps) {
          all.push_back(s.sequent.conclusion);
          all.insert(all.end(), s.sequent.assumptions.begin(), s.sequent.assumptions.end());
        }
        auto sig = std::make_shared<const Signature>(Signature(atoms(all)).merged(Signature(trueAtoms)));
        Interpretation i(sig, trueAtoms);
        if (level == SystemLevel::Basic) return printProofScript(lemma2Transform(parsed.proof, i), SystemLevel::Basic);
        return printProofScript(lemma3Transform(parsed.proof, i), SystemLevel::ClassicalExtended);
      },
      py::arg("script"), py::arg("true_atoms"));

  m.def(
      "translate_aggregate",
      [](std::optional<std::size_t> lower, std::optional<std::size_t> upper, const std::vector<Formula>& domain) {
        return translateAggregate(lower, upper, domain);
      },
      py::arg("lower"), py::arg("upper"), py::arg("domain"));

  m.def(
      "ground",
      [](const std::string& program, std::size_t depth) {
        auto t = groundAtDepth(parseProgram(program), depth);
        return std::vector<Formula>(t.formulas.begin(), t.formulas.end());
      },
      py::arg("program"), py::arg("depth") = 2);

  m.def(
      "solve",
      [](const std::string& program, std::size_t depth) { return modelList(solve(parseProgram(program), depth)); },
      py::arg("program"), py::arg("depth") = 2);
}
