#include "infinitary/proof_io.hpp"

#include "infinitary/error.hpp"
#include "lexer.hpp"

namespace infinitary {

namespace {

using detail::FormulaParser;
using detail::TokenCursor;
using detail::TokenKind;

Sequent readSequent(TokenCursor& cur, FormulaParser& parser) {
  std::vector<Formula> assumptions;
  if (!cur.accept("|-")) {
    assumptions.push_back(parser.parse());
    while (cur.accept(",")) assumptions.push_back(parser.parse());
    cur.expect("|-");
  }
  Formula conclusion = parser.parse();
  return Sequent(std::move(assumptions), std::move(conclusion));
}

std::size_t readNumber(TokenCursor& cur) {
  if (cur.peek().kind != TokenKind::Number) cur.fail("a step number");
  return std::stoull(cur.next().text);
}

}  // namespace

Sequent parseSequent(std::string_view text, const ParseOptions& options) {
  TokenCursor cur(detail::tokenize(text));
  FormulaParser parser(cur, options);
  Sequent s = readSequent(cur, parser);
  cur.expectEnd();
  return s;
}

std::string printSequent(const Sequent& s) {
  std::string out;
  for (std::size_t k = 0; k < s.assumptions.size(); ++k) {
    if (k) out += ", ";
    out += printFormula(s.assumptions[k]);
  }
  out += out.empty() ? "|- " : " |- ";
  out += printFormula(s.conclusion);
  return out;
}

ProofScript parseProofScript(std::string_view text, const ParseOptions& options) {
  ProofScript script;
  std::size_t lineNo = 1;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    std::size_t end = text.find('\n', begin);
    if (end == std::string_view::npos) end = text.size();
    TokenCursor cur(detail::tokenize(text.substr(begin, end - begin), {'#', lineNo}));
    begin = end + 1;
    ++lineNo;
    if (cur.atEnd()) continue;

    if (cur.acceptWord("level")) {
      const auto& t = cur.peek();
      auto level = levelFromName(t.text);
      if (t.kind == TokenKind::End || !level) cur.fail("a system level");
      if (script.level || !script.proof.steps.empty())
        throw SyntaxError(t.line, t.column, "level must be declared once, before the steps");
      cur.next();
      cur.expectEnd();
      script.level = level;
      continue;
    }

    cur.expectWord("step");
    const auto& numTok = cur.peek();
    std::size_t index = readNumber(cur);
    if (index != script.proof.steps.size() + 1)
      throw SyntaxError(numTok.line, numTok.column,
                        "expected step " + std::to_string(script.proof.steps.size() + 1) + ", found " +
                            std::to_string(index));
    FormulaParser parser(cur, options);
    Sequent sequent = readSequent(cur, parser);
    cur.expectWord("by");
    const auto& ruleTok = cur.peek();
    if (ruleTok.kind != TokenKind::Var && ruleTok.kind != TokenKind::Ident) cur.fail("a rule name");
    std::string name = cur.next().text;
    std::optional<Rule> rule = name == "C" ? std::optional<Rule>(Rule::DisjE) : ruleFromName(name);
    if (!rule) throw SyntaxError(ruleTok.line, ruleTok.column, "unknown rule '" + name + "'");

    Step step{std::move(sequent), *rule, {}, {}};
    if (cur.acceptWord("from")) {
      do {
        const auto& pt = cur.peek();
        std::size_t p = readNumber(cur);
        if (p == 0 || p >= index)
          throw SyntaxError(pt.line, pt.column, "premise " + std::to_string(p) + " must name an earlier step");
        step.premises.push_back(p - 1);
      } while (cur.accept(","));
    }
    if (name == "C" && step.premises.size() != 1)
      throw SyntaxError(ruleTok.line, ruleTok.column, "C takes exactly one premise");
    if (cur.acceptWord("with")) {
      do {
        step.params.push_back(parser.parseGroup());
      } while (cur.isSymbol("["));
    }
    cur.expectEnd();
    script.proof.steps.push_back(std::move(step));
  }
  return script;
}

std::string printProofScript(const Proof& proof, std::optional<SystemLevel> level) {
  std::string out;
  if (level) {
    out += "level ";
    out += levelName(*level);
    out += '\n';
  }
  for (std::size_t i = 0; i < proof.steps.size(); ++i) {
    const Step& s = proof.steps[i];
    out += "step " + std::to_string(i + 1) + ' ' + printSequent(s.sequent) + " by ";
    out += ruleName(s.rule);
    if (!s.premises.empty()) {
      out += " from ";
      for (std::size_t k = 0; k < s.premises.size(); ++k) {
        if (k) out += ',';
        out += std::to_string(s.premises[k] + 1);
      }
    }
    if (!s.params.empty()) {
      out += " with";
      for (const auto& g : s.params) {
        out += " [";
        for (std::size_t k = 0; k < g.size(); ++k) {
          if (k) out += "; ";
          out += printFormula(g[k]);
        }
        out += ']';
      }
    }
    out += '\n';
  }
  return out;
}

}  // namespace infinitary
