#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "infinitary/error.hpp"
#include "infinitary/formula.hpp"
#include "infinitary/syntax.hpp"

namespace infinitary::detail {

enum class TokenKind { Ident, Var, Number, Symbol, Directive, End };

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

struct LexOptions {
  char comment = '#';
  std::size_t firstLine = 1;
};

std::vector<Token> tokenize(std::string_view text, const LexOptions& options = {});

class TokenCursor {
 public:
  explicit TokenCursor(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = pos_ + ahead;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }
  const Token& next() {
    const Token& t = peek();
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }
  bool atEnd() const { return peek().kind == TokenKind::End; }
  bool isSymbol(std::string_view s, std::size_t ahead = 0) const {
    return peek(ahead).kind == TokenKind::Symbol && peek(ahead).text == s;
  }
  bool isWord(std::string_view s) const { return peek().kind == TokenKind::Ident && peek().text == s; }
  bool accept(std::string_view sym) {
    if (!isSymbol(sym)) return false;
    next();
    return true;
  }
  bool acceptWord(std::string_view w) {
    if (!isWord(w)) return false;
    next();
    return true;
  }
  void expect(std::string_view sym) {
    if (!accept(sym)) fail("'" + std::string(sym) + "'");
  }
  void expectWord(std::string_view w) {
    if (!acceptWord(w)) fail("'" + std::string(w) + "'");
  }
  void expectEnd() {
    if (!atEnd()) fail("end of input");
  }
  [[noreturn]] void fail(const std::string& expected) const;

  std::size_t position() const { return pos_; }
  void seek(std::size_t pos) { pos_ = pos; }
  const std::vector<Token>& tokens() const { return toks_; }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

std::string describe(const Token& t);

// Recursive-descent formula parser over a shared token cursor, so that proof
// scripts and sequents can embed formulas.
class FormulaParser {
 public:
  FormulaParser(TokenCursor& cursor, ParseOptions options) : cur_(cursor), options_(std::move(options)) {}

  Formula parse();  // lowest precedence level
  // Ground atom text such as p(f(a),1); also used for bare terms.
  std::string parseAtomText();
  // [F1; F2; ...], with family notation allowed.
  std::vector<Formula> parseGroup() { return parseList("[", "]"); }

 private:
  Formula parseImpl();
  Formula parseUnary();
  Formula parsePrimary();
  std::vector<Formula> parseList(std::string_view open, std::string_view close);
  std::string parseTerm();
  long long parseBound();
  long long variableValue(const Token& t) const;

  TokenCursor& cur_;
  ParseOptions options_;
  std::map<std::string, long long> env_;
};

}  // namespace infinitary::detail
