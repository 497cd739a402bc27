#include "infinitary/syntax.hpp"

#include <cctype>
#include <charconv>

#include "lexer.hpp"

namespace infinitary {

namespace detail {

namespace {

bool identStart(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool identChar(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

constexpr std::string_view kMultiSymbols[] = {"<->", "->", "|-", "..", "!=", ":-"};
constexpr std::string_view kSingleSymbols = "(){}[],;:.+-=<>!|";

constexpr long long kMaxFamily = 1'000'000;

}  // namespace

std::vector<Token> tokenize(std::string_view text, const LexOptions& options) {
  std::vector<Token> out;
  std::size_t line = options.firstLine;
  std::size_t col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };

  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == options.comment) {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    std::size_t startLine = line, startCol = col, start = i;
    if (c == '#' && i + 1 < text.size() && identStart(text[i + 1])) {
      std::size_t j = i + 1;
      while (j < text.size() && identChar(text[j])) ++j;
      out.push_back({TokenKind::Directive, std::string(text.substr(start, j - start)), startLine, startCol});
      advance(j - i);
      continue;
    }
    if (identStart(c)) {
      std::size_t j = i;
      while (j < text.size() && identChar(text[j])) ++j;
      bool upper = std::isupper(static_cast<unsigned char>(c)) || c == '_';
      out.push_back({upper ? TokenKind::Var : TokenKind::Ident, std::string(text.substr(start, j - start)), startLine,
                     startCol});
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({TokenKind::Number, std::string(text.substr(start, j - start)), startLine, startCol});
      advance(j - i);
      continue;
    }
    bool matched = false;
    for (auto sym : kMultiSymbols) {
      if (text.substr(i, sym.size()) == sym) {
        out.push_back({TokenKind::Symbol, std::string(sym), startLine, startCol});
        advance(sym.size());
        matched = true;
        break;
      }
    }
    if (matched) continue;
    if (kSingleSymbols.find(c) != std::string_view::npos) {
      out.push_back({TokenKind::Symbol, std::string(1, c), startLine, startCol});
      advance(1);
      continue;
    }
    throw SyntaxError(startLine, startCol, std::string("unexpected character '") + c + "'");
  }
  out.push_back({TokenKind::End, "", line, col});
  return out;
}

std::string describe(const Token& t) {
  switch (t.kind) {
    case TokenKind::End:
      return "end of input";
    case TokenKind::Number:
      return "number " + t.text;
    default:
      return "'" + t.text + "'";
  }
}

void TokenCursor::fail(const std::string& expected) const {
  const Token& t = peek();
  throw SyntaxError(t.line, t.column, "expected " + expected + ", found " + describe(t));
}

Formula FormulaParser::parse() {
  Formula lhs = parseImpl();
  if (cur_.accept("<->")) return iff(lhs, parse());
  return lhs;
}

Formula FormulaParser::parseImpl() {
  Formula lhs = parseUnary();
  if (cur_.accept("->")) return impl(lhs, parseImpl());
  return lhs;
}

Formula FormulaParser::parseUnary() {
  if (cur_.acceptWord("not")) return neg(parseUnary());
  return parsePrimary();
}

Formula FormulaParser::parsePrimary() {
  if (cur_.accept("(")) {
    Formula f = parse();
    cur_.expect(")");
    return f;
  }
  if (cur_.acceptWord("bot")) return bottom();
  if (cur_.acceptWord("top")) return top();
  if (cur_.isWord("and") && cur_.isSymbol("{", 1)) {
    cur_.next();
    return conj(parseList("{", "}"));
  }
  if (cur_.isWord("or") && cur_.isSymbol("{", 1)) {
    cur_.next();
    return disj(parseList("{", "}"));
  }
  if (cur_.peek().kind == TokenKind::Ident) {
    const std::string& w = cur_.peek().text;
    if (w == "not" || w == "and" || w == "or" || w == "in") cur_.fail("a formula");
    return atom(parseAtomText());
  }
  cur_.fail("a formula");
}

std::vector<Formula> FormulaParser::parseList(std::string_view open, std::string_view close) {
  cur_.expect(open);
  std::vector<Formula> items;
  if (cur_.accept(close)) return items;
  while (true) {
    // Look ahead for a family binder ':' at nesting depth zero.
    std::size_t start = cur_.position();
    std::optional<std::size_t> colon;
    int depth = 0;
    for (std::size_t k = start; k < cur_.tokens().size(); ++k) {
      const Token& t = cur_.tokens()[k];
      if (t.kind == TokenKind::End) break;
      if (t.kind != TokenKind::Symbol) continue;
      if (t.text == "(" || t.text == "{" || t.text == "[") {
        ++depth;
      } else if (t.text == ")" || t.text == "}" || t.text == "]") {
        if (depth == 0) break;
        --depth;
      } else if (depth == 0 && t.text == ";") {
        break;
      } else if (depth == 0 && t.text == ":") {
        colon = k;
        break;
      }
    }

    if (!colon) {
      items.push_back(parse());
    } else {
      cur_.seek(*colon + 1);
      const Token& var = cur_.peek();
      if (var.kind != TokenKind::Var) cur_.fail("a family variable");
      std::string name = cur_.next().text;
      cur_.expectWord("in");
      long long lo = parseBound();
      cur_.expect("..");
      long long hi = parseBound();
      std::size_t resume = cur_.position();
      if (hi - lo >= kMaxFamily) throw SyntaxError(var.line, var.column, "family range too large");

      auto shadowed = env_.find(name);
      bool hadOuter = shadowed != env_.end();
      long long outer = hadOuter ? shadowed->second : 0;
      for (long long v = lo; v <= hi; ++v) {
        env_[name] = v;
        cur_.seek(start);
        items.push_back(parse());
        if (cur_.position() != *colon) cur_.fail("':'");
      }
      if (hadOuter) env_[name] = outer;
      else env_.erase(name);
      cur_.seek(resume);
    }
    if (cur_.accept(";")) continue;
    cur_.expect(close);
    return items;
  }
}

std::string FormulaParser::parseAtomText() {
  const Token& t = cur_.peek();
  if (t.kind != TokenKind::Ident) cur_.fail("an atom");
  std::string text = cur_.next().text;
  if (cur_.accept("(")) {
    text += '(';
    text += parseTerm();
    while (cur_.accept(",")) {
      text += ',';
      text += parseTerm();
    }
    cur_.expect(")");
    text += ')';
  }
  return text;
}

std::string FormulaParser::parseTerm() {
  const Token& t = cur_.peek();
  switch (t.kind) {
    case TokenKind::Ident:
      return parseAtomText();
    case TokenKind::Number:
      return cur_.next().text;
    case TokenKind::Var: {
      Token v = cur_.next();
      long long value = variableValue(v);
      if (cur_.isSymbol("+") || cur_.isSymbol("-")) {
        bool plus = cur_.next().text == "+";
        if (cur_.peek().kind != TokenKind::Number) cur_.fail("a number");
        long long k = std::stoll(cur_.next().text);
        value = plus ? value + k : value - k;
      }
      return std::to_string(value);
    }
    case TokenKind::Symbol:
      if (t.text == "-" && cur_.peek(1).kind == TokenKind::Number) {
        cur_.next();
        return "-" + cur_.next().text;
      }
      [[fallthrough]];
    default:
      cur_.fail("a term");
  }
}

long long FormulaParser::variableValue(const Token& t) const {
  auto it = env_.find(t.text);
  if (it == env_.end()) throw SyntaxError(t.line, t.column, "unbound family variable '" + t.text + "'");
  return it->second;
}

long long FormulaParser::parseBound() {
  long long value = 0;
  const Token& t = cur_.peek();
  if (t.kind == TokenKind::Number) {
    value = std::stoll(cur_.next().text);
  } else if (t.kind == TokenKind::Ident && t.text == "n") {
    if (!options_.size) throw SyntaxError(t.line, t.column, "family bound uses n but no size was given");
    cur_.next();
    value = *options_.size;
  } else if (t.kind == TokenKind::Var) {
    value = variableValue(cur_.next());
  } else {
    cur_.fail("a family bound");
  }
  if (cur_.isSymbol("+") || cur_.isSymbol("-")) {
    bool plus = cur_.next().text == "+";
    if (cur_.peek().kind != TokenKind::Number) cur_.fail("a number");
    long long k = std::stoll(cur_.next().text);
    value = plus ? value + k : value - k;
  }
  return value;
}

}  // namespace detail

Formula parseFormula(std::string_view text, const ParseOptions& options) {
  detail::TokenCursor cur(detail::tokenize(text));
  detail::FormulaParser parser(cur, options);
  Formula f = parser.parse();
  cur.expectEnd();
  return f;
}

std::vector<Formula> parseTheory(std::string_view text, const ParseOptions& options) {
  std::vector<Formula> out;
  std::size_t lineNo = 1;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    std::size_t end = text.find('\n', begin);
    if (end == std::string_view::npos) end = text.size();
    detail::TokenCursor cur(detail::tokenize(text.substr(begin, end - begin), {'#', lineNo}));
    if (!cur.atEnd()) {
      detail::FormulaParser parser(cur, options);
      out.push_back(parser.parse());
      cur.expectEnd();
    }
    begin = end + 1;
    ++lineNo;
  }
  return out;
}

namespace {

enum class Context { Top, Impl, Unary };

void print(const Formula& f, Context ctx, std::string& out);

void printList(std::string_view keyword, const Formula& f, std::string& out) {
  out += keyword;
  out += '{';
  bool first = true;
  for (const auto& k : f.children()) {
    if (!first) out += "; ";
    print(k, Context::Top, out);
    first = false;
  }
  out += '}';
}

void print(const Formula& f, Context ctx, std::string& out) {
  if (f.isAtom()) {
    out += f.name();
    return;
  }
  if (f.isBottom()) {
    out += "bot";
    return;
  }
  if (f.isTop()) {
    out += "top";
    return;
  }
  if (auto negated = asNegation(f)) {
    out += "not ";
    print(*negated, Context::Unary, out);
    return;
  }
  if (auto bi = asBiconditional(f)) {
    bool parens = ctx != Context::Top;
    if (parens) out += '(';
    print(bi->first, Context::Impl, out);
    out += " <-> ";
    print(bi->second, Context::Top, out);
    if (parens) out += ')';
    return;
  }
  if (f.isImpl()) {
    bool parens = ctx == Context::Unary;
    if (parens) out += '(';
    print(f.antecedent(), Context::Unary, out);
    out += " -> ";
    print(f.consequent(), Context::Impl, out);
    if (parens) out += ')';
    return;
  }
  printList(f.isConj() ? "and" : "or", f, out);
}

}  // namespace

std::string printFormula(const Formula& f) {
  std::string out;
  print(f, Context::Top, out);
  return out;
}

std::string printTheory(const std::vector<Formula>& formulas) {
  std::string out;
  for (const auto& f : formulas) {
    out += printFormula(f);
    out += '\n';
  }
  return out;
}

}  // namespace infinitary
