#include "infinitary/program.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

#include "infinitary/error.hpp"
#include "lexer.hpp"

namespace infinitary {

namespace {

constexpr std::size_t kMaxUniverse = 10'000;
constexpr std::size_t kMaxAssignments = 1'000'000;
constexpr std::size_t kMaxAggregateDomain = 20;
constexpr std::size_t kMaxGroundAtoms = 1'000'000;

std::string joinTerms(const std::vector<Term>& args) {
  std::string out;
  for (std::size_t k = 0; k < args.size(); ++k) {
    if (k) out += ",";
    out += args[k].toString();
  }
  return out;
}

}  // namespace

bool Term::isGround() const {
  if (variable) return false;
  return std::all_of(args.begin(), args.end(), [](const Term& t) { return t.isGround(); });
}

std::size_t Term::depth() const {
  std::size_t d = 0;
  for (const auto& a : args) d = std::max(d, a.depth());
  return d + 1;
}

std::string Term::toString() const { return args.empty() ? symbol : symbol + "(" + joinTerms(args) + ")"; }

std::string AtomSchema::toString() const { return args.empty() ? predicate : predicate + "(" + joinTerms(args) + ")"; }

// ---------------------------------------------------------------------------
// Parsing and printing

namespace {

class ProgramParser {
 public:
  explicit ProgramParser(std::string_view text) : cur_(detail::tokenize(text, {'%', 1})) {}

  Program parse() {
    Program p;
    while (!cur_.atEnd()) p.rules.push_back(parseRule());
    return p;
  }

 private:
  ProgramRule parseRule() {
    ProgramRule r;
    const auto& t = cur_.peek();
    if (t.kind == detail::TokenKind::Directive) {
      if (t.text != "#false") cur_.fail("'#false' or an atom");
      cur_.next();
    } else {
      r.head = parseAtom();
    }
    if (cur_.accept(":-")) {
      do {
        r.body.push_back(parseElement());
      } while (cur_.accept(","));
    }
    cur_.expect(".");
    classifyVariables(r);
    return r;
  }

  BodyElement parseElement() {
    const auto& t = cur_.peek();
    if (t.kind == detail::TokenKind::Number || cur_.isSymbol("{")) return parseAggregate();
    if (t.kind == detail::TokenKind::Var) return parseGuard();
    if (t.kind == detail::TokenKind::Ident && t.text == "not" && cur_.peek(1).kind == detail::TokenKind::Ident) {
      cur_.next();
      return Literal{parseAtom(), true};
    }
    if (t.kind == detail::TokenKind::Ident) return Literal{parseAtom(), false};
    cur_.fail("an atom, 'not', an aggregate or a guard");
  }

  Guard parseGuard() {
    Guard g;
    g.lhs = expectVar();
    cur_.expect("!=");
    g.rhs = expectVar();
    return g;
  }

  std::string expectVar() {
    if (cur_.peek().kind != detail::TokenKind::Var) cur_.fail("a variable");
    return cur_.next().text;
  }

  CardinalityAggregate parseAggregate() {
    CardinalityAggregate a;
    const auto start = cur_.peek();
    if (start.kind == detail::TokenKind::Number) a.lower = toNumber(cur_.next());
    cur_.expect("{");
    a.schema = parseAtom();
    while (cur_.accept(",")) a.guards.push_back(parseGuard());
    cur_.expect("}");
    if (cur_.peek().kind == detail::TokenKind::Number) a.upper = toNumber(cur_.next());
    if (!a.lower && !a.upper) throw SyntaxError(start.line, start.column, "aggregate needs a lower or an upper bound");
    if (a.lower && a.upper && *a.lower > *a.upper)
      throw SyntaxError(start.line, start.column, "aggregate lower bound exceeds its upper bound");
    return a;
  }

  std::size_t toNumber(const detail::Token& t) {
    try {
      return static_cast<std::size_t>(std::stoull(t.text));
    } catch (const std::exception&) {
      throw SyntaxError(t.line, t.column, "number out of range");
    }
  }

  AtomSchema parseAtom() {
    if (cur_.peek().kind != detail::TokenKind::Ident) cur_.fail("an atom");
    AtomSchema a;
    a.predicate = cur_.next().text;
    if (cur_.accept("(")) {
      do {
        a.args.push_back(parseTerm());
      } while (cur_.accept(","));
      cur_.expect(")");
    }
    return a;
  }

  Term parseTerm() {
    const auto& t = cur_.peek();
    if (t.kind == detail::TokenKind::Var) return Term::var(cur_.next().text);
    if (t.kind == detail::TokenKind::Number) return Term::constant(cur_.next().text);
    if (t.kind != detail::TokenKind::Ident) cur_.fail("a term");
    Term out = Term::constant(cur_.next().text);
    if (cur_.accept("(")) {
      do {
        out.args.push_back(parseTerm());
      } while (cur_.accept(","));
      cur_.expect(")");
    }
    return out;
  }

  detail::TokenCursor cur_;
};

void collectVars(const Term& t, std::set<std::string>& out) {
  if (t.variable) out.insert(t.symbol);
  for (const auto& a : t.args) collectVars(a, out);
}

void collectVars(const AtomSchema& a, std::set<std::string>& out) {
  for (const auto& t : a.args) collectVars(t, out);
}

std::string printElement(const BodyElement& e) {
  if (const auto* l = std::get_if<Literal>(&e)) return (l->negated ? "not " : "") + l->atom.toString();
  if (const auto* g = std::get_if<Guard>(&e)) return g->lhs + " != " + g->rhs;
  const auto& a = std::get<CardinalityAggregate>(e);
  std::string out = a.lower ? std::to_string(*a.lower) : "";
  out += "{" + a.schema.toString();
  for (const auto& g : a.guards) out += ", " + g.lhs + " != " + g.rhs;
  out += "}";
  if (a.upper) out += std::to_string(*a.upper);
  return out;
}

}  // namespace

void classifyVariables(ProgramRule& rule) {
  std::set<std::string> global, inAggregates;
  if (rule.head) collectVars(*rule.head, global);
  for (const auto& e : rule.body) {
    if (const auto* l = std::get_if<Literal>(&e)) {
      collectVars(l->atom, global);
    } else if (const auto* g = std::get_if<Guard>(&e)) {
      global.insert(g->lhs);
      global.insert(g->rhs);
    } else {
      const auto& a = std::get<CardinalityAggregate>(e);
      collectVars(a.schema, inAggregates);
      for (const auto& g : a.guards) {
        inAggregates.insert(g.lhs);
        inAggregates.insert(g.rhs);
      }
    }
  }
  rule.globalVars.assign(global.begin(), global.end());
  rule.localVars.clear();
  for (const auto& v : inAggregates)
    if (!global.count(v)) rule.localVars.push_back(v);
}

Program parseProgram(std::string_view text) { return ProgramParser(text).parse(); }

std::string printRule(const ProgramRule& rule) {
  std::string out = rule.head ? rule.head->toString() : "#false";
  if (!rule.body.empty()) {
    out += " :- ";
    for (std::size_t k = 0; k < rule.body.size(); ++k) {
      if (k) out += ", ";
      out += printElement(rule.body[k]);
    }
  }
  return out + ".";
}

std::string printProgram(const Program& program) {
  std::string out;
  for (const auto& r : program.rules) out += printRule(r) + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Universe

namespace {

void collectSymbols(const Term& t, std::set<std::string>& constants, std::set<std::pair<std::string, std::size_t>>& functions) {
  if (t.variable) return;
  if (t.args.empty()) constants.insert(t.symbol);
  else functions.emplace(t.symbol, t.args.size());
  for (const auto& a : t.args) collectSymbols(a, constants, functions);
}

template <typename F>
void forEachAtom(const Program& program, F&& visit) {
  for (const auto& r : program.rules) {
    if (r.head) visit(*r.head);
    for (const auto& e : r.body) {
      if (const auto* l = std::get_if<Literal>(&e)) visit(l->atom);
      else if (const auto* a = std::get_if<CardinalityAggregate>(&e)) visit(a->schema);
    }
  }
}

bool hasVariables(const Program& program) {
  return std::any_of(program.rules.begin(), program.rules.end(),
                     [](const ProgramRule& r) { return !r.globalVars.empty() || !r.localVars.empty(); });
}

}  // namespace

GroundUniverse herbrandUniverse(const Program& program, std::size_t depthBound) {
  std::set<std::string> constants;
  std::set<std::pair<std::string, std::size_t>> functions;
  forEachAtom(program, [&](const AtomSchema& a) {
    for (const auto& t : a.args) collectSymbols(t, constants, functions);
  });
  if (constants.empty()) throw Error(ErrorCode::NoConstants, "the program mentions no constant");

  GroundUniverse u;
  u.depthBound = depthBound;
  if (depthBound == 0) return u;
  for (const auto& c : constants) u.terms.push_back(Term::constant(c));

  std::size_t previousBegin = 0;  // first term of the previous depth
  for (std::size_t d = 2; d <= depthBound; ++d) {
    std::size_t previousEnd = u.terms.size();
    std::vector<Term> level;
    for (const auto& [f, arity] : functions) {
      // Odometer over argument tuples of depth < d with at least one argument of depth d - 1.
      std::vector<std::size_t> idx(arity, 0);
      while (true) {
        bool fresh = std::any_of(idx.begin(), idx.end(), [&](std::size_t i) { return i >= previousBegin; });
        if (fresh) {
          Term t = Term::constant(f);
          for (auto i : idx) t.args.push_back(u.terms[i]);
          level.push_back(std::move(t));
          if (u.terms.size() + level.size() > kMaxUniverse)
            throw Error(ErrorCode::AtomLimitExceeded, "Herbrand universe exceeds " + std::to_string(kMaxUniverse) + " terms");
        }
        std::size_t k = arity;
        while (k > 0 && ++idx[k - 1] == previousEnd) idx[--k] = 0;
        if (k == 0) break;
      }
    }
    std::sort(level.begin(), level.end(), [](const Term& a, const Term& b) { return a.toString() < b.toString(); });
    if (level.empty()) break;
    previousBegin = previousEnd;
    u.terms.insert(u.terms.end(), level.begin(), level.end());
  }
  return u;
}

// ---------------------------------------------------------------------------
// Aggregates

Formula translateAggregate(std::optional<std::size_t> lower, std::optional<std::size_t> upper,
                           const std::vector<Formula>& domain) {
  FormulaSet d = makeSet(domain);
  if (d.size() > kMaxAggregateDomain)
    throw Error(ErrorCode::AtomLimitExceeded,
                "aggregate domain has " + std::to_string(d.size()) + " atoms; the limit is " + std::to_string(kMaxAggregateDomain));
  std::vector<Formula> conjuncts;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d.size()); ++mask) {
    auto count = static_cast<std::size_t>(__builtin_popcountll(mask));
    bool violates = (lower && count < *lower) || (upper && count > *upper);
    if (!violates) continue;
    std::vector<Formula> in, out;
    for (std::size_t k = 0; k < d.size(); ++k) ((mask >> k) & 1u ? in : out).push_back(d[k]);
    conjuncts.push_back(impl(conj(std::move(in)), disj(std::move(out))));
  }
  return conj(std::move(conjuncts));
}

// ---------------------------------------------------------------------------
// Grounding

namespace {

using Assignment = std::map<std::string, const Term*>;

Term substitute(const Term& t, const Assignment& s) {
  if (t.variable) return *s.at(t.symbol);
  Term out = Term::constant(t.symbol);
  for (const auto& a : t.args) out.args.push_back(substitute(a, s));
  return out;
}

std::string groundAtomText(const AtomSchema& a, const Assignment& s) {
  if (a.args.empty()) return a.predicate;
  std::string out = a.predicate + "(";
  for (std::size_t k = 0; k < a.args.size(); ++k) {
    if (k) out += ",";
    out += substitute(a.args[k], s).toString();
  }
  return out + ")";
}

bool guardHolds(const Guard& g, const Assignment& s) { return !(*s.at(g.lhs) == *s.at(g.rhs)); }

// Calls visit for every assignment of vars over the universe, extending base.
template <typename F>
void forEachAssignment(const std::vector<std::string>& vars, const GroundUniverse& u, Assignment base, F&& visit) {
  if (vars.empty()) {
    visit(base);
    return;
  }
  if (u.terms.empty()) return;
  double total = 1;
  for (std::size_t k = 0; k < vars.size(); ++k) total *= static_cast<double>(u.terms.size());
  if (total > static_cast<double>(kMaxAssignments))
    throw Error(ErrorCode::AtomLimitExceeded, "grounding needs more than " + std::to_string(kMaxAssignments) + " assignments");
  std::vector<std::size_t> idx(vars.size(), 0);
  while (true) {
    for (std::size_t k = 0; k < vars.size(); ++k) base[vars[k]] = &u.terms[idx[k]];
    visit(base);
    std::size_t k = vars.size();
    while (k > 0 && ++idx[k - 1] == u.terms.size()) idx[--k] = 0;
    if (k == 0) break;
  }
}

void checkSafety(const ProgramRule& r, std::size_t index) {
  auto unsafe = [&](const std::string& v, const std::string& why) {
    throw Error(ErrorCode::UnsafeVariable, "rule " + std::to_string(index + 1) + " (" + printRule(r) + "): variable " + v + " " + why);
  };
  if (r.body.empty() && !r.globalVars.empty()) unsafe(r.globalVars.front(), "occurs in a fact");
  std::set<std::string> bound;
  for (const auto& e : r.body) {
    if (const auto* l = std::get_if<Literal>(&e)) {
      if (!l->negated) collectVars(l->atom, bound);
    } else if (const auto* a = std::get_if<CardinalityAggregate>(&e)) {
      collectVars(a->schema, bound);
    }
  }
  for (const auto& v : r.globalVars)
    if (!bound.count(v)) unsafe(v, "does not occur in a positive body literal or aggregate");
  for (const auto& e : r.body) {
    const auto* a = std::get_if<CardinalityAggregate>(&e);
    if (!a) continue;
    std::set<std::string> schemaVars;
    collectVars(a->schema, schemaVars);
    for (const auto& g : a->guards)
      for (const auto& v : {g.lhs, g.rhs})
        if (!schemaVars.count(v) && !std::binary_search(r.globalVars.begin(), r.globalVars.end(), v))
          unsafe(v, "occurs only in an aggregate guard");
  }
}

Formula groundAggregate(const CardinalityAggregate& a, const GroundUniverse& u, const Assignment& globals) {
  std::set<std::string> vars;
  collectVars(a.schema, vars);
  std::vector<std::string> locals;
  for (const auto& v : vars)
    if (!globals.count(v)) locals.push_back(v);
  std::vector<Formula> domain;
  forEachAssignment(locals, u, globals, [&](const Assignment& s) {
    for (const auto& g : a.guards)
      if (!guardHolds(g, s)) return;
    domain.push_back(atom(groundAtomText(a.schema, s)));
  });
  return translateAggregate(a.lower, a.upper, domain);
}

struct Predicate {
  std::string name;
  std::size_t arity;
  auto operator<=>(const Predicate&) const = default;
};

}  // namespace

Theory ground(const Program& program, const GroundUniverse& universe) {
  std::set<Predicate> predicates;
  forEachAtom(program, [&](const AtomSchema& a) { predicates.insert({a.predicate, a.args.size()}); });

  std::vector<std::string> signature;
  for (const auto& p : predicates) {
    AtomSchema schema{p.name, {}};
    std::vector<std::string> vars;
    for (std::size_t k = 0; k < p.arity; ++k) {
      vars.push_back("V" + std::to_string(k));
      schema.args.push_back(Term::var(vars.back()));
    }
    forEachAssignment(vars, universe, {}, [&](const Assignment& s) {
      signature.push_back(groundAtomText(schema, s));
      if (signature.size() > kMaxGroundAtoms)
        throw Error(ErrorCode::AtomLimitExceeded, "more than " + std::to_string(kMaxGroundAtoms) + " ground atoms");
    });
  }
  std::unordered_set<std::string> known(signature.begin(), signature.end());
  auto groundAtom = [&](const AtomSchema& a, const Assignment& s) {
    std::string text = groundAtomText(a, s);
    if (!known.count(text))
      throw Error(ErrorCode::InvalidArgument,
                  "atom " + text + " lies outside the universe of depth " + std::to_string(universe.depthBound));
    return atom(std::move(text));
  };

  std::vector<Formula> formulas;
  for (std::size_t index = 0; index < program.rules.size(); ++index) {
    const ProgramRule& r = program.rules[index];
    checkSafety(r, index);
    forEachAssignment(r.globalVars, universe, {}, [&](const Assignment& s) {
      std::vector<Formula> body;
      for (const auto& e : r.body) {
        if (const auto* g = std::get_if<Guard>(&e)) {
          if (!guardHolds(*g, s)) return;
        } else if (const auto* l = std::get_if<Literal>(&e)) {
          Formula a = groundAtom(l->atom, s);
          body.push_back(l->negated ? neg(a) : a);
        } else {
          Formula agg = groundAggregate(std::get<CardinalityAggregate>(e), universe, s);
          for (const auto& k : atoms(agg))
            if (!known.count(k)) throw Error(ErrorCode::Internal, "aggregate atom " + k + " outside the signature");
          body.push_back(agg);
        }
      }
      Formula head = r.head ? groundAtom(*r.head, s) : bottom();
      if (body.empty()) formulas.push_back(head);
      else formulas.push_back(impl(body.size() == 1 ? body.front() : conj(body), head));
    });
  }
  return Theory(std::move(formulas), Signature(std::move(signature)));
}

Theory groundAtDepth(const Program& program, std::size_t depthBound) {
  if (depthBound == 0) throw Error(ErrorCode::InvalidArgument, "depth bound must be at least 1");
  std::set<std::string> constants;
  std::set<std::pair<std::string, std::size_t>> functions;
  forEachAtom(program, [&](const AtomSchema& a) {
    for (const auto& t : a.args) collectSymbols(t, constants, functions);
  });
  if (constants.empty() && !hasVariables(program)) {
    GroundUniverse empty;
    empty.depthBound = depthBound;
    return ground(program, empty);
  }
  return ground(program, herbrandUniverse(program, depthBound));
}

StableModelReport solve(const Program& program, std::size_t depthBound, const EnumerationLimits& limits) {
  return stableModels(groundAtDepth(program, depthBound), limits);
}

}  // namespace infinitary
