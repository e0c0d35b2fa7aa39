#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

// Ground-equation theory: variable-free equations used as left-to-right
// rewrite rules, evaluated over finite algebras.
namespace incorp::equations {

struct GroundTerm {
  std::string symbol;
  std::vector<GroundTerm> args;

  bool operator==(const GroundTerm&) const = default;
};

inline std::int64_t term_size(const GroundTerm& t) {
  std::int64_t n = 1;
  for (const GroundTerm& a : t.args) n += term_size(a);
  return n;
}

// Total lexicographic order: symbol name, then argument count, then
// arguments left to right.  Used only to orient equations of equal size.
inline int term_compare(const GroundTerm& a, const GroundTerm& b) {
  if (int c = a.symbol.compare(b.symbol); c != 0) return c < 0 ? -1 : 1;
  if (a.args.size() != b.args.size()) return a.args.size() < b.args.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.args.size(); ++i)
    if (int c = term_compare(a.args[i], b.args[i]); c != 0) return c;
  return 0;
}

// TRUE, or an oriented pair of distinct ground terms.  Orientation is
// canonical: the larger side (by size, ties broken by term_compare) is the
// lhs.  Identical sides collapse to TRUE on construction.
class Equation {
 public:
  static Equation truth() { return Equation(true_tag{}); }

  Equation(GroundTerm lhs, GroundTerm rhs) : lhs_(std::move(lhs)), rhs_(std::move(rhs)) {
    if (lhs_ == rhs_) {
      true_ = true;
      lhs_ = GroundTerm{};
      rhs_ = GroundTerm{};
      return;
    }
    std::int64_t ls = term_size(lhs_);
    std::int64_t rs = term_size(rhs_);
    if (ls < rs || (ls == rs && term_compare(lhs_, rhs_) < 0)) std::swap(lhs_, rhs_);
  }

  bool is_true() const { return true_; }
  const GroundTerm& lhs() const { return lhs_; }
  const GroundTerm& rhs() const { return rhs_; }

  // Only equations whose lhs is strictly larger act as rewrite rules;
  // equal-size equations are inert as simplifiers.
  bool usable() const { return !true_ && term_size(lhs_) > term_size(rhs_); }

  bool operator==(const Equation&) const = default;

 private:
  struct true_tag {};
  explicit Equation(true_tag) : true_(true) {}

  bool true_ = false;
  GroundTerm lhs_;
  GroundTerm rhs_;
};

inline std::int64_t equation_scount(const Equation& e) {
  return e.is_true() ? 0 : term_size(e.lhs()) + term_size(e.rhs());
}

// Innermost-leftmost rewriting to normal form.  Candidate rules are tried in
// set order, first match wins; each step replaces one lhs occurrence by the
// corresponding rhs and strictly decreases the symbol count.  The result
// contains no usable rule's lhs as a subterm.
inline GroundTerm normalize(const GroundTerm& t, const std::vector<Equation>& rules,
                            std::int64_t* steps = nullptr) {
  GroundTerm u{t.symbol, {}};
  u.args.reserve(t.args.size());
  for (const GroundTerm& a : t.args) u.args.push_back(normalize(a, rules, steps));
  for (const Equation& r : rules) {
    if (!r.usable()) continue;
    if (u == r.lhs()) {
      if (steps) ++*steps;
      return normalize(r.rhs(), rules, steps);
    }
  }
  return u;
}

// Normalize both sides; coinciding sides collapse to TRUE, otherwise the
// result is re-oriented by the Equation constructor.
inline Equation eq_simplify(const Equation& e, const std::vector<Equation>& y) {
  if (e.is_true()) return e;
  GroundTerm l = normalize(e.lhs(), y);
  GroundTerm r = normalize(e.rhs(), y);
  if (l == e.lhs() && r == e.rhs()) return e;
  return Equation(std::move(l), std::move(r));
}

struct Operation {
  int arity = 0;
  std::vector<std::int64_t> table;  // row-major, first argument most significant
};

// Finite interpretation: carrier {0, ..., n-1} and a total operation table
// for every symbol.
class FiniteAlgebra {
 public:
  FiniteAlgebra(std::int64_t carrier, std::map<std::string, Operation> ops)
      : carrier_(carrier), ops_(std::move(ops)) {}

  std::int64_t carrier() const { return carrier_; }
  const std::map<std::string, Operation>& operations() const { return ops_; }

  std::int64_t eval(const GroundTerm& t) const {
    auto it = ops_.find(t.symbol);
    if (it == ops_.end())
      throw signature_error("symbol '" + t.symbol + "' is not interpreted by the algebra");
    const Operation& op = it->second;
    if (op.arity != static_cast<int>(t.args.size()))
      throw signature_error("symbol '" + t.symbol + "' used with arity " +
                            std::to_string(t.args.size()) + " but interpreted with arity " +
                            std::to_string(op.arity));
    std::int64_t index = 0;
    for (const GroundTerm& a : t.args) index = index * carrier_ + eval(a);
    return op.table[static_cast<std::size_t>(index)];
  }

 private:
  std::int64_t carrier_;
  std::map<std::string, Operation> ops_;
};

inline bool eq_eval(const Equation& e, const FiniteAlgebra& alg) {
  if (e.is_true()) return true;
  return alg.eval(e.lhs()) == alg.eval(e.rhs());
}

// File format: one s-expression "(= term term)" per line, where a term is a
// symbol or "(symbol term...)".  "$T" alone is TRUE.  '#' begins a comment
// line; blank lines are ignored.  Symbol arity must be consistent across
// everything parsed with the same Signature.
using Signature = std::map<std::string, int>;

inline std::string print_term(const GroundTerm& t) {
  if (t.args.empty()) return t.symbol;
  std::string out = "(" + t.symbol;
  for (const GroundTerm& a : t.args) out += " " + print_term(a);
  return out + ")";
}

inline std::string print_equation(const Equation& e) {
  if (e.is_true()) return "$T";
  return "(= " + print_term(e.lhs()) + " " + print_term(e.rhs()) + ")";
}

namespace detail {

struct Token {
  std::string text;
  int column = 0;  // 1-based
};

inline bool symbol_char(char ch) {
  return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '$' || ch == '=';
}

inline std::vector<Token> lex_line(const std::string& line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    char ch = line[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    if (ch == '(' || ch == ')') {
      tokens.push_back({std::string(1, ch), static_cast<int>(i) + 1});
      ++i;
      continue;
    }
    if (!symbol_char(ch))
      throw parse_error("unexpected character '" + std::string(1, ch) + "'", 0,
                        static_cast<int>(i) + 1);
    std::size_t start = i;
    while (i < line.size() && symbol_char(line[i])) ++i;
    tokens.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return tokens;
}

inline bool valid_symbol(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char ch : s)
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') return false;
  return true;
}

class TermParser {
 public:
  explicit TermParser(const std::vector<Token>& tokens) : tokens_(tokens) {}

  GroundTerm parse_term() {
    const Token& tok = peek("term");
    if (tok.text == "(") {
      ++pos_;
      const Token& head = peek("function symbol");
      if (!valid_symbol(head.text))
        throw parse_error("bad function symbol '" + head.text + "'", 0, head.column);
      GroundTerm t{head.text, {}};
      ++pos_;
      while (peek("term or ')'").text != ")") t.args.push_back(parse_term());
      if (t.args.empty())
        throw parse_error("compound term '(" + t.symbol + ")' needs at least one argument", 0,
                          head.column);
      ++pos_;  // ')'
      return t;
    }
    if (!valid_symbol(tok.text))
      throw parse_error("bad symbol '" + tok.text + "'", 0, tok.column);
    ++pos_;
    return GroundTerm{tok.text, {}};
  }

  const Token& peek(const std::string& expected) {
    if (pos_ >= tokens_.size())
      throw parse_error("unexpected end of line, expected " + expected);
    return tokens_[pos_];
  }

  void expect(const std::string& text) {
    const Token& tok = peek("'" + text + "'");
    if (tok.text != text)
      throw parse_error("expected '" + text + "', found '" + tok.text + "'", 0, tok.column);
    ++pos_;
  }

  void expect_end() {
    if (pos_ < tokens_.size())
      throw parse_error("trailing input '" + tokens_[pos_].text + "'", 0, tokens_[pos_].column);
  }

 private:
  const std::vector<Token>& tokens_;
  std::size_t pos_ = 0;
};

inline void record_arities(const GroundTerm& t, Signature& sig) {
  int arity = static_cast<int>(t.args.size());
  auto [it, inserted] = sig.emplace(t.symbol, arity);
  if (!inserted && it->second != arity)
    throw parse_error("symbol '" + t.symbol + "' used with arity " + std::to_string(arity) +
                      " but seen earlier with arity " + std::to_string(it->second));
  for (const GroundTerm& a : t.args) record_arities(a, sig);
}

}  // namespace detail

inline Equation parse_equation(const std::string& line, Signature& sig) {
  std::vector<detail::Token> tokens = detail::lex_line(line);
  if (tokens.empty()) throw parse_error("empty equation line");
  if (tokens.size() == 1 && tokens[0].text == "$T") return Equation::truth();
  detail::TermParser parser(tokens);
  parser.expect("(");
  parser.expect("=");
  GroundTerm lhs = parser.parse_term();
  GroundTerm rhs = parser.parse_term();
  parser.expect(")");
  parser.expect_end();
  detail::record_arities(lhs, sig);
  detail::record_arities(rhs, sig);
  return Equation(std::move(lhs), std::move(rhs));
}

inline bool comment_or_blank(const std::string& line) {
  for (char ch : line) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    return ch == '#';
  }
  return true;
}

inline std::vector<Equation> read_equation_set(std::istream& in, Signature& sig) {
  std::vector<Equation> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (comment_or_blank(line)) continue;
    try {
      out.push_back(parse_equation(line, sig));
    } catch (const parse_error& e) {
      throw e.with_line(lineno);
    }
  }
  return out;
}

inline void write_equation_set(std::ostream& out, const std::vector<Equation>& set) {
  for (const Equation& e : set) out << print_equation(e) << '\n';
}

// Algebra file format, used to replay evaluations:
//
//   carrier 2
//   op a 0 1
//   op f 1 1 0
//   op g 2 0 1 1 0
//
// "carrier n" first, then one "op name arity values..." line per symbol with
// n^arity table entries in row-major order (first argument most significant).
inline FiniteAlgebra parse_algebra(std::istream& in) {
  std::string line;
  int lineno = 0;
  std::int64_t carrier = 0;
  bool carrier_seen = false;
  std::map<std::string, Operation> ops;
  while (std::getline(in, line)) {
    ++lineno;
    if (comment_or_blank(line)) continue;
    std::istringstream fields(line);
    std::string keyword;
    fields >> keyword;
    if (!carrier_seen) {
      if (keyword != "carrier" || !(fields >> carrier) || carrier < 1)
        throw parse_error("expected 'carrier n' with n >= 1", lineno);
      carrier_seen = true;
      continue;
    }
    if (keyword != "op") throw parse_error("expected 'op name arity values...'", lineno);
    std::string name;
    int arity = -1;
    if (!(fields >> name >> arity) || !detail::valid_symbol(name) || arity < 0)
      throw parse_error("expected 'op name arity values...'", lineno);
    std::int64_t entries = 1;
    for (int k = 0; k < arity; ++k) entries *= carrier;
    Operation op{arity, {}};
    std::int64_t value = 0;
    while (fields >> value) {
      if (value < 0 || value >= carrier)
        throw parse_error("table value " + std::to_string(value) + " outside carrier", lineno);
      op.table.push_back(value);
    }
    if (static_cast<std::int64_t>(op.table.size()) != entries)
      throw parse_error("op '" + name + "' needs " + std::to_string(entries) +
                            " table entries, found " + std::to_string(op.table.size()),
                        lineno);
    if (!ops.emplace(name, std::move(op)).second)
      throw parse_error("duplicate op '" + name + "'", lineno);
  }
  if (!carrier_seen) throw parse_error("missing 'carrier n' line");
  return FiniteAlgebra(carrier, std::move(ops));
}

inline void write_algebra(std::ostream& out, const FiniteAlgebra& alg) {
  out << "carrier " << alg.carrier() << '\n';
  for (const auto& [name, op] : alg.operations()) {
    out << "op " << name << ' ' << op.arity;
    for (std::int64_t v : op.table) out << ' ' << v;
    out << '\n';
  }
}

inline void collect_signature(const std::vector<Equation>& set, Signature& sig) {
  for (const Equation& e : set) {
    if (e.is_true()) continue;
    detail::record_arities(e.lhs(), sig);
    detail::record_arities(e.rhs(), sig);
  }
}

// The contract implementation backed by eq_simplify/eq_eval.
class EquationSimplifier {
 public:
  using element_type = Equation;
  using interpretation_type = FiniteAlgebra;

  Equation simplify(const Equation& x, const std::vector<Equation>& y) const {
    return eq_simplify(x, y);
  }
  bool is_true_symbol(const Equation& x) const { return x.is_true(); }
  bool ceval(const Equation& x, const FiniteAlgebra& alg) const { return eq_eval(x, alg); }
  std::int64_t scount(const Equation& x) const { return equation_scount(x); }
  std::string print(const Equation& x) const { return print_equation(x); }
};

}  // namespace incorp::equations
