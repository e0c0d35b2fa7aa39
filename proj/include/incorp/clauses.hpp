#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

// Unit-clause theory: propositional clauses simplified by subsumption and
// unit resolution.
namespace incorp::clauses {

struct Literal {
  std::string atom;
  bool negative = false;

  // Canonical order: by atom, positive before negative.
  auto operator<=>(const Literal&) const = default;
};

inline Literal complement(Literal l) {
  l.negative = !l.negative;
  return l;
}

// TRUE, or a set of literals sorted and deduplicated on construction.
// The empty clause is legal (always false); tautologies are stored as-is.
class Clause {
 public:
  static Clause truth() { return Clause(true_tag{}); }

  explicit Clause(std::vector<Literal> lits) : lits_(std::move(lits)) {
    std::sort(lits_.begin(), lits_.end());
    lits_.erase(std::unique(lits_.begin(), lits_.end()), lits_.end());
  }

  bool is_true() const { return true_; }

  // Empty both for TRUE and for the empty clause; branch on is_true() first.
  const std::vector<Literal>& literals() const { return lits_; }

  bool contains(const Literal& l) const {
    return std::binary_search(lits_.begin(), lits_.end(), l);
  }

  bool operator==(const Clause&) const = default;

 private:
  struct true_tag {};
  explicit Clause(true_tag) : true_(true) {}

  bool true_ = false;
  std::vector<Literal> lits_;
};

// Total assignment of truth values to a finite universe of atoms.
class Valuation {
 public:
  Valuation() = default;
  explicit Valuation(std::map<std::string, bool> values) : values_(std::move(values)) {}

  void set(std::string atom, bool value) { values_[std::move(atom)] = value; }

  bool value(const std::string& atom) const {
    auto it = values_.find(atom);
    if (it == values_.end())
      throw universe_error("atom '" + atom + "' is outside the valuation's universe");
    return it->second;
  }

  const std::map<std::string, bool>& assignments() const { return values_; }

  bool operator==(const Valuation&) const = default;

 private:
  std::map<std::string, bool> values_;
};

// Fixpoint of two rules, subsumption tried before unit resolution in each
// pass, candidates from y in set order:
//   subsume       some non-TRUE d in y with literals(d) subset-of literals(c)
//                 turns c into TRUE
//   unit-resolve  a unit {L} in y removes the complement of L from c
inline Clause unit_simplify(const Clause& x, const std::vector<Clause>& y) {
  if (x.is_true()) return x;
  std::vector<Literal> lits = x.literals();
  for (;;) {
    for (const Clause& d : y) {
      if (d.is_true()) continue;
      if (std::includes(lits.begin(), lits.end(), d.literals().begin(), d.literals().end()))
        return Clause::truth();
    }
    bool stepped = false;
    for (const Clause& d : y) {
      if (d.is_true() || d.literals().size() != 1) continue;
      Literal gone = complement(d.literals().front());
      auto it = std::lower_bound(lits.begin(), lits.end(), gone);
      if (it != lits.end() && *it == gone) {
        lits.erase(it);
        stepped = true;
        break;
      }
    }
    if (!stepped) return Clause(std::move(lits));
  }
}

// Disjunction of the literals; TRUE is true, the empty clause is false.
// Every atom of c must lie in v's universe.
inline bool clause_eval(const Clause& c, const Valuation& v) {
  if (c.is_true()) return true;
  bool satisfied = false;
  for (const Literal& l : c.literals()) {
    bool a = v.value(l.atom);
    satisfied = satisfied || (l.negative ? !a : a);
  }
  return satisfied;
}

inline std::int64_t clause_scount(const Clause& c) {
  return c.is_true() ? 0 : 1 + static_cast<std::int64_t>(c.literals().size());
}

// File format: one clause per line, whitespace-separated [-]atom tokens.
// "$T" alone is TRUE, "$F" alone is the empty clause.  '#' begins a comment
// line; blank lines are ignored.
inline std::string print_literal(const Literal& l) {
  return l.negative ? "-" + l.atom : l.atom;
}

inline std::string print_clause(const Clause& c) {
  if (c.is_true()) return "$T";
  if (c.literals().empty()) return "$F";
  std::string out;
  for (const Literal& l : c.literals()) {
    if (!out.empty()) out += ' ';
    out += print_literal(l);
  }
  return out;
}

namespace detail {

inline bool valid_atom(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char ch : s)
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') return false;
  return true;
}

inline std::vector<std::string> split_tokens(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

}  // namespace detail

inline Literal parse_literal(const std::string& token) {
  std::string body = token;
  bool negative = false;
  if (!body.empty() && body[0] == '-') {
    negative = true;
    body.erase(0, 1);
  }
  if (!detail::valid_atom(body))
    throw parse_error("bad literal token '" + token + "'");
  return Literal{std::move(body), negative};
}

inline Clause parse_clause(const std::string& line) {
  std::vector<std::string> tokens = detail::split_tokens(line);
  if (tokens.empty()) throw parse_error("empty clause line");
  if (tokens.size() == 1 && tokens[0] == "$T") return Clause::truth();
  if (tokens.size() == 1 && tokens[0] == "$F") return Clause(std::vector<Literal>{});
  std::vector<Literal> lits;
  for (const std::string& tok : tokens) {
    if (tok == "$T" || tok == "$F")
      throw parse_error("'" + tok + "' must stand alone on its line");
    lits.push_back(parse_literal(tok));
  }
  return Clause(std::move(lits));
}

inline bool comment_or_blank(const std::string& line) {
  for (char ch : line) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    return ch == '#';
  }
  return true;
}

inline std::vector<Clause> read_clause_set(std::istream& in) {
  std::vector<Clause> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (comment_or_blank(line)) continue;
    try {
      out.push_back(parse_clause(line));
    } catch (const parse_error& e) {
      throw e.with_line(lineno);
    }
  }
  return out;
}

inline void write_clause_set(std::ostream& out, const std::vector<Clause>& set) {
  for (const Clause& c : set) out << print_clause(c) << '\n';
}

inline std::set<std::string> atoms_of(const std::vector<Clause>& set) {
  std::set<std::string> atoms;
  for (const Clause& c : set)
    for (const Literal& l : c.literals()) atoms.insert(l.atom);
  return atoms;
}

// The contract implementation backed by unit_simplify/clause_eval.
class ClauseSimplifier {
 public:
  using element_type = Clause;
  using interpretation_type = Valuation;

  Clause simplify(const Clause& x, const std::vector<Clause>& y) const {
    return unit_simplify(x, y);
  }
  bool is_true_symbol(const Clause& x) const { return x.is_true(); }
  bool ceval(const Clause& x, const Valuation& v) const { return clause_eval(x, v); }
  std::int64_t scount(const Clause& x) const { return clause_scount(x); }
  std::string print(const Clause& x) const { return print_clause(x); }
};

}  // namespace incorp::clauses
