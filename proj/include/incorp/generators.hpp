#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "clauses.hpp"
#include "conformance.hpp"
#include "equations.hpp"

// Seeded input generators for the two reference theories.
namespace incorp::clauses {

inline Valuation random_valuation(const std::vector<std::string>& atoms, Rng& rng) {
  Valuation v;
  for (const std::string& atom : atoms) v.set(atom, rng.chance(1, 2));
  return v;
}

struct ClauseGenParams {
  std::vector<std::string> atoms = {"p", "q", "r", "s", "t", "u", "v", "w"};
  int max_literals = 4;
  int max_set = 6;
  std::int64_t true_one_in = 10;   // P(TRUE) for a random element
  std::int64_t empty_one_in = 25;  // P(empty clause) for a random element
};

class ClauseGenerator {
 public:
  using simplifier_type = ClauseSimplifier;

  ClauseGenerator() = default;
  explicit ClauseGenerator(ClauseGenParams params) : params_(std::move(params)) {}

  const ClauseGenParams& params() const { return params_; }

  Clause true_element() const { return Clause::truth(); }

  Clause random_element(Rng& rng) const {
    if (rng.chance(1, params_.true_one_in)) return Clause::truth();
    if (rng.chance(1, params_.empty_one_in)) return Clause(std::vector<Literal>{});
    std::int64_t k = 1 + rng.below(params_.max_literals);
    std::vector<Literal> lits;
    for (std::int64_t i = 0; i < k; ++i) {
      const std::string& atom =
          params_.atoms[static_cast<std::size_t>(rng.below(static_cast<std::int64_t>(params_.atoms.size())))];
      lits.push_back(Literal{atom, rng.chance(1, 2)});
    }
    return Clause(std::move(lits));  // canonicalization may shrink k
  }

  std::vector<Clause> random_set(Rng& rng) const {
    std::int64_t n = rng.below(params_.max_set + 1);
    std::vector<Clause> out;
    for (std::int64_t i = 0; i < n; ++i) out.push_back(random_element(rng));
    return out;
  }

  Valuation random_interpretation(Rng& rng) const {
    return random_valuation(params_.atoms, rng);
  }

  std::string print_interpretation(const Valuation& v) const {
    std::string out = "{";
    bool first = true;
    for (const auto& [atom, value] : v.assignments()) {
      if (!first) out += ", ";
      first = false;
      out += atom + "=" + (value ? "1" : "0");
    }
    return out + "}";
  }

 private:
  ClauseGenParams params_;
};

}  // namespace incorp::clauses

namespace incorp::equations {

inline FiniteAlgebra random_algebra(const Signature& sig, Rng& rng, std::int64_t carrier_min = 2,
                                    std::int64_t carrier_max = 3) {
  std::int64_t carrier = carrier_min + rng.below(carrier_max - carrier_min + 1);
  std::map<std::string, Operation> ops;
  for (const auto& [name, arity] : sig) {
    std::int64_t entries = 1;
    for (int k = 0; k < arity; ++k) entries *= carrier;
    Operation op{arity, {}};
    for (std::int64_t i = 0; i < entries; ++i) op.table.push_back(rng.below(carrier));
    ops.emplace(name, std::move(op));
  }
  return FiniteAlgebra(carrier, std::move(ops));
}

struct EquationGenParams {
  int max_depth = 4;
  int max_set = 6;
  std::int64_t true_one_in = 10;
  std::int64_t carrier_min = 2;
  std::int64_t carrier_max = 3;
};

// Terms are drawn over a fixed four-symbol signature: constants a and b,
// unary f, binary g.
class EquationGenerator {
 public:
  using simplifier_type = EquationSimplifier;

  EquationGenerator() { sig_ = {{"a", 0}, {"b", 0}, {"f", 1}, {"g", 2}}; }
  explicit EquationGenerator(EquationGenParams params) : EquationGenerator() {
    params_ = params;
  }

  const EquationGenParams& params() const { return params_; }
  const Signature& signature() const { return sig_; }

  Equation true_element() const { return Equation::truth(); }

  GroundTerm random_term(Rng& rng, int depth) const {
    std::int64_t pick = depth <= 0 ? rng.below(2) : rng.below(6);
    switch (pick) {
      case 0: return GroundTerm{"a", {}};
      case 1: return GroundTerm{"b", {}};
      case 2:
      case 3: return GroundTerm{"f", {random_term(rng, depth - 1)}};
      default:
        return GroundTerm{"g", {random_term(rng, depth - 1), random_term(rng, depth - 1)}};
    }
  }

  Equation random_element(Rng& rng) const {
    if (rng.chance(1, params_.true_one_in)) return Equation::truth();
    return Equation(random_term(rng, params_.max_depth), random_term(rng, params_.max_depth));
  }

  std::vector<Equation> random_set(Rng& rng) const {
    std::int64_t n = rng.below(params_.max_set + 1);
    std::vector<Equation> out;
    for (std::int64_t i = 0; i < n; ++i) out.push_back(random_element(rng));
    return out;
  }

  FiniteAlgebra random_interpretation(Rng& rng) const {
    return random_algebra(sig_, rng, params_.carrier_min, params_.carrier_max);
  }

  std::string print_interpretation(const FiniteAlgebra& alg) const {
    std::ostringstream out;
    write_algebra(out, alg);
    std::string text = out.str();
    for (char& ch : text)
      if (ch == '\n') ch = ';';
    return "{" + text + "}";
  }

 private:
  EquationGenParams params_;
  Signature sig_;
};

}  // namespace incorp::equations
