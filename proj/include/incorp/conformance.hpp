#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "clauses.hpp"
#include "errors.hpp"
#include "simplifier.hpp"

// Conformance harness: checks the eight simplifier laws on random inputs and
// provides the evaluation-only soundness oracle used to cross-check engine
// output.  Everything is seeded and deterministic: the same seed reproduces
// the same reports, and a reported counterexample re-fails on replay.
namespace incorp {

// Deterministic random source.  Bounded draws are derived from raw mt19937_64
// output (not std::uniform_int_distribution, whose mapping is
// implementation-defined), so sequences are reproducible everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  std::int64_t below(std::int64_t n) {
    return static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(n));
  }

  bool chance(std::int64_t num, std::int64_t den) { return below(den) < num; }

 private:
  std::mt19937_64 engine_;
};

// splitmix64 chain; derives an independent case seed from (base, lane, index).
inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t lane, std::uint64_t index) {
  std::uint64_t z = base;
  for (std::uint64_t salt : {lane + 1, index + 1}) {
    z += 0x9E3779B97F4A7C15ull * salt;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    z = z ^ (z >> 31);
  }
  return z;
}

// Input plumbing for one theory: random elements, sets, and interpretations,
// plus rendering for counterexample reports.
template <typename G>
concept Generator = requires(const G& gen, Rng& rng,
                             const interpretation_t<typename G::simplifier_type>& i) {
  requires Simplifier<typename G::simplifier_type>;
  { gen.random_element(rng) } -> std::same_as<element_t<typename G::simplifier_type>>;
  { gen.random_set(rng) } -> std::same_as<element_set_t<typename G::simplifier_type>>;
  { gen.random_interpretation(rng) } -> std::same_as<interpretation_t<typename G::simplifier_type>>;
  { gen.true_element() } -> std::same_as<element_t<typename G::simplifier_type>>;
  { gen.print_interpretation(i) } -> std::convertible_to<std::string>;
};

// A generator fits any simplifier over the same element and interpretation
// types, so one generator serves a reference implementation and its mutants.
template <typename G, typename S>
concept GeneratorFor =
    Generator<G> && Simplifier<S> &&
    std::same_as<element_t<typename G::simplifier_type>, element_t<S>> &&
    std::same_as<interpretation_t<typename G::simplifier_type>, interpretation_t<S>>;

struct Counterexample {
  std::int64_t case_index = 0;
  std::string description;
};

struct LawReport {
  std::string law;
  std::int64_t cases = 0;
  std::optional<Counterexample> counterexample;

  bool passed() const { return !counterexample.has_value(); }
};

inline constexpr std::array<const char*, 8> law_names = {
    "scount-natural",    "scount-simplify",     "simplify-idempotent", "simplify-subset",
    "simplify-append",   "ceval-boolean",       "true-symbolp-ceval",  "simplify-sound",
};

namespace detail {

template <PrintableSimplifier S>
std::string print_set(const S& sim, const element_set_t<S>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += " ; ";
    out += sim.print(xs[i]);
  }
  return out + "]";
}

template <typename E>
std::vector<E> random_subsequence(const std::vector<E>& xs, Rng& rng) {
  std::vector<E> out;
  for (const E& x : xs)
    if (rng.chance(1, 2)) out.push_back(x);
  return out;
}

}  // namespace detail

// Runs one random case of the law with the given index; returns a
// counterexample description on failure.  Exposed so a reported case can be
// replayed in isolation with the rng rebuilt from mix_seed(seed, law, case).
template <PrintableSimplifier S, GeneratorFor<S> G>
std::optional<std::string> run_law_case(const S& sim, const G& gen, int law, Rng& rng) {
  using detail::print_set;
  switch (law) {
    case 0: {  // scount-natural
      auto x = gen.random_element(rng);
      std::int64_t n = sim.scount(x);
      if (n < 0)
        return "scount(" + sim.print(x) + ") = " + std::to_string(n) + ", expected a natural";
      return std::nullopt;
    }
    case 1: {  // scount-simplify
      auto x = gen.random_element(rng);
      auto y = gen.random_set(rng);
      auto z = sim.simplify(x, y);
      if (z == x || sim.scount(z) < sim.scount(x)) return std::nullopt;
      return "simplify changed " + sim.print(x) + " to " + sim.print(z) + " under " +
             print_set(sim, y) + " without shrinking scount (" + std::to_string(sim.scount(x)) +
             " -> " + std::to_string(sim.scount(z)) + ")";
    }
    case 2: {  // simplify-idempotent
      auto x = gen.random_element(rng);
      auto y = gen.random_set(rng);
      auto z = sim.simplify(x, y);
      auto zz = sim.simplify(z, y);
      if (zz == z) return std::nullopt;
      return "simplify(" + sim.print(x) + ") = " + sim.print(z) + " under " + print_set(sim, y) +
             " is not a fixpoint; resimplifies to " + sim.print(zz);
    }
    case 3: {  // simplify-subset
      auto y = gen.random_set(rng);
      auto x = detail::random_subsequence(y, rng);
      auto a = gen.random_element(rng);
      if (!rewritable(sim, a, x) || rewritable(sim, a, y)) return std::nullopt;
      return sim.print(a) + " is rewritable by the subset " + print_set(sim, x) +
             " but not by the full set " + print_set(sim, y);
    }
    case 4: {  // simplify-append
      auto a = gen.random_element(rng);
      auto x = gen.random_set(rng);
      auto y = gen.random_set(rng);
      if (rewritable(sim, a, x) || rewritable(sim, a, y)) return std::nullopt;
      auto z = sim.simplify(a, append(x, y));
      if (z == a) return std::nullopt;
      return sim.print(a) + " is inert under " + print_set(sim, x) + " and " + print_set(sim, y) +
             " separately but their concatenation rewrites it to " + sim.print(z);
    }
    case 5: {  // ceval-boolean: the codomain is enforced by the host type
               // system, so the runnable residue is that ceval is a function
               // of its inputs (two identical calls agree).
      auto x = gen.random_element(rng);
      auto i = gen.random_interpretation(rng);
      bool first = sim.ceval(x, i);
      bool second = sim.ceval(x, i);
      if (first == second) return std::nullopt;
      return "ceval(" + sim.print(x) + ") under " + gen.print_interpretation(i) +
             " returned both " + std::to_string(first) + " and " + std::to_string(second);
    }
    case 6: {  // true-symbolp-ceval
      auto x = rng.chance(1, 2) ? gen.true_element() : gen.random_element(rng);
      auto i = gen.random_interpretation(rng);
      if (!sim.is_true_symbol(x) || sim.ceval(x, i)) return std::nullopt;
      return "true element " + sim.print(x) + " evaluates false under " +
             gen.print_interpretation(i);
    }
    case 7: {  // simplify-sound: interpretations are generated and filtered
               // on the hypothesis that all of y holds.  An unchanged element
               // is trivially sound, so only actual rewrites are evaluated.
      auto x = gen.random_element(rng);
      auto y = gen.random_set(rng);
      auto z = sim.simplify(x, y);
      if (z == x) return std::nullopt;
      for (int k = 0; k < 8; ++k) {
        auto i = gen.random_interpretation(rng);
        if (!ceval_list(sim, y, i)) continue;
        bool before = sim.ceval(x, i);
        bool after = sim.ceval(z, i);
        if (before != after)
          return "under " + gen.print_interpretation(i) + " with all of " + print_set(sim, y) +
                 " true, " + sim.print(x) + " evaluates " + std::to_string(before) +
                 " but its simplification " + sim.print(z) + " evaluates " +
                 std::to_string(after);
      }
      return std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

// Checks all eight laws, iters random cases each.  A law's loop stops at its
// first counterexample.
template <PrintableSimplifier S, GeneratorFor<S> G>
std::vector<LawReport> check_laws(const S& sim, const G& gen, std::int64_t iters,
                                  std::uint64_t seed) {
  std::vector<LawReport> reports;
  for (int law = 0; law < static_cast<int>(law_names.size()); ++law) {
    LawReport report{law_names[static_cast<std::size_t>(law)], 0, std::nullopt};
    for (std::int64_t i = 0; i < iters; ++i) {
      Rng rng(mix_seed(seed, static_cast<std::uint64_t>(law), static_cast<std::uint64_t>(i)));
      ++report.cases;
      if (auto failure = run_law_case(sim, gen, law, rng)) {
        report.counterexample = Counterexample{i, *failure};
        break;
      }
    }
    reports.push_back(std::move(report));
  }
  return reports;
}

// Evaluation-only incorporation oracle: under every supplied interpretation,
// the final database must agree with the conjunction of the inputs.  Uses
// ceval alone, so it is independent of the simplify-driven engine path.
template <Simplifier S>
bool soundness_oracle(const S& sim, const element_set_t<S>& before_q,
                      const element_set_t<S>& before_s, const element_set_t<S>& after,
                      const std::vector<interpretation_t<S>>& interps) {
  for (const auto& i : interps) {
    bool expected = ceval_list(sim, before_q, i) && ceval_list(sim, before_s, i);
    if (ceval_list(sim, after, i) != expected) return false;
  }
  return true;
}

// All 2^n valuations over the given atoms, atom j toggling with bit j of the
// enumeration index.  Refuses universes above the cap; callers should fall
// back to sampled valuations instead.
inline std::vector<clauses::Valuation> enumerate_valuations(const std::vector<std::string>& atoms,
                                                            int cap = 12) {
  if (static_cast<int>(atoms.size()) > cap)
    throw universe_cap_error("universe of " + std::to_string(atoms.size()) +
                             " atoms exceeds the exhaustive-enumeration cap of " +
                             std::to_string(cap) + "; use sampled valuations instead");
  std::vector<clauses::Valuation> out;
  out.reserve(1ull << atoms.size());
  for (std::uint64_t bits = 0; bits < (1ull << atoms.size()); ++bits) {
    clauses::Valuation v;
    for (std::size_t j = 0; j < atoms.size(); ++j) v.set(atoms[j], (bits >> j) & 1);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace incorp
