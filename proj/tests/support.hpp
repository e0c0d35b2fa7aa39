#pragma once

#include <string>
#include <utility>
#include <vector>

#include "incorp/engine.hpp"
#include "incorp/simplifier.hpp"

// Helpers shared by the test suites.
namespace incorp::testing {

template <PrintableSimplifier S>
std::vector<std::string> printed(const S& sim, const element_set_t<S>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(sim.print(x));
  return out;
}

// Builds a mutually irreducible database from scratch by incorporating the
// raw elements one at a time.
template <Simplifier S>
element_set_t<S> bootstrap_db(const S& sim, const element_set_t<S>& raw) {
  element_set_t<S> db;
  for (const auto& x : raw)
    db = direct_incorporate(sim, element_set_t<S>{x}, std::move(db)).final_db;
  return db;
}

inline bool strictly_decreasing(const std::vector<MeasurePair>& trace) {
  for (std::size_t i = 0; i + 1 < trace.size(); ++i)
    if (!lex_less(trace[i + 1], trace[i])) return false;
  return true;
}

}  // namespace incorp::testing
