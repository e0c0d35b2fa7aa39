#pragma once

#include "simplifier.hpp"

namespace incorp {

// Neither direction rewrites: x is a fixpoint of every singleton {d} drawn
// from s, and every d is a fixpoint of {x}.
template <Simplifier S>
bool mutually_irreducible(const S& sim, const element_t<S>& x, const element_set_t<S>& s) {
  for (const auto& d : s) {
    element_set_t<S> dx{d};
    if (rewritable(sim, x, dx)) return false;
    element_set_t<S> xx{x};
    if (rewritable(sim, d, xx)) return false;
  }
  return true;
}

// Pairwise mutual irreducibility over the whole set.  The verdict is
// insensitive to the order of s.
template <Simplifier S>
bool irreducible_list(const S& sim, const element_set_t<S>& s) {
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    element_set_t<S> rest(s.begin() + static_cast<std::ptrdiff_t>(i) + 1, s.end());
    if (!mutually_irreducible(sim, s[i], rest)) return false;
  }
  return true;
}

}  // namespace incorp
