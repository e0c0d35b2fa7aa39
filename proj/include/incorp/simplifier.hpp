#pragma once

#include <concepts>
#include <cstdint>
#include <vector>

namespace incorp {

template <typename S>
using element_t = typename S::element_type;

template <typename S>
using element_set_t = std::vector<typename S::element_type>;

template <typename S>
using interpretation_t = typename S::interpretation_type;

// A simplifier packages a theory behind four pure operations:
//
//   simplify(x, y)      simplify element x using the elements of y
//   is_true_symbol(x)   does x denote the distinguished TRUE element
//   ceval(x, i)         truth value of x under interpretation i
//   scount(x)           symbol count of x (a natural number)
//
// The incorporation engine relies on nothing else.  Any implementation must
// satisfy the eight laws below; the conformance harness checks them on
// random inputs.
//
//   scount-natural      scount(x) is a natural number
//   scount-simplify     simplify(x, y) = x, or scount(simplify(x, y)) < scount(x)
//   simplify-idempotent simplify(simplify(x, y), y) = simplify(x, y)
//   simplify-subset     rewritable(x, a) and x subset-of y imply rewritable(y, a)
//   simplify-append     simplify(a, x) = a and simplify(a, y) = a imply
//                       simplify(a, x ++ y) = a
//   ceval-boolean       ceval(x, i) is a boolean (in a typed host: a function)
//   true-symbolp-ceval  is_true_symbol(x) implies ceval(x, i)
//   simplify-sound      ceval_list(y, i) implies
//                       ceval(simplify(x, y), i) = ceval(x, i)
//
// Element sets are ordered sequences; duplicates are legal and order is
// significant (the engine's output order is defined by cons/append below).
template <typename S>
concept Simplifier =
    std::copy_constructible<element_t<S>> &&
    std::equality_comparable<element_t<S>> &&
    requires(const S& sim, const element_t<S>& x, const element_set_t<S>& y,
             const interpretation_t<S>& i) {
      { sim.simplify(x, y) } -> std::same_as<element_t<S>>;
      { sim.is_true_symbol(x) } -> std::same_as<bool>;
      { sim.ceval(x, i) } -> std::same_as<bool>;
      { sim.scount(x) } -> std::same_as<std::int64_t>;
    };

// Simplifier that can also render elements as text, used for counterexample
// reports and diagnostics.  The engine itself never requires printing.
template <typename S>
concept PrintableSimplifier =
    Simplifier<S> && requires(const S& sim, const element_t<S>& x) {
      { sim.print(x) } -> std::convertible_to<std::string>;
    };

template <typename E>
std::vector<E> cons(E x, std::vector<E> xs) {
  xs.insert(xs.begin(), std::move(x));
  return xs;
}

template <typename E>
std::vector<E> append(std::vector<E> xs, const std::vector<E>& ys) {
  xs.insert(xs.end(), ys.begin(), ys.end());
  return xs;
}

// x changed under simplification by y.
template <Simplifier S>
bool rewritable(const S& sim, const element_t<S>& x, const element_set_t<S>& y) {
  return !(sim.simplify(x, y) == x);
}

// Conjunction over the set; true on the empty set.
template <Simplifier S>
bool ceval_list(const S& sim, const element_set_t<S>& xs, const interpretation_t<S>& i) {
  for (const auto& x : xs)
    if (!sim.ceval(x, i)) return false;
  return true;
}

}  // namespace incorp
