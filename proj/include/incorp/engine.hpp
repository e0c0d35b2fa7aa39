#pragma once

#include <cstdint>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "simplifier.hpp"

// Incorporation of new elements into a clause database, generic over any
// Simplifier.  Two procedures produce a mutually irreducible database whose
// conjunction is equivalent to queue-and-database:
//
//   direct_incorporate   one loop: simplify the queue head against the
//                        database, discard TRUE, otherwise keep it, move the
//                        database elements it rewrites back onto the queue
//                        (simplified by the kept element alone)
//
//   limbo_incorporate    two stages: first forward-simplify the whole queue
//                        into a "limbo" list (each entry simplified against
//                        the database plus the limbo built so far), then
//                        drain limbo, keeping each entry and preprocessing
//                        the database elements it rewrites back into limbo
//
// Both loops carry the lexicographic termination measure
//
//   (1 + lcount(queue) + lcount(db), 1 + lcount(queue))
//
// which strictly decreases on every iteration for any law-abiding
// simplifier.  The measure trace is always recorded; a non-decrease aborts
// with a diagnostic dump, since it can only mean the simplifier is broken.
namespace incorp {

struct MeasurePair {
  std::int64_t first = 0;   // 1 + lcount(queue) + lcount(db)
  std::int64_t second = 0;  // 1 + lcount(queue)

  bool operator==(const MeasurePair&) const = default;
};

inline bool lex_less(const MeasurePair& a, const MeasurePair& b) {
  return a.first < b.first || (a.first == b.first && a.second < b.second);
}

// Aggregated over both stages for limbo incorporation.
struct IncorporationStats {
  std::int64_t iterations = 0;            // queue elements processed
  std::int64_t true_discards = 0;         // elements that simplified to TRUE
  std::int64_t back_simplifications = 0;  // database elements sent back for requeueing
  std::int64_t nonempty_extractions = 0;  // kept elements that rewrote database members
  std::int64_t empty_extractions = 0;     // kept elements that rewrote nothing
  std::vector<MeasurePair> measure_trace;
};

template <Simplifier S>
struct IncorporationResult {
  element_set_t<S> final_db;
  IncorporationStats stats;
};

template <Simplifier S>
std::int64_t lcount(const S& sim, std::span<const element_t<S>> xs) {
  std::int64_t total = 0;
  for (const auto& x : xs) total += 1 + sim.scount(x);
  return total;
}

template <Simplifier S>
std::int64_t lcount(const S& sim, const element_set_t<S>& xs) {
  return lcount(sim, std::span<const element_t<S>>(xs));
}

template <Simplifier S>
MeasurePair measure_of(const S& sim, std::span<const element_t<S>> queue,
                       std::span<const element_t<S>> db) {
  std::int64_t q = lcount(sim, queue);
  return MeasurePair{1 + q + lcount(sim, db), 1 + q};
}

// Members of s rewritable by x alone, in set order.
template <Simplifier S>
element_set_t<S> extract_rewritables(const S& sim, const element_t<S>& x,
                                     const element_set_t<S>& s) {
  element_set_t<S> unit{x};
  element_set_t<S> out;
  for (const auto& d : s)
    if (rewritable(sim, d, unit)) out.push_back(d);
  return out;
}

// Members of s not rewritable by x alone, in set order.  Together with
// extract_rewritables this partitions s.
template <Simplifier S>
element_set_t<S> remove_rewritables(const S& sim, const element_t<S>& x,
                                    const element_set_t<S>& s) {
  element_set_t<S> unit{x};
  element_set_t<S> out;
  for (const auto& d : s)
    if (!rewritable(sim, d, unit)) out.push_back(d);
  return out;
}

// The extracted members, each already simplified by x alone.  The result may
// contain TRUE; the incorporation loops discard those when dequeued.
template <Simplifier S>
element_set_t<S> extract_and_simplify_rewritables(const S& sim, const element_t<S>& x,
                                                  const element_set_t<S>& s) {
  element_set_t<S> unit{x};
  element_set_t<S> out;
  for (const auto& d : s) {
    auto z = sim.simplify(d, unit);
    if (!(z == d)) out.push_back(std::move(z));
  }
  return out;
}

namespace detail {

template <Simplifier S>
std::string render_set(const S& sim, std::span<const element_t<S>> xs) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out << " ; ";
    if constexpr (PrintableSimplifier<S>)
      out << sim.print(xs[i]);
    else
      out << "scount=" << sim.scount(xs[i]);
  }
  out << ']';
  return out.str();
}

// Appends the measure for (queue, db) to the trace, insisting on a strict
// lexicographic decrease.
template <Simplifier S>
void record_measure(const S& sim, IncorporationStats& stats,
                    std::span<const element_t<S>> queue, std::span<const element_t<S>> db) {
  MeasurePair m = measure_of(sim, queue, db);
  if (!stats.measure_trace.empty() && !lex_less(m, stats.measure_trace.back())) {
    const MeasurePair prev = stats.measure_trace.back();
    std::ostringstream msg;
    msg << "termination measure failed to decrease at iteration " << stats.iterations << ": ("
        << prev.first << "," << prev.second << ") -> (" << m.first << "," << m.second
        << "); queue = " << render_set(sim, queue) << "; db = " << render_set(sim, db);
    throw measure_violation(msg.str());
  }
  stats.measure_trace.push_back(m);
}

}  // namespace detail

// Single-loop incorporation.  Each iteration dequeues the head, simplifies
// it against the current database, and either discards it (TRUE) or conses
// it onto the database minus the members it rewrites, which are simplified
// by the kept element alone and appended to the queue.
template <Simplifier S>
IncorporationResult<S> direct_incorporate(const S& sim, element_set_t<S> q, element_set_t<S> s) {
  IncorporationResult<S> out;
  IncorporationStats& st = out.stats;
  std::size_t head = 0;
  auto queue_rest = [&] { return std::span<const element_t<S>>(q).subspan(head); };
  detail::record_measure(sim, st, queue_rest(), s);
  while (head < q.size()) {
    ++st.iterations;
    const element_t<S> x = q[head++];
    element_t<S> c = sim.simplify(x, s);
    if (sim.is_true_symbol(c)) {
      ++st.true_discards;
      detail::record_measure(sim, st, queue_rest(), s);
      continue;
    }
    element_set_t<S> requeued = extract_and_simplify_rewritables(sim, c, s);
    element_set_t<S> keep = remove_rewritables(sim, c, s);
    st.back_simplifications += static_cast<std::int64_t>(requeued.size());
    requeued.empty() ? ++st.empty_extractions : ++st.nonempty_extractions;
    s = cons(std::move(c), std::move(keep));
    for (auto& e : requeued) q.push_back(std::move(e));
    detail::record_measure(sim, st, queue_rest(), s);
  }
  out.final_db = std::move(s);
  return out;
}

// One forward-simplification step: x is simplified against s ++ l and, when
// not TRUE, appended to l.  Every element this appends is a simplify
// fixpoint of the set used at its insertion.
template <Simplifier S>
element_set_t<S> preprocess(const S& sim, const element_t<S>& x, const element_set_t<S>& s,
                            element_set_t<S> l) {
  element_t<S> z = sim.simplify(x, append(s, l));
  if (sim.is_true_symbol(z)) return l;
  l.push_back(std::move(z));
  return l;
}

// Stage one: fold preprocess over the queue.  s itself is never modified.
template <Simplifier S>
element_set_t<S> initial_limbo(const S& sim, const element_set_t<S>& q,
                               const element_set_t<S>& s) {
  element_set_t<S> l;
  for (const auto& x : q) l = preprocess(sim, x, s, std::move(l));
  return l;
}

// Preprocesses each member of d in turn; the simplifier set for d[i] is
// s ++ d[i+1..] ++ the results accumulated so far (on top of r).
template <Simplifier S>
element_set_t<S> preprocess_list(const S& sim, const element_set_t<S>& d,
                                 const element_set_t<S>& s, element_set_t<S> r) {
  for (std::size_t i = 0; i < d.size(); ++i) {
    element_set_t<S> rest(d.begin() + static_cast<std::ptrdiff_t>(i) + 1, d.end());
    r = preprocess(sim, d[i], append(s, rest), std::move(r));
  }
  return r;
}

// Stage two: drain the limbo list.  The head b is kept as-is (limbo entries
// are already simplified with respect to the database); the database members
// b rewrites are preprocessed against keep ++ limbo and appended to limbo.
template <Simplifier S>
IncorporationResult<S> process_limbo(const S& sim, element_set_t<S> l, element_set_t<S> s) {
  IncorporationResult<S> out;
  IncorporationStats& st = out.stats;
  std::size_t head = 0;
  auto limbo_rest = [&] { return std::span<const element_t<S>>(l).subspan(head); };
  detail::record_measure(sim, st, limbo_rest(), s);
  while (head < l.size()) {
    ++st.iterations;
    const element_t<S> b = l[head++];
    element_set_t<S> extracted = extract_rewritables(sim, b, s);
    element_set_t<S> keep = remove_rewritables(sim, b, s);
    st.back_simplifications += static_cast<std::int64_t>(extracted.size());
    extracted.empty() ? ++st.empty_extractions : ++st.nonempty_extractions;
    element_set_t<S> simplifiers = keep;
    simplifiers.push_back(b);
    simplifiers.insert(simplifiers.end(), l.begin() + static_cast<std::ptrdiff_t>(head),
                       l.end());
    element_set_t<S> fresh = preprocess_list(sim, extracted, simplifiers, {});
    st.true_discards +=
        static_cast<std::int64_t>(extracted.size()) - static_cast<std::int64_t>(fresh.size());
    for (auto& e : fresh) l.push_back(std::move(e));
    s = cons(b, std::move(keep));
    detail::record_measure(sim, st, limbo_rest(), s);
  }
  out.final_db = std::move(s);
  return out;
}

// Two-stage incorporation: build the initial limbo list, then drain it.
// Stats are aggregated across both stages; the measure trace covers the
// draining loop, which is the one with the nontrivial termination argument.
template <Simplifier S>
IncorporationResult<S> limbo_incorporate(const S& sim, const element_set_t<S>& q,
                                         const element_set_t<S>& s) {
  element_set_t<S> l = initial_limbo(sim, q, s);
  const auto stage1_kept = static_cast<std::int64_t>(l.size());
  IncorporationResult<S> out = process_limbo(sim, std::move(l), s);
  out.stats.iterations += static_cast<std::int64_t>(q.size());
  out.stats.true_discards += static_cast<std::int64_t>(q.size()) - stage1_kept;
  return out;
}

}  // namespace incorp
