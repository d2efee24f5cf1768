#pragma once

#include <iosfwd>
#include <map>

#include "greene/graph.hpp"
#include "greene/poly.hpp"

namespace greene {

// Formal integer combination of subgraphs of a fixed root graph, keyed by the
// bitmask of surviving edge ids (vertex set is always the full one).
struct SignedGraphSum {
    std::map<EdgeMask, long long> terms;
};

// The alternating sum over nonempty subsets E' of HE(C): the subgraph G\E'
// enters with sign (-1)^{|E'|-1}. 2^{|HE(C)|} - 1 terms; an all-backward
// cycle (a circuit traversed against itself has none here) yields the empty
// sum. Throws if C is not a cycle of g.
SignedGraphSum tc_expand(const DirectedMultigraph& g, const Cycle& c);

// Exact numerator of the reduced rational function: recursion on
//   N(G) = sum_{E' nonempty subset of HE(C)} (-1)^{|E'|-1} N(G\E') prod X_e,
// with N = 1 on trees, N = 0 on disconnected graphs, memoized on the edge
// bitmask. Requires a circuit-free graph. `trace`, when given, receives one
// line per cycle elimination (cycle steps, HE, subset signs).
Polynomial numerator_by_cycles(const DirectedMultigraph& g,
                               CyclePolicy policy = CyclePolicy::LowestEdge,
                               std::ostream* trace = nullptr);

// N(G) with x_{alpha(e)} and x_{omega(e)} identified for every e in HE(C);
// zero by the vanishing corollary. Throws if C is not a cycle of g.
Polynomial vanishing_residue(const DirectedMultigraph& g, const Cycle& c);

}  // namespace greene
