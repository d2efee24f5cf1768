#pragma once

#include <array>
#include <string>
#include <vector>

#include "greene/graph.hpp"
#include "greene/poly.hpp"

namespace greene {

// Two-loop graph: all edges partitioned into three internally vertex-disjoint
// paths p0, p1, p2 from a common start to a common finish; each step records
// whether the edge points along the path.
struct TwoLoopSpec {
    DirectedMultigraph graph;
    std::array<std::vector<CycleStep>, 3> paths;
};

// Validates chaining, shared endpoints, disjointness and full edge coverage.
void validate_two_loop(const TwoLoopSpec& spec);

// Numerator of a connected graph with cyclomatic number 1: after pruning,
// the sum of minimal-vertex variables minus the sum of maximal-vertex ones.
Polynomial single_cycle_numerator(const DirectedMultigraph& g);

// Bilinear closed form for cyclomatic number 2:
//   S(B0)S(B1) + S(B0)S(F2) + S(F1)S(F2)
// where Fi / Bi sum the edge differences over the forward / backward edges of
// path i.
Polynomial two_loop_numerator(const TwoLoopSpec& spec);

// sum_{i=1..n} prod_{j<i} (a1 - bj) * prod_{k>i} (a2 - bk).
Polynomial bipartite_numerator(int n, const std::string& a1 = "a1",
                               const std::string& a2 = "a2",
                               const std::string& b_prefix = "b");

// Complete bipartite DAG {a1, a2} -> {b1..bn}; edges a1->b1..a1->bn get ids
// 0..n-1, then a2->b1..a2->bn.
DirectedMultigraph build_bipartite(int n);

// Theta graph on three paths of the given lengths; dirs[i] holds one '+'/'-'
// per edge of path i ('+' points along the path). Middle vertices are
// labelled p<i>m<j>; endpoints "v" and "w".
TwoLoopSpec build_theta(const std::array<int, 3>& lens,
                        const std::array<std::string, 3>& dirs);

}  // namespace greene
