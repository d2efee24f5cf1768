#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "greene/graph.hpp"
#include "greene/poly.hpp"

namespace greene {

// Darts are ints: edge id e contributes dart 2e (at the origin, "h1") and
// 2e+1 (at the end, "h2"). The external root dart is kRootDart; it has an
// extremity but no partner.
constexpr int kRootDart = -1;

inline int dart_h1(int edge_id) { return 2 * edge_id; }
inline int dart_h2(int edge_id) { return 2 * edge_id + 1; }
inline int dart_edge(int dart) { return dart / 2; }
inline bool dart_is_h1(int dart) { return dart % 2 == 0; }
inline int dart_partner(int dart) { return dart ^ 1; }
std::string dart_name(int dart);  // "e<id>.h1" / "e<id>.h2" / "root"

// Connected graph plus a rotation system (cyclic dart order per vertex) and
// an external root dart at the vertex `root_vertex`.
class RootedMap {
public:
    RootedMap(DirectedMultigraph graph, std::vector<std::vector<int>> rotations);

    const DirectedMultigraph& graph() const { return graph_; }
    const std::vector<int>& rotation(int vertex) const { return rotations_[vertex]; }
    int root_vertex() const { return root_vertex_; }

    int dart_vertex(int dart) const;
    int rotation_successor(int dart) const;  // next dart clockwise at the same vertex

    // Induced submap on an edge-id subset (vertex set unchanged, root kept).
    RootedMap submap(EdgeMask keep_edges) const;

private:
    DirectedMultigraph graph_;
    std::vector<std::vector<int>> rotations_;  // per vertex index
    int root_vertex_ = -1;
};

// Map file format (JSON):
//   {"edges": [{"id": 0, "from": "a1", "to": "b1"}, ...],
//    "rotation": {"a1": ["e0.h1", "e1.h1"], "b2": ["root", "e4.h2", "e1.h2"], ...}}
// "root" appears exactly once; every vertex lists exactly its incident darts.
RootedMap parse_map(const std::string& json_text);
RootedMap read_map_file(const std::string& path);

// Deterministic rotation system: darts at each vertex sorted by
// (neighbour label, edge id); the root dart sits before the first dart of the
// smallest vertex.
RootedMap build_default_map(const DirectedMultigraph& g);
// Seeded random rotations and root placement, for map-independence checks.
RootedMap build_random_map(const DirectedMultigraph& g, std::mt19937_64& rng);

// All spanning trees of a connected graph as edge-id masks, in deletion/
// contraction order (edges considered in declaration order, inclusion first).
std::vector<EdgeMask> spanning_trees(const DirectedMultigraph& g);

// Face-tracing order of the darts that do not belong to the spanning tree T,
// starting from the root dart. Throws unless T is a spanning tree.
std::vector<int> tour_order(const RootedMap& m, EdgeMask tree);

// True iff for every non-tree edge the origin dart precedes the end dart in
// tour_order(m, tree).
bool is_good_spanning_tree(const RootedMap& m, EdgeMask tree);

// An admissible cycle: type 1 through the root vertex when one exists,
// otherwise found recursively inside a leg (type 2). Empty iff the graph is
// a tree.
std::optional<Cycle> find_admissible_cycle(const RootedMap& m);

// Whether the given cycle of m's graph is admissible (type 1 or 2).
bool is_admissible(const RootedMap& m, const Cycle& c);

// Formal combination of spanning trees, keyed by edge-id mask.
struct TreeCombination {
    std::map<EdgeMask, long long> terms;
};

// Iterated cycle elimination on admissible cycles, dropping disconnected
// terms, until only trees remain. Requires a circuit-free graph.
TreeCombination decompose(const RootedMap& m, std::ostream* trace = nullptr);

// Non-inductive numerator: sum over good spanning trees of the product of
// non-tree edge differences. The OpenMP kernel distributes the good-tree
// filter and per-tree products; numerator_by_map_serial is the reference.
Polynomial numerator_by_map(const RootedMap& m);
Polynomial numerator_by_map_serial(const RootedMap& m);

}  // namespace greene
