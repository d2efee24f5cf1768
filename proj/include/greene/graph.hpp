#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "greene/common.hpp"

namespace greene {

// Directed edge. `origin`/`end` index into the owning graph's vertex table.
// `id` is assigned at declaration time and survives every subgraph operation,
// so edge subsets of derived graphs are bitmasks over the root graph's edges.
struct Edge {
    int id;
    int origin;
    int end;
};

using EdgeMask = std::uint64_t;

// Directed multigraph with string-labelled vertices. Parallel edges are kept
// as distinct list entries (they appear after contraction). Immutable once
// built; all operations below are pure and return new graphs.
class DirectedMultigraph {
public:
    DirectedMultigraph() = default;
    DirectedMultigraph(std::vector<std::string> vertices, std::vector<Edge> edges);

    int n_vertices() const { return static_cast<int>(vertices_.size()); }
    int n_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }

    const std::string& label(int v) const { return vertices_[v]; }
    int vertex_index(const std::string& label) const;  // -1 if absent
    bool has_vertex(const std::string& label) const { return vertex_index(label) >= 0; }
    const Edge* edge_by_id(int id) const;

    int degree(int v) const;  // in + out
    std::vector<int> incident_edges(int v) const;  // positions into edges(), declaration order

    // Union of edge-id bits, e.g. for tc memo keys. Requires ids < 64.
    EdgeMask edge_id_mask() const;

    bool operator==(const DirectedMultigraph& o) const;

private:
    std::vector<std::string> vertices_;
    std::vector<Edge> edges_;
    std::unordered_map<std::string, int> index_;
};

// One step of a cycle: `forward` means the edge is traversed origin -> end.
struct CycleStep {
    Edge edge;
    bool forward;
};

// Closed injective walk of the underlying undirected graph. HE(C) is the set
// of steps traversed in the graph's own orientation.
struct Cycle {
    std::vector<CycleStep> steps;

    std::vector<Edge> forward_edges() const;  // HE(C)
    Cycle reversed() const;
};

// Directed injective open walk; a single vertex is a degenerate chain.
struct Chain {
    std::vector<std::string> vertices;  // n >= 1
    std::vector<Edge> edges;            // n - 1, head-to-tail
};

// --- parsing ----------------------------------------------------------------

// Edge-list text format: one `<label> -> <label>` per line, `#` comments and
// blank lines ignored, optional leading `vertices: a b c ...` header that
// declares the complete vertex set (isolated vertices included).
DirectedMultigraph parse_graph(const std::string& text);
DirectedMultigraph read_graph_file(const std::string& path);

// --- elementary operations ---------------------------------------------------

int cyclomatic_number(const DirectedMultigraph& g);
int component_count(const DirectedMultigraph& g);  // isolated vertices count
bool is_connected(const DirectedMultigraph& g);
bool has_circuit(const DirectedMultigraph& g);

DirectedMultigraph remove_edges(const DirectedMultigraph& g, const std::set<int>& edge_ids);
DirectedMultigraph remove_vertices(const DirectedMultigraph& g, const std::set<std::string>& labels);
DirectedMultigraph induced_subgraph(const DirectedMultigraph& g, const std::set<std::string>& keep);

// Contracts a non-loop edge; the merged vertex takes the origin's label.
// Rejects contractions that would create a self-loop (parallel partner edge).
DirectedMultigraph contract_edge(const DirectedMultigraph& g, int edge_id);

// Repeatedly removes valence-1 vertices together with their edge. The
// valence-1 vertex with the greatest label goes first, so the result is a
// deterministic function of the graph.
DirectedMultigraph prune(const DirectedMultigraph& g);
// One pruning step (greatest valence-1 vertex), or g itself if none exists.
DirectedMultigraph prune_step(const DirectedMultigraph& g);
std::vector<std::string> valence_one_vertices(const DirectedMultigraph& g);

enum class CyclePolicy { LowestEdge, HighestEdge };

// Deterministic cycle finder: DFS spanning forest rooted at the smallest
// vertex of each component (neighbours explored in edge-id order), fundamental
// cycle of the lowest-id (or highest-id) non-tree edge, oriented so that its
// lowest-id edge is forward. Returns nothing iff g is a forest.
std::optional<Cycle> find_cycle(const DirectedMultigraph& g,
                                CyclePolicy policy = CyclePolicy::LowestEdge);
// Same, restricted to the subgraph whose edge ids are set in `mask`.
std::optional<Cycle> find_cycle_masked(const DirectedMultigraph& g, EdgeMask mask,
                                       CyclePolicy policy = CyclePolicy::LowestEdge);

// Transitive reduction: drops every edge whose endpoints are joined by a chain
// of length >= 2. Requires a circuit-free graph; linear extensions are
// preserved.
DirectedMultigraph hasse_reduction(const DirectedMultigraph& g);
bool is_hasse_reduced(const DirectedMultigraph& g);

// Validates that `c` is a cycle of `g`: edges present, head-to-tail chaining
// under the forward flags, closed, edges and vertices distinct.
bool is_cycle_of(const DirectedMultigraph& g, const Cycle& c);

// Label-insensitive canonical encoding (minimum over all vertex relabelings);
// two graphs are isomorphic iff the encodings match. Exponential, meant for
// the desk-scale graphs of the test suite.
std::string canonical_encoding(const DirectedMultigraph& g);

// Connectivity over an edge subset of g (vertex set unchanged).
int component_count_masked(const DirectedMultigraph& g, EdgeMask mask);
bool is_tree_masked(const DirectedMultigraph& g, EdgeMask mask);

}  // namespace greene
