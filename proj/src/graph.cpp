#include "greene/graph.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>

namespace greene {

DirectedMultigraph::DirectedMultigraph(std::vector<std::string> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    for (int i = 0; i < static_cast<int>(vertices_.size()); ++i) {
        if (vertices_[i].empty()) throw Error("empty vertex label");
        if (!index_.emplace(vertices_[i], i).second)
            throw Error("duplicate vertex label '" + vertices_[i] + "'");
    }
    std::set<int> ids;
    for (const Edge& e : edges_) {
        if (e.origin < 0 || e.origin >= n_vertices() || e.end < 0 || e.end >= n_vertices())
            throw Error("edge endpoint out of range");
        if (!ids.insert(e.id).second) throw Error("duplicate edge id " + std::to_string(e.id));
    }
}

int DirectedMultigraph::vertex_index(const std::string& label) const {
    auto it = index_.find(label);
    return it == index_.end() ? -1 : it->second;
}

const Edge* DirectedMultigraph::edge_by_id(int id) const {
    for (const Edge& e : edges_)
        if (e.id == id) return &e;
    return nullptr;
}

int DirectedMultigraph::degree(int v) const {
    int d = 0;
    for (const Edge& e : edges_) d += (e.origin == v) + (e.end == v);
    return d;
}

std::vector<int> DirectedMultigraph::incident_edges(int v) const {
    std::vector<int> out;
    for (int i = 0; i < n_edges(); ++i)
        if (edges_[i].origin == v || edges_[i].end == v) out.push_back(i);
    return out;
}

EdgeMask DirectedMultigraph::edge_id_mask() const {
    EdgeMask m = 0;
    for (const Edge& e : edges_) {
        if (e.id < 0 || e.id >= 64) throw Error("edge id out of bitmask range");
        m |= EdgeMask{1} << e.id;
    }
    return m;
}

bool DirectedMultigraph::operator==(const DirectedMultigraph& o) const {
    if (vertices_ != o.vertices_) return false;
    auto key = [](const DirectedMultigraph& g) {
        std::vector<std::tuple<int, int, int>> v;
        for (const Edge& e : g.edges_) v.emplace_back(e.id, e.origin, e.end);
        std::sort(v.begin(), v.end());
        return v;
    };
    return key(*this) == key(o);
}

std::vector<Edge> Cycle::forward_edges() const {
    std::vector<Edge> out;
    for (const CycleStep& s : steps)
        if (s.forward) out.push_back(s.edge);
    return out;
}

Cycle Cycle::reversed() const {
    Cycle r;
    for (auto it = steps.rbegin(); it != steps.rend(); ++it)
        r.steps.push_back({it->edge, !it->forward});
    return r;
}

// --- parsing ----------------------------------------------------------------

namespace {

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
}

}  // namespace

DirectedMultigraph parse_graph(const std::string& text) {
    std::vector<std::string> vertices;
    std::unordered_map<std::string, int> seen;
    std::vector<Edge> edges;
    bool explicit_vertices = false;

    auto intern = [&](const std::string& label, int line) -> int {
        auto it = seen.find(label);
        if (it != seen.end()) return it->second;
        if (explicit_vertices)
            throw ParseError("edge references undeclared vertex '" + label + "'", line);
        int idx = static_cast<int>(vertices.size());
        vertices.push_back(label);
        seen.emplace(label, idx);
        return idx;
    };

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        auto tokens = split_ws(line);
        if (tokens.empty()) continue;
        if (tokens[0] == "vertices:") {
            if (explicit_vertices || !edges.empty() || !vertices.empty())
                throw ParseError("vertices: header must come first and appear once", lineno);
            explicit_vertices = true;
            for (size_t i = 1; i < tokens.size(); ++i) {
                if (seen.count(tokens[i]))
                    throw ParseError("duplicate vertex label '" + tokens[i] + "'", lineno);
                seen.emplace(tokens[i], static_cast<int>(vertices.size()));
                vertices.push_back(tokens[i]);
            }
            continue;
        }
        if (tokens.size() != 3 || tokens[1] != "->")
            throw ParseError("expected '<label> -> <label>'", lineno);
        int a = intern(tokens[0], lineno);
        int b = intern(tokens[2], lineno);
        if (a == b) throw ParseError("self-loop '" + tokens[0] + " -> " + tokens[2] + "'", lineno);
        edges.push_back({static_cast<int>(edges.size()), a, b});
    }
    if (vertices.empty()) throw ParseError("empty graph", lineno == 0 ? 1 : lineno);
    return DirectedMultigraph(std::move(vertices), std::move(edges));
}

DirectedMultigraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_graph(ss.str());
}

// --- connectivity helpers ----------------------------------------------------

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

}  // namespace

int component_count_masked(const DirectedMultigraph& g, EdgeMask mask) {
    UnionFind uf(g.n_vertices());
    int comps = g.n_vertices();
    for (const Edge& e : g.edges())
        if (mask & (EdgeMask{1} << e.id))
            if (uf.unite(e.origin, e.end)) --comps;
    return comps;
}

bool is_tree_masked(const DirectedMultigraph& g, EdgeMask mask) {
    int edges = 0;
    for (const Edge& e : g.edges())
        if (mask & (EdgeMask{1} << e.id)) ++edges;
    return component_count_masked(g, mask) == 1 && edges == g.n_vertices() - 1;
}

int component_count(const DirectedMultigraph& g) {
    return component_count_masked(g, g.edge_id_mask());
}

bool is_connected(const DirectedMultigraph& g) { return component_count(g) == 1; }

int cyclomatic_number(const DirectedMultigraph& g) {
    return g.n_edges() - g.n_vertices() + component_count(g);
}

bool has_circuit(const DirectedMultigraph& g) {
    // Kahn peeling.
    std::vector<int> indeg(g.n_vertices(), 0);
    for (const Edge& e : g.edges()) ++indeg[e.end];
    std::vector<int> queue;
    for (int v = 0; v < g.n_vertices(); ++v)
        if (indeg[v] == 0) queue.push_back(v);
    int seen = 0;
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        ++seen;
        for (const Edge& e : g.edges())
            if (e.origin == v && --indeg[e.end] == 0) queue.push_back(e.end);
    }
    return seen != g.n_vertices();
}

// --- removal / induction / contraction ---------------------------------------

DirectedMultigraph remove_edges(const DirectedMultigraph& g, const std::set<int>& edge_ids) {
    for (int id : edge_ids)
        if (!g.edge_by_id(id)) throw Error("unknown edge id " + std::to_string(id));
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        if (!edge_ids.count(e.id)) edges.push_back(e);
    return DirectedMultigraph(g.vertices(), std::move(edges));
}

DirectedMultigraph remove_vertices(const DirectedMultigraph& g, const std::set<std::string>& labels) {
    for (const auto& l : labels)
        if (!g.has_vertex(l)) throw Error("unknown vertex '" + l + "'");
    std::set<std::string> keep(g.vertices().begin(), g.vertices().end());
    for (const auto& l : labels) keep.erase(l);
    return induced_subgraph(g, keep);
}

DirectedMultigraph induced_subgraph(const DirectedMultigraph& g, const std::set<std::string>& keep) {
    std::vector<std::string> vertices;
    std::unordered_map<int, int> remap;
    for (int v = 0; v < g.n_vertices(); ++v) {
        if (keep.count(g.label(v))) {
            remap[v] = static_cast<int>(vertices.size());
            vertices.push_back(g.label(v));
        }
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        auto a = remap.find(e.origin), b = remap.find(e.end);
        if (a != remap.end() && b != remap.end()) edges.push_back({e.id, a->second, b->second});
    }
    return DirectedMultigraph(std::move(vertices), std::move(edges));
}

DirectedMultigraph contract_edge(const DirectedMultigraph& g, int edge_id) {
    const Edge* e = g.edge_by_id(edge_id);
    if (!e) throw Error("unknown edge id " + std::to_string(edge_id));
    if (e->origin == e->end) throw Error("cannot contract a self-loop");
    for (const Edge& o : g.edges()) {
        if (o.id == edge_id) continue;
        const bool same = (o.origin == e->origin && o.end == e->end) ||
                          (o.origin == e->end && o.end == e->origin);
        if (same)
            throw Error("contraction of edge " + std::to_string(edge_id) +
                        " would create a self-loop from a parallel edge");
    }
    const int keep = e->origin, gone = e->end;
    std::vector<std::string> vertices;
    std::unordered_map<int, int> remap;
    for (int v = 0; v < g.n_vertices(); ++v) {
        if (v == gone) continue;
        remap[v] = static_cast<int>(vertices.size());
        vertices.push_back(g.label(v));
    }
    remap[gone] = remap[keep];
    std::vector<Edge> edges;
    for (const Edge& o : g.edges()) {
        if (o.id == edge_id) continue;
        edges.push_back({o.id, remap[o.origin], remap[o.end]});
    }
    return DirectedMultigraph(std::move(vertices), std::move(edges));
}

std::vector<std::string> valence_one_vertices(const DirectedMultigraph& g) {
    std::vector<std::string> out;
    for (int v = 0; v < g.n_vertices(); ++v)
        if (g.degree(v) == 1) out.push_back(g.label(v));
    std::sort(out.begin(), out.end(), natural_less);
    return out;
}

DirectedMultigraph prune_step(const DirectedMultigraph& g) {
    auto ones = valence_one_vertices(g);
    if (ones.empty()) return g;
    return remove_vertices(g, {ones.back()});
}

DirectedMultigraph prune(const DirectedMultigraph& g) {
    DirectedMultigraph cur = g;
    for (;;) {
        auto ones = valence_one_vertices(cur);
        if (ones.empty()) return cur;
        cur = remove_vertices(cur, {ones.back()});
    }
}

// --- deterministic cycle finding ----------------------------------------------

std::optional<Cycle> find_cycle_masked(const DirectedMultigraph& g, EdgeMask mask,
                                       CyclePolicy policy) {
    const int n = g.n_vertices();
    // Adjacency in edge-position order; roots chosen in natural label order.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return natural_less(g.label(a), g.label(b)); });

    std::vector<std::vector<int>> adj(n);  // edge positions
    for (int i = 0; i < g.n_edges(); ++i) {
        const Edge& e = g.edges()[i];
        if (!(mask & (EdgeMask{1} << e.id))) continue;
        adj[e.origin].push_back(i);
        adj[e.end].push_back(i);
    }

    std::vector<int> parent_edge(n, -1);  // edge position leading into vertex in DFS tree
    std::vector<int> parent(n, -1);
    std::vector<bool> visited(n, false);
    std::vector<bool> in_tree(g.n_edges(), false);
    std::vector<int> non_tree;  // edge positions

    std::function<void(int)> dfs = [&](int v) {
        visited[v] = true;
        for (int pos : adj[v]) {
            const Edge& e = g.edges()[pos];
            int w = e.origin == v ? e.end : e.origin;
            if (!visited[w]) {
                in_tree[pos] = true;
                parent[w] = v;
                parent_edge[w] = pos;
                dfs(w);
            } else if (!in_tree[pos] && pos != parent_edge[v]) {
                non_tree.push_back(pos);
            }
        }
    };
    for (int v : order)
        if (!visited[v]) dfs(v);

    if (non_tree.empty()) return std::nullopt;
    // Each non-tree edge is recorded once (second visit is filtered by position
    // equality only for the tree edge, but a non-tree edge appears in both
    // endpoint lists); dedupe and pick per policy.
    std::sort(non_tree.begin(), non_tree.end());
    non_tree.erase(std::unique(non_tree.begin(), non_tree.end()), non_tree.end());
    auto best = std::min_element(non_tree.begin(), non_tree.end(), [&](int a, int b) {
        int ia = g.edges()[a].id, ib = g.edges()[b].id;
        return policy == CyclePolicy::LowestEdge ? ia < ib : ia > ib;
    });
    const Edge& ce = g.edges()[*best];

    // Tree paths from both endpoints to their LCA-ish meeting point: walk both
    // ancestor chains to the root, then splice.
    auto path_to_root = [&](int v) {
        std::vector<int> vs{v};
        while (parent[v] != -1) {
            v = parent[v];
            vs.push_back(v);
        }
        return vs;
    };
    std::vector<int> pa = path_to_root(ce.origin), pb = path_to_root(ce.end);
    std::set<int> aset(pa.begin(), pa.end());
    int meet = -1;
    for (int v : pb)
        if (aset.count(v)) {
            meet = v;
            break;
        }
    // Walk: ce.end -> ... -> meet -> ... -> ce.origin, then close with ce.
    Cycle cyc;
    for (int v = ce.end; v != meet; v = parent[v]) {
        const Edge& pe = g.edges()[parent_edge[v]];
        // Step goes v -> parent[v]; forward iff edge oriented v -> parent[v].
        cyc.steps.push_back({pe, pe.origin == v});
    }
    std::vector<CycleStep> up;
    for (int v = ce.origin; v != meet; v = parent[v]) {
        const Edge& pe = g.edges()[parent_edge[v]];
        // Will be traversed parent[v] -> v; forward iff oriented that way.
        up.push_back({pe, pe.end == v});
    }
    std::reverse(up.begin(), up.end());
    cyc.steps.insert(cyc.steps.end(), up.begin(), up.end());
    cyc.steps.push_back({ce, true});  // origin -> end closes the walk

    // Orient so that the lowest-id edge of the cycle is forward.
    auto low = std::min_element(cyc.steps.begin(), cyc.steps.end(),
                                [](const CycleStep& a, const CycleStep& b) {
                                    return a.edge.id < b.edge.id;
                                });
    if (!low->forward) return cyc.reversed();
    return cyc;
}

std::optional<Cycle> find_cycle(const DirectedMultigraph& g, CyclePolicy policy) {
    return find_cycle_masked(g, g.edge_id_mask(), policy);
}

bool is_cycle_of(const DirectedMultigraph& g, const Cycle& c) {
    if (c.steps.size() < 2) return false;
    std::set<int> edge_ids;
    std::set<int> seen_vertices;
    for (size_t i = 0; i < c.steps.size(); ++i) {
        const CycleStep& s = c.steps[i];
        const Edge* e = g.edge_by_id(s.edge.id);
        if (!e || e->origin != s.edge.origin || e->end != s.edge.end) return false;
        if (!edge_ids.insert(s.edge.id).second) return false;
        int from = s.forward ? s.edge.origin : s.edge.end;
        int to = s.forward ? s.edge.end : s.edge.origin;
        if (!seen_vertices.insert(from).second) return false;
        const CycleStep& next = c.steps[(i + 1) % c.steps.size()];
        int next_from = next.forward ? next.edge.origin : next.edge.end;
        if (to != next_from) return false;
    }
    return true;
}

// --- transitive reduction ------------------------------------------------------

namespace {

// reach[v] = vertices reachable from v by directed paths of length >= 1.
std::vector<std::set<int>> reachability(const DirectedMultigraph& g) {
    std::vector<std::vector<int>> out(g.n_vertices());
    for (const Edge& e : g.edges()) out[e.origin].push_back(e.end);
    std::vector<std::set<int>> reach(g.n_vertices());
    std::function<void(int, std::set<int>&)> dfs = [&](int v, std::set<int>& acc) {
        for (int w : out[v])
            if (acc.insert(w).second) dfs(w, acc);
    };
    for (int v = 0; v < g.n_vertices(); ++v) dfs(v, reach[v]);
    return reach;
}

}  // namespace

DirectedMultigraph hasse_reduction(const DirectedMultigraph& g) {
    if (has_circuit(g)) throw Error("hasse_reduction requires a circuit-free graph");
    auto reach = reachability(g);
    std::set<int> drop;
    for (const Edge& e : g.edges()) {
        // A chain of length >= 2 from origin to end: some out-edge to an
        // intermediate vertex that still reaches `end`.
        for (const Edge& f : g.edges()) {
            if (f.origin != e.origin || f.end == e.end) continue;
            if (reach[f.end].count(e.end)) {
                drop.insert(e.id);
                break;
            }
        }
    }
    return remove_edges(g, drop);
}

bool is_hasse_reduced(const DirectedMultigraph& g) {
    return hasse_reduction(g).n_edges() == g.n_edges();
}

// --- canonical encoding ----------------------------------------------------------

std::string canonical_encoding(const DirectedMultigraph& g) {
    const int n = g.n_vertices();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
        std::vector<std::pair<int, int>> arcs;
        for (const Edge& e : g.edges()) arcs.emplace_back(perm[e.origin], perm[e.end]);
        std::sort(arcs.begin(), arcs.end());
        std::string enc = std::to_string(n) + ";";
        for (auto& [a, b] : arcs) enc += std::to_string(a) + ">" + std::to_string(b) + ";";
        if (best.empty() || enc < best) best = enc;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace greene
