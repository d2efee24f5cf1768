#include "greene/rmap.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "json.hpp"

namespace greene {

std::string dart_name(int dart) {
    if (dart == kRootDart) return "root";
    return "e" + std::to_string(dart_edge(dart)) + (dart_is_h1(dart) ? ".h1" : ".h2");
}

RootedMap::RootedMap(DirectedMultigraph graph, std::vector<std::vector<int>> rotations)
    : graph_(std::move(graph)), rotations_(std::move(rotations)) {
    if (static_cast<int>(rotations_.size()) != graph_.n_vertices())
        throw Error("rotation table size does not match vertex count");
    // Expected dart set per vertex.
    std::vector<std::multiset<int>> expect(graph_.n_vertices());
    for (const Edge& e : graph_.edges()) {
        expect[e.origin].insert(dart_h1(e.id));
        expect[e.end].insert(dart_h2(e.id));
    }
    int roots = 0;
    for (int v = 0; v < graph_.n_vertices(); ++v) {
        std::multiset<int> got;
        for (int d : rotations_[v]) {
            if (d == kRootDart) {
                ++roots;
                root_vertex_ = v;
                continue;
            }
            got.insert(d);
        }
        if (got != expect[v])
            throw Error("rotation orbit mismatch at vertex '" + graph_.label(v) + "'");
    }
    if (roots == 0) throw Error("missing root dart");
    if (roots > 1) throw Error("duplicate root dart");
}

int RootedMap::dart_vertex(int dart) const {
    if (dart == kRootDart) return root_vertex_;
    const Edge* e = graph_.edge_by_id(dart_edge(dart));
    if (!e) throw Error("dangling dart " + dart_name(dart));
    return dart_is_h1(dart) ? e->origin : e->end;
}

int RootedMap::rotation_successor(int dart) const {
    const std::vector<int>& rot = rotations_[dart_vertex(dart)];
    for (size_t i = 0; i < rot.size(); ++i)
        if (rot[i] == dart) return rot[(i + 1) % rot.size()];
    throw Error("dart not present in its rotation: " + dart_name(dart));
}

RootedMap RootedMap::submap(EdgeMask keep_edges) const {
    std::set<int> drop;
    for (const Edge& e : graph_.edges())
        if (!(keep_edges & (EdgeMask{1} << e.id))) drop.insert(e.id);
    DirectedMultigraph sub = remove_edges(graph_, drop);
    std::vector<std::vector<int>> rots(rotations_.size());
    for (size_t v = 0; v < rotations_.size(); ++v)
        for (int d : rotations_[v])
            if (d == kRootDart || !drop.count(dart_edge(d))) rots[v].push_back(d);
    return RootedMap(std::move(sub), std::move(rots));
}

// --- parsing -----------------------------------------------------------------

namespace {

int parse_dart_ref(const std::string& ref) {
    if (ref == "root") return kRootDart;
    if (ref.size() >= 4 && ref[0] == 'e') {
        auto dot = ref.find(".h");
        if (dot != std::string::npos) {
            int id = std::stoi(ref.substr(1, dot - 1));
            const std::string side = ref.substr(dot + 2);
            if (side == "1") return dart_h1(id);
            if (side == "2") return dart_h2(id);
        }
    }
    throw Error("bad dart reference '" + ref + "'");
}

}  // namespace

RootedMap parse_map(const std::string& json_text) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::parse(json_text);
    std::vector<std::string> vertices;
    std::map<std::string, int> index;
    auto intern = [&](const std::string& label) {
        auto it = index.find(label);
        if (it != index.end()) return it->second;
        int idx = static_cast<int>(vertices.size());
        vertices.push_back(label);
        index.emplace(label, idx);
        return idx;
    };
    // Vertex order: rotation keys first (they enumerate every vertex), then
    // any endpoint not listed (caught by validation below).
    if (doc.contains("rotation"))
        for (auto it = doc["rotation"].begin(); it != doc["rotation"].end(); ++it)
            intern(it.key());
    std::vector<Edge> edges;
    for (const auto& je : doc.at("edges")) {
        Edge e;
        e.id = je.at("id").get<int>();
        e.origin = intern(je.at("from").get<std::string>());
        e.end = intern(je.at("to").get<std::string>());
        if (e.origin == e.end) throw Error("self-loop in map file");
        edges.push_back(e);
    }
    DirectedMultigraph g(vertices, edges);
    std::vector<std::vector<int>> rots(g.n_vertices());
    for (auto it = doc.at("rotation").begin(); it != doc.at("rotation").end(); ++it) {
        int v = g.vertex_index(it.key());
        for (const auto& ref : it.value()) {
            int d = parse_dart_ref(ref.get<std::string>());
            if (d != kRootDart && !g.edge_by_id(dart_edge(d)))
                throw Error("dangling partner: dart '" + ref.get<std::string>() +
                            "' references no edge");
            rots[v].push_back(d);
        }
    }
    return RootedMap(std::move(g), std::move(rots));
}

RootedMap read_map_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_map(ss.str());
}

// --- builders ------------------------------------------------------------------

namespace {

std::vector<std::vector<int>> incident_darts(const DirectedMultigraph& g) {
    std::vector<std::vector<int>> darts(g.n_vertices());
    for (const Edge& e : g.edges()) {
        darts[e.origin].push_back(dart_h1(e.id));
        darts[e.end].push_back(dart_h2(e.id));
    }
    return darts;
}

}  // namespace

RootedMap build_default_map(const DirectedMultigraph& g) {
    auto darts = incident_darts(g);
    for (int v = 0; v < g.n_vertices(); ++v) {
        std::sort(darts[v].begin(), darts[v].end(), [&](int a, int b) {
            const Edge* ea = g.edge_by_id(dart_edge(a));
            const Edge* eb = g.edge_by_id(dart_edge(b));
            const std::string& na = g.label(dart_is_h1(a) ? ea->end : ea->origin);
            const std::string& nb = g.label(dart_is_h1(b) ? eb->end : eb->origin);
            if (na != nb) return natural_less(na, nb);
            return dart_edge(a) < dart_edge(b);
        });
    }
    int star = 0;
    for (int v = 1; v < g.n_vertices(); ++v)
        if (natural_less(g.label(v), g.label(star))) star = v;
    darts[star].insert(darts[star].begin(), kRootDart);
    return RootedMap(g, std::move(darts));
}

RootedMap build_random_map(const DirectedMultigraph& g, std::mt19937_64& rng) {
    auto darts = incident_darts(g);
    for (auto& rot : darts) std::shuffle(rot.begin(), rot.end(), rng);
    int star = std::uniform_int_distribution<int>(0, g.n_vertices() - 1)(rng);
    int pos = std::uniform_int_distribution<int>(0, static_cast<int>(darts[star].size()))(rng);
    darts[star].insert(darts[star].begin() + pos, kRootDart);
    return RootedMap(g, std::move(darts));
}

// --- spanning trees --------------------------------------------------------------

namespace {

struct TreeEnum {
    const DirectedMultigraph& g;
    std::vector<EdgeMask> out;
    std::vector<int> parent;

    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }

    void rec(int pos, EdgeMask chosen, int picked) {
        const int n = g.n_vertices(), m = g.n_edges();
        if (picked == n - 1) {
            out.push_back(chosen);
            return;
        }
        if (pos == m || picked + (m - pos) < n - 1) return;
        const Edge& e = g.edges()[pos];
        const int a = find(e.origin), b = find(e.end);
        if (a != b) {
            std::vector<int> saved = parent;
            parent[a] = b;
            rec(pos + 1, chosen | (EdgeMask{1} << e.id), picked + 1);
            parent = saved;
        }
        rec(pos + 1, chosen, picked);
    }
};

}  // namespace

std::vector<EdgeMask> spanning_trees(const DirectedMultigraph& g) {
    if (!is_connected(g)) throw Error("spanning_trees requires a connected graph");
    TreeEnum te{g, {}, std::vector<int>(g.n_vertices())};
    std::iota(te.parent.begin(), te.parent.end(), 0);
    te.rec(0, 0, 0);
    return te.out;
}

// --- tour of a spanning tree -------------------------------------------------------

std::vector<int> tour_order(const RootedMap& m, EdgeMask tree) {
    const DirectedMultigraph& g = m.graph();
    if ((tree & ~g.edge_id_mask()) != 0 || !is_tree_masked(g, tree))
        throw Error("tour_order: not a spanning tree of the map");
    std::vector<int> order;
    const int total_darts = 2 * g.n_edges() + 1;
    int cur = m.rotation_successor(kRootDart);
    int guard = 0;
    while (cur != kRootDart) {
        if (++guard > 2 * total_darts + 2) throw Error("tour did not close");
        if (tree & (EdgeMask{1} << dart_edge(cur))) {
            cur = m.rotation_successor(dart_partner(cur));
        } else {
            order.push_back(cur);
            cur = m.rotation_successor(cur);
        }
    }
    return order;
}

bool is_good_spanning_tree(const RootedMap& m, EdgeMask tree) {
    const std::vector<int> tour = tour_order(m, tree);
    std::map<int, int> pos;
    for (size_t i = 0; i < tour.size(); ++i) pos[tour[i]] = static_cast<int>(i);
    for (const Edge& e : m.graph().edges()) {
        if (tree & (EdgeMask{1} << e.id)) continue;
        if (pos.at(dart_h1(e.id)) > pos.at(dart_h2(e.id))) return false;
    }
    return true;
}

// --- admissible cycles ----------------------------------------------------------

namespace {

// Type-1 test for a cycle through the root vertex: reading the rotation at
// the root from the root dart, the departing dart must come before the
// arriving one.
bool type1_admissible(const RootedMap& m, const Cycle& c) {
    const DirectedMultigraph& g = m.graph();
    const int star = m.root_vertex();
    int arrive = -2, depart = -2;
    const size_t k = c.steps.size();
    for (size_t i = 0; i < k; ++i) {
        const CycleStep& s = c.steps[i];
        const int to = s.forward ? s.edge.end : s.edge.origin;
        if (to == star) {
            arrive = s.edge.end == star ? dart_h2(s.edge.id) : dart_h1(s.edge.id);
            const CycleStep& nxt = c.steps[(i + 1) % k];
            depart = nxt.edge.origin == star ? dart_h1(nxt.edge.id) : dart_h2(nxt.edge.id);
            break;
        }
    }
    if (arrive == -2) return false;  // cycle does not pass through the root
    (void)g;
    const std::vector<int>& rot = m.rotation(star);
    size_t start = 0;
    while (rot[start] != kRootDart) ++start;
    for (size_t off = 1; off < rot.size(); ++off) {
        const int d = rot[(start + off) % rot.size()];
        if (d == depart) return true;
        if (d == arrive) return false;
    }
    throw Error("cycle darts not found in the root rotation");
}

bool cycle_visits(const Cycle& c, int vertex) {
    for (const CycleStep& s : c.steps)
        if (s.edge.origin == vertex || s.edge.end == vertex) return true;
    return false;
}

// Deterministic enumeration of simple cycles through the root vertex; calls
// `visit` with each cycle once (in one traversal direction) until it returns
// true. Returns whether any call returned true.
bool for_cycles_through_root(const RootedMap& m, const std::function<bool(const Cycle&)>& visit) {
    const DirectedMultigraph& g = m.graph();
    const int star = m.root_vertex();
    std::vector<int> positions(g.n_edges());
    std::iota(positions.begin(), positions.end(), 0);
    std::sort(positions.begin(), positions.end(),
              [&](int a, int b) { return g.edges()[a].id < g.edges()[b].id; });

    std::vector<CycleStep> path;
    std::vector<bool> edge_used(g.n_edges(), false);
    std::vector<bool> vertex_used(g.n_vertices(), false);
    bool done = false;

    std::function<void(int)> extend = [&](int at) {
        if (done) return;
        for (int pos : positions) {
            if (done) return;
            if (edge_used[pos]) continue;
            const Edge& e = g.edges()[pos];
            int to;
            bool fwd;
            if (e.origin == at) {
                to = e.end;
                fwd = true;
            } else if (e.end == at) {
                to = e.origin;
                fwd = false;
            } else {
                continue;
            }
            if (to == star) {
                if (path.size() >= 1) {
                    Cycle c;
                    c.steps = path;
                    c.steps.push_back({e, fwd});
                    if (c.steps.size() >= 2 &&
                        c.steps.front().edge.id < c.steps.back().edge.id) {
                        if (visit(c)) {
                            done = true;
                            return;
                        }
                    }
                }
                continue;
            }
            if (vertex_used[to]) continue;
            edge_used[pos] = true;
            vertex_used[to] = true;
            path.push_back({e, fwd});
            extend(to);
            path.pop_back();
            vertex_used[to] = false;
            edge_used[pos] = false;
        }
    };
    vertex_used[star] = true;
    extend(star);
    return done;
}

struct Leg {
    RootedMap map;
    std::vector<int> vertex_remap;  // leg vertex index -> parent vertex index
};

// Components of M minus the root vertex, each rooted at its attachment
// vertex: the fresh external dart takes the slot of the removed connecting
// edge's dart. Only valid when no cycle passes through the root, so each
// component hangs on exactly one edge. Legs are ordered by the position of
// their connecting dart in the rotation at the root, read from the root dart.
std::vector<Leg> split_legs(const RootedMap& m) {
    const DirectedMultigraph& g = m.graph();
    const int star = m.root_vertex();

    const std::vector<int>& rot = m.rotation(star);
    size_t start = 0;
    while (rot[start] != kRootDart) ++start;

    std::vector<Leg> legs;
    for (size_t off = 1; off < rot.size(); ++off) {
        const int d = rot[(start + off) % rot.size()];
        const Edge* conn = g.edge_by_id(dart_edge(d));
        const int attach = conn->origin == star ? conn->end : conn->origin;

        // Vertices of the component reachable from `attach` without star.
        std::set<std::string> comp{g.label(attach)};
        std::vector<int> stack{attach};
        std::vector<bool> seen(g.n_vertices(), false);
        seen[attach] = seen[star] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (const Edge& e : g.edges()) {
                for (int w : {e.origin, e.end}) {
                    if ((e.origin == v || e.end == v) && !seen[w]) {
                        seen[w] = true;
                        comp.insert(g.label(w));
                        stack.push_back(w);
                    }
                }
            }
        }
        DirectedMultigraph sub = induced_subgraph(g, comp);
        std::vector<std::vector<int>> rots(sub.n_vertices());
        std::vector<int> remap(sub.n_vertices());
        for (int v = 0; v < sub.n_vertices(); ++v) {
            const int pv = g.vertex_index(sub.label(v));
            remap[v] = pv;
            for (int dd : m.rotation(pv)) {
                if (dd == kRootDart) continue;
                if (dart_edge(dd) == conn->id) {
                    rots[v].push_back(kRootDart);  // fresh root in the old slot
                    continue;
                }
                if (sub.edge_by_id(dart_edge(dd))) rots[v].push_back(dd);
            }
        }
        legs.push_back({RootedMap(std::move(sub), std::move(rots)), std::move(remap)});
    }
    return legs;
}

// Re-expresses a cycle in another graph carrying the same edge ids.
Cycle lift_cycle(const DirectedMultigraph& target, const Cycle& cycle) {
    Cycle out;
    for (const CycleStep& s : cycle.steps) {
        const Edge* e = target.edge_by_id(s.edge.id);
        if (!e) throw Error("cycle edge missing from target graph");
        out.steps.push_back({*e, s.forward});
    }
    return out;
}

}  // namespace

std::optional<Cycle> find_admissible_cycle(const RootedMap& m) {
    std::optional<Cycle> found;
    for_cycles_through_root(m, [&](const Cycle& c) {
        if (type1_admissible(m, c)) {
            found = c;
            return true;
        }
        Cycle rev = c.reversed();
        if (type1_admissible(m, rev)) {
            found = rev;
            return true;
        }
        return false;
    });
    if (found) return found;
    if (cyclomatic_number(m.graph()) == 0) return std::nullopt;
    for (const Leg& leg : split_legs(m)) {
        if (auto sub = find_admissible_cycle(leg.map))
            return lift_cycle(m.graph(), *sub);
    }
    return std::nullopt;
}

bool is_admissible(const RootedMap& m, const Cycle& c) {
    if (!is_cycle_of(m.graph(), c)) return false;
    if (cycle_visits(c, m.root_vertex())) return type1_admissible(m, c);
    // Type 2 applies only when no cycle at all passes through the root.
    bool any_through_root = for_cycles_through_root(m, [](const Cycle&) { return true; });
    if (any_through_root) return false;
    for (const Leg& leg : split_legs(m)) {
        if (leg.map.graph().edge_by_id(c.steps.front().edge.id)) {
            Cycle sub = lift_cycle(leg.map.graph(), c);
            return is_admissible(leg.map, sub);
        }
    }
    return false;
}

// --- decomposition -----------------------------------------------------------------

TreeCombination decompose(const RootedMap& m, std::ostream* trace) {
    const DirectedMultigraph& g = m.graph();
    if (has_circuit(g)) throw Error("decompose requires a circuit-free graph");
    std::map<EdgeMask, long long> pending{{g.edge_id_mask(), 1}};
    TreeCombination out;

    while (!pending.empty()) {
        // Deterministic pick: smallest non-forest mask; forests move to the
        // output combination.
        auto it = pending.begin();
        const EdgeMask mask = it->first;
        const long long coeff = it->second;
        pending.erase(it);
        if (coeff == 0) continue;

        int edges = 0;
        for (const Edge& e : g.edges())
            if (mask & (EdgeMask{1} << e.id)) ++edges;
        if (component_count_masked(g, mask) > 1) continue;  // delta drops these
        if (edges == g.n_vertices() - 1) {                  // connected forest: a tree
            out.terms[mask] += coeff;
            continue;
        }

        RootedMap sub = m.submap(mask);
        auto cycle = find_admissible_cycle(sub);
        if (!cycle) throw Error("internal: non-tree submap without admissible cycle");
        std::vector<int> he;
        for (const Edge& e : cycle->forward_edges()) he.push_back(e.id);
        if (trace) {
            *trace << "T_C on mask " << mask << ": HE = {";
            for (size_t i = 0; i < he.size(); ++i) *trace << (i ? "," : "") << he[i];
            *trace << "}\n";
        }
        const int k = static_cast<int>(he.size());
        for (int bits = 1; bits < (1 << k); ++bits) {
            EdgeMask removed = 0;
            for (int i = 0; i < k; ++i)
                if (bits & (1 << i)) removed |= EdgeMask{1} << he[i];
            const long long sign = __builtin_popcount(static_cast<unsigned>(bits)) % 2 ? 1 : -1;
            const EdgeMask next = mask & ~removed;
            if (component_count_masked(g, next) > 1) continue;  // delta
            pending[next] += sign * coeff;
        }
    }
    for (auto it = out.terms.begin(); it != out.terms.end();)
        it = it->second == 0 ? out.terms.erase(it) : std::next(it);
    return out;
}

// --- numerator by good spanning trees ---------------------------------------------

namespace {

Polynomial non_tree_product(const DirectedMultigraph& g, EdgeMask tree) {
    Polynomial p = Polynomial::constant(1);
    for (const Edge& e : g.edges())
        if (!(tree & (EdgeMask{1} << e.id))) p = p * linear_factor(g, e);
    return p;
}

void check_map_preconditions(const RootedMap& m) {
    if (!is_connected(m.graph())) throw Error("numerator_by_map requires a connected graph");
    if (has_circuit(m.graph())) throw Error("numerator is undefined on graphs with circuits");
}

}  // namespace

Polynomial numerator_by_map_serial(const RootedMap& m) {
    check_map_preconditions(m);
    Polynomial sum;
    for (EdgeMask tree : spanning_trees(m.graph()))
        if (is_good_spanning_tree(m, tree)) sum = sum + non_tree_product(m.graph(), tree);
    return sum;
}

Polynomial numerator_by_map(const RootedMap& m) {
    check_map_preconditions(m);
    const std::vector<EdgeMask> trees = spanning_trees(m.graph());
#ifdef _OPENMP
    const int nthreads = omp_get_max_threads();
    std::vector<Polynomial> partial(nthreads);
#pragma omp parallel
    {
        const int t = omp_get_thread_num();
#pragma omp for schedule(dynamic)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(trees.size()); ++i)
            if (is_good_spanning_tree(m, trees[i]))
                partial[t] = partial[t] + non_tree_product(m.graph(), trees[i]);
    }
    Polynomial sum;
    for (const Polynomial& p : partial) sum = sum + p;
    return sum;
#else
    return numerator_by_map_serial(m);
#endif
}

}  // namespace greene
