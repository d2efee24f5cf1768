#include "greene/facto.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "greene/tc.hpp"

namespace greene {

Polynomial factor_product(const FactorTree& t) {
    if (t.is_leaf()) return t.value;
    Polynomial p = Polynomial::constant(1);
    for (const FactorTree& c : t.children) p = p * factor_product(c);
    return p;
}

std::vector<const FactorTree*> factor_leaves(const FactorTree& t) {
    std::vector<const FactorTree*> out;
    std::function<void(const FactorTree&)> walk = [&](const FactorTree& node) {
        if (node.is_leaf()) {
            out.push_back(&node);
            return;
        }
        for (const FactorTree& c : node.children) walk(c);
    };
    walk(t);
    return out;
}

namespace {

// Every directed path of g, as vertex-index sequences (single vertices
// included), enumerated in natural start-vertex order.
std::vector<std::vector<int>> all_chains(const DirectedMultigraph& g) {
    const int n = g.n_vertices();
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return natural_less(g.label(a), g.label(b)); });

    std::vector<std::vector<int>> out;
    std::vector<int> path;
    std::function<void(int)> extend = [&](int v) {
        out.push_back(path);
        for (const Edge& e : g.edges()) {
            if (e.origin != v) continue;
            if (std::find(path.begin(), path.end(), e.end) != path.end()) continue;
            path.push_back(e.end);
            extend(e.end);
            path.pop_back();
        }
    };
    for (int v : order) {
        path = {v};
        extend(v);
    }
    return out;
}

std::vector<std::set<std::string>> components_without(const DirectedMultigraph& g,
                                                      const std::set<std::string>& removed) {
    std::vector<bool> gone(g.n_vertices(), false);
    for (int v = 0; v < g.n_vertices(); ++v)
        if (removed.count(g.label(v))) gone[v] = true;
    std::vector<int> comp(g.n_vertices(), -1);
    int n_comp = 0;
    for (int v = 0; v < g.n_vertices(); ++v) {
        if (gone[v] || comp[v] >= 0) continue;
        std::vector<int> stack{v};
        comp[v] = n_comp;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (const Edge& e : g.edges()) {
                if (e.origin != u && e.end != u) continue;
                int w = e.origin == u ? e.end : e.origin;
                if (!gone[w] && comp[w] < 0) {
                    comp[w] = n_comp;
                    stack.push_back(w);
                }
            }
        }
        ++n_comp;
    }
    std::vector<std::set<std::string>> out(n_comp);
    for (int v = 0; v < g.n_vertices(); ++v)
        if (comp[v] >= 0) out[comp[v]].insert(g.label(v));
    return out;
}

Chain make_chain(const DirectedMultigraph& g, const std::vector<int>& vertex_path) {
    Chain c;
    for (int v : vertex_path) c.vertices.push_back(g.label(v));
    for (size_t i = 0; i + 1 < vertex_path.size(); ++i) {
        const Edge* found = nullptr;
        for (const Edge& e : g.edges())
            if (e.origin == vertex_path[i] && e.end == vertex_path[i + 1] &&
                (!found || e.id < found->id))
                found = &e;
        if (!found) throw Error("chain step without an edge");
        c.edges.push_back(*found);
    }
    return c;
}

}  // namespace

std::vector<RegionSplit> enumerate_disconnecting_chains(const DirectedMultigraph& g) {
    if (!is_connected(g)) throw Error("chain enumeration requires a connected graph");
    if (has_circuit(g)) throw Error("chain enumeration requires a circuit-free graph");
    if (!is_hasse_reduced(g))
        throw Error("chain enumeration requires a Hasse-reduced graph (transitive edge present)");

    // Disconnecting chains keyed by vertex set (a chain is determined by it).
    std::map<std::set<std::string>, std::vector<int>> candidates;
    for (const auto& path : all_chains(g)) {
        std::set<std::string> vc;
        for (int v : path) vc.insert(g.label(v));
        if (candidates.count(vc)) continue;
        if (components_without(g, vc).size() >= 2) candidates.emplace(std::move(vc), path);
    }

    // Keep vertex-set-maximal candidates only.
    std::vector<std::pair<std::set<std::string>, std::vector<int>>> kept;
    for (const auto& [vc, path] : candidates) {
        bool dominated = false;
        for (const auto& [other, _] : candidates) {
            if (other.size() > vc.size() &&
                std::includes(other.begin(), other.end(), vc.begin(), vc.end())) {
                dominated = true;
                break;
            }
        }
        if (!dominated) kept.emplace_back(vc, path);
    }

    std::sort(kept.begin(), kept.end(), [&](const auto& a, const auto& b) {
        if (a.second.size() != b.second.size()) return a.second.size() < b.second.size();
        std::vector<std::string> la, lb;
        for (int v : a.second) la.push_back(g.label(v));
        for (int v : b.second) lb.push_back(g.label(v));
        return std::lexicographical_compare(la.begin(), la.end(), lb.begin(), lb.end(),
                                            natural_less);
    });

    std::vector<RegionSplit> out;
    for (const auto& [vc, path] : kept) {
        RegionSplit split;
        split.chain = make_chain(g, path);
        for (const auto& comp : components_without(g, vc)) {
            std::set<std::string> keep = comp;
            keep.insert(vc.begin(), vc.end());
            split.regions.push_back(induced_subgraph(g, keep));
        }
        out.push_back(std::move(split));
    }
    return out;
}

FactorTree factor_numerator(const DirectedMultigraph& g) {
    FactorTree node;
    if (!is_connected(g)) {
        node.graph = g;
        node.value = Polynomial();  // zero on disconnected graphs
        return node;
    }
    auto splits = enumerate_disconnecting_chains(g);
    if (splits.empty()) {
        node.graph = g;
        node.value = numerator_by_cycles(g);
        return node;
    }
    size_t best = 0;
    for (size_t i = 1; i < splits.size(); ++i)
        if (splits[i].regions.size() > splits[best].regions.size()) best = i;
    node.chain = splits[best].chain;
    for (const DirectedMultigraph& region : splits[best].regions)
        node.children.push_back(factor_numerator(prune(region)));
    return node;
}

// --- Mobius ------------------------------------------------------------------

MobiusTable mobius(const DirectedMultigraph& g) {
    if (has_circuit(g)) throw Error("Mobius function requires a circuit-free graph");
    const int n = g.n_vertices();
    // above[v] = set of w with v <_P w, via reachability.
    std::vector<std::set<int>> above(n);
    std::function<void(int, std::set<int>&)> dfs = [&](int v, std::set<int>& acc) {
        for (const Edge& e : g.edges())
            if (e.origin == v && acc.insert(e.end).second) dfs(e.end, acc);
    };
    for (int v = 0; v < n; ++v) dfs(v, above[v]);
    // Ancestor counts give a valid topological key: k <_P j implies
    // anc(k) properly contained in anc(j).
    std::vector<int> anc_count(n, 0);
    for (int v = 0; v < n; ++v)
        for (int w : above[v]) ++anc_count[w];

    MobiusTable table;
    for (int i = 0; i < n; ++i) {
        table.values[{g.label(i), g.label(i)}] = 1;
        std::vector<int> targets(above[i].begin(), above[i].end());
        std::sort(targets.begin(), targets.end(), [&](int a, int b) {
            if (anc_count[a] != anc_count[b]) return anc_count[a] < anc_count[b];
            return a < b;
        });
        std::map<int, long long> mu{{i, 1}};
        for (int j : targets) {
            long long sum = 0;  // over k in [i, j)
            for (auto& [k, v] : mu)
                if (k == i || above[k].count(j)) sum += v;
            mu[j] = -sum;
            table.values[{g.label(i), g.label(j)}] = mu[j];
        }
    }
    return table;
}

// --- Greene check ---------------------------------------------------------------

GreeneReport greene_check(const DirectedMultigraph& g) {
    if (!is_connected(g)) throw Error("greene_check requires a connected graph");
    if (has_circuit(g)) throw Error("greene_check requires a circuit-free graph");
    if (!is_hasse_reduced(g))
        throw Error("greene_check requires a Hasse-reduced graph (transitive edge present)");

    GreeneReport report;
    MobiusTable table = mobius(g);
    for (auto& [pair, mu] : table.values) {
        if (pair.first == pair.second || mu == 0) continue;
        report.exponents[pair] = mu;
    }
    report.numerator = numerator_by_cycles(g);

    // (a) negative exponents are exactly one -1 per edge.
    std::multiset<std::pair<std::string, std::string>> edges;
    for (const Edge& e : g.edges()) edges.insert({g.label(e.origin), g.label(e.end)});
    std::multiset<std::pair<std::string, std::string>> negatives;
    bool neg_ok = true;
    for (auto& [pair, mu] : report.exponents) {
        if (mu < 0) {
            if (mu != -1) neg_ok = false;
            negatives.insert(pair);
        }
    }
    neg_ok = neg_ok && negatives == edges;

    // (b) positive part equals the numerator.
    report.positive_part = Polynomial::constant(1);
    for (auto& [pair, mu] : report.exponents) {
        if (mu <= 0) continue;
        Polynomial factor =
            Polynomial::variable(pair.first) - Polynomial::variable(pair.second);
        for (long long k = 0; k < mu; ++k)
            report.positive_part = report.positive_part * factor;
    }
    report.matches = neg_ok && report.positive_part == report.numerator;
    return report;
}

// --- chain / Mobius compatibility -------------------------------------------------

bool mobius_region_identity(const DirectedMultigraph& g, const RegionSplit& split) {
    MobiusTable whole = mobius(g);
    std::vector<MobiusTable> parts;
    for (const DirectedMultigraph& region : split.regions) parts.push_back(mobius(region));

    // Covers of poset(g): comparable pairs with an empty open interval.
    std::set<std::pair<std::string, std::string>> comparable;
    for (auto& [pair, _] : whole.values)
        if (pair.first != pair.second) comparable.insert(pair);
    auto is_cover = [&](const std::string& a, const std::string& b) {
        for (const std::string& k : g.vertices())
            if (k != a && k != b && comparable.count({a, k}) && comparable.count({k, b}))
                return false;
        return true;
    };

    for (const auto& pair : comparable) {
        const long long lhs = whole.at(pair.first, pair.second);
        if (is_cover(pair.first, pair.second)) {
            if (lhs != -1) return false;
            continue;
        }
        long long rhs = 0;
        for (const MobiusTable& part : parts) rhs += part.at(pair.first, pair.second);
        if (lhs != rhs) return false;
    }
    return true;
}

}  // namespace greene
