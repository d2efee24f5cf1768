#include "greene/tc.hpp"

#include <ostream>
#include <unordered_map>
#include <vector>

namespace greene {

namespace {

// Nonempty subsets of `ids`, grouped by size, lexicographic within a size.
std::vector<std::vector<int>> subsets_by_size(const std::vector<int>& ids) {
    const int k = static_cast<int>(ids.size());
    std::vector<std::vector<int>> out;
    for (int size = 1; size <= k; ++size) {
        std::vector<int> pick(size);
        auto rec = [&](auto&& self, int from, int depth) -> void {
            if (depth == size) {
                std::vector<int> subset;
                for (int i : pick) subset.push_back(ids[i]);
                out.push_back(std::move(subset));
                return;
            }
            for (int i = from; i <= k - (size - depth); ++i) {
                pick[depth] = i;
                self(self, i + 1, depth + 1);
            }
        };
        rec(rec, 0, 0);
    }
    return out;
}

void print_cycle(std::ostream& os, const DirectedMultigraph& g, const Cycle& c) {
    os << "cycle:";
    for (const CycleStep& s : c.steps) {
        const std::string& a = g.label(s.edge.origin);
        const std::string& b = g.label(s.edge.end);
        os << ' ' << (s.forward ? a + "->" + b : b + "<-" + a) << "#" << s.edge.id;
    }
}

}  // namespace

SignedGraphSum tc_expand(const DirectedMultigraph& g, const Cycle& c) {
    if (!is_cycle_of(g, c)) throw Error("tc_expand: not a cycle of the given graph");
    std::vector<int> he;
    for (const Edge& e : c.forward_edges()) he.push_back(e.id);
    const EdgeMask full = g.edge_id_mask();
    SignedGraphSum sum;
    for (const auto& subset : subsets_by_size(he)) {
        EdgeMask removed = 0;
        for (int id : subset) removed |= EdgeMask{1} << id;
        const long long sign = subset.size() % 2 == 1 ? 1 : -1;
        sum.terms[full & ~removed] += sign;
    }
    for (auto it = sum.terms.begin(); it != sum.terms.end();)
        it = it->second == 0 ? sum.terms.erase(it) : std::next(it);
    return sum;
}

namespace {

struct CycleEngine {
    const DirectedMultigraph& g;
    CyclePolicy policy;
    std::ostream* trace;
    std::unordered_map<EdgeMask, Polynomial> memo;

    Polynomial factor_of(int edge_id) const {
        const Edge* e = g.edge_by_id(edge_id);
        return linear_factor(g, *e);
    }

    Polynomial run(EdgeMask mask) {
        auto hit = memo.find(mask);
        if (hit != memo.end()) return hit->second;

        Polynomial result;
        if (component_count_masked(g, mask) > 1) {
            result = Polynomial();  // disconnected: zero
        } else if (is_tree_masked(g, mask)) {
            result = Polynomial::constant(1);
        } else {
            auto cycle = find_cycle_masked(g, mask, policy);
            if (!cycle) throw Error("internal: connected non-tree without a cycle");
            std::vector<int> he;
            for (const Edge& e : cycle->forward_edges()) he.push_back(e.id);
            if (he.empty()) throw Error("circuit encountered during elimination");
            const auto subsets = subsets_by_size(he);
            if (trace) {
                print_cycle(*trace, g, *cycle);
                *trace << "  HE = {";
                for (size_t i = 0; i < he.size(); ++i) *trace << (i ? "," : "") << he[i];
                *trace << "}  terms:";
                for (const auto& s : subsets) {
                    *trace << ' ' << (s.size() % 2 ? '+' : '-') << '{';
                    for (size_t i = 0; i < s.size(); ++i) *trace << (i ? "," : "") << s[i];
                    *trace << '}';
                }
                *trace << '\n';
            }
            for (const auto& subset : subsets) {
                EdgeMask removed = 0;
                Polynomial prod = Polynomial::constant(subset.size() % 2 == 1 ? 1 : -1);
                for (int id : subset) {
                    removed |= EdgeMask{1} << id;
                    prod = prod * factor_of(id);
                }
                Polynomial sub = run(mask & ~removed);
                if (!sub.is_zero()) result = result + prod * sub;
            }
        }
        memo.emplace(mask, result);
        return result;
    }
};

}  // namespace

Polynomial numerator_by_cycles(const DirectedMultigraph& g, CyclePolicy policy,
                               std::ostream* trace) {
    if (has_circuit(g)) throw Error("numerator is undefined on graphs with circuits");
    CycleEngine engine{g, policy, trace, {}};
    return engine.run(g.edge_id_mask());
}

Polynomial vanishing_residue(const DirectedMultigraph& g, const Cycle& c) {
    if (!is_cycle_of(g, c)) throw Error("vanishing_residue: not a cycle of the given graph");
    // Union the identifications generated by alpha(e) ~ omega(e), e in HE(C).
    std::map<std::string, std::string> parent;
    auto find = [&](std::string v) {
        while (parent.count(v) && parent[v] != v) v = parent[v];
        return v;
    };
    for (const Edge& e : c.forward_edges()) {
        std::string a = find(g.label(e.origin)), b = find(g.label(e.end));
        if (a != b) {
            if (natural_less(b, a)) std::swap(a, b);
            parent[b] = a;  // smaller label is the representative
            parent.emplace(a, a);
        }
    }
    std::map<std::string, std::vector<std::string>> classes;
    for (const std::string& v : g.vertices()) classes[find(v)].push_back(v);
    std::vector<std::vector<std::string>> partition;
    for (auto& [rep, members] : classes) {
        std::vector<std::string> cls{rep};
        for (auto& m : members)
            if (m != rep) cls.push_back(m);
        partition.push_back(std::move(cls));
    }
    return substitute_identify(numerator_by_cycles(g), partition);
}

}  // namespace greene
