#include "greene/closedform.hpp"

#include <set>

namespace greene {

Polynomial single_cycle_numerator(const DirectedMultigraph& g) {
    if (!is_connected(g)) throw Error("single-cycle form requires a connected graph");
    if (cyclomatic_number(g) != 1) throw Error("single-cycle form requires cyclomatic number 1");
    DirectedMultigraph core = prune(g);
    for (int v = 0; v < core.n_vertices(); ++v)
        if (core.degree(v) != 2) throw Error("pruned graph is not a plain cycle");
    Polynomial p;
    for (int v = 0; v < core.n_vertices(); ++v) {
        bool has_in = false, has_out = false;
        for (const Edge& e : core.edges()) {
            if (e.origin == v) has_out = true;
            if (e.end == v) has_in = true;
        }
        if (!has_in) p = p + Polynomial::variable(core.label(v));
        if (!has_out) p = p - Polynomial::variable(core.label(v));
    }
    return p;
}

void validate_two_loop(const TwoLoopSpec& spec) {
    const DirectedMultigraph& g = spec.graph;
    std::set<int> covered;
    int start = -1, finish = -1;
    std::array<std::set<int>, 3> interior;
    for (int i = 0; i < 3; ++i) {
        const auto& path = spec.paths[i];
        if (path.empty()) throw Error("two-loop path is empty");
        int at = -1;
        for (size_t s = 0; s < path.size(); ++s) {
            const CycleStep& step = path[s];
            const Edge* e = g.edge_by_id(step.edge.id);
            if (!e || e->origin != step.edge.origin || e->end != step.edge.end)
                throw Error("two-loop path uses an unknown edge");
            if (!covered.insert(e->id).second) throw Error("two-loop paths share an edge");
            const int from = step.forward ? e->origin : e->end;
            const int to = step.forward ? e->end : e->origin;
            if (s == 0) {
                if (start == -1)
                    start = from;
                else if (start != from)
                    throw Error("two-loop paths start at different vertices");
            } else if (from != at) {
                throw Error("two-loop path does not chain");
            }
            if (s + 1 < path.size()) interior[i].insert(to);
            at = to;
        }
        if (finish == -1)
            finish = at;
        else if (finish != at)
            throw Error("two-loop paths end at different vertices");
    }
    if (static_cast<int>(covered.size()) != g.n_edges())
        throw Error("two-loop paths do not cover every edge");
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            for (int v : interior[i])
                if (interior[j].count(v)) throw Error("two-loop paths are not vertex-disjoint");
}

Polynomial two_loop_numerator(const TwoLoopSpec& spec) {
    validate_two_loop(spec);
    auto side_sum = [&](int path, bool forward) {
        Polynomial sum;
        for (const CycleStep& s : spec.paths[path])
            if (s.forward == forward) sum = sum + linear_factor(spec.graph, s.edge);
        return sum;
    };
    const Polynomial b0 = side_sum(0, false);
    const Polynomial b1 = side_sum(1, false);
    const Polynomial f1 = side_sum(1, true);
    const Polynomial f2 = side_sum(2, true);
    return b0 * b1 + b0 * f2 + f1 * f2;
}

Polynomial bipartite_numerator(int n, const std::string& a1, const std::string& a2,
                               const std::string& b_prefix) {
    if (n < 1) throw Error("bipartite form requires n >= 1");
    auto b = [&](int i) { return Polynomial::variable(b_prefix + std::to_string(i)); };
    const Polynomial xa1 = Polynomial::variable(a1);
    const Polynomial xa2 = Polynomial::variable(a2);
    Polynomial total;
    for (int i = 1; i <= n; ++i) {
        Polynomial term = Polynomial::constant(1);
        for (int j = 1; j < i; ++j) term = term * (xa1 - b(j));
        for (int k = i + 1; k <= n; ++k) term = term * (xa2 - b(k));
        total = total + term;
    }
    return total;
}

DirectedMultigraph build_bipartite(int n) {
    if (n < 1) throw Error("bipartite graph requires n >= 1");
    std::vector<std::string> vertices{"a1", "a2"};
    for (int i = 1; i <= n; ++i) vertices.push_back("b" + std::to_string(i));
    std::vector<Edge> edges;
    for (int h = 0; h < 2; ++h)
        for (int i = 1; i <= n; ++i)
            edges.push_back({h * n + i - 1, h, 1 + i});
    return DirectedMultigraph(std::move(vertices), std::move(edges));
}

TwoLoopSpec build_theta(const std::array<int, 3>& lens, const std::array<std::string, 3>& dirs) {
    std::vector<std::string> vertices{"v", "w"};
    for (int i = 0; i < 3; ++i) {
        if (lens[i] < 1) throw Error("theta path length must be >= 1");
        if (static_cast<int>(dirs[i].size()) != lens[i])
            throw Error("theta direction string length mismatch");
        for (int j = 1; j < lens[i]; ++j)
            vertices.push_back("p" + std::to_string(i) + "m" + std::to_string(j));
    }
    std::vector<Edge> edges;
    TwoLoopSpec spec;
    DirectedMultigraph skeleton(vertices, {});
    auto vid = [&](const std::string& label) { return skeleton.vertex_index(label); };
    int next_id = 0;
    std::array<std::vector<std::pair<Edge, bool>>, 3> raw;
    for (int i = 0; i < 3; ++i) {
        int prev = vid("v");
        for (int j = 1; j <= lens[i]; ++j) {
            const int cur =
                j == lens[i] ? vid("w") : vid("p" + std::to_string(i) + "m" + std::to_string(j));
            const bool fwd = dirs[i][j - 1] == '+';
            Edge e{next_id++, fwd ? prev : cur, fwd ? cur : prev};
            edges.push_back(e);
            raw[i].push_back({e, fwd});
            prev = cur;
        }
    }
    spec.graph = DirectedMultigraph(std::move(vertices), std::move(edges));
    for (int i = 0; i < 3; ++i)
        for (auto& [e, fwd] : raw[i]) spec.paths[i].push_back({e, fwd});
    validate_two_loop(spec);
    return spec;
}

}  // namespace greene
