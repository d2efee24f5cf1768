#pragma once

#include <random>
#include <string>
#include <vector>

#include "greene/extensions.hpp"
#include "greene/graph.hpp"

namespace testutil {

inline std::string fixture(const std::string& name) {
    return std::string(FIXTURES_DIR) + "/" + name;
}

inline greene::DirectedMultigraph load(const std::string& name) {
    return greene::read_graph_file(fixture(name));
}

// Random connected circuit-free multigraph: a random spanning tree oriented
// along the label order plus `extra` forward edges (duplicates allowed, so
// parallel edges occur).
inline greene::DirectedMultigraph random_connected_dag(std::mt19937_64& rng, int min_v, int max_v,
                                                       int max_extra) {
    const int n = std::uniform_int_distribution<int>(min_v, max_v)(rng);
    std::vector<std::string> vertices;
    for (int i = 1; i <= n; ++i) vertices.push_back(std::to_string(i));
    std::vector<greene::Edge> edges;
    for (int i = 1; i < n; ++i) {
        const int p = std::uniform_int_distribution<int>(0, i - 1)(rng);
        edges.push_back({static_cast<int>(edges.size()), p, i});
    }
    const int extra = std::uniform_int_distribution<int>(0, max_extra)(rng);
    for (int k = 0; k < extra && n >= 2; ++k) {
        int a = std::uniform_int_distribution<int>(0, n - 2)(rng);
        int b = std::uniform_int_distribution<int>(a + 1, n - 1)(rng);
        edges.push_back({static_cast<int>(edges.size()), a, b});
    }
    return greene::DirectedMultigraph(std::move(vertices), std::move(edges));
}

// Same shape but without parallel edges (needed where Hasse reduction or
// Mobius arguments assume simple graphs).
inline greene::DirectedMultigraph random_simple_connected_dag(std::mt19937_64& rng, int min_v,
                                                              int max_v, int max_extra) {
    for (;;) {
        greene::DirectedMultigraph g = random_connected_dag(rng, min_v, max_v, max_extra);
        bool simple = true;
        for (int i = 0; i < g.n_edges() && simple; ++i)
            for (int j = i + 1; j < g.n_edges() && simple; ++j)
                if (g.edges()[i].origin == g.edges()[j].origin &&
                    g.edges()[i].end == g.edges()[j].end)
                    simple = false;
        if (simple) return g;
    }
}

// Connected block plus a second component: either a chain of z-vertices or a
// single isolated one.
inline greene::DirectedMultigraph random_disconnected_graph(std::mt19937_64& rng) {
    greene::DirectedMultigraph a = random_connected_dag(rng, 2, 4, 2);
    const int extra = std::uniform_int_distribution<int>(1, 3)(rng);
    std::vector<std::string> vertices = a.vertices();
    std::vector<greene::Edge> edges = a.edges();
    const int base = static_cast<int>(vertices.size());
    for (int i = 0; i < extra; ++i) vertices.push_back("z" + std::to_string(i + 1));
    for (int i = 1; i < extra; ++i)
        edges.push_back({static_cast<int>(edges.size()), base + i - 1, base + i});
    return greene::DirectedMultigraph(std::move(vertices), std::move(edges));
}

}  // namespace testutil
