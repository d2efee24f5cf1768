#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "greene/extensions.hpp"
#include "greene/graph.hpp"
#include "testutil.hpp"

using namespace greene;

TEST_CASE("parse_graph reads the diamond") {
    DirectedMultigraph g = parse_graph("1 -> 2\n1 -> 3\n2 -> 4\n3 -> 4");
    CHECK(g.n_vertices() == 4);
    CHECK(g.n_edges() == 4);
    CHECK(g.vertices() == std::vector<std::string>{"1", "2", "3", "4"});
    CHECK(g.edges()[0].id == 0);
    CHECK(g.label(g.edges()[0].origin) == "1");
}

TEST_CASE("parse_graph minimal and circuit inputs") {
    DirectedMultigraph g = parse_graph("a -> b");
    CHECK(g.n_vertices() == 2);
    CHECK(g.n_edges() == 1);

    DirectedMultigraph c = parse_graph("1 -> 2\n2 -> 1");
    CHECK(c.n_edges() == 2);
    CHECK(has_circuit(c));
}

TEST_CASE("parse_graph errors") {
    CHECK_THROWS_AS(parse_graph("vertices: a a\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("vertices: a b\na -> c"), ParseError);
    CHECK_THROWS_AS(parse_graph("a -> \n"), ParseError);
    CHECK_THROWS_AS(parse_graph("a -> a\n"), ParseError);
    CHECK_THROWS_WITH_AS(parse_graph("a -> b\nb => c\n"), "line 2: expected '<label> -> <label>'",
                         ParseError);
    // isolated vertices via the header
    DirectedMultigraph g = parse_graph("vertices: a b c\na -> b");
    CHECK(g.n_vertices() == 3);
    CHECK(component_count(g) == 2);
}

TEST_CASE("cyclomatic number") {
    CHECK(cyclomatic_number(testutil::load("diamond.g")) == 1);
    DirectedMultigraph tree = parse_graph("a -> b\na -> c\nc -> d");
    CHECK(cyclomatic_number(tree) == 0);
    // complete bipartite {a1,a2} -> {b1,b2,b3}: 5 vertices, 6 edges
    DirectedMultigraph g23 =
        parse_graph("a1 -> b1\na1 -> b2\na1 -> b3\na2 -> b1\na2 -> b2\na2 -> b3");
    CHECK(cyclomatic_number(g23) == 2);
}

TEST_CASE("has_circuit") {
    CHECK(has_circuit(parse_graph("1 -> 2\n2 -> 1")));
    CHECK_FALSE(has_circuit(testutil::load("diamond.g")));
    DirectedMultigraph g24 = parse_graph(
        "a1 -> b1\na1 -> b2\na1 -> b3\na1 -> b4\na2 -> b1\na2 -> b2\na2 -> b3\na2 -> b4");
    CHECK_FALSE(has_circuit(g24));
}

TEST_CASE("remove_edges keeps the vertex set") {
    DirectedMultigraph d = testutil::load("diamond.g");
    DirectedMultigraph g = remove_edges(d, {0});  // drop 1 -> 2
    CHECK(g.n_vertices() == 4);
    CHECK(g.n_edges() == 3);
    CHECK(is_connected(g));

    DirectedMultigraph h = remove_edges(d, {0, 1});  // isolate vertex 1
    CHECK(h.n_vertices() == 4);
    CHECK(component_count(h) == 2);

    CHECK(remove_edges(d, {}) == d);
    CHECK_THROWS_AS(remove_edges(d, {99}), Error);
}

TEST_CASE("remove_vertices gives the induced subgraph") {
    DirectedMultigraph fig = testutil::load("hasse_ex.g");
    DirectedMultigraph ind = remove_vertices(fig, {"4"});
    CHECK(ind.vertices() == std::vector<std::string>{"1", "2", "3"});
    CHECK(ind.n_edges() == 2);  // 1->2 and 1->3 survive

    CHECK(remove_vertices(fig, {}) == fig);

    DirectedMultigraph d = testutil::load("diamond.g");
    DirectedMultigraph t = remove_vertices(d, {"4"});
    CHECK(t.n_edges() == 2);
    CHECK(cyclomatic_number(t) == 0);
    CHECK_THROWS_AS(remove_vertices(d, {"nope"}), Error);
}

TEST_CASE("contract_edge merges endpoints under the origin label") {
    DirectedMultigraph fig = testutil::load("hasse_ex.g");
    // Contract the diagonal 1 -> 4 (declared last, id 4).
    DirectedMultigraph c = contract_edge(fig, 4);
    CHECK(c.n_vertices() == 3);
    CHECK(c.n_edges() == 4);
    CHECK(c.has_vertex("1"));
    CHECK_FALSE(c.has_vertex("4"));
    CHECK(component_count(c) == component_count(fig));
    CHECK(cyclomatic_number(c) == cyclomatic_number(fig));

    DirectedMultigraph path = parse_graph("a -> b\nb -> c");
    DirectedMultigraph p = contract_edge(path, 0);
    CHECK(p.n_vertices() == 2);
    CHECK(p.n_edges() == 1);
    CHECK(p.label(p.edges()[0].origin) == "a");

    DirectedMultigraph d = testutil::load("diamond.g");
    DirectedMultigraph dc = contract_edge(d, 2);  // contract 2 -> 4
    CHECK(dc.n_vertices() == 3);
    CHECK(dc.n_edges() == 3);
    CHECK(cyclomatic_number(dc) == 1);

    DirectedMultigraph par = parse_graph("a -> b");
    DirectedMultigraph par2(par.vertices(), {{0, 0, 1}, {1, 0, 1}});
    CHECK_THROWS_AS(contract_edge(par2, 0), Error);
}

TEST_CASE("contract_edge preserves components and cyclomatic number on random graphs") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 200; ++trial) {
        DirectedMultigraph g = testutil::random_connected_dag(rng, 2, 8, 3);
        std::uniform_int_distribution<int> pick(0, g.n_edges() - 1);
        for (int tries = 0; tries < 10; ++tries) {
            const Edge e = g.edges()[pick(rng)];
            bool parallel = false;
            for (const Edge& o : g.edges())
                if (o.id != e.id && ((o.origin == e.origin && o.end == e.end) ||
                                     (o.origin == e.end && o.end == e.origin)))
                    parallel = true;
            if (parallel) continue;
            DirectedMultigraph c = contract_edge(g, e.id);
            CHECK(component_count(c) == component_count(g));
            CHECK(cyclomatic_number(c) == cyclomatic_number(g));
            break;
        }
    }
}

TEST_CASE("prune") {
    DirectedMultigraph tree = parse_graph("a -> b\nb -> c\nb -> d");
    CHECK(prune(tree).n_vertices() == 1);

    DirectedMultigraph d = testutil::load("diamond.g");
    CHECK(prune(d) == d);

    DirectedMultigraph pend = parse_graph("1 -> 2\n1 -> 3\n2 -> 4\n3 -> 4\n4 -> 5");
    CHECK(prune(pend) == d);
    CHECK(prune_step(pend) == d);
    CHECK(prune(prune(pend)) == prune(pend));  // idempotent
}

TEST_CASE("prune is confluent up to isomorphism") {
    std::mt19937_64 rng(202);
    for (int trial = 0; trial < 60; ++trial) {
        DirectedMultigraph g = testutil::random_connected_dag(rng, 2, 7, 2);
        // Two random elimination orders.
        auto run = [&](std::mt19937_64& r) {
            DirectedMultigraph cur = g;
            for (;;) {
                auto ones = valence_one_vertices(cur);
                if (ones.empty()) return cur;
                const int i = std::uniform_int_distribution<int>(
                    0, static_cast<int>(ones.size()) - 1)(r);
                cur = remove_vertices(cur, {ones[i]});
            }
        };
        std::mt19937_64 r1(rng()), r2(rng());
        DirectedMultigraph a = run(r1), b = run(r2);
        CHECK(canonical_encoding(a) == canonical_encoding(b));
    }
}

TEST_CASE("find_cycle is deterministic and oriented") {
    DirectedMultigraph tree = parse_graph("a -> b\nb -> c");
    CHECK_FALSE(find_cycle(tree).has_value());

    DirectedMultigraph d = testutil::load("diamond.g");
    auto c = find_cycle(d);
    REQUIRE(c.has_value());
    CHECK(is_cycle_of(d, *c));
    auto he = c->forward_edges();
    REQUIRE(he.size() == 2);
    CHECK(he[0].id == 0);  // 1 -> 2
    CHECK(he[1].id == 2);  // 2 -> 4

    DirectedMultigraph g23 =
        parse_graph("a1 -> b1\na1 -> b2\na1 -> b3\na2 -> b1\na2 -> b2\na2 -> b3");
    auto c2 = find_cycle(g23);
    REQUIRE(c2.has_value());
    CHECK(c2->steps.size() == 4);
    CHECK(is_cycle_of(g23, *c2));

    auto c3 = find_cycle(d, CyclePolicy::HighestEdge);
    REQUIRE(c3.has_value());
    CHECK(is_cycle_of(d, *c3));
}

TEST_CASE("hasse_reduction") {
    DirectedMultigraph fig = testutil::load("hasse_ex.g");
    CHECK(hasse_reduction(fig) == remove_edges(fig, {4}));

    DirectedMultigraph d = testutil::load("diamond.g");
    CHECK(hasse_reduction(d) == d);

    DirectedMultigraph t = testutil::load("trans.g");
    DirectedMultigraph r = hasse_reduction(t);
    CHECK(r.n_edges() == 2);
    CHECK(is_hasse_reduced(r));
    CHECK_FALSE(is_hasse_reduced(t));

    CHECK_THROWS_AS(hasse_reduction(parse_graph("1 -> 2\n2 -> 1")), Error);
}

TEST_CASE("hasse_reduction preserves linear extensions") {
    std::mt19937_64 rng(303);
    for (int trial = 0; trial < 50; ++trial) {
        DirectedMultigraph g = testutil::random_simple_connected_dag(rng, 2, 7, 4);
        DirectedMultigraph r = hasse_reduction(g);
        // No surviving edge is implied by a chain through the rest.
        for (const Edge& e : r.edges()) {
            DirectedMultigraph without = remove_edges(r, {e.id});
            std::vector<std::vector<int>> out(without.n_vertices());
            for (const Edge& f : without.edges()) out[f.origin].push_back(f.end);
            std::vector<int> stack{e.origin};
            std::vector<bool> seen(without.n_vertices(), false);
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int w : out[v])
                    if (!seen[w]) {
                        seen[w] = true;
                        stack.push_back(w);
                    }
            }
            CHECK_FALSE(seen[e.end]);
        }
        CHECK(linear_extensions(g) == linear_extensions(r));
    }
}

TEST_CASE("graph operations never mutate their input") {
    DirectedMultigraph d = testutil::load("diamond.g");
    DirectedMultigraph copy = d;
    (void)remove_edges(d, {0});
    (void)remove_vertices(d, {"4"});
    (void)contract_edge(d, 2);
    (void)prune(d);
    (void)find_cycle(d);
    (void)hasse_reduction(d);
    CHECK(d == copy);
}
