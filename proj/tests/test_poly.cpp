#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "greene/poly.hpp"
#include "testutil.hpp"

using namespace greene;

namespace {

Polynomial x(const std::string& v) { return Polynomial::variable(v); }

Polynomial random_poly(std::mt19937_64& rng, int max_vars = 6) {
    std::uniform_int_distribution<int> nterms(0, 5), coeff(-4, 4), var(1, max_vars), expo(0, 2);
    Polynomial p;
    const int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        Monomial m;
        const int nv = var(rng) % 4;
        for (int i = 0; i < nv; ++i) {
            int e = expo(rng);
            if (e > 0) m["v" + std::to_string(var(rng))] += e;
        }
        for (auto it = m.begin(); it != m.end();)
            it = it->second == 0 ? m.erase(it) : std::next(it);
        p.add_term(m, coeff(rng));
    }
    return p;
}

RationalPoint random_assignment(std::mt19937_64& rng, int max_vars = 6) {
    std::uniform_int_distribution<long> val(-50, 50);
    RationalPoint pt;
    for (int i = 1; i <= max_vars; ++i) pt["v" + std::to_string(i)] = Rat(val(rng));
    return pt;
}

}  // namespace

TEST_CASE("linear factors") {
    DirectedMultigraph g = parse_graph("1 -> 2\nb -> a");
    CHECK(canonical_string(linear_factor(g, g.edges()[0])) == "x1 - x2");
    CHECK(canonical_string(linear_factor(g, g.edges()[1])) == "- xa + xb");
    CHECK(linear_factor(g, g.edges()[1]) == -(x("a") - x("b")));

    DirectedMultigraph d = testutil::load("diamond.g");
    Polynomial prod = edge_product(d);
    CHECK(prod.degree() == 4);
    CHECK(prod.is_homogeneous());
    // leading term x1 x2 x3 x4 by direct expansion:
    // (x1-x2)(x1-x3)(x2-x4)(x3-x4) has coefficient 1 on x1 x2 x3 x4.
    Monomial lead{{"1", 1}, {"2", 1}, {"3", 1}, {"4", 1}};
    CHECK(prod.terms().at(lead) == 1);
}

TEST_CASE("ring basics") {
    CHECK(canonical_string((x("1") - x("2")) + (x("2") - x("3"))) == "x1 - x3");
    Polynomial p = (x("1") - x("2")) * (x("1") + x("2"));
    CHECK(canonical_string(p) == "x1^2 - x2^2");
    Polynomial q = x("1") * x("2") - x("2") * x("1");
    CHECK(q.is_zero());
    CHECK(canonical_string(q) == "0");
    std::mt19937_64 rng(7);
    Polynomial r = random_poly(rng);
    CHECK((r + (-r)).is_zero());
    CHECK(canonical_string(Polynomial::constant(1)) == "1");
}

TEST_CASE("substitute_identify") {
    Polynomial p = x("1") + x("2") - x("3") - x("4");
    CHECK(canonical_string(substitute_identify(p, {{"2", "4"}})) == "x1 - x3");
    CHECK(substitute_identify(p, {{"1"}, {"2"}, {"3"}, {"4"}}) == p);
    CHECK(substitute_identify(x("1") - x("2"), {{"1", "2"}}).is_zero());
    // representative is the first class member
    CHECK(canonical_string(substitute_identify(x("b"), {{"a", "b"}})) == "xa");
}

TEST_CASE("eval") {
    RationalPoint pt{{"1", 5}, {"3", 2}};
    CHECK(eval(x("1") - x("3"), pt) == 3);
    CHECK(eval(Polynomial(), pt) == 0);
    RationalPoint pt5{{"1", 1}, {"2", 2}, {"3", 3}, {"4", 0}, {"5", 4}};
    CHECK(eval(x("1") + x("2") - x("3") - x("5"), pt5) == -4);
    CHECK_THROWS_AS(eval(x("zz"), pt), Error);
}

TEST_CASE("canonical_string ordering") {
    Polynomial p = x("5") * Polynomial::constant(-1) + x("1") + x("2") - x("3");
    CHECK(canonical_string(p) == "x1 + x2 - x3 - x5");
    Polynomial q = x("1") * x("1") - Polynomial::constant(3) + x("2") * x("10") * x("2");
    CHECK(canonical_string(q) == "x2^2 x10 + x1^2 - 3");
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 60; ++trial) {
        Polynomial a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("eval is a ring homomorphism") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 50; ++trial) {
        Polynomial a = random_poly(rng), b = random_poly(rng);
        RationalPoint pt = random_assignment(rng);
        CHECK(eval(a * b, pt) == eval(a, pt) * eval(b, pt));
        CHECK(eval(a + b, pt) == eval(a, pt) + eval(b, pt));
    }
}

TEST_CASE("substitute_identify commutes with add and mul") {
    std::mt19937_64 rng(44);
    std::vector<std::vector<std::string>> classes{{"v1", "v3"}, {"v2", "v5"}};
    for (int trial = 0; trial < 40; ++trial) {
        Polynomial a = random_poly(rng), b = random_poly(rng);
        CHECK(substitute_identify(a + b, classes) ==
              substitute_identify(a, classes) + substitute_identify(b, classes));
        CHECK(substitute_identify(a * b, classes) ==
              substitute_identify(a, classes) * substitute_identify(b, classes));
    }
}

TEST_CASE("difference products are translation invariant") {
    std::mt19937_64 rng(45);
    DirectedMultigraph g = testutil::load("diamond.g");
    Polynomial prod = edge_product(g);
    std::uniform_int_distribution<long> val(-100, 100);
    for (int trial = 0; trial < 20; ++trial) {
        RationalPoint pt, shifted;
        Rat t = Rat(val(rng), 1 + std::uniform_int_distribution<long>(0, 6)(rng));
        for (const std::string& v : g.vertices()) {
            pt[v] = Rat(val(rng));
            shifted[v] = pt[v] + t;
        }
        CHECK(eval(prod, pt) == eval(prod, shifted));
    }
}

TEST_CASE("json round trip") {
    std::mt19937_64 rng(46);
    for (int trial = 0; trial < 20; ++trial) {
        Polynomial p = random_poly(rng);
        CHECK(polynomial_from_json(to_json(p)) == p);
    }
    Polynomial p = x("1") - x("4");
    CHECK(to_json(p) ==
          R"([{"coeff":"1","monomial":{"1":1}},{"coeff":"-1","monomial":{"4":1}}])");
}
