#pragma once

#include <map>
#include <string>
#include <vector>

#include "greene/common.hpp"
#include "greene/graph.hpp"

namespace greene {

// Exponent map keyed by vertex label; zero exponents are never stored.
// Ordered by natural label comparison so iteration is canonical.
using Monomial = std::map<std::string, int, NaturalLess>;

// Canonical term order: higher total degree first, ties broken so that the
// monomial with the larger exponent on the earliest variable comes first
// (graded lexicographic with x1 > x2 > ... under natural label order).
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

int total_degree(const Monomial& m);

// Exact sparse multivariate polynomial over the integers.
class Polynomial {
public:
    Polynomial() = default;
    static Polynomial constant(Int c);
    static Polynomial variable(const std::string& label);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Int, MonomialOrder>& terms() const { return terms_; }

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // True iff every term has the same total degree (vacuously true for 0).
    bool is_homogeneous() const;
    int degree() const;  // -1 for the zero polynomial
    std::vector<std::string> variables() const;

    void add_term(const Monomial& m, const Int& c);  // used by builders

private:
    std::map<Monomial, Int, MonomialOrder> terms_;
};

// Total assignment of exact rationals to vertex labels.
using RationalPoint = std::map<std::string, Rat>;

// x_origin - x_end for a non-loop edge of g.
Polynomial linear_factor(const DirectedMultigraph& g, const Edge& e);
// Product of linear factors over every edge of g.
Polynomial edge_product(const DirectedMultigraph& g);

// Replaces every variable by its class representative. Each class lists the
// representative first; labels not mentioned stay untouched.
Polynomial substitute_identify(const Polynomial& p,
                               const std::vector<std::vector<std::string>>& classes);

Rat eval(const Polynomial& p, const RationalPoint& pt);

// Deterministic display form, e.g. "x1 + x2 - x3 - x5"; "0" when zero.
std::string canonical_string(const Polynomial& p);

// JSON: [{"coeff": "<int>", "monomial": {label: exponent, ...}}, ...] in
// canonical term order.
std::string to_json(const Polynomial& p);
Polynomial polynomial_from_json(const std::string& json_text);

}  // namespace greene
