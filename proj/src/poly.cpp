#include "greene/poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "json.hpp"

namespace greene {

int total_degree(const Monomial& m) {
    int d = 0;
    for (auto& [_, e] : m) d += e;
    return d;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
    const int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    // Merge-walk the two exponent maps in variable order; the monomial with
    // the higher exponent on the first differing variable comes first.
    auto ia = a.begin(), ib = b.begin();
    NaturalLess less;
    while (ia != a.end() && ib != b.end()) {
        if (less(ia->first, ib->first)) return true;       // a has the earlier variable
        if (less(ib->first, ia->first)) return false;
        if (ia->second != ib->second) return ia->second > ib->second;
        ++ia;
        ++ib;
    }
    return ia != a.end();
}

Polynomial Polynomial::constant(Int c) {
    Polynomial p;
    p.add_term({}, c);
    return p;
}

Polynomial Polynomial::variable(const std::string& label) {
    Polynomial p;
    p.add_term({{label, 1}}, 1);
    return p;
}

void Polynomial::add_term(const Monomial& m, const Int& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    for (auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r;
    for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial r;
    for (auto& [ma, ca] : terms_) {
        for (auto& [mb, cb] : o.terms_) {
            Monomial m = ma;
            for (auto& [v, e] : mb) m[v] += e;
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = total_degree(terms_.begin()->first);
    for (auto& [m, _] : terms_)
        if (total_degree(m) != d) return false;
    return true;
}

int Polynomial::degree() const {
    if (terms_.empty()) return -1;
    return total_degree(terms_.begin()->first);  // leading term has max degree
}

std::vector<std::string> Polynomial::variables() const {
    std::set<std::string, NaturalLess> vars;
    for (auto& [m, _] : terms_)
        for (auto& [v, __] : m) vars.insert(v);
    return {vars.begin(), vars.end()};
}

Polynomial linear_factor(const DirectedMultigraph& g, const Edge& e) {
    if (e.origin == e.end) throw Error("linear factor of a self-loop");
    return Polynomial::variable(g.label(e.origin)) - Polynomial::variable(g.label(e.end));
}

Polynomial edge_product(const DirectedMultigraph& g) {
    Polynomial p = Polynomial::constant(1);
    for (const Edge& e : g.edges()) p = p * linear_factor(g, e);
    return p;
}

Polynomial substitute_identify(const Polynomial& p,
                               const std::vector<std::vector<std::string>>& classes) {
    std::map<std::string, std::string> rep;
    for (const auto& cls : classes) {
        if (cls.empty()) throw Error("empty identification class");
        for (const auto& v : cls) {
            auto [it, fresh] = rep.emplace(v, cls.front());
            if (!fresh && it->second != cls.front())
                throw Error("identification classes are not a partition");
        }
    }
    Polynomial r;
    for (auto& [m, c] : p.terms()) {
        Monomial sub;
        for (auto& [v, e] : m) {
            auto it = rep.find(v);
            sub[it == rep.end() ? v : it->second] += e;
        }
        for (auto it = sub.begin(); it != sub.end();)
            it = it->second == 0 ? sub.erase(it) : std::next(it);
        r.add_term(sub, c);
    }
    return r;
}

Rat eval(const Polynomial& p, const RationalPoint& pt) {
    Rat total = 0;
    for (auto& [m, c] : p.terms()) {
        Rat term = Rat(c);
        for (auto& [v, e] : m) {
            auto it = pt.find(v);
            if (it == pt.end()) throw Error("evaluation point misses variable '" + v + "'");
            for (int k = 0; k < e; ++k) term *= it->second;
        }
        total += term;
    }
    return total;
}

std::string canonical_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto& [m, c] : p.terms()) {
        const bool neg = c < 0;
        const Int mag = neg ? Int(-c) : c;
        if (first) {
            if (neg) out << "- ";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        const bool show_coeff = mag != 1 || m.empty();
        if (show_coeff) out << mag.str();
        bool first_var = !show_coeff;
        for (auto& [v, e] : m) {
            if (!first_var) out << ' ';
            first_var = false;
            out << 'x' << v;
            if (e > 1) out << '^' << e;
        }
    }
    return out.str();
}

std::string to_json(const Polynomial& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (auto& [m, c] : p.terms()) {
        nlohmann::json mono = nlohmann::json::object();
        for (auto& [v, e] : m) mono[v] = e;
        arr.push_back({{"coeff", c.str()}, {"monomial", mono}});
    }
    return arr.dump();
}

Polynomial polynomial_from_json(const std::string& json_text) {
    nlohmann::json arr = nlohmann::json::parse(json_text);
    Polynomial p;
    for (const auto& term : arr) {
        Monomial m;
        for (auto it = term.at("monomial").begin(); it != term.at("monomial").end(); ++it)
            m[it.key()] = it.value().get<int>();
        p.add_term(m, Int(term.at("coeff").get<std::string>()));
    }
    return p;
}

}  // namespace greene
