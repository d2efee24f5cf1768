#include "greene/extensions.hpp"

#include <algorithm>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace greene {

std::vector<Word> linear_extensions(const DirectedMultigraph& g) {
    const int n = g.n_vertices();
    // Candidate order: natural label order, so backtracking emits words
    // lexicographically.
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return natural_less(g.label(a), g.label(b)); });

    std::vector<int> indeg(n, 0);
    for (const Edge& e : g.edges()) ++indeg[e.end];

    std::vector<Word> words;
    std::vector<int> current;
    std::vector<bool> used(n, false);

    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(current.size()) == n) {
            Word w;
            for (int v : current) w.push_back(g.label(v));
            words.push_back(std::move(w));
            return;
        }
        for (int v : order) {
            if (used[v] || indeg[v] != 0) continue;
            used[v] = true;
            for (const Edge& e : g.edges())
                if (e.origin == v) --indeg[e.end];
            current.push_back(v);
            self(self);
            current.pop_back();
            for (const Edge& e : g.edges())
                if (e.origin == v) ++indeg[e.end];
            used[v] = false;
        }
    };
    rec(rec);
    return words;
}

Rat psi_word_eval(const Word& w, const RationalPoint& pt) {
    Rat denom = 1;
    for (size_t i = 0; i + 1 < w.size(); ++i) {
        auto a = pt.find(w[i]), b = pt.find(w[i + 1]);
        if (a == pt.end() || b == pt.end()) throw Error("point misses a word letter");
        Rat d = a->second - b->second;
        if (d == 0)
            throw Error("pole: equal values for consecutive letters '" + w[i] + "', '" +
                        w[i + 1] + "'");
        denom *= d;
    }
    return Rat(1) / denom;
}

Rat psi_eval_serial(const DirectedMultigraph& g, const RationalPoint& pt) {
    Rat total = 0;
    for (const Word& w : linear_extensions(g)) total += psi_word_eval(w, pt);
    return total;
}

Rat psi_eval(const DirectedMultigraph& g, const RationalPoint& pt) {
    const std::vector<Word> words = linear_extensions(g);
#ifdef _OPENMP
    const int nthreads = omp_get_max_threads();
    std::vector<Rat> partial(nthreads, Rat(0));
#pragma omp parallel
    {
        const int t = omp_get_thread_num();
#pragma omp for schedule(static)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(words.size()); ++i)
            partial[t] += psi_word_eval(words[i], pt);
    }
    Rat total = 0;
    for (const Rat& r : partial) total += r;
    return total;
#else
    Rat total = 0;
    for (const Word& w : words) total += psi_word_eval(w, pt);
    return total;
#endif
}

Rat numerator_eval_oracle(const DirectedMultigraph& g, const RationalPoint& pt) {
    Rat prod = 1;
    for (const Edge& e : g.edges()) {
        Rat d = pt.at(g.label(e.origin)) - pt.at(g.label(e.end));
        if (d == 0) throw Error("pole: evaluation point collapses an edge");
        prod *= d;
    }
    return psi_eval(g, pt) * prod;
}

RationalPoint random_point(const DirectedMultigraph& g, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> dist(-1000000, 1000000);
    RationalPoint pt;
    std::set<long> taken;
    for (const std::string& v : g.vertices()) {
        long x = dist(rng);
        while (taken.count(x)) x = dist(rng);
        taken.insert(x);
        pt[v] = Rat(x);
    }
    return pt;
}

}  // namespace greene
