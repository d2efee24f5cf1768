#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "greene/graph.hpp"
#include "greene/poly.hpp"

namespace greene {

// A disconnecting chain together with its regions: each region is the induced
// subgraph on one component of G minus the chain vertices, plus the chain.
struct RegionSplit {
    Chain chain;
    std::vector<DirectedMultigraph> regions;
};

// Recursive factorization: a node records the chain it split on; a leaf
// carries an irreducible (pruned) graph and its numerator.
struct FactorTree {
    Chain chain;                     // meaningful for internal nodes
    std::vector<FactorTree> children;
    DirectedMultigraph graph;        // leaf payload
    Polynomial value;                // leaf payload

    bool is_leaf() const { return children.empty(); }
};

Polynomial factor_product(const FactorTree& t);
std::vector<const FactorTree*> factor_leaves(const FactorTree& t);

// All vertex-set-maximal disconnecting chains (directed paths, single
// vertices included) of a connected, circuit-free, Hasse-reduced graph,
// ordered by (chain length, vertex sequence). A chain is kept only if no
// other disconnecting chain properly contains its vertex set.
std::vector<RegionSplit> enumerate_disconnecting_chains(const DirectedMultigraph& g);

// Recursively splits on the first enumerated chain with the most regions,
// pruning each region before recursing; leaves carry numerator_by_cycles of
// the irreducible pieces. A disconnected input yields a single zero leaf.
FactorTree factor_numerator(const DirectedMultigraph& g);

// Mobius function over poset(G) for all comparable ordered pairs.
struct MobiusTable {
    std::map<std::pair<std::string, std::string>, long long> values;

    long long at(const std::string& a, const std::string& b) const {
        auto it = values.find({a, b});
        return it == values.end() ? 0 : it->second;
    }
};

MobiusTable mobius(const DirectedMultigraph& g);

// Greene product data: nonzero Mobius exponents over strict comparable pairs,
// plus the verdict. `matches` holds iff the mu = -1 pairs are exactly the
// edges (with no other negative exponents) and the positive-exponent product
// equals the numerator.
struct GreeneReport {
    std::map<std::pair<std::string, std::string>, long long> exponents;
    Polynomial positive_part;
    Polynomial numerator;
    bool matches = false;
};

GreeneReport greene_check(const DirectedMultigraph& g);

// Checks the region/Mobius compatibility: mu_P(i,j) = -1 on covers and
// Sum_k mu_{P_k}(i,j) otherwise, with mu_Q = 0 when an endpoint is missing.
bool mobius_region_identity(const DirectedMultigraph& g, const RegionSplit& split);

}  // namespace greene
