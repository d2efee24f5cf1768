#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "greene/graph.hpp"
#include "greene/poly.hpp"

namespace greene {

// A linear extension as the sequence of vertex labels.
using Word = std::vector<std::string>;

// All topological orders of g in lexicographic order (natural label
// comparison); empty iff g has a circuit.
std::vector<Word> linear_extensions(const DirectedMultigraph& g);

// 1 / ((x_{w1}-x_{w2}) ... (x_{wn-1}-x_{wn})); 1 for a single-letter word.
Rat psi_word_eval(const Word& w, const RationalPoint& pt);

// Sum of psi_word_eval over all linear extensions. The OpenMP kernel splits
// the word list across threads; psi_eval_serial is the reference loop kept
// for testing. Exact arithmetic makes both orderings identical.
Rat psi_eval(const DirectedMultigraph& g, const RationalPoint& pt);
Rat psi_eval_serial(const DirectedMultigraph& g, const RationalPoint& pt);

// psi_eval times the evaluated product of edge differences: the definitional
// value of N at pt, used as the evaluation oracle for the symbolic engines.
Rat numerator_eval_oracle(const DirectedMultigraph& g, const RationalPoint& pt);

// Distinct integer coordinates drawn uniformly from [-10^6, 10^6]; distinct
// integers avoid every pole of every psi_w at once.
RationalPoint random_point(const DirectedMultigraph& g, std::mt19937_64& rng);

}  // namespace greene
