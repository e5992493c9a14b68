// overlap.hpp - overlap numbers of directed hyperarcs via clique-pair peeling
#ifndef HYPERSPARSE_OVERLAP_HPP
#define HYPERSPARSE_OVERLAP_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "hypersparse/directed_hypergraph.hpp"

namespace hypersparse {

// The overlap of an arc e is the largest k such that some arc set containing
// e has every clique pair appearing with multiplicity >= k.
struct OverlapAssignment {
    std::vector<std::size_t> k;                       // per arc
    std::vector<std::pair<Vertex, Vertex>> witness;   // peel pair per arc
    struct Band {
        std::size_t k;
        std::vector<std::size_t> arcs;
    };
    std::vector<Band> bands;  // increasing k

    double inverse_sum() const;  // sum of 1/k(e); always <= n^2
};

// Peeling: repeatedly raise k to the smallest clique-pair multiplicity among
// the remaining arcs and peel the arcs of that pair, processing ties in
// lexicographic (from, to) order. Assigns each arc its exact overlap.
OverlapAssignment overlap_peel(const DirectedHypergraph& d);

// Exhaustive oracle: max over all arc subsets containing e of the minimum
// clique-pair multiplicity inside the subset. Guard: arc_count <= 12.
std::size_t overlap_brute(const DirectedHypergraph& d, std::size_t e);

// Unique maximal subset of `arcs` in which every clique pair has multiplicity
// >= k: iterated removal of arcs touching an under-multiplicity pair.
std::vector<std::size_t> maximal_k_overlapping(const DirectedHypergraph& d,
                                               const std::vector<std::size_t>& arcs,
                                               std::size_t k);

}  // namespace hypersparse

#endif
