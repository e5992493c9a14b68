// directed_sparsify.hpp - banded uniform sampling of directed hyperarcs
#ifndef HYPERSPARSE_DIRECTED_SPARSIFY_HPP
#define HYPERSPARSE_DIRECTED_SPARSIFY_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "hypersparse/directed_hypergraph.hpp"
#include "hypersparse/overlap.hpp"

namespace hypersparse {

struct DirectedSparsifyConfig {
    double epsilon = 0.5;
    double p_c = 1.0;  // multiplier on the keep-rate shape r^2 log2(n) / (k eps^2)
    std::uint64_t seed = 0;
};

// Keep rate for a band whose arcs all have overlap in [k, 2k]:
// min(1, p_c * r^2 * log2(n) / (k * eps^2)), r the largest arc size in scope.
double band_keep_rate(std::size_t n, std::size_t r, std::size_t k,
                      const DirectedSparsifyConfig& cfg);

// Independent keep-with-weight-1/p sampling of the given arcs, keyed by
// (seed, arc index).
Sparsifier uniform_band_sparsify(const DirectedHypergraph& d,
                                 const std::vector<std::size_t>& band,
                                 std::size_t k, const DirectedSparsifyConfig& cfg);

struct DirectedSparsifyRun {
    Sparsifier sparsifier;
    struct Band {
        std::size_t k;       // band parameter: overlaps lie in [k, 2k]
        double keep_rate;
        std::vector<std::size_t> arcs;
    };
    std::vector<Band> bands;  // highest overlap first, as processed
    // Theorem precondition 11 r <= sqrt(eps n); reported, not enforced.
    bool size_precondition_ok = false;
};

// Repeatedly halve the maximum overlap: extract the maximal
// ceil(kmax/2)-overlapping set, sample it as one band, remove it.
DirectedSparsifyRun directed_sparsify_run(const DirectedHypergraph& d,
                                          const DirectedSparsifyConfig& cfg = {});

inline Sparsifier directed_sparsify(const DirectedHypergraph& d,
                                    const DirectedSparsifyConfig& cfg = {}) {
    return directed_sparsify_run(d, cfg).sparsifier;
}

// Test-surface scale categories of the clique-graph energies at level k.
// Requires x normalized so the weighted clique-graph energy is 1.
struct DirectedCategories {
    std::size_t i_star = 0;  // ceil(3 log2 n)
    struct PairInfo {
        Vertex from, to;
        double energy;          // (x_from - x_to)_+^2
        std::size_t category;   // 1..i_star, or 0 for the residual below 2^-i*/k
    };
    std::vector<PairInfo> pairs;      // distinct clique pairs, lexicographic
    // Arc category: the largest pair category present in its clique, 0 if all
    // of its pairs are residual.
    std::vector<std::size_t> arc_category;
    // rounded[i-1][p]: pair p's energy snapped to a multiple of 1/(k n^3),
    // zeroed below 2^-i / k.
    std::vector<std::vector<double>> rounded;
};

DirectedCategories directed_category_probe(const DirectedHypergraph& d,
                                           std::span<const double> x, std::size_t k);

}  // namespace hypersparse

#endif
