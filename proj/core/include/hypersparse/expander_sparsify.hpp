// expander_sparsify.hpp - importance-sampling sparsifier for expander inputs
#ifndef HYPERSPARSE_EXPANDER_SPARSIFY_HPP
#define HYPERSPARSE_EXPANDER_SPARSIFY_HPP

#include <cstdint>
#include <vector>

#include "hypersparse/hypergraph.hpp"

namespace hypersparse {

struct ExpanderSparsifyConfig {
    double epsilon = 0.5;        // in (0, 1/2]
    double phi = 0.1;            // claimed expansion lower bound of the input
    std::size_t n_ref = 0;       // reference vertex count; 0 means use |V|
    double lambda_c = 1.0;       // multiplier on the sampling-intensity shape
    std::uint64_t seed = 0;
    bool strip_self_loops = false;

    void validate() const;
};

// lambda = lambda_c * log2(n_ref)^2 / (eps^4 * phi_eff^2 * r), with phi
// clamped to 2/r (the Cheeger applicability bound) and r the given edge size.
double sampling_lambda(const ExpanderSparsifyConfig& cfg, std::size_t n_ref, std::size_t r);

// p_e = min(lambda / min_{v in e} d(v), 1).
double sampling_rate(const Hypergraph& h, std::size_t e, const ExpanderSparsifyConfig& cfg);

// Keeps each edge independently with probability sampling_rate; kept edges
// get weight (parent weight) / p_e, so the sparsifier is unbiased edge-wise.
// Sampling decisions are keyed by (seed, edge index): order-independent.
Sparsifier expander_sparsify(const Hypergraph& h, const ExpanderSparsifyConfig& cfg);

// Test-surface discretization machinery: the scale categories and rounded
// vectors used to stress the sampling analysis. Never on the sparsify path.
struct StressCategories {
    // category_of[e] = i in 1..i_star, or 0 for the residual category.
    std::vector<std::size_t> category_of;
    std::size_t i_star;
    // rounded[i-1] is the vector x^(i); rounded vectors for categories only.
    std::vector<std::vector<double>> rounded;
};

// Requires x centered and normalized: sum x_v d(v) = 0, sum x_v^2 d(v) = 1.
StressCategories stress_vectors(const Hypergraph& h, std::span<const double> x, double epsilon);

}  // namespace hypersparse

#endif
