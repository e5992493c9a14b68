// pipeline.hpp - full sparsification: iterated decompose -> per-cluster
// sparsify -> delayed contraction
#ifndef HYPERSPARSE_PIPELINE_HPP
#define HYPERSPARSE_PIPELINE_HPP

#include <cstdint>
#include <vector>

#include "hypersparse/decomposition.hpp"
#include "hypersparse/expander_sparsify.hpp"
#include "hypersparse/hypergraph.hpp"

namespace hypersparse {

struct PipelineConfig {
    double epsilon = 0.5;  // per-cluster sampling runs at epsilon / 10
    std::uint64_t seed = 0;
    // Contraction delay: clusters from level i' feed the equivalence used at
    // levels i >= i' + delay. 0 means ceil(10 * log2 n).
    std::size_t delay = 0;
    std::size_t level_cap = 0;  // 0 means floor(log2 m) + 1
    double lambda_c = 1.0;
    DecompositionConfig decomp;
};

struct PipelineLevel {
    // Input vertex -> supernode id at this level (the coarsened equivalence).
    std::vector<Vertex> vertex_class;
    std::size_t supernode_count = 0;
    std::size_t live_count = 0;  // edges alive entering this level
    // Per cluster: member input vertices, member supernode count, retained
    // input edge indices.
    std::vector<std::vector<Vertex>> cluster_members;
    std::vector<std::size_t> cluster_supernode_counts;
    std::vector<std::vector<std::size_t>> retained;
    std::vector<std::size_t> removed_to_next;
};

struct PipelineRun {
    Sparsifier sparsifier;  // entries reference input edge indices
    std::vector<PipelineLevel> levels;
    std::size_t n = 0;
    std::size_t m = 0;
    double epsilon = 0.0;
    std::size_t delay = 0;
};

// Runs the whole pipeline; throws if live edges survive past the level cap.
PipelineRun sparsify_run(const Hypergraph& h, const PipelineConfig& cfg = {});

inline Sparsifier sparsify(const Hypergraph& h, const PipelineConfig& cfg = {}) {
    return sparsify_run(h, cfg).sparsifier;
}

struct ClusterCensus {
    std::size_t cluster_count = 0;
    std::size_t total_size = 0;  // sum of cluster sizes in supernodes
    double bound = 0.0;          // 21 * n * log2 n
};

ClusterCensus cluster_census(const PipelineRun& run);

// Per-(level, cluster) contraction error data for a test vector x:
// delta = max |x_u - x_v| over vertices merged into one supernode within the
// cluster; bound = eps * Q(x) / (2 n^3 m_i). q_contracted is the energy of the
// level's live contracted graph under the lift that assigns each supernode the
// value of its smallest member; q_input >= q_contracted always.
struct ContractionProbe {
    std::size_t level = 0;
    std::size_t cluster = 0;
    double delta = 0.0;
    double bound = 0.0;
    double q_input = 0.0;
    double q_contracted = 0.0;
};

std::vector<ContractionProbe> contraction_error_probe(const Hypergraph& h,
                                                      const PipelineRun& run,
                                                      std::span<const double> x);

}  // namespace hypersparse

#endif
