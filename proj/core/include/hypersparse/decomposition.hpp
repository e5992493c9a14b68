// decomposition.hpp - expander decomposition by low-degree peeling and
// recursive sparse cutting
#ifndef HYPERSPARSE_DECOMPOSITION_HPP
#define HYPERSPARSE_DECOMPOSITION_HPP

#include <cstdint>
#include <vector>

#include "hypersparse/hypergraph.hpp"
#include "hypersparse/sparsest_cut.hpp"

namespace hypersparse {

// How a cluster's expansion lower bound was certified.
enum class CertLevel {
    BruteForce,  // exact minimum over all cuts (small clusters)
    LpSearch,    // LP-based search found nothing below the cut threshold
    Heuristic,   // eigenvector heuristic found nothing in seeded attempts
};

enum class RemovalReason { Peel, Cut };

struct DecompositionConfig {
    // Cluster expansion target; 0 means 1/(K * r * log2(n)^2).
    double phi_target = 0.0;
    double K = 16.0;
    // Split when a cut with expansion <= 1/(cut_const * r * log2 n) is found.
    double cut_const = 4.0;
    // Peel vertices with induced degree < min_deg_frac * (total weight) / n.
    double min_deg_frac = 0.25;
    std::uint64_t seed = 0;
    std::size_t search_attempts = 5;
    std::size_t brute_force_max = 16;
    SparsestCutConfig cut_cfg;
};

struct Decomposition {
    struct Cluster {
        std::vector<Vertex> vertices;
        std::vector<std::size_t> edges;  // parent edge indices, fully supported
        CertLevel cert = CertLevel::BruteForce;
        // Certified expansion lower bound: the exact minimum for BruteForce,
        // the searched threshold otherwise.
        double phi_certificate = 0.0;
    };

    std::vector<Cluster> clusters;
    std::vector<Vertex> discarded_vertices;
    std::vector<std::size_t> removed_edges;
    std::vector<RemovalReason> removal_reasons;  // parallel to removed_edges
    std::size_t iterations = 0;
};

Decomposition expander_decomposition(const Hypergraph& h, const DecompositionConfig& cfg = {});

// Recomputes the removal accounting: peel removals against W/4, cut removals
// against vol(V)/(4 r), total against W/2.
struct ChargeAudit {
    double total_weight = 0.0;
    double peel_removed_weight = 0.0;
    double cut_removed_weight = 0.0;
    double removed_weight = 0.0;
    double peel_bound = 0.0;    // total_weight / 4
    double charge_bound = 0.0;  // total volume / (4 * max edge size)
    bool within_half = false;   // removed_weight <= total_weight / 2
};

ChargeAudit charge_audit(const Decomposition& d, const Hypergraph& h);

}  // namespace hypersparse

#endif
