// sparsest_cut.hpp - LP relaxation + metric embedding + sweep rounding
#ifndef HYPERSPARSE_SPARSEST_CUT_HPP
#define HYPERSPARSE_SPARSEST_CUT_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "hypersparse/hypergraph.hpp"

namespace hypersparse {

// Optimal solution of the metric relaxation
//   min sum_e w_e z(e)
//   s.t. sum over ordered pairs (u,v) of d(u) d(v) ell(u,v) = 1,
//        z(e) >= ell(u,v) for all u, v in e,
//        ell a pseudo-metric (triangle rows generated lazily).
struct MetricSolution {
    std::size_t n = 0;
    std::vector<double> ell;  // n*n row-major, symmetric, zero diagonal
    std::vector<double> z;    // one per edge
    double objective = 0.0;
    std::size_t lp_iterations = 0;
    std::size_t triangle_rounds = 0;

    double ell_at(std::size_t u, std::size_t v) const { return ell[u * n + v]; }
};

// Dense LP guard: beyond this many vertices sparse_cut switches to the
// eigenvector heuristic instead.
inline constexpr std::size_t kDefaultLpCap = 64;

MetricSolution solve_metric_lp(const Hypergraph& h, std::size_t lp_cap = kDefaultLpCap);

// Coordinates are distances to random vertex subsets: scales j = 1..ceil(log2 n),
// inclusion probability 2^-j, trials_per_scale repetitions each (0 means
// ceil(log2 n)). Distance-to-set is 1-Lipschitz, so every coordinate gap is
// at most ell(u,v).
struct Embedding {
    std::size_t n = 0;
    std::size_t k = 0;
    std::vector<double> coords;  // n*k row-major

    double at(std::size_t v, std::size_t i) const { return coords[v * k + i]; }
};

Embedding bourgain_embed(const MetricSolution& sol, std::uint64_t seed,
                         std::size_t trials_per_scale = 0);

// Empirical distortion of an embedding against its source metric:
// largest ell(u,v) * k / (sum_i |f_i(u) - f_i(v)|) over pairs with ell > 0.
double embedding_distortion(const MetricSolution& sol, const Embedding& emb);

// Best sweep prefix over every coordinate. best_phi minimizes
// cut / (vol(S) vol(V\S)); best_expansion minimizes cut / min(vol, vol).
// coordinate_bound is min_i (sum_e w_e max-gap_i) / (sum_{u<v} d(u)d(v) gap_i),
// and best_phi <= coordinate_bound always (asserted internally).
struct SweepResult {
    std::vector<bool> best_phi_set;
    double best_phi = 0.0;
    std::vector<bool> best_expansion_set;
    double best_expansion = 0.0;
    double coordinate_bound = 0.0;
};

SweepResult sweep_round(const Hypergraph& h, const Embedding& emb);

struct SparsestCutConfig {
    std::size_t lp_cap = kDefaultLpCap;
    std::size_t trials_per_scale = 0;  // 0: ceil(log2 n)
    std::size_t power_iterations = 300;
};

// End-to-end cut. expansion = cut/min-vol for the returned set; phi is the
// best vol-product ratio seen during rounding. lp_objective is absent in
// heuristic mode (n over lp_cap: sweep of a power-iteration eigenvector,
// no ratio certificate).
struct CutResult {
    std::vector<bool> in_set;
    double expansion = 0.0;
    double phi = 0.0;
    std::optional<double> lp_objective;
    bool heuristic = false;
};

CutResult sparse_cut(const Hypergraph& h, std::uint64_t seed,
                     const SparsestCutConfig& cfg = {});

}  // namespace hypersparse

#endif
