// oracle.hpp - brute-force ground truth for desk-scale instances
#ifndef HYPERSPARSE_ORACLE_HPP
#define HYPERSPARSE_ORACLE_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "hypersparse/hypergraph.hpp"

namespace hypersparse {
namespace oracle {

// Hard capacity guards: 2^n cut loops refuse n above this.
inline constexpr std::size_t kMaxEnumVertices = 20;

struct BruteCut {
    std::vector<bool> in_set;
    double value;  // Phi or phi of the minimizing set
};

// Exact min over all nontrivial S of Phi(S); degenerate cuts (smaller volume
// zero) count as expansion 0 with the isolated side reported.
BruteCut brute_sparsest_cut(const Hypergraph& h);

// Same for phi(S) = cut / (vol(S) * vol(V\S)).
BruteCut brute_phi(const Hypergraph& h);

struct QualityReport {
    std::size_t cut_queries = 0;
    std::size_t vector_queries = 0;
    std::size_t violations = 0;         // |ratio - 1| > epsilon with Q > 0
    std::size_t zero_mismatches = 0;    // Q == 0 but Q~ != 0 (or vice versa)
    double worst_ratio_low = 1.0;       // min over queries of Q~/Q
    double worst_ratio_high = 1.0;      // max over queries of Q~/Q
    double mean_cut_ratio = 1.0;
    std::size_t sparsifier_size = 0;
};

struct EvalOptions {
    double epsilon = 0.5;
    bool all_cuts = true;           // exhaustive 2^n cut indicators (n <= 20)
    std::size_t sample_vectors = 0; // random centered vectors on top
    std::uint64_t seed = 0;
    std::size_t jobs = 1;
};

QualityReport evaluate_sparsifier(const Hypergraph& h, const Sparsifier& sp,
                                  const EvalOptions& opts);

struct CheegerResult {
    bool pass;
    bool precondition_ok;  // Phi <= 2/r held
    double lhs;            // Q(x)
    double rhs;            // (r Phi^2 / 32) * sum x_v^2 d(v)
    double phi;
    double slack;          // lhs - rhs
};

// Q(x) >= (r Phi^2 / 32) sum_v x_v^2 d(v) with x centered internally and Phi
// from brute_sparsest_cut; r is the minimum edge size.
CheegerResult cheeger_check(const Hypergraph& h, std::vector<double> x);

// Ordinary multigraph with one (argmax, argmin) pair per hyperedge, ties by
// lowest vertex id; Q_{G_x}(x) equals the hypergraph energy at x.
struct SweepGraph {
    std::vector<std::pair<Vertex, Vertex>> edges;  // (max side, min side) per hyperedge
    std::vector<double> weights;
};

SweepGraph sweep_graph(const Hypergraph& h, std::span<const double> x);
double sweep_graph_energy(const SweepGraph& g, std::span<const double> x);

}  // namespace oracle
}  // namespace hypersparse

#endif
