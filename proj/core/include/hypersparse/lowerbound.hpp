// lowerbound.hpp - cut-based string compression: encode bit strings into a
// hypergraph built on an induced-matching family, decode via cut queries
#ifndef HYPERSPARSE_LOWERBOUND_HPP
#define HYPERSPARSE_LOWERBOUND_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hypersparse/hypergraph.hpp"

namespace hypersparse {

// Union of t pairwise edge-disjoint matchings of size a on [n], each induced:
// the union graph restricted to a matching's endpoints contains only that
// matching's edges.
struct RSGraph {
    std::size_t n = 0;
    std::vector<std::vector<std::pair<Vertex, Vertex>>> matchings;

    std::size_t t() const { return matchings.size(); }
    std::size_t a() const { return matchings.empty() ? 0 : matchings.front().size(); }
};

// Empty on success, otherwise a description of the first violation.
std::optional<std::string> validate_rs(const RSGraph& g);

// Randomized greedy packing: sample candidate matchings of size a, keep those
// that stay induced against the union so far. Throws with the partial count
// if t matchings are not found within the retry budget.
RSGraph gen_rs_greedy(std::size_t n, std::size_t t, std::size_t a, std::uint64_t seed,
                      std::size_t retries_per_matching = 2000);

// Always-valid family: t matchings on t disjoint blocks of 2a vertices.
RSGraph rs_disjoint_blocks(std::size_t t, std::size_t a);

// The doubled bipartite graph on P (ids 0..n-1) and Q (ids n..2n-1): each
// matching edge {u, v} becomes (P_u, Q_v) and (P_v, Q_u), giving 2ta indexed
// edges; a bit string selects a subset, and every P-vertex u spawns the
// hyperedge {u} plus its selected Q-neighbors.
struct EncodedInstance {
    struct DoubledEdge {
        std::size_t matching;  // j
        Vertex p, q;           // endpoint ids in the doubled graph
    };

    std::size_t n = 0;  // half size: |P| = |Q| = n
    std::size_t t = 0;
    std::size_t a = 0;
    std::vector<DoubledEdge> edges;  // index = string coordinate, length 2ta
    std::vector<bool> s;
    Hypergraph h;  // on 2n vertices; one hyperedge per P-vertex
};

EncodedInstance encode(const RSGraph& g, const std::vector<bool>& s);

// Query set for segment j and queried coordinates q_j (all within segment j):
// the P-endpoints of the queried doubled edges, plus all of Q except the
// endpoints of segment j's doubled edges.
std::vector<bool> query_cut_set(const EncodedInstance& inst, std::size_t j,
                                const std::vector<std::size_t>& q_j);

// Expected background noise of segment j under a uniformly random string:
// sum over unmatched P-vertices of 1 - 2^-c, c the count of their doubled
// edges leaving segment j's Q-endpoints.
double expected_z(const EncodedInstance& inst, std::size_t j);

using CutFn = std::function<double(const std::vector<bool>&)>;

// Estimates |s restricted to q| from cut queries alone: per segment,
// cut - (segment size - queried count) - expected noise, summed, rounded,
// clamped to [0, |q|].
long long decode(const EncodedInstance& inst, const std::vector<std::size_t>& q,
                 const CutFn& cut_fn);

// Exact cuts on the encoded hypergraph.
CutFn exact_cut_fn(const EncodedInstance& inst);

struct AuditReport {
    std::size_t trials = 0;
    double mean_abs_error = 0.0;
    double max_abs_error = 0.0;
    double p50_error = 0.0;
    double p90_error = 0.0;
    double bound = 0.0;  // 8 n + 100 t sqrt(n log2 n)
    double fraction_within_bound = 0.0;
    std::size_t min_p_degree = 0;  // smallest doubled-graph degree over P
    bool degree_one_systematic = false;
};

// Random (string, query) trials decoded with exact cuts.
AuditReport audit_scs(const RSGraph& g, std::size_t trials, std::uint64_t seed);

}  // namespace hypersparse

#endif
