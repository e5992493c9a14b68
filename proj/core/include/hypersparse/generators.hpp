// generators.hpp - seeded instance presets for tests and the CLI
#ifndef HYPERSPARSE_GENERATORS_HPP
#define HYPERSPARSE_GENERATORS_HPP

#include <cstdint>

#include "hypersparse/directed_hypergraph.hpp"
#include "hypersparse/hypergraph.hpp"

namespace hypersparse {

// All C(n, r) distinct r-subsets as unit edges.
Hypergraph complete_uniform(std::size_t n, std::size_t r);

// m edges, each r distinct vertices chosen uniformly. With allow_repeats the
// edge is an unrestricted multiset sample.
Hypergraph random_uniform(std::size_t n, std::size_t m, std::size_t r, std::uint64_t seed,
                          bool allow_repeats = false);

// Two dense r-uniform blocks joined by a single bridging edge.
Hypergraph planted_bridge(std::size_t block_n, std::size_t block_m, std::size_t r,
                          std::uint64_t seed);

// All arcs ({u}, {v}) with u in the left half and v in the right half: the
// directed worst case where every arc is the unique crossing arc of some cut.
DirectedHypergraph bipartite_clique_directed(std::size_t half_n);

// m random arcs with tail/head sizes up to max_side (duplicates re-sampled).
DirectedHypergraph random_directed(std::size_t n, std::size_t m, std::size_t max_side,
                                   std::uint64_t seed);

// Standard-normal coordinates, then centered so sum_v x_v d(v) = 0.
std::vector<double> random_centered_vector(const Hypergraph& h, std::uint64_t seed);

// Centered and normalized: sum x_v d(v) = 0 and sum x_v^2 d(v) = 1.
std::vector<double> random_normalized_vector(const Hypergraph& h, std::uint64_t seed);

}  // namespace hypersparse

#endif
