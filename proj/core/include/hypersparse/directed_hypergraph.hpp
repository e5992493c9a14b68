// directed_hypergraph.hpp - simple directed hypergraphs and directed energy
#ifndef HYPERSPARSE_DIRECTED_HYPERGRAPH_HPP
#define HYPERSPARSE_DIRECTED_HYPERGRAPH_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "hypersparse/hypergraph.hpp"

namespace hypersparse {

// tail and head are sorted, nonempty and disjoint.
struct Hyperarc {
    std::vector<Vertex> tail;
    std::vector<Vertex> head;
    double weight = 1.0;

    std::size_t size() const { return tail.size() + head.size(); }
    bool operator==(const Hyperarc&) const = default;
};

// Simple: no two arcs share the same (tail, head).
class DirectedHypergraph {
public:
    DirectedHypergraph() = default;
    DirectedHypergraph(std::size_t n, std::vector<Hyperarc> arcs, bool weighted = false);

    std::size_t vertex_count() const { return n_; }
    std::size_t arc_count() const { return arcs_.size(); }
    bool weighted() const { return weighted_; }
    const Hyperarc& arc(std::size_t i) const { return arcs_.at(i); }
    const std::vector<Hyperarc>& arcs() const { return arcs_; }
    std::size_t max_arc_size() const;

private:
    std::size_t n_ = 0;
    std::vector<Hyperarc> arcs_;
    bool weighted_ = false;
};

// One ordered pair per (tail vertex, head vertex), tagged with its arc index.
struct CliquePair {
    Vertex from;
    Vertex to;
    std::size_t arc_index;
};

std::vector<CliquePair> clique_graph(const DirectedHypergraph& d);

// w_e * max over (a in tail, b in head) of (x_a - x_b)_+^2.
double directed_energy_arc(const DirectedHypergraph& d, std::size_t e, std::span<const double> x);
double directed_energy(const DirectedHypergraph& d, std::span<const double> x);
double directed_cut_value(const DirectedHypergraph& d, const std::vector<bool>& in_set);

double directed_sparsifier_energy(const DirectedHypergraph& parent, const Sparsifier& sp,
                                  std::span<const double> x);
double directed_sparsifier_cut(const DirectedHypergraph& parent, const Sparsifier& sp,
                               const std::vector<bool>& in_set);

}  // namespace hypersparse

#endif
