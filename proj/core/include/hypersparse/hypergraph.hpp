// hypergraph.hpp - weighted multiset hypergraphs, energies, cuts, contraction
#ifndef HYPERSPARSE_HYPERGRAPH_HPP
#define HYPERSPARSE_HYPERGRAPH_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hypersparse {

using Vertex = std::uint32_t;

// A hyperedge is a multiset of vertex ids: repeats are legal and preserved.
struct Hyperedge {
    std::vector<Vertex> vertices;
    double weight = 1.0;

    std::size_t size() const { return vertices.size(); }
    std::size_t multiplicity(Vertex v) const;
    // All listed vertices coincide (one distinct vertex).
    bool is_self_loop() const;

    bool operator==(const Hyperedge&) const = default;
};

// Immutable after construction; safe to share read-only across threads.
class Hypergraph {
public:
    Hypergraph() = default;
    Hypergraph(std::size_t n, std::vector<Hyperedge> edges, bool weighted = false);

    std::size_t vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    bool weighted() const { return weighted_; }
    const Hyperedge& edge(std::size_t i) const { return edges_.at(i); }
    const std::vector<Hyperedge>& edges() const { return edges_; }

    // Weighted degree: sum over edges of multiplicity(v) * weight.
    double degree(Vertex v) const { return degree_.at(v); }
    double volume(const std::vector<bool>& in_set) const;
    double total_volume() const;
    std::size_t max_edge_size() const;

    bool operator==(const Hypergraph&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<Hyperedge> edges_;
    std::vector<double> degree_;
    bool weighted_ = false;
};

// w_e * max over listed vertex pairs of (x_a - x_b)^2; self-loops give 0.
double energy_edge(const Hypergraph& h, std::size_t e, std::span<const double> x);
double energy(const Hypergraph& h, std::span<const double> x);

// Weight of edges with a listed vertex on both sides of the cut.
double cut_value(const Hypergraph& h, const std::vector<bool>& in_set);

// |E(S, V\S)| / min(vol(S), vol(V\S)); nullopt when the smaller volume is 0.
// Throws std::invalid_argument for trivial S.
std::optional<double> expansion_of_set(const Hypergraph& h, const std::vector<bool>& in_set);

// cut / (vol(S) * vol(V\S)); the sparsity variant with the product denominator.
std::optional<double> phi_of_set(const Hypergraph& h, const std::vector<bool>& in_set);

// Disjoint-set forest over 0..n-1 representing an equivalence relation.
class VertexPartition {
public:
    explicit VertexPartition(std::size_t n);

    std::size_t size() const { return parent_.size(); }
    Vertex find(Vertex v) const;
    void unite(Vertex a, Vertex b);
    bool same(Vertex a, Vertex b) const { return find(a) == find(b); }
    std::size_t class_count() const;
    // Dense relabeling: class representative -> id in 0..k-1, ordered by
    // smallest member vertex.
    std::vector<Vertex> class_ids() const;

private:
    mutable std::vector<Vertex> parent_;
    std::vector<std::uint32_t> rank_;
};

struct Contraction {
    Hypergraph graph;                 // one vertex per class
    std::vector<Vertex> vertex_map;   // original vertex -> class id
};

// Each edge maps vertex -> class id, preserving list length, weight and edge
// order, so edge i of the contraction corresponds to edge i of the input.
Contraction contract(const Hypergraph& h, const VertexPartition& p);

// Weighted subgraph: indices into the parent edge list with positive weights.
struct Sparsifier {
    struct Entry {
        std::size_t edge_index;
        double weight;
    };
    std::vector<Entry> entries;

    std::size_t size() const { return entries.size(); }
    // The sparsifier's edges lifted back to the parent's vertex set.
    Hypergraph materialize(const Hypergraph& parent) const;
    void validate(const Hypergraph& parent) const;
};

double sparsifier_energy(const Hypergraph& parent, const Sparsifier& sp, std::span<const double> x);
double sparsifier_cut(const Hypergraph& parent, const Sparsifier& sp, const std::vector<bool>& in_set);

}  // namespace hypersparse

#endif
