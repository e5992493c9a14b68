#include "hypersparse/hypergraph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace hypersparse {

std::size_t Hyperedge::multiplicity(Vertex v) const {
    return static_cast<std::size_t>(std::count(vertices.begin(), vertices.end(), v));
}

bool Hyperedge::is_self_loop() const {
    if (vertices.empty()) return false;
    return std::all_of(vertices.begin(), vertices.end(),
                       [&](Vertex v) { return v == vertices.front(); });
}

Hypergraph::Hypergraph(std::size_t n, std::vector<Hyperedge> edges, bool weighted)
    : n_(n), edges_(std::move(edges)), weighted_(weighted) {
    degree_.assign(n_, 0.0);
    for (const auto& e : edges_) {
        if (e.vertices.empty())
            throw std::invalid_argument("hyperedge must list at least one vertex");
        if (!(e.weight > 0.0) || !std::isfinite(e.weight))
            throw std::invalid_argument("hyperedge weight must be finite and positive");
        for (Vertex v : e.vertices) {
            if (v >= n_) throw std::invalid_argument("vertex id out of range");
            degree_[v] += e.weight;
        }
    }
}

double Hypergraph::volume(const std::vector<bool>& in_set) const {
    if (in_set.size() != n_) throw std::invalid_argument("set size mismatch");
    double vol = 0.0;
    for (Vertex v = 0; v < n_; ++v)
        if (in_set[v]) vol += degree_[v];
    return vol;
}

double Hypergraph::total_volume() const {
    return std::accumulate(degree_.begin(), degree_.end(), 0.0);
}

std::size_t Hypergraph::max_edge_size() const {
    std::size_t r = 0;
    for (const auto& e : edges_) r = std::max(r, e.size());
    return r;
}

double energy_edge(const Hypergraph& h, std::size_t e, std::span<const double> x) {
    if (x.size() != h.vertex_count()) throw std::invalid_argument("vector length mismatch");
    const auto& edge = h.edge(e);
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (Vertex v : edge.vertices) {
        lo = std::min(lo, x[v]);
        hi = std::max(hi, x[v]);
    }
    const double gap = hi - lo;
    return edge.weight * gap * gap;
}

double energy(const Hypergraph& h, std::span<const double> x) {
    if (x.size() != h.vertex_count()) throw std::invalid_argument("vector length mismatch");
    double total = 0.0;
    for (std::size_t e = 0; e < h.edge_count(); ++e) total += energy_edge(h, e, x);
    return total;
}

double cut_value(const Hypergraph& h, const std::vector<bool>& in_set) {
    if (in_set.size() != h.vertex_count()) throw std::invalid_argument("set size mismatch");
    double total = 0.0;
    for (const auto& e : h.edges()) {
        bool inside = false, outside = false;
        for (Vertex v : e.vertices) {
            (in_set[v] ? inside : outside) = true;
            if (inside && outside) break;
        }
        if (inside && outside) total += e.weight;
    }
    return total;
}

namespace {

std::optional<double> cut_ratio(const Hypergraph& h, const std::vector<bool>& in_set,
                                bool product_denominator) {
    const std::size_t n = h.vertex_count();
    if (in_set.size() != n) throw std::invalid_argument("set size mismatch");
    std::size_t count = static_cast<std::size_t>(std::count(in_set.begin(), in_set.end(), true));
    if (count == 0 || count == n)
        throw std::invalid_argument("expansion requires a nontrivial vertex set");
    const double vol_s = h.volume(in_set);
    const double vol_rest = h.total_volume() - vol_s;
    const double denom = product_denominator ? vol_s * vol_rest : std::min(vol_s, vol_rest);
    if (denom <= 0.0) return std::nullopt;
    return cut_value(h, in_set) / denom;
}

}  // namespace

std::optional<double> expansion_of_set(const Hypergraph& h, const std::vector<bool>& in_set) {
    return cut_ratio(h, in_set, false);
}

std::optional<double> phi_of_set(const Hypergraph& h, const std::vector<bool>& in_set) {
    return cut_ratio(h, in_set, true);
}

VertexPartition::VertexPartition(std::size_t n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), Vertex{0});
}

Vertex VertexPartition::find(Vertex v) const {
    while (parent_[v] != v) {
        parent_[v] = parent_[parent_[v]];  // path halving
        v = parent_[v];
    }
    return v;
}

void VertexPartition::unite(Vertex a, Vertex b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
}

std::size_t VertexPartition::class_count() const {
    std::size_t k = 0;
    for (Vertex v = 0; v < parent_.size(); ++v)
        if (find(v) == v) ++k;
    return k;
}

std::vector<Vertex> VertexPartition::class_ids() const {
    const std::size_t n = parent_.size();
    std::vector<Vertex> ids(n, std::numeric_limits<Vertex>::max());
    Vertex next = 0;
    std::vector<Vertex> rep_id(n, std::numeric_limits<Vertex>::max());
    for (Vertex v = 0; v < n; ++v) {
        Vertex r = find(v);
        if (rep_id[r] == std::numeric_limits<Vertex>::max()) rep_id[r] = next++;
        ids[v] = rep_id[r];
    }
    return ids;
}

Contraction contract(const Hypergraph& h, const VertexPartition& p) {
    if (p.size() != h.vertex_count()) throw std::invalid_argument("partition size mismatch");
    std::vector<Vertex> map = p.class_ids();
    Vertex classes = map.empty() ? 0 : *std::max_element(map.begin(), map.end()) + 1;
    std::vector<Hyperedge> edges;
    edges.reserve(h.edge_count());
    for (const auto& e : h.edges()) {
        Hyperedge out;
        out.weight = e.weight;
        out.vertices.reserve(e.vertices.size());
        for (Vertex v : e.vertices) out.vertices.push_back(map[v]);
        edges.push_back(std::move(out));
    }
    return Contraction{Hypergraph(classes, std::move(edges), h.weighted()), std::move(map)};
}

Hypergraph Sparsifier::materialize(const Hypergraph& parent) const {
    validate(parent);
    std::vector<Hyperedge> edges;
    edges.reserve(entries.size());
    for (const auto& [idx, w] : entries) {
        Hyperedge e = parent.edge(idx);
        e.weight = w;
        edges.push_back(std::move(e));
    }
    return Hypergraph(parent.vertex_count(), std::move(edges), true);
}

void Sparsifier::validate(const Hypergraph& parent) const {
    std::vector<bool> seen(parent.edge_count(), false);
    for (const auto& [idx, w] : entries) {
        if (idx >= parent.edge_count()) throw std::invalid_argument("sparsifier index out of range");
        if (seen[idx]) throw std::invalid_argument("duplicate sparsifier entry");
        if (!(w > 0.0) || !std::isfinite(w)) throw std::invalid_argument("sparsifier weight must be positive");
        seen[idx] = true;
    }
}

double sparsifier_energy(const Hypergraph& parent, const Sparsifier& sp, std::span<const double> x) {
    double total = 0.0;
    for (const auto& [idx, w] : sp.entries)
        total += w / parent.edge(idx).weight * energy_edge(parent, idx, x);
    return total;
}

double sparsifier_cut(const Hypergraph& parent, const Sparsifier& sp, const std::vector<bool>& in_set) {
    double total = 0.0;
    for (const auto& [idx, w] : sp.entries) {
        const auto& e = parent.edge(idx);
        bool inside = false, outside = false;
        for (Vertex v : e.vertices) {
            (in_set[v] ? inside : outside) = true;
            if (inside && outside) break;
        }
        if (inside && outside) total += w;
    }
    return total;
}

}  // namespace hypersparse
