#include "hypersparse/directed_hypergraph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

namespace hypersparse {

DirectedHypergraph::DirectedHypergraph(std::size_t n, std::vector<Hyperarc> arcs, bool weighted)
    : n_(n), arcs_(std::move(arcs)), weighted_(weighted) {
    std::set<std::pair<std::vector<Vertex>, std::vector<Vertex>>> seen;
    for (auto& a : arcs_) {
        if (a.tail.empty() || a.head.empty())
            throw std::invalid_argument("hyperarc tail and head must be nonempty");
        if (!(a.weight > 0.0) || !std::isfinite(a.weight))
            throw std::invalid_argument("hyperarc weight must be finite and positive");
        std::sort(a.tail.begin(), a.tail.end());
        std::sort(a.head.begin(), a.head.end());
        if (std::adjacent_find(a.tail.begin(), a.tail.end()) != a.tail.end() ||
            std::adjacent_find(a.head.begin(), a.head.end()) != a.head.end())
            throw std::invalid_argument("hyperarc tail/head must be vertex sets");
        for (Vertex v : a.tail)
            if (v >= n_) throw std::invalid_argument("vertex id out of range");
        for (Vertex v : a.head)
            if (v >= n_) throw std::invalid_argument("vertex id out of range");
        std::vector<Vertex> isect;
        std::set_intersection(a.tail.begin(), a.tail.end(), a.head.begin(), a.head.end(),
                              std::back_inserter(isect));
        if (!isect.empty())
            throw std::invalid_argument("hyperarc tail and head must be disjoint");
        if (!seen.insert({a.tail, a.head}).second)
            throw std::invalid_argument("duplicate hyperarc: directed hypergraphs must be simple");
    }
}

std::size_t DirectedHypergraph::max_arc_size() const {
    std::size_t r = 0;
    for (const auto& a : arcs_) r = std::max(r, a.size());
    return r;
}

std::vector<CliquePair> clique_graph(const DirectedHypergraph& d) {
    std::vector<CliquePair> pairs;
    for (std::size_t i = 0; i < d.arc_count(); ++i) {
        const auto& a = d.arc(i);
        for (Vertex u : a.tail)
            for (Vertex v : a.head) pairs.push_back({u, v, i});
    }
    return pairs;
}

double directed_energy_arc(const DirectedHypergraph& d, std::size_t e, std::span<const double> x) {
    if (x.size() != d.vertex_count()) throw std::invalid_argument("vector length mismatch");
    const auto& a = d.arc(e);
    double tail_max = -std::numeric_limits<double>::infinity();
    double head_min = std::numeric_limits<double>::infinity();
    for (Vertex v : a.tail) tail_max = std::max(tail_max, x[v]);
    for (Vertex v : a.head) head_min = std::min(head_min, x[v]);
    const double gap = std::max(tail_max - head_min, 0.0);
    return a.weight * gap * gap;
}

double directed_energy(const DirectedHypergraph& d, std::span<const double> x) {
    double total = 0.0;
    for (std::size_t e = 0; e < d.arc_count(); ++e) total += directed_energy_arc(d, e, x);
    return total;
}

namespace {

bool arc_is_cut(const Hyperarc& a, const std::vector<bool>& in_set) {
    bool tail_in = std::any_of(a.tail.begin(), a.tail.end(), [&](Vertex v) { return in_set[v]; });
    bool head_out = std::any_of(a.head.begin(), a.head.end(), [&](Vertex v) { return !in_set[v]; });
    return tail_in && head_out;
}

}  // namespace

double directed_cut_value(const DirectedHypergraph& d, const std::vector<bool>& in_set) {
    if (in_set.size() != d.vertex_count()) throw std::invalid_argument("set size mismatch");
    double total = 0.0;
    for (const auto& a : d.arcs())
        if (arc_is_cut(a, in_set)) total += a.weight;
    return total;
}

double directed_sparsifier_energy(const DirectedHypergraph& parent, const Sparsifier& sp,
                                  std::span<const double> x) {
    double total = 0.0;
    for (const auto& [idx, w] : sp.entries)
        total += w / parent.arc(idx).weight * directed_energy_arc(parent, idx, x);
    return total;
}

double directed_sparsifier_cut(const DirectedHypergraph& parent, const Sparsifier& sp,
                               const std::vector<bool>& in_set) {
    double total = 0.0;
    for (const auto& [idx, w] : sp.entries)
        if (arc_is_cut(parent.arc(idx), in_set)) total += w;
    return total;
}

}  // namespace hypersparse
