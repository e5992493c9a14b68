#include "hypersparse/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include "hypersparse/rng.hpp"

namespace hypersparse {

Hypergraph complete_uniform(std::size_t n, std::size_t r) {
    if (r < 1 || r > n) throw std::invalid_argument("complete_uniform requires 1 <= r <= n");
    std::vector<Hyperedge> edges;
    std::vector<Vertex> pick(r);
    std::iota(pick.begin(), pick.end(), Vertex{0});
    while (true) {
        edges.push_back({pick, 1.0});
        // next r-combination in lexicographic order
        std::size_t i = r;
        while (i > 0 && pick[i - 1] == n - r + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < r; ++j) pick[j] = pick[j - 1] + 1;
    }
    return Hypergraph(n, std::move(edges));
}

namespace {

std::vector<Vertex> sample_distinct(RngStream& rng, std::size_t n, std::size_t r) {
    std::vector<Vertex> pick;
    while (pick.size() < r) {
        Vertex v = static_cast<Vertex>(rng.next_below(n));
        if (std::find(pick.begin(), pick.end(), v) == pick.end()) pick.push_back(v);
    }
    return pick;
}

}  // namespace

Hypergraph random_uniform(std::size_t n, std::size_t m, std::size_t r, std::uint64_t seed,
                          bool allow_repeats) {
    if (r < 1 || (!allow_repeats && r > n))
        throw std::invalid_argument("random_uniform requires 1 <= r <= n");
    RngStream rng(derive_seed(seed, 0x7263));
    std::vector<Hyperedge> edges;
    edges.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        Hyperedge e;
        if (allow_repeats) {
            for (std::size_t j = 0; j < r; ++j)
                e.vertices.push_back(static_cast<Vertex>(rng.next_below(n)));
        } else {
            e.vertices = sample_distinct(rng, n, r);
        }
        edges.push_back(std::move(e));
    }
    return Hypergraph(n, std::move(edges));
}

Hypergraph planted_bridge(std::size_t block_n, std::size_t block_m, std::size_t r,
                          std::uint64_t seed) {
    if (r < 2 || r > block_n) throw std::invalid_argument("planted_bridge requires 2 <= r <= block_n");
    RngStream rng(derive_seed(seed, 0x6272));
    std::vector<Hyperedge> edges;
    for (std::size_t block = 0; block < 2; ++block) {
        const Vertex offset = static_cast<Vertex>(block * block_n);
        for (std::size_t i = 0; i < block_m; ++i) {
            Hyperedge e;
            for (Vertex v : sample_distinct(rng, block_n, r)) e.vertices.push_back(offset + v);
            edges.push_back(std::move(e));
        }
    }
    // one edge straddling the two blocks
    Hyperedge bridge;
    bridge.vertices.push_back(0);
    bridge.vertices.push_back(static_cast<Vertex>(block_n));
    for (std::size_t j = 2; j < r; ++j)
        bridge.vertices.push_back(static_cast<Vertex>(j % 2 == 0 ? j / 2 : block_n + j / 2));
    edges.push_back(std::move(bridge));
    return Hypergraph(2 * block_n, std::move(edges));
}

DirectedHypergraph bipartite_clique_directed(std::size_t half_n) {
    std::vector<Hyperarc> arcs;
    for (Vertex u = 0; u < half_n; ++u)
        for (Vertex v = 0; v < half_n; ++v)
            arcs.push_back({{u}, {static_cast<Vertex>(half_n + v)}, 1.0});
    return DirectedHypergraph(2 * half_n, std::move(arcs));
}

DirectedHypergraph random_directed(std::size_t n, std::size_t m, std::size_t max_side,
                                   std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("random_directed requires n >= 2");
    max_side = std::min(max_side, n / 2);
    if (max_side < 1) max_side = 1;
    RngStream rng(derive_seed(seed, 0x6469));
    std::set<std::pair<std::vector<Vertex>, std::vector<Vertex>>> seen;
    std::vector<Hyperarc> arcs;
    std::size_t attempts = 0;
    while (arcs.size() < m && attempts < 100 * m + 1000) {
        ++attempts;
        std::size_t ts = 1 + rng.next_below(max_side);
        std::size_t hs = 1 + rng.next_below(max_side);
        auto both = sample_distinct(rng, n, ts + hs);
        Hyperarc a;
        a.tail.assign(both.begin(), both.begin() + ts);
        a.head.assign(both.begin() + ts, both.end());
        std::sort(a.tail.begin(), a.tail.end());
        std::sort(a.head.begin(), a.head.end());
        if (seen.insert({a.tail, a.head}).second) arcs.push_back(std::move(a));
    }
    return DirectedHypergraph(n, std::move(arcs));
}

std::vector<double> random_centered_vector(const Hypergraph& h, std::uint64_t seed) {
    const std::size_t n = h.vertex_count();
    std::vector<double> x(n);
    for (std::size_t v = 0; v < n; ++v) x[v] = normal(seed, v);
    double weighted_sum = 0.0, total = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
        weighted_sum += x[v] * h.degree(static_cast<Vertex>(v));
        total += h.degree(static_cast<Vertex>(v));
    }
    if (total > 0.0) {
        const double shift = weighted_sum / total;
        for (auto& xv : x) xv -= shift;
    }
    return x;
}

std::vector<double> random_normalized_vector(const Hypergraph& h, std::uint64_t seed) {
    auto x = random_centered_vector(h, seed);
    double norm = 0.0;
    for (std::size_t v = 0; v < x.size(); ++v)
        norm += x[v] * x[v] * h.degree(static_cast<Vertex>(v));
    if (norm > 0.0) {
        const double scale = 1.0 / std::sqrt(norm);
        for (auto& xv : x) xv *= scale;
    }
    return x;
}

}  // namespace hypersparse
