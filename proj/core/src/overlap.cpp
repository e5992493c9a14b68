#include "hypersparse/overlap.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

namespace hypersparse {

double OverlapAssignment::inverse_sum() const {
    double total = 0.0;
    for (std::size_t ke : k) total += 1.0 / static_cast<double>(ke);
    return total;
}

namespace {

using PairKey = std::pair<Vertex, Vertex>;

// Clique pairs of the alive arcs with the arcs touching each; std::map keeps
// lexicographic pair order for deterministic peeling.
std::map<PairKey, std::vector<std::size_t>> pair_incidence(const DirectedHypergraph& d,
                                                           const std::vector<char>& alive) {
    std::map<PairKey, std::vector<std::size_t>> inc;
    for (std::size_t e = 0; e < d.arc_count(); ++e) {
        if (!alive[e]) continue;
        for (Vertex a : d.arc(e).tail)
            for (Vertex b : d.arc(e).head) inc[{a, b}].push_back(e);
    }
    return inc;
}

}  // namespace

OverlapAssignment overlap_peel(const DirectedHypergraph& d) {
    const std::size_t m = d.arc_count();
    OverlapAssignment out;
    out.k.assign(m, 0);
    out.witness.assign(m, {0, 0});

    std::vector<char> alive(m, 1);
    std::size_t remaining = m;
    std::size_t k = 0;
    while (remaining > 0) {
        auto inc = pair_incidence(d, alive);
        // Raise k to the smallest multiplicity present, then peel the
        // smallest-multiplicity pair (ties broken lexicographically).
        std::size_t min_mult = std::numeric_limits<std::size_t>::max();
        const PairKey* best = nullptr;
        for (const auto& [key, arcs] : inc) {
            if (arcs.size() < min_mult) {
                min_mult = arcs.size();
                best = &key;
            }
        }
        if (!best) {
            // Arcs with no clique pairs cannot occur (tail and head nonempty).
            throw std::logic_error("overlap peel: alive arcs produced no clique pairs");
        }
        k = std::max(k, min_mult);
        for (std::size_t e : inc.at(*best)) {
            alive[e] = 0;
            out.k[e] = k;
            out.witness[e] = *best;
            --remaining;
        }
    }

    std::map<std::size_t, std::vector<std::size_t>> by_k;
    for (std::size_t e = 0; e < m; ++e) by_k[out.k[e]].push_back(e);
    for (auto& [ke, arcs] : by_k) out.bands.push_back({ke, std::move(arcs)});
    return out;
}

std::size_t overlap_brute(const DirectedHypergraph& d, std::size_t e) {
    const std::size_t m = d.arc_count();
    if (e >= m) throw std::invalid_argument("arc index out of range");
    if (m > 12) throw std::invalid_argument("brute-force overlap capped at 12 arcs");

    std::size_t best = 1;
    for (std::uint64_t mask = 0; mask < (1ULL << m); ++mask) {
        if (!(mask >> e & 1)) continue;
        std::map<PairKey, std::size_t> mult;
        for (std::size_t a = 0; a < m; ++a) {
            if (!(mask >> a & 1)) continue;
            for (Vertex u : d.arc(a).tail)
                for (Vertex v : d.arc(a).head) ++mult[{u, v}];
        }
        std::size_t min_mult = std::numeric_limits<std::size_t>::max();
        for (const auto& [key, c] : mult) min_mult = std::min(min_mult, c);
        best = std::max(best, min_mult);
    }
    return best;
}

std::vector<std::size_t> maximal_k_overlapping(const DirectedHypergraph& d,
                                               const std::vector<std::size_t>& arcs,
                                               std::size_t k) {
    if (k < 1) throw std::invalid_argument("overlap level must be at least 1");
    std::vector<char> alive(d.arc_count(), 0);
    for (std::size_t e : arcs) alive[e] = 1;
    for (;;) {
        auto inc = pair_incidence(d, alive);
        bool removed = false;
        for (const auto& [key, touching] : inc) {
            if (touching.size() >= k) continue;
            for (std::size_t e : touching) {
                if (alive[e]) {
                    alive[e] = 0;
                    removed = true;
                }
            }
        }
        if (!removed) break;
    }
    std::vector<std::size_t> out;
    for (std::size_t e : arcs)
        if (alive[e]) out.push_back(e);
    return out;
}

}  // namespace hypersparse
