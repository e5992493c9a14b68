#include "hypersparse/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <stdexcept>
#include <unordered_map>

#include "hypersparse/oracle.hpp"
#include "hypersparse/rng.hpp"

namespace hypersparse {

namespace {

struct Candidate {
    std::vector<Vertex> vertices;        // sorted parent ids
    std::vector<std::size_t> edges;      // parent edge indices, fully supported
};

}  // namespace

Decomposition expander_decomposition(const Hypergraph& h, const DecompositionConfig& cfg) {
    const std::size_t n = h.vertex_count();
    const std::size_t m = h.edge_count();
    if (n == 0 || m == 0) throw std::invalid_argument("decomposition needs a nonempty hypergraph");

    double total_weight = 0.0;
    for (const auto& e : h.edges()) total_weight += e.weight;
    // Thresholds are frozen at the input's n and total weight for the run.
    const double peel_threshold =
        cfg.min_deg_frac * total_weight / static_cast<double>(n);
    const double log_n = std::max(std::log2(static_cast<double>(n)), 1.0);

    Decomposition out;
    std::deque<Candidate> work;
    {
        Candidate all;
        all.vertices.resize(n);
        for (std::size_t v = 0; v < n; ++v) all.vertices[v] = static_cast<Vertex>(v);
        all.edges.resize(m);
        for (std::size_t e = 0; e < m; ++e) all.edges[e] = e;
        work.push_back(std::move(all));
    }

    const std::size_t iteration_cap = n * n + m + 2;
    std::size_t split_counter = 0;
    while (!work.empty()) {
        if (++out.iterations > iteration_cap)
            throw std::logic_error("decomposition exceeded its iteration cap");
        Candidate c = std::move(work.front());
        work.pop_front();
        if (c.vertices.empty()) continue;

        // Peel low-degree vertices to a fixpoint; their incident supported
        // edges are no longer fully supported and count as removed.
        std::vector<char> in_c(n, 0);
        for (Vertex v : c.vertices) in_c[v] = 1;
        for (;;) {
            std::unordered_map<Vertex, double> deg;
            for (Vertex v : c.vertices) deg[v] = 0.0;
            for (std::size_t e : c.edges)
                for (Vertex v : h.edge(e).vertices) deg[v] += h.edge(e).weight;
            Vertex victim = 0;
            bool found = false;
            for (Vertex v : c.vertices) {
                if (deg[v] < peel_threshold) {
                    victim = v;
                    found = true;
                    break;
                }
            }
            if (!found) break;
            in_c[victim] = 0;
            c.vertices.erase(std::find(c.vertices.begin(), c.vertices.end(), victim));
            std::vector<std::size_t> kept;
            for (std::size_t e : c.edges) {
                if (h.edge(e).multiplicity(victim) > 0) {
                    out.removed_edges.push_back(e);
                    out.removal_reasons.push_back(RemovalReason::Peel);
                } else {
                    kept.push_back(e);
                }
            }
            c.edges = std::move(kept);
            out.discarded_vertices.push_back(victim);
        }
        if (c.vertices.empty()) continue;
        if (c.vertices.size() == 1) {
            out.clusters.push_back({std::move(c.vertices), std::move(c.edges),
                                    CertLevel::BruteForce,
                                    std::numeric_limits<double>::infinity()});
            continue;
        }

        // Compact relabeling for the cut search.
        std::vector<Vertex> local_of(n, 0);
        for (std::size_t i = 0; i < c.vertices.size(); ++i) local_of[c.vertices[i]] = static_cast<Vertex>(i);
        std::vector<Hyperedge> local_edges;
        local_edges.reserve(c.edges.size());
        std::size_t r = 1;
        for (std::size_t e : c.edges) {
            Hyperedge le;
            le.weight = h.edge(e).weight;
            for (Vertex v : h.edge(e).vertices) le.vertices.push_back(local_of[v]);
            r = std::max(r, le.vertices.size());
            local_edges.push_back(std::move(le));
        }
        Hypergraph induced(c.vertices.size(), std::move(local_edges), true);
        const double cut_threshold = 1.0 / (cfg.cut_const * static_cast<double>(r) * log_n);

        std::vector<bool> split_set;
        double best_expansion = std::numeric_limits<double>::infinity();
        CertLevel cert = CertLevel::BruteForce;
        double certificate = 0.0;
        if (c.vertices.size() <= cfg.brute_force_max) {
            auto brute = oracle::brute_sparsest_cut(induced);
            best_expansion = brute.value;
            split_set = std::move(brute.in_set);
            certificate = brute.value;
        } else {
            bool heuristic = false;
            for (std::size_t t = 0; t < cfg.search_attempts; ++t) {
                auto cut = sparse_cut(induced, derive_seed(cfg.seed, split_counter, t), cfg.cut_cfg);
                heuristic = heuristic || cut.heuristic;
                if (cut.expansion < best_expansion) {
                    best_expansion = cut.expansion;
                    split_set = std::move(cut.in_set);
                }
            }
            cert = heuristic ? CertLevel::Heuristic : CertLevel::LpSearch;
            certificate = cut_threshold;
        }

        if (best_expansion <= cut_threshold + 1e-12) {
            ++split_counter;
            Candidate side_a, side_b;
            for (std::size_t i = 0; i < c.vertices.size(); ++i)
                (split_set[i] ? side_a : side_b).vertices.push_back(c.vertices[i]);
            for (std::size_t idx = 0; idx < c.edges.size(); ++idx) {
                const auto& verts = induced.edge(idx).vertices;
                bool any_in = false, any_out = false;
                for (Vertex v : verts) (split_set[v] ? any_in : any_out) = true;
                if (any_in && any_out) {
                    out.removed_edges.push_back(c.edges[idx]);
                    out.removal_reasons.push_back(RemovalReason::Cut);
                } else {
                    (any_in ? side_a : side_b).edges.push_back(c.edges[idx]);
                }
            }
            work.push_back(std::move(side_a));
            work.push_back(std::move(side_b));
        } else {
            out.clusters.push_back({std::move(c.vertices), std::move(c.edges), cert, certificate});
        }
    }
    return out;
}

ChargeAudit charge_audit(const Decomposition& d, const Hypergraph& h) {
    ChargeAudit audit;
    for (const auto& e : h.edges()) audit.total_weight += e.weight;
    for (std::size_t i = 0; i < d.removed_edges.size(); ++i) {
        const double w = h.edge(d.removed_edges[i]).weight;
        if (d.removal_reasons[i] == RemovalReason::Peel)
            audit.peel_removed_weight += w;
        else
            audit.cut_removed_weight += w;
    }
    audit.removed_weight = audit.peel_removed_weight + audit.cut_removed_weight;
    audit.peel_bound = audit.total_weight / 4.0;
    const std::size_t r = h.edge_count() ? h.max_edge_size() : 1;
    audit.charge_bound = h.total_volume() / (4.0 * static_cast<double>(r));
    audit.within_half = audit.removed_weight <= audit.total_weight / 2.0 + 1e-12;
    return audit;
}

}  // namespace hypersparse
