#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "hypersparse/decomposition.hpp"
#include "hypersparse/generators.hpp"
#include "hypersparse/oracle.hpp"

using namespace hypersparse;

namespace {

// Induced subgraph on a cluster with dense relabeling, keeping listed edges.
Hypergraph induced(const Hypergraph& h, const Decomposition::Cluster& c) {
    std::vector<Vertex> relabel(h.vertex_count(), 0);
    for (std::size_t i = 0; i < c.vertices.size(); ++i) relabel[c.vertices[i]] = static_cast<Vertex>(i);
    std::vector<Hyperedge> edges;
    for (std::size_t e : c.edges) {
        Hyperedge copy = h.edge(e);
        for (Vertex& v : copy.vertices) v = relabel[v];
        edges.push_back(std::move(copy));
    }
    return Hypergraph(c.vertices.size(), std::move(edges), true);
}

double default_target(const Hypergraph& h, const DecompositionConfig& cfg) {
    const double n = static_cast<double>(h.vertex_count());
    const double log_n = std::max(std::log2(n), 1.0);
    const double r = static_cast<double>(h.max_edge_size());
    return 1.0 / (cfg.K * r * log_n * log_n);
}

}  // namespace

TEST_CASE("a single dense expander stays whole") {
    auto h = complete_uniform(8, 3);
    auto d = expander_decomposition(h);
    REQUIRE(d.clusters.size() == 1);
    CHECK(d.clusters[0].vertices.size() == 8);
    CHECK(d.clusters[0].edges.size() == h.edge_count());
    CHECK(d.removed_edges.empty());
    CHECK(d.discarded_vertices.empty());
    CHECK(d.clusters[0].cert == CertLevel::BruteForce);
    CHECK(d.clusters[0].phi_certificate >= default_target(h, {}));
}

TEST_CASE("a planted bridge splits into its two blocks") {
    auto h = planted_bridge(5, 20, 3, 2);
    auto d = expander_decomposition(h);
    REQUIRE(d.clusters.size() == 2);
    for (const auto& c : d.clusters) {
        REQUIRE(c.vertices.size() == 5);
        const bool low = c.vertices.front() < 5;
        for (Vertex v : c.vertices) CHECK((v < 5) == low);
    }
    // The bridging edge is the only removal.
    REQUIRE(d.removed_edges.size() == 1);
    bool lo = false, hi = false;
    for (Vertex v : h.edge(d.removed_edges[0]).vertices) (v < 5 ? lo : hi) = true;
    CHECK(lo);
    CHECK(hi);
    CHECK(d.removal_reasons[0] == RemovalReason::Cut);
}

TEST_CASE("low-degree vertices are peeled, dropping unsupported edges") {
    auto block = complete_uniform(8, 3);
    auto edges = block.edges();
    edges.push_back({{7, 8}, 1.0});
    Hypergraph h(9, edges);
    auto d = expander_decomposition(h);
    REQUIRE(d.clusters.size() == 1);
    CHECK(d.clusters[0].vertices.size() == 8);
    REQUIRE(d.discarded_vertices == std::vector<Vertex>{8});
    REQUIRE(d.removed_edges == std::vector<std::size_t>{block.edge_count()});
    CHECK(d.removal_reasons[0] == RemovalReason::Peel);

    // A fully isolated vertex is peeled too.
    Hypergraph iso(9, block.edges());
    auto di = expander_decomposition(iso);
    CHECK(di.discarded_vertices == std::vector<Vertex>{8});
    CHECK(di.removed_edges.empty());
}

TEST_CASE("structural invariants on random instances") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        auto h = random_uniform(12, 50, 3, seed, seed % 3 == 0);
        DecompositionConfig cfg;
        cfg.seed = seed;
        auto d = expander_decomposition(h, cfg);

        // Cluster vertex sets and discarded vertices partition-or-less V.
        std::vector<int> seen(h.vertex_count(), 0);
        for (const auto& c : d.clusters)
            for (Vertex v : c.vertices) ++seen[v];
        for (Vertex v : d.discarded_vertices) ++seen[v];
        for (int s : seen) CHECK(s <= 1);

        // Every edge index appears exactly once across retained/removed.
        std::vector<int> edge_seen(h.edge_count(), 0);
        for (const auto& c : d.clusters) {
            std::vector<bool> in_cluster(h.vertex_count(), false);
            for (Vertex v : c.vertices) in_cluster[v] = true;
            for (std::size_t e : c.edges) {
                ++edge_seen[e];
                for (Vertex v : h.edge(e).vertices) CHECK(in_cluster[v]);
            }
        }
        for (std::size_t e : d.removed_edges) ++edge_seen[e];
        for (int s : edge_seen) CHECK(s == 1);
        CHECK(d.removal_reasons.size() == d.removed_edges.size());

        CHECK(d.iterations <= h.vertex_count() * h.vertex_count() + h.edge_count());

        // Small clusters carry an exact certificate meeting the target.
        const double target = default_target(h, cfg);
        for (const auto& c : d.clusters) {
            if (c.vertices.size() < 2) continue;
            auto sub = induced(h, c);
            if (sub.edge_count() == 0) continue;
            const double exact = oracle::brute_sparsest_cut(sub).value;
            if (c.cert == CertLevel::BruteForce) {
                CHECK(exact == doctest::Approx(c.phi_certificate));
            }
            CHECK(exact >= target - 1e-12);
        }

        auto audit = charge_audit(d, h);
        CHECK(audit.within_half);
    }
}

TEST_CASE("minimum induced degree of every cluster meets the peel floor") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        auto h = random_uniform(12, 60, 3, seed);
        auto d = expander_decomposition(h);
        double total_w = 0.0;
        for (const auto& e : h.edges()) total_w += e.weight;
        const double floor_deg = 0.25 * total_w / static_cast<double>(h.vertex_count());
        for (const auto& c : d.clusters) {
            if (c.vertices.size() < 2) continue;
            auto sub = induced(h, c);
            for (std::size_t v = 0; v < sub.vertex_count(); ++v)
                CHECK(sub.degree(static_cast<Vertex>(v)) >= floor_deg - 1e-12);
        }
    }
}

TEST_CASE("charge audit recounts removals from the reasons list") {
    auto h = planted_bridge(5, 20, 3, 2);
    auto d = expander_decomposition(h);
    auto audit = charge_audit(d, h);
    double total = 0.0, peel = 0.0, cut = 0.0;
    for (const auto& e : h.edges()) total += e.weight;
    for (std::size_t i = 0; i < d.removed_edges.size(); ++i) {
        const double w = h.edge(d.removed_edges[i]).weight;
        (d.removal_reasons[i] == RemovalReason::Peel ? peel : cut) += w;
    }
    CHECK(audit.total_weight == doctest::Approx(total));
    CHECK(audit.peel_removed_weight == doctest::Approx(peel));
    CHECK(audit.cut_removed_weight == doctest::Approx(cut));
    CHECK(audit.removed_weight == doctest::Approx(peel + cut));
    CHECK(audit.peel_bound == doctest::Approx(total / 4.0));
    CHECK(audit.peel_removed_weight <= audit.peel_bound + 1e-12);
    CHECK(audit.within_half);

    // No removals, no charge.
    auto whole = expander_decomposition(complete_uniform(8, 3));
    auto za = charge_audit(whole, complete_uniform(8, 3));
    CHECK(za.removed_weight == 0.0);
    CHECK(za.within_half);
}
