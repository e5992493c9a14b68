#include "hypersparse/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "hypersparse/rng.hpp"

namespace hypersparse {

namespace {

std::size_t default_delay(std::size_t n) {
    if (n < 2) return 1;
    return static_cast<std::size_t>(std::ceil(10.0 * std::log2(static_cast<double>(n))));
}

std::size_t default_level_cap(std::size_t m) {
    std::size_t cap = 1;
    while (m >>= 1) ++cap;
    return cap;
}

}  // namespace

PipelineRun sparsify_run(const Hypergraph& h, const PipelineConfig& cfg) {
    if (!(cfg.epsilon > 0.0) || cfg.epsilon > 0.5)
        throw std::invalid_argument("epsilon must be in (0, 0.5]");
    const std::size_t n = h.vertex_count();
    const std::size_t m = h.edge_count();

    PipelineRun run;
    run.n = n;
    run.m = m;
    run.epsilon = cfg.epsilon;
    run.delay = cfg.delay ? cfg.delay : default_delay(n);
    if (m == 0) return run;

    const std::size_t level_cap = cfg.level_cap ? cfg.level_cap : default_level_cap(m);
    const double log_n_ref =
        std::max(std::log2(static_cast<double>(std::max<std::size_t>(n, 2))), 1.0);
    (void)log_n_ref;

    VertexPartition partition(n);
    std::vector<std::size_t> live(m);
    for (std::size_t e = 0; e < m; ++e) live[e] = e;

    for (std::size_t i = 0; !live.empty(); ++i) {
        if (i >= level_cap)
            throw std::runtime_error("pipeline: " + std::to_string(live.size()) +
                                     " live edges remain after the level cap (" +
                                     std::to_string(level_cap) + " levels)");

        // Clusters become contraction-eligible `delay` levels after they were
        // formed; the equivalence only ever coarsens.
        if (i >= run.delay) {
            const std::size_t src = i - run.delay;
            if (src < run.levels.size()) {
                for (const auto& members : run.levels[src].cluster_members)
                    for (std::size_t k = 1; k < members.size(); ++k)
                        partition.unite(members[0], members[k]);
            }
        }

        PipelineLevel level;
        level.vertex_class = partition.class_ids();
        level.supernode_count =
            level.vertex_class.empty()
                ? 0
                : *std::max_element(level.vertex_class.begin(), level.vertex_class.end()) + 1;
        level.live_count = live.size();

        // Contracted view of the live edges; edge k here is live[k] there.
        std::vector<Hyperedge> contracted;
        contracted.reserve(live.size());
        for (std::size_t e : live) {
            Hyperedge ce;
            ce.weight = h.edge(e).weight;
            ce.vertices.reserve(h.edge(e).size());
            for (Vertex v : h.edge(e).vertices) ce.vertices.push_back(level.vertex_class[v]);
            contracted.push_back(std::move(ce));
        }
        Hypergraph g_i(level.supernode_count, std::move(contracted), true);

        DecompositionConfig dcfg = cfg.decomp;
        dcfg.seed = derive_seed(cfg.seed, 0xdec0, i);
        Decomposition d = expander_decomposition(g_i, dcfg);

        const double log_n_level = std::max(
            std::log2(static_cast<double>(std::max<std::size_t>(level.supernode_count, 2))), 1.0);

        for (std::size_t j = 0; j < d.clusters.size(); ++j) {
            const auto& cluster = d.clusters[j];
            std::vector<std::size_t> retained;
            retained.reserve(cluster.edges.size());
            for (std::size_t pos : cluster.edges) retained.push_back(live[pos]);

            std::vector<char> in_cluster(level.supernode_count, 0);
            for (Vertex s : cluster.vertices) in_cluster[s] = 1;
            std::vector<Vertex> members;
            for (std::size_t v = 0; v < n; ++v)
                if (in_cluster[level.vertex_class[v]]) members.push_back(static_cast<Vertex>(v));

            // Induced compact subgraph over the cluster's supernodes.
            std::vector<Vertex> local_of(level.supernode_count, 0);
            for (std::size_t k = 0; k < cluster.vertices.size(); ++k)
                local_of[cluster.vertices[k]] = static_cast<Vertex>(k);
            std::vector<Hyperedge> local_edges;
            local_edges.reserve(cluster.edges.size());
            std::size_t r_cluster = 1;
            for (std::size_t pos : cluster.edges) {
                Hyperedge le = g_i.edge(pos);
                for (auto& v : le.vertices) v = local_of[v];
                r_cluster = std::max(r_cluster, le.vertices.size());
                local_edges.push_back(std::move(le));
            }
            Hypergraph induced(cluster.vertices.size(), std::move(local_edges), true);

            ExpanderSparsifyConfig escfg;
            escfg.epsilon = cfg.epsilon / 10.0;
            escfg.phi = dcfg.phi_target > 0.0
                            ? dcfg.phi_target
                            : 1.0 / (dcfg.K * static_cast<double>(r_cluster) *
                                     log_n_level * log_n_level);
            escfg.n_ref = n;
            escfg.lambda_c = cfg.lambda_c;
            escfg.seed = derive_seed(cfg.seed, i, j);
            escfg.strip_self_loops = true;
            Sparsifier local = expander_sparsify(induced, escfg);
            for (const auto& entry : local.entries)
                run.sparsifier.entries.push_back({retained[entry.edge_index], entry.weight});
            // Contraction-induced self-loops were stripped above; edges that
            // are self-loops already at input level pass through unchanged.
            for (std::size_t k = 0; k < retained.size(); ++k)
                if (h.edge(retained[k]).is_self_loop())
                    run.sparsifier.entries.push_back({retained[k], h.edge(retained[k]).weight});

            level.cluster_members.push_back(std::move(members));
            level.cluster_supernode_counts.push_back(cluster.vertices.size());
            level.retained.push_back(std::move(retained));
        }

        level.removed_to_next.reserve(d.removed_edges.size());
        for (std::size_t pos : d.removed_edges) level.removed_to_next.push_back(live[pos]);
        live = level.removed_to_next;
        run.levels.push_back(std::move(level));
    }
    return run;
}

ClusterCensus cluster_census(const PipelineRun& run) {
    ClusterCensus census;
    for (const auto& level : run.levels) {
        census.cluster_count += level.cluster_supernode_counts.size();
        for (std::size_t s : level.cluster_supernode_counts) census.total_size += s;
    }
    const double n = static_cast<double>(std::max<std::size_t>(run.n, 2));
    census.bound = 21.0 * n * std::log2(n);
    return census;
}

std::vector<ContractionProbe> contraction_error_probe(const Hypergraph& h,
                                                      const PipelineRun& run,
                                                      std::span<const double> x) {
    if (x.size() != h.vertex_count()) throw std::invalid_argument("vector length mismatch");
    const double q_input = energy(h, x);
    const double n3 = std::pow(static_cast<double>(run.n), 3.0);

    std::vector<ContractionProbe> probes;
    std::vector<std::size_t> live(run.m);
    for (std::size_t e = 0; e < run.m; ++e) live[e] = e;

    for (std::size_t i = 0; i < run.levels.size(); ++i) {
        const auto& level = run.levels[i];

        // Lift: each supernode takes the value of its smallest member.
        std::vector<double> lifted(level.supernode_count,
                                   std::numeric_limits<double>::quiet_NaN());
        for (std::size_t v = 0; v < h.vertex_count(); ++v)
            if (std::isnan(lifted[level.vertex_class[v]]))
                lifted[level.vertex_class[v]] = x[v];
        double q_contracted = 0.0;
        for (std::size_t e : live) {
            double lo = std::numeric_limits<double>::infinity(), hi = -lo;
            for (Vertex v : h.edge(e).vertices) {
                const double value = lifted[level.vertex_class[v]];
                lo = std::min(lo, value);
                hi = std::max(hi, value);
            }
            const double gap = hi - lo;
            q_contracted += h.edge(e).weight * gap * gap;
        }

        const double bound =
            run.epsilon * q_input / (2.0 * n3 * static_cast<double>(level.live_count));
        for (std::size_t j = 0; j < level.cluster_members.size(); ++j) {
            // Per supernode within the cluster: the spread of x over its
            // members; clusters whose supernodes are all singletons are
            // skipped (nothing was contracted there).
            std::vector<double> lo(level.supernode_count,
                                   std::numeric_limits<double>::infinity());
            std::vector<double> hi(level.supernode_count,
                                   -std::numeric_limits<double>::infinity());
            std::vector<std::size_t> count(level.supernode_count, 0);
            for (Vertex v : level.cluster_members[j]) {
                const Vertex c = level.vertex_class[v];
                lo[c] = std::min(lo[c], x[v]);
                hi[c] = std::max(hi[c], x[v]);
                ++count[c];
            }
            double delta = 0.0;
            bool contracted_any = false;
            for (std::size_t c = 0; c < level.supernode_count; ++c) {
                if (count[c] < 2) continue;
                contracted_any = true;
                delta = std::max(delta, hi[c] - lo[c]);
            }
            if (!contracted_any) continue;
            probes.push_back({i, j, delta, bound, q_input, q_contracted});
        }
        live = level.removed_to_next;
    }
    return probes;
}

}  // namespace hypersparse
