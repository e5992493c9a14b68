#include "hypersparse/expander_sparsify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "hypersparse/rng.hpp"

namespace hypersparse {

void ExpanderSparsifyConfig::validate() const {
    if (!(epsilon > 0.0) || epsilon > 0.5)
        throw std::invalid_argument("epsilon must be in (0, 0.5]");
    if (!(phi > 0.0)) throw std::invalid_argument("phi must be positive");
    if (!(lambda_c > 0.0)) throw std::invalid_argument("lambda_c must be positive");
}

double sampling_lambda(const ExpanderSparsifyConfig& cfg, std::size_t n_ref, std::size_t r) {
    cfg.validate();
    if (n_ref < 2) n_ref = 2;
    if (r < 1) r = 1;
    // Callers may supply phi above the Cheeger bound 2/r on multiset inputs.
    const double phi_eff = std::min(cfg.phi, 2.0 / static_cast<double>(r));
    const double log_n = std::log2(static_cast<double>(n_ref));
    const double eps4 = cfg.epsilon * cfg.epsilon * cfg.epsilon * cfg.epsilon;
    return cfg.lambda_c * log_n * log_n / (eps4 * phi_eff * phi_eff * static_cast<double>(r));
}

namespace {

double min_degree(const Hypergraph& h, const Hyperedge& e) {
    double d = std::numeric_limits<double>::infinity();
    for (Vertex v : e.vertices) d = std::min(d, h.degree(v));
    return d;
}

}  // namespace

double sampling_rate(const Hypergraph& h, std::size_t e, const ExpanderSparsifyConfig& cfg) {
    const auto& edge = h.edge(e);
    const double d_min = min_degree(h, edge);
    if (!(d_min > 0.0))
        throw std::logic_error("edge with zero min degree: inconsistent hypergraph");
    const std::size_t n_ref = cfg.n_ref ? cfg.n_ref : h.vertex_count();
    const double lambda = sampling_lambda(cfg, n_ref, edge.size());
    return std::min(lambda / d_min, 1.0);
}

Sparsifier expander_sparsify(const Hypergraph& h, const ExpanderSparsifyConfig& cfg) {
    cfg.validate();
    if (h.edge_count() == 0) return {};
    Sparsifier sp;
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
        if (cfg.strip_self_loops && h.edge(e).is_self_loop()) continue;
        const double p = sampling_rate(h, e, cfg);
        if (uniform01(cfg.seed, e) < p)
            sp.entries.push_back({e, h.edge(e).weight / p});
    }
    return sp;
}

StressCategories stress_vectors(const Hypergraph& h, std::span<const double> x, double epsilon) {
    const std::size_t n = h.vertex_count();
    if (x.size() != n) throw std::invalid_argument("vector length mismatch");
    double centered = 0.0, norm = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
        centered += x[v] * h.degree(static_cast<Vertex>(v));
        norm += x[v] * x[v] * h.degree(static_cast<Vertex>(v));
    }
    if (std::abs(centered) > 1e-6 || std::abs(norm - 1.0) > 1e-6)
        throw std::invalid_argument("stress_vectors requires a centered, normalized vector");

    StressCategories out;
    out.i_star = static_cast<std::size_t>(
        std::ceil(2.0 * std::log2(static_cast<double>(std::max<std::size_t>(n, 2)))));
    out.category_of.assign(h.edge_count(), 0);

    for (std::size_t e = 0; e < h.edge_count(); ++e) {
        const auto& edge = h.edge(e);
        double max_sq = 0.0;
        double d_min = std::numeric_limits<double>::infinity();
        for (Vertex v : edge.vertices) {
            max_sq = std::max(max_sq, x[v] * x[v]);
            d_min = std::min(d_min, h.degree(v));
        }
        const double key = max_sq * d_min;
        // key in (2^-i, 2^-i+1] puts the edge in E_i; below 2^-i* it is E_*.
        std::size_t category = 0;
        for (std::size_t i = 1; i <= out.i_star; ++i) {
            if (key > std::ldexp(1.0, -static_cast<int>(i)) &&
                key <= std::ldexp(1.0, 1 - static_cast<int>(i))) {
                category = i;
                break;
            }
        }
        out.category_of[e] = category;
    }

    const double n2 = static_cast<double>(n) * static_cast<double>(n);
    out.rounded.resize(out.i_star);
    for (std::size_t i = 1; i <= out.i_star; ++i) {
        auto& xi = out.rounded[i - 1];
        xi.assign(n, 0.0);
        const double zero_threshold = epsilon * epsilon * std::ldexp(1.0, -static_cast<int>(i)) / 2500.0;
        for (std::size_t v = 0; v < n; ++v) {
            const double d = h.degree(static_cast<Vertex>(v));
            if (d <= 0.0) continue;
            if (x[v] * x[v] * d < zero_threshold) continue;  // round to 0
            const double unit = 1.0 / (n2 * std::sqrt(d));
            xi[v] = std::round(x[v] / unit) * unit;
        }
    }
    return out;
}

}  // namespace hypersparse
