#include "hypersparse/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "hypersparse/generators.hpp"
#include "hypersparse/parallel.hpp"
#include "hypersparse/rng.hpp"

namespace hypersparse {
namespace oracle {

namespace {

std::vector<bool> subset_of_mask(std::uint64_t mask, std::size_t n) {
    std::vector<bool> in_set(n, false);
    for (std::size_t v = 0; v < n; ++v)
        if (mask >> v & 1) in_set[v] = true;
    return in_set;
}

template <typename Ratio>
BruteCut brute_min(const Hypergraph& h, Ratio ratio) {
    const std::size_t n = h.vertex_count();
    if (n < 2) throw std::invalid_argument("sparsest cut needs at least 2 vertices");
    if (n > kMaxEnumVertices) throw std::invalid_argument("brute force capped at n <= 20");
    BruteCut best;
    best.value = std::numeric_limits<double>::infinity();
    // Fix vertex n-1 outside S to halve the enumeration.
    const std::uint64_t limit = 1ULL << (n - 1);
    for (std::uint64_t mask = 1; mask < limit; ++mask) {
        auto in_set = subset_of_mask(mask, n);
        auto r = ratio(h, in_set);
        const double value = r.has_value() ? *r : 0.0;  // isolated side: zero expansion
        if (value < best.value) {
            best.value = value;
            best.in_set = std::move(in_set);
        }
    }
    return best;
}

}  // namespace

BruteCut brute_sparsest_cut(const Hypergraph& h) {
    return brute_min(h, [](const Hypergraph& g, const std::vector<bool>& s) {
        return expansion_of_set(g, s);
    });
}

BruteCut brute_phi(const Hypergraph& h) {
    return brute_min(h, [](const Hypergraph& g, const std::vector<bool>& s) {
        return phi_of_set(g, s);
    });
}

QualityReport evaluate_sparsifier(const Hypergraph& h, const Sparsifier& sp,
                                  const EvalOptions& opts) {
    sp.validate(h);
    const std::size_t n = h.vertex_count();
    QualityReport report;
    report.sparsifier_size = sp.size();

    struct Partial {
        std::size_t violations = 0;
        std::size_t zero_mismatches = 0;
        double lo = 1.0, hi = 1.0;
        double ratio_sum = 0.0;
        std::size_t ratio_count = 0;
    };

    auto account = [&](Partial& p, double q, double q_tilde) {
        if (q == 0.0 || q_tilde == 0.0) {
            if (q != q_tilde) ++p.zero_mismatches;
            return;
        }
        const double ratio = q_tilde / q;
        p.lo = std::min(p.lo, ratio);
        p.hi = std::max(p.hi, ratio);
        p.ratio_sum += ratio;
        ++p.ratio_count;
        if (ratio < 1.0 - opts.epsilon || ratio > 1.0 + opts.epsilon) ++p.violations;
    };

    std::vector<Partial> parts;
    auto run = [&](std::size_t count, const std::function<void(std::size_t, Partial&)>& item) {
        const std::size_t jobs = std::max<std::size_t>(opts.jobs, 1);
        std::vector<Partial> chunk_parts(chunk_count(count));
        parallel_indexed_chunks(count, jobs, [&](std::size_t c, std::size_t begin, std::size_t end) {
            for (std::size_t i = begin; i < end; ++i) item(i, chunk_parts[c]);
        });
        parts.insert(parts.end(), chunk_parts.begin(), chunk_parts.end());
    };

    if (opts.all_cuts) {
        if (n > kMaxEnumVertices) throw std::invalid_argument("all-cuts evaluation capped at n <= 20");
        const std::uint64_t total = n >= 2 ? (1ULL << (n - 1)) - 1 : 0;
        report.cut_queries = total;
        run(total, [&](std::size_t i, Partial& p) {
            auto in_set = subset_of_mask(i + 1, n);
            account(p, cut_value(h, in_set), sparsifier_cut(h, sp, in_set));
        });
    }
    if (opts.sample_vectors > 0) {
        report.vector_queries = opts.sample_vectors;
        run(opts.sample_vectors, [&](std::size_t i, Partial& p) {
            auto x = random_centered_vector(h, derive_seed(opts.seed, 0x7665, i));
            account(p, energy(h, x), sparsifier_energy(h, sp, x));
        });
    }

    double ratio_sum = 0.0;
    std::size_t ratio_count = 0;
    for (const auto& p : parts) {
        report.violations += p.violations;
        report.zero_mismatches += p.zero_mismatches;
        report.worst_ratio_low = std::min(report.worst_ratio_low, p.lo);
        report.worst_ratio_high = std::max(report.worst_ratio_high, p.hi);
        ratio_sum += p.ratio_sum;
        ratio_count += p.ratio_count;
    }
    report.mean_cut_ratio = ratio_count ? ratio_sum / static_cast<double>(ratio_count) : 1.0;
    return report;
}

CheegerResult cheeger_check(const Hypergraph& h, std::vector<double> x) {
    const std::size_t n = h.vertex_count();
    if (x.size() != n) throw std::invalid_argument("vector length mismatch");
    double weighted_sum = 0.0, total = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
        weighted_sum += x[v] * h.degree(static_cast<Vertex>(v));
        total += h.degree(static_cast<Vertex>(v));
    }
    if (total > 0.0) {
        const double shift = weighted_sum / total;
        for (auto& xv : x) xv -= shift;
    }

    std::size_t r = h.edge_count() ? h.max_edge_size() : 1;
    for (const auto& e : h.edges()) r = std::min(r, e.size());

    const double phi = brute_sparsest_cut(h).value;
    CheegerResult res;
    res.phi = phi;
    res.precondition_ok = phi <= 2.0 / static_cast<double>(r) + 1e-12;
    res.lhs = energy(h, x);
    double mass = 0.0;
    for (std::size_t v = 0; v < n; ++v)
        mass += x[v] * x[v] * h.degree(static_cast<Vertex>(v));
    res.rhs = static_cast<double>(r) * phi * phi / 32.0 * mass;
    res.slack = res.lhs - res.rhs;
    res.pass = res.lhs >= res.rhs - 1e-9 * std::max(1.0, res.rhs);
    return res;
}

SweepGraph sweep_graph(const Hypergraph& h, std::span<const double> x) {
    if (x.size() != h.vertex_count()) throw std::invalid_argument("vector length mismatch");
    SweepGraph g;
    g.edges.reserve(h.edge_count());
    g.weights.reserve(h.edge_count());
    for (const auto& e : h.edges()) {
        Vertex arg_max = e.vertices.front();
        Vertex arg_min = e.vertices.front();
        for (Vertex v : e.vertices) {
            if (x[v] > x[arg_max] || (x[v] == x[arg_max] && v < arg_max)) arg_max = v;
            if (x[v] < x[arg_min] || (x[v] == x[arg_min] && v < arg_min)) arg_min = v;
        }
        g.edges.emplace_back(arg_max, arg_min);
        g.weights.push_back(e.weight);
    }
    return g;
}

double sweep_graph_energy(const SweepGraph& g, std::span<const double> x) {
    double total = 0.0;
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const double gap = x[g.edges[i].first] - x[g.edges[i].second];
        total += g.weights[i] * gap * gap;
    }
    return total;
}

}  // namespace oracle
}  // namespace hypersparse
