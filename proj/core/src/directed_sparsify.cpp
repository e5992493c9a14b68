#include "hypersparse/directed_sparsify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "hypersparse/rng.hpp"

namespace hypersparse {

double band_keep_rate(std::size_t n, std::size_t r, std::size_t k,
                      const DirectedSparsifyConfig& cfg) {
    if (k < 1) throw std::invalid_argument("overlap level must be at least 1");
    if (!(cfg.epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
    const double log_n =
        std::max(std::log2(static_cast<double>(std::max<std::size_t>(n, 2))), 1.0);
    const double p = cfg.p_c * static_cast<double>(r) * static_cast<double>(r) * log_n /
                     (static_cast<double>(k) * cfg.epsilon * cfg.epsilon);
    return std::min(p, 1.0);
}

Sparsifier uniform_band_sparsify(const DirectedHypergraph& d,
                                 const std::vector<std::size_t>& band,
                                 std::size_t k, const DirectedSparsifyConfig& cfg) {
    std::size_t r = 1;
    for (std::size_t e : band) r = std::max(r, d.arc(e).size());
    const double p = band_keep_rate(d.vertex_count(), r, k, cfg);
    Sparsifier sp;
    for (std::size_t e : band)
        if (uniform01(cfg.seed, e) < p) sp.entries.push_back({e, d.arc(e).weight / p});
    return sp;
}

DirectedSparsifyRun directed_sparsify_run(const DirectedHypergraph& d,
                                          const DirectedSparsifyConfig& cfg) {
    const std::size_t n = d.vertex_count();
    DirectedSparsifyRun run;
    const std::size_t r_all = d.arc_count() ? d.max_arc_size() : 1;
    run.size_precondition_ok =
        11.0 * static_cast<double>(r_all) <= std::sqrt(cfg.epsilon * static_cast<double>(n));
    if (d.arc_count() == 0) return run;

    std::vector<std::size_t> remaining(d.arc_count());
    for (std::size_t e = 0; e < d.arc_count(); ++e) remaining[e] = e;

    std::size_t band_index = 0;
    while (!remaining.empty()) {
        // Maximum overlap among the remaining arcs, restricted to them.
        std::vector<Hyperarc> sub;
        sub.reserve(remaining.size());
        for (std::size_t e : remaining) sub.push_back(d.arc(e));
        DirectedHypergraph rest(n, std::move(sub), d.weighted());
        auto assignment = overlap_peel(rest);
        const std::size_t kmax =
            *std::max_element(assignment.k.begin(), assignment.k.end());

        const std::size_t k = (kmax + 1) / 2;
        std::vector<std::size_t> band = maximal_k_overlapping(d, remaining, k);
        if (band.empty())
            throw std::logic_error("band extraction returned empty at its own overlap level");

        DirectedSparsifyConfig band_cfg = cfg;
        band_cfg.seed = derive_seed(cfg.seed, 0xba2d, band_index++);
        Sparsifier sp = uniform_band_sparsify(d, band, k, band_cfg);
        for (const auto& entry : sp.entries) run.sparsifier.entries.push_back(entry);

        std::size_t r_band = 1;
        for (std::size_t e : band) r_band = std::max(r_band, d.arc(e).size());
        run.bands.push_back(
            {k, band_keep_rate(n, r_band, k, cfg), band});

        std::vector<char> taken(d.arc_count(), 0);
        for (std::size_t e : band) taken[e] = 1;
        std::vector<std::size_t> next;
        for (std::size_t e : remaining)
            if (!taken[e]) next.push_back(e);
        remaining = std::move(next);
    }
    return run;
}

DirectedCategories directed_category_probe(const DirectedHypergraph& d,
                                           std::span<const double> x, std::size_t k) {
    const std::size_t n = d.vertex_count();
    if (x.size() != n) throw std::invalid_argument("vector length mismatch");
    if (k < 1) throw std::invalid_argument("overlap level must be at least 1");

    double total = 0.0;
    for (std::size_t e = 0; e < d.arc_count(); ++e) {
        double arc_sum = 0.0;
        for (Vertex a : d.arc(e).tail) {
            for (Vertex b : d.arc(e).head) {
                const double gap = std::max(x[a] - x[b], 0.0);
                arc_sum += gap * gap;
            }
        }
        total += d.arc(e).weight * arc_sum;
    }
    if (std::abs(total - 1.0) > 1e-6)
        throw std::invalid_argument("probe requires the clique-graph energy normalized to 1");

    DirectedCategories out;
    out.i_star = static_cast<std::size_t>(
        std::ceil(3.0 * std::log2(static_cast<double>(std::max<std::size_t>(n, 2)))));

    std::map<std::pair<Vertex, Vertex>, std::size_t> pair_id;
    for (const auto& arc : d.arcs())
        for (Vertex a : arc.tail)
            for (Vertex b : arc.head) pair_id.emplace(std::make_pair(a, b), 0);
    std::size_t next_id = 0;
    for (auto& [key, id] : pair_id) id = next_id++;

    const double kd = static_cast<double>(k);
    out.pairs.resize(pair_id.size());
    for (const auto& [key, id] : pair_id) {
        const double gap = std::max(x[key.first] - x[key.second], 0.0);
        const double q = gap * gap;
        // q in (2^-i / k, 2^-i+1 / k] puts the pair in category i.
        std::size_t category = 0;
        for (std::size_t i = 1; i <= out.i_star; ++i) {
            if (q > std::ldexp(1.0, -static_cast<int>(i)) / kd &&
                q <= std::ldexp(1.0, 1 - static_cast<int>(i)) / kd) {
                category = i;
                break;
            }
        }
        out.pairs[id] = {key.first, key.second, q, category};
    }

    out.arc_category.assign(d.arc_count(), 0);
    for (std::size_t e = 0; e < d.arc_count(); ++e) {
        std::size_t cat = 0;
        for (Vertex a : d.arc(e).tail)
            for (Vertex b : d.arc(e).head)
                cat = std::max(cat, out.pairs[pair_id.at({a, b})].category);
        out.arc_category[e] = cat;
    }

    const double unit =
        1.0 / (kd * std::pow(static_cast<double>(std::max<std::size_t>(n, 2)), 3.0));
    out.rounded.resize(out.i_star);
    for (std::size_t i = 1; i <= out.i_star; ++i) {
        auto& row = out.rounded[i - 1];
        row.assign(out.pairs.size(), 0.0);
        const double floor_threshold = std::ldexp(1.0, -static_cast<int>(i)) / kd;
        for (std::size_t p = 0; p < out.pairs.size(); ++p) {
            const double q = out.pairs[p].energy;
            if (q < floor_threshold) continue;  // zeroed
            row[p] = std::round(q / unit) * unit;
        }
    }
    return out;
}

}  // namespace hypersparse
