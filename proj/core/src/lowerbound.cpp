#include "hypersparse/lowerbound.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include "hypersparse/rng.hpp"

namespace hypersparse {

namespace {

std::pair<Vertex, Vertex> norm_edge(std::pair<Vertex, Vertex> e) {
    if (e.first > e.second) std::swap(e.first, e.second);
    return e;
}

}  // namespace

std::optional<std::string> validate_rs(const RSGraph& g) {
    if (g.matchings.empty()) return "no matchings";
    const std::size_t a = g.matchings.front().size();
    if (a == 0) return "empty matching";

    std::set<std::pair<Vertex, Vertex>> union_edges;
    std::vector<std::set<Vertex>> endpoint_sets;
    for (std::size_t j = 0; j < g.matchings.size(); ++j) {
        const auto& mj = g.matchings[j];
        if (mj.size() != a)
            return "matching " + std::to_string(j) + " has size " + std::to_string(mj.size()) +
                   ", expected " + std::to_string(a);
        std::set<Vertex> endpoints;
        for (auto e : mj) {
            if (e.first >= g.n || e.second >= g.n)
                return "matching " + std::to_string(j) + " has an out-of-range endpoint";
            if (e.first == e.second)
                return "matching " + std::to_string(j) + " contains a self-loop";
            if (!endpoints.insert(e.first).second || !endpoints.insert(e.second).second)
                return "matching " + std::to_string(j) + " reuses an endpoint";
            if (!union_edges.insert(norm_edge(e)).second)
                return "edge repeated across matchings in matching " + std::to_string(j);
        }
        endpoint_sets.push_back(std::move(endpoints));
    }

    // Induced: the union restricted to matching j's endpoints is exactly M_j.
    for (std::size_t j = 0; j < g.matchings.size(); ++j) {
        std::set<std::pair<Vertex, Vertex>> own;
        for (auto e : g.matchings[j]) own.insert(norm_edge(e));
        for (const auto& e : union_edges) {
            if (!endpoint_sets[j].count(e.first) || !endpoint_sets[j].count(e.second)) continue;
            if (!own.count(e))
                return "matching " + std::to_string(j) + " is not induced: stray edge (" +
                       std::to_string(e.first) + "," + std::to_string(e.second) + ")";
        }
    }
    return std::nullopt;
}

RSGraph rs_disjoint_blocks(std::size_t t, std::size_t a) {
    RSGraph g;
    g.n = 2 * t * a;
    for (std::size_t j = 0; j < t; ++j) {
        std::vector<std::pair<Vertex, Vertex>> m;
        for (std::size_t i = 0; i < a; ++i) {
            const Vertex base = static_cast<Vertex>(j * 2 * a + 2 * i);
            m.push_back({base, base + 1});
        }
        g.matchings.push_back(std::move(m));
    }
    return g;
}

RSGraph gen_rs_greedy(std::size_t n, std::size_t t, std::size_t a, std::uint64_t seed,
                      std::size_t retries_per_matching) {
    if (n < 2 * a) throw std::invalid_argument("need at least 2a vertices per matching");
    RSGraph g;
    g.n = n;
    std::set<std::pair<Vertex, Vertex>> union_edges;
    RngStream rng(seed);

    for (std::size_t j = 0; j < t; ++j) {
        bool placed = false;
        for (std::size_t attempt = 0; attempt < retries_per_matching && !placed; ++attempt) {
            std::vector<Vertex> verts(n);
            std::iota(verts.begin(), verts.end(), 0);
            for (std::size_t i = n; i > 1; --i)
                std::swap(verts[i - 1], verts[rng.next_below(i)]);
            std::vector<std::pair<Vertex, Vertex>> cand;
            std::set<Vertex> cand_endpoints;
            for (std::size_t i = 0; i < a; ++i) {
                cand.push_back(norm_edge({verts[2 * i], verts[2 * i + 1]}));
                cand_endpoints.insert(verts[2 * i]);
                cand_endpoints.insert(verts[2 * i + 1]);
            }

            bool ok = true;
            // The candidate must be induced against the current union and
            // must not plant an edge inside an earlier matching's endpoints.
            for (const auto& e : union_edges)
                if (cand_endpoints.count(e.first) && cand_endpoints.count(e.second)) ok = false;
            for (const auto& earlier : g.matchings) {
                if (!ok) break;
                std::set<Vertex> ends;
                for (auto e : earlier) {
                    ends.insert(e.first);
                    ends.insert(e.second);
                }
                for (auto e : cand)
                    if (ends.count(e.first) && ends.count(e.second)) ok = false;
            }
            for (auto e : cand)
                if (union_edges.count(e)) ok = false;
            if (!ok) continue;

            std::sort(cand.begin(), cand.end());
            for (auto e : cand) union_edges.insert(e);
            g.matchings.push_back(std::move(cand));
            placed = true;
        }
        if (!placed)
            throw std::runtime_error("greedy matching packer placed only " +
                                     std::to_string(g.matchings.size()) + " of " +
                                     std::to_string(t) + " matchings");
    }
    return g;
}

EncodedInstance encode(const RSGraph& g, const std::vector<bool>& s) {
    if (auto bad = validate_rs(g)) throw std::invalid_argument("invalid matching family: " + *bad);
    EncodedInstance inst;
    inst.n = g.n;
    inst.t = g.t();
    inst.a = g.a();
    if (s.size() != 2 * inst.t * inst.a)
        throw std::invalid_argument("string length must be 2 * t * a");
    inst.s = s;

    const Vertex n = static_cast<Vertex>(inst.n);
    for (std::size_t j = 0; j < inst.t; ++j) {
        auto sorted = g.matchings[j];
        for (auto& e : sorted) e = norm_edge(e);
        std::sort(sorted.begin(), sorted.end());
        for (const auto& [u, v] : sorted) {
            inst.edges.push_back({j, u, static_cast<Vertex>(n + v)});
            inst.edges.push_back({j, v, static_cast<Vertex>(n + u)});
        }
    }

    // One hyperedge per P-vertex: itself plus its selected Q-neighbors.
    std::vector<Hyperedge> hyperedges(inst.n);
    for (std::size_t u = 0; u < inst.n; ++u)
        hyperedges[u].vertices.push_back(static_cast<Vertex>(u));
    for (std::size_t i = 0; i < inst.edges.size(); ++i)
        if (s[i]) hyperedges[inst.edges[i].p].vertices.push_back(inst.edges[i].q);
    inst.h = Hypergraph(2 * inst.n, std::move(hyperedges), false);
    return inst;
}

std::vector<bool> query_cut_set(const EncodedInstance& inst, std::size_t j,
                                const std::vector<std::size_t>& q_j) {
    if (j >= inst.t) throw std::invalid_argument("segment index out of range");
    const std::size_t seg_size = 2 * inst.a;
    std::vector<bool> in_set(2 * inst.n, false);
    for (std::size_t i : q_j) {
        if (i >= inst.edges.size() || inst.edges[i].matching != j)
            throw std::invalid_argument("query coordinate outside segment");
        in_set[inst.edges[i].p] = true;
    }
    std::vector<bool> q_side(2 * inst.n, false);
    const std::size_t base = j * seg_size;
    for (std::size_t i = base; i < base + seg_size; ++i) q_side[inst.edges[i].q] = true;
    for (std::size_t v = inst.n; v < 2 * inst.n; ++v)
        if (!q_side[v]) in_set[v] = true;
    return in_set;
}

double expected_z(const EncodedInstance& inst, std::size_t j) {
    if (j >= inst.t) throw std::invalid_argument("segment index out of range");
    const std::size_t seg_size = 2 * inst.a;
    const std::size_t base = j * seg_size;
    std::vector<bool> in_pj(inst.n, false), in_qj(2 * inst.n, false);
    for (std::size_t i = base; i < base + seg_size; ++i) {
        in_pj[inst.edges[i].p] = true;
        in_qj[inst.edges[i].q] = true;
    }
    std::vector<std::size_t> escapes(inst.n, 0);  // edges leaving Q_j, per P-vertex
    for (const auto& e : inst.edges)
        if (!in_qj[e.q]) ++escapes[e.p];
    double total = 0.0;
    for (std::size_t u = 0; u < inst.n; ++u) {
        if (in_pj[u] || escapes[u] == 0) continue;
        total += 1.0 - std::ldexp(1.0, -static_cast<int>(escapes[u]));
    }
    return total;
}

long long decode(const EncodedInstance& inst, const std::vector<std::size_t>& q,
                 const CutFn& cut_fn) {
    const std::size_t seg_size = 2 * inst.a;
    std::vector<std::vector<std::size_t>> by_segment(inst.t);
    for (std::size_t i : q) {
        if (i >= inst.edges.size()) throw std::invalid_argument("query coordinate out of range");
        by_segment[i / seg_size].push_back(i);
    }
    double estimate = 0.0;
    for (std::size_t j = 0; j < inst.t; ++j) {
        if (by_segment[j].empty()) continue;
        const double cut = cut_fn(query_cut_set(inst, j, by_segment[j]));
        estimate += cut - static_cast<double>(seg_size - by_segment[j].size()) -
                    expected_z(inst, j);
    }
    long long rounded = std::llround(estimate);
    rounded = std::max<long long>(rounded, 0);
    rounded = std::min<long long>(rounded, static_cast<long long>(q.size()));
    return rounded;
}

CutFn exact_cut_fn(const EncodedInstance& inst) {
    return [h = inst.h](const std::vector<bool>& in_set) { return cut_value(h, in_set); };
}

AuditReport audit_scs(const RSGraph& g, std::size_t trials, std::uint64_t seed) {
    if (auto bad = validate_rs(g)) throw std::invalid_argument("invalid matching family: " + *bad);
    AuditReport report;
    report.trials = trials;
    const std::size_t ell = 2 * g.t() * g.a();
    const double n = static_cast<double>(g.n);
    report.bound = 8.0 * n + 100.0 * static_cast<double>(g.t()) *
                             std::sqrt(n * std::log2(std::max(n, 2.0)));

    std::vector<std::size_t> p_degree(g.n, 0);
    for (const auto& m : g.matchings) {
        for (auto e : m) {
            ++p_degree[e.first];
            ++p_degree[e.second];
        }
    }
    report.min_p_degree = ell;
    for (std::size_t u = 0; u < g.n; ++u)
        if (p_degree[u] > 0) report.min_p_degree = std::min(report.min_p_degree, p_degree[u]);
    report.degree_one_systematic = report.min_p_degree < 2;

    std::vector<double> errors;
    errors.reserve(trials);
    std::size_t within = 0;
    for (std::size_t trial = 0; trial < trials; ++trial) {
        const std::uint64_t ts = derive_seed(seed, trial);
        std::vector<bool> s(ell);
        std::vector<std::size_t> q;
        for (std::size_t i = 0; i < ell; ++i) {
            s[i] = uniform01(ts, 2 * i) < 0.5;
            if (uniform01(ts, 2 * i + 1) < 0.5) q.push_back(i);
        }
        auto inst = encode(g, s);
        long long truth = 0;
        for (std::size_t i : q) truth += s[i] ? 1 : 0;
        const long long est = decode(inst, q, exact_cut_fn(inst));
        const double err = std::abs(static_cast<double>(est - truth));
        errors.push_back(err);
        if (err <= report.bound) ++within;
        report.mean_abs_error += err;
        report.max_abs_error = std::max(report.max_abs_error, err);
    }
    if (trials) {
        report.mean_abs_error /= static_cast<double>(trials);
        report.fraction_within_bound = static_cast<double>(within) / static_cast<double>(trials);
        std::sort(errors.begin(), errors.end());
        report.p50_error = errors[trials / 2];
        report.p90_error = errors[(trials * 9) / 10 < trials ? (trials * 9) / 10 : trials - 1];
    }
    return report;
}

}  // namespace hypersparse
