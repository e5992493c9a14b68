#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hypersparse/generators.hpp"
#include "hypersparse/oracle.hpp"
#include "hypersparse/rng.hpp"
#include "hypersparse/simplex.hpp"
#include "hypersparse/sparsest_cut.hpp"

using namespace hypersparse;

namespace {

// A genuine metric from random points in the unit cube.
MetricSolution random_point_metric(std::size_t n, std::uint64_t seed) {
    std::vector<double> pts(3 * n);
    for (std::size_t i = 0; i < pts.size(); ++i) pts[i] = uniform01(seed, i);
    MetricSolution sol;
    sol.n = n;
    sol.ell.assign(n * n, 0.0);
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            double s = 0.0;
            for (std::size_t d = 0; d < 3; ++d) {
                const double g = pts[3 * u + d] - pts[3 * v + d];
                s += g * g;
            }
            sol.ell[u * n + v] = sol.ell[v * n + u] = std::sqrt(s);
        }
    }
    return sol;
}

}  // namespace

TEST_CASE("simplex: bounded, degenerate, infeasible, unbounded") {
    LinearProgram lp;
    lp.num_vars = 2;
    lp.objective = {-1.0, -1.0};
    lp.add_row({{0, 1.0}, {1, 1.0}}, LinearProgram::Relation::LessEqual, 4.0);
    lp.add_row({{0, 1.0}}, LinearProgram::Relation::LessEqual, 3.0);
    auto res = solve_lp(lp);
    REQUIRE(res.status == LpResult::Status::Optimal);
    CHECK(res.objective == doctest::Approx(-4.0));
    CHECK(res.x[0] + res.x[1] == doctest::Approx(4.0));

    LinearProgram eq;
    eq.num_vars = 2;
    eq.objective = {1.0, 0.0};
    eq.add_row({{0, 1.0}, {1, 1.0}}, LinearProgram::Relation::Equal, 2.0);
    auto eres = solve_lp(eq);
    REQUIRE(eres.status == LpResult::Status::Optimal);
    CHECK(eres.objective == doctest::Approx(0.0));
    CHECK(eres.x[1] == doctest::Approx(2.0));

    LinearProgram inf;
    inf.num_vars = 1;
    inf.objective = {0.0};
    inf.add_row({{0, 1.0}}, LinearProgram::Relation::LessEqual, -1.0);
    CHECK(solve_lp(inf).status == LpResult::Status::Infeasible);

    LinearProgram unb;
    unb.num_vars = 1;
    unb.objective = {-1.0};
    unb.add_row({{0, 1.0}}, LinearProgram::Relation::GreaterEqual, 1.0);
    CHECK(solve_lp(unb).status == LpResult::Status::Unbounded);
}

TEST_CASE("metric LP on hand-solvable instances") {
    Hypergraph single(2, {{{0, 1}, 1.0}});
    auto sol = solve_metric_lp(single);
    CHECK(sol.objective == doctest::Approx(0.5));
    CHECK(sol.ell_at(0, 1) == doctest::Approx(0.5));
    CHECK(sol.z[0] == doctest::Approx(0.5));

    Hypergraph disc(4, {{{0, 1}, 1.0}, {{2, 3}, 1.0}});
    CHECK(solve_metric_lp(disc).objective == doctest::Approx(0.0).epsilon(1e-7));

    auto k4 = complete_uniform(4, 2);
    CHECK(solve_metric_lp(k4).objective <= 1.0 / 9.0 + 1e-7);

    CHECK_THROWS_AS(solve_metric_lp(complete_uniform(6, 2), 5), std::invalid_argument);
    CHECK_THROWS_AS(solve_metric_lp(Hypergraph(1, {})), std::invalid_argument);
}

TEST_CASE("metric LP solutions are feasible within tolerance") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        auto h = random_uniform(8, 16, 3, seed);
        auto sol = solve_metric_lp(h);
        double norm = 0.0;
        for (std::size_t u = 0; u < 8; ++u)
            for (std::size_t v = 0; v < 8; ++v)
                if (u != v)
                    norm += h.degree(static_cast<Vertex>(u)) *
                            h.degree(static_cast<Vertex>(v)) * sol.ell_at(u, v);
        CHECK(norm == doctest::Approx(1.0).epsilon(1e-7));
        for (std::size_t e = 0; e < h.edge_count(); ++e) {
            const auto& verts = h.edge(e).vertices;
            for (std::size_t a = 0; a < verts.size(); ++a)
                for (std::size_t b = a + 1; b < verts.size(); ++b)
                    CHECK(sol.z[e] >= sol.ell_at(verts[a], verts[b]) - 1e-7);
        }
        for (std::size_t u = 0; u < 8; ++u)
            for (std::size_t v = 0; v < 8; ++v)
                for (std::size_t w = 0; w < 8; ++w)
                    CHECK(sol.ell_at(u, w) <= sol.ell_at(u, v) + sol.ell_at(v, w) + 1e-7);
    }
}

TEST_CASE("LP objective lower-bounds every brute-force ratio") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        auto h = random_uniform(8, 14, 3, seed);
        const double obj = solve_metric_lp(h).objective;
        for (std::uint64_t mask = 1; mask + 1 < (1u << 8); ++mask) {
            std::vector<bool> s(8);
            for (std::size_t v = 0; v < 8; ++v) s[v] = mask >> v & 1;
            auto phi = phi_of_set(h, s);
            if (phi) CHECK(obj <= *phi + 1e-6);
        }
    }
}

TEST_CASE("embedding: degenerate inputs and the Lipschitz upper bound") {
    MetricSolution one;
    one.n = 1;
    one.ell = {0.0};
    CHECK(bourgain_embed(one, 1).k == 0);

    MetricSolution zero;
    zero.n = 4;
    zero.ell.assign(16, 0.0);
    auto ze = bourgain_embed(zero, 1);
    for (double c : ze.coords) CHECK(c == 0.0);

    auto sol = random_point_metric(12, 3);
    auto emb = bourgain_embed(sol, 7);
    CHECK(emb.k == 4 * 4);  // ceil(log2 12)^2 coordinates
    for (std::size_t u = 0; u < 12; ++u)
        for (std::size_t v = u + 1; v < 12; ++v)
            for (std::size_t i = 0; i < emb.k; ++i)
                CHECK(std::abs(emb.at(u, i) - emb.at(v, i)) <= sol.ell_at(u, v) + 1e-12);
}

TEST_CASE("measured distortion stays logarithmic on random metrics") {
    const std::size_t n = 16;
    const double budget = 8.0 * std::log(static_cast<double>(n));
    std::size_t good = 0;
    const std::size_t trials = 20;
    for (std::uint64_t seed = 0; seed < trials; ++seed) {
        auto sol = random_point_metric(n, 100 + seed);
        auto emb = bourgain_embed(sol, seed);
        if (embedding_distortion(sol, emb) <= budget) ++good;
    }
    CHECK(good >= trials * 9 / 10);
}

TEST_CASE("sweep rounding on constructed coordinates") {
    // Two disjoint triangles; the separating coordinate finds a free cut.
    Hypergraph two(6, {{{0, 1}, 1.0}, {{1, 2}, 1.0}, {{0, 2}, 1.0},
                       {{3, 4}, 1.0}, {{4, 5}, 1.0}, {{3, 5}, 1.0}});
    Embedding sep;
    sep.n = 6;
    sep.k = 1;
    sep.coords = {0.0, 0.0, 0.0, 1.0, 1.0, 1.0};
    auto sr = sweep_round(two, sep);
    CHECK(sr.best_phi == doctest::Approx(0.0));
    CHECK(sr.best_expansion == doctest::Approx(0.0));

    Hypergraph single(2, {{{0, 1}, 1.0}});
    Embedding f01;
    f01.n = 2;
    f01.k = 1;
    f01.coords = {0.0, 1.0};
    auto ss = sweep_round(single, f01);
    CHECK(ss.best_phi == doctest::Approx(1.0));
    CHECK(ss.best_expansion == doctest::Approx(1.0));
    CHECK(ss.coordinate_bound == doctest::Approx(1.0));
    CHECK(int(ss.best_phi_set[0]) + int(ss.best_phi_set[1]) == 1);

    // A constant coordinate is inert: ties sort by id, bound comes from the
    // informative coordinate, and nothing divides by zero.
    Embedding mixed;
    mixed.n = 6;
    mixed.k = 2;
    mixed.coords.assign(12, 0.5);
    for (std::size_t v = 3; v < 6; ++v) mixed.coords[v * 2 + 1] = 2.0;
    auto sm = sweep_round(two, mixed);
    CHECK(sm.best_phi == doctest::Approx(0.0));
    CHECK(std::isfinite(sm.coordinate_bound));

    CHECK_THROWS_AS(sweep_round(single, Embedding{}), std::invalid_argument);
}

TEST_CASE("sweep result respects its coordinate certificate on random data") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        auto h = random_uniform(10, 25, 3, seed);
        auto sol = solve_metric_lp(h);
        auto emb = bourgain_embed(sol, seed + 40);
        // sweep_round throws internally if phi exceeds the bound.
        auto sr = sweep_round(h, emb);
        CHECK(sr.best_phi <= sr.coordinate_bound * (1.0 + 1e-9) + 1e-9);
        auto reported = phi_of_set(h, sr.best_phi_set);
        CHECK((reported.has_value() ? *reported : 0.0) == doctest::Approx(sr.best_phi));
    }
}

TEST_CASE("sparse_cut end to end") {
    Hypergraph disc(4, {{{0, 1}, 1.0}, {{2, 3}, 1.0}});
    auto dres = sparse_cut(disc, 1);
    CHECK(dres.expansion == doctest::Approx(0.0));
    CHECK(!dres.heuristic);

    auto k4 = complete_uniform(4, 2);
    auto kres = sparse_cut(k4, 2);
    CHECK(kres.lp_objective.has_value());
    CHECK(*kres.lp_objective <= kres.phi + 1e-6);
    CHECK(kres.expansion <= (2.0 / 3.0) * 4.0 * std::log2(4.0));

    // Unit path on 9 vertices: middle cut is the sparsest.
    std::vector<Hyperedge> path_edges;
    for (Vertex v = 0; v + 1 < 9; ++v) path_edges.push_back({{v, v + 1}, 1.0});
    Hypergraph path(9, path_edges);
    const double best = oracle::brute_sparsest_cut(path).value;
    auto pres = sparse_cut(path, 3);
    CHECK(pres.expansion <= best * 4.0 * std::log2(9.0) + 1e-9);

    // No-edge input: trivial singleton with a zero certificate.
    auto zres = sparse_cut(Hypergraph(3, {}), 0);
    CHECK(zres.lp_objective == 0.0);
    CHECK(zres.in_set == std::vector<bool>{true, false, false});
}

TEST_CASE("approximation ratio over seeded runs") {
    std::size_t runs = 0;
    double worst_ratio = 0.0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        auto h = random_uniform(10, 24, 3, 1000 + seed);
        const double truth = oracle::brute_sparsest_cut(h).value;
        auto res = sparse_cut(h, seed);
        if (truth <= 1e-12) {
            CHECK(res.expansion <= 1e-9);
            continue;
        }
        ++runs;
        worst_ratio = std::max(worst_ratio, res.expansion / truth);
    }
    CHECK(runs > 50);
    // Calibrated ratio budget C * ln n with C = 4.
    CHECK(worst_ratio <= 4.0 * std::log(10.0));
    MESSAGE("worst expansion ratio over ", runs, " runs: ", worst_ratio);
}

TEST_CASE("heuristic fallback above the LP cap is flagged") {
    auto h = random_uniform(12, 40, 3, 8);
    SparsestCutConfig cfg;
    cfg.lp_cap = 6;
    auto res = sparse_cut(h, 5, cfg);
    CHECK(res.heuristic);
    CHECK(!res.lp_objective.has_value());
    auto reported = expansion_of_set(h, res.in_set);
    CHECK((reported.has_value() ? *reported : 0.0) == doctest::Approx(res.expansion));
}
