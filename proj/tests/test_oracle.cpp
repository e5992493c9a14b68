#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hypersparse/generators.hpp"
#include "hypersparse/oracle.hpp"

using namespace hypersparse;

TEST_CASE("brute sparsest cut on known instances") {
    Hypergraph single(2, {{{0, 1}, 1.0}});
    CHECK(oracle::brute_sparsest_cut(single).value == doctest::Approx(1.0));

    auto k4 = complete_uniform(4, 2);
    CHECK(oracle::brute_sparsest_cut(k4).value == doctest::Approx(2.0 / 3.0));

    Hypergraph disconnected(4, {{{0, 1}, 1.0}, {{2, 3}, 1.0}});
    auto cut = oracle::brute_sparsest_cut(disconnected);
    CHECK(cut.value == doctest::Approx(0.0));

    CHECK_THROWS_AS(oracle::brute_sparsest_cut(Hypergraph(1, {})), std::invalid_argument);
    CHECK_THROWS_AS(oracle::brute_sparsest_cut(complete_uniform(21, 2)), std::invalid_argument);
}

TEST_CASE("brute phi uses the volume-product denominator") {
    auto k4 = complete_uniform(4, 2);
    CHECK(oracle::brute_phi(k4).value == doctest::Approx(1.0 / 9.0));

    // Balanced cut of a single edge: cut 1 over vol product 1*1.
    Hypergraph single(2, {{{0, 1}, 1.0}});
    CHECK(oracle::brute_phi(single).value == doctest::Approx(1.0));

    Hypergraph disconnected(4, {{{0, 1}, 1.0}, {{2, 3}, 1.0}});
    CHECK(oracle::brute_phi(disconnected).value == doctest::Approx(0.0));
}

TEST_CASE("reported minimum is attained and global") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto h = random_uniform(7, 12, 3, seed);
        auto best = oracle::brute_sparsest_cut(h);
        auto reported = expansion_of_set(h, best.in_set);
        const double attained = reported.has_value() ? *reported : 0.0;
        CHECK(attained == doctest::Approx(best.value));
        for (std::uint64_t mask = 1; mask + 1 < (1u << 7); ++mask) {
            std::vector<bool> s(7);
            for (std::size_t v = 0; v < 7; ++v) s[v] = mask >> v & 1;
            auto phi = expansion_of_set(h, s);
            CHECK((phi.has_value() ? *phi : 0.0) >= best.value - 1e-12);
        }
    }
}

TEST_CASE("evaluate_sparsifier: identity copy and empty sparsifier") {
    auto h = random_uniform(8, 15, 3, 2);
    Sparsifier copy;
    for (std::size_t e = 0; e < h.edge_count(); ++e) copy.entries.push_back({e, 1.0});

    oracle::EvalOptions opts;
    opts.epsilon = 0.01;
    opts.all_cuts = true;
    opts.sample_vectors = 20;
    auto q = oracle::evaluate_sparsifier(h, copy, opts);
    CHECK(q.violations == 0);
    CHECK(q.zero_mismatches == 0);
    CHECK(q.worst_ratio_low == doctest::Approx(1.0));
    CHECK(q.worst_ratio_high == doctest::Approx(1.0));

    Sparsifier empty;
    auto qe = oracle::evaluate_sparsifier(h, empty, opts);
    CHECK(qe.violations == 0);  // zero vs nonzero counts as mismatch, not ratio
    CHECK(qe.zero_mismatches > 0);
}

TEST_CASE("evaluation is identical across job counts") {
    auto h = random_uniform(10, 30, 3, 4);
    Sparsifier sp;
    for (std::size_t e = 0; e < h.edge_count(); e += 2) sp.entries.push_back({e, 2.0});
    oracle::EvalOptions opts;
    opts.epsilon = 0.5;
    opts.all_cuts = true;
    opts.sample_vectors = 64;
    opts.seed = 9;

    opts.jobs = 1;
    auto q1 = oracle::evaluate_sparsifier(h, sp, opts);
    for (std::size_t jobs : {2, 3, 8}) {
        opts.jobs = jobs;
        auto qn = oracle::evaluate_sparsifier(h, sp, opts);
        CHECK(qn.violations == q1.violations);
        CHECK(qn.zero_mismatches == q1.zero_mismatches);
        CHECK(qn.worst_ratio_low == q1.worst_ratio_low);
        CHECK(qn.worst_ratio_high == q1.worst_ratio_high);
        CHECK(qn.mean_cut_ratio == q1.mean_cut_ratio);  // bitwise equal
    }
}

TEST_CASE("cheeger check on degenerate and random inputs") {
    Hypergraph h(4, {{{0, 1, 2}, 1.0}, {{1, 2, 3}, 1.0}});
    auto constant = std::vector<double>(4, 3.0);
    auto res = oracle::cheeger_check(h, constant);
    CHECK(res.pass);
    CHECK(res.lhs == doctest::Approx(0.0));
    CHECK(res.rhs == doctest::Approx(0.0));

    Hypergraph disc(4, {{{0, 1}, 1.0}, {{2, 3}, 1.0}});
    auto res2 = oracle::cheeger_check(disc, {1.0, -1.0, 0.5, 2.0});
    CHECK(res2.pass);
    CHECK(res2.phi == doctest::Approx(0.0));

    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto g = random_uniform(9, 18, 3, seed);
        auto x = random_centered_vector(g, seed + 1000);
        CHECK(oracle::cheeger_check(g, x).pass);
    }
}

TEST_CASE("sweep graph: energy identity and tie handling") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto h = random_uniform(9, 20, 4, seed, true);
        auto x = random_centered_vector(h, seed + 7);
        auto g = oracle::sweep_graph(h, x);
        CHECK(oracle::sweep_graph_energy(g, x) == doctest::Approx(energy(h, x)));
    }

    Hypergraph h(3, {{{0, 1, 2}, 2.0}});
    std::vector<double> tie{1.0, 1.0, 1.0};
    auto g = oracle::sweep_graph(h, tie);
    CHECK(g.edges[0].first == 0);   // ties resolve to the lowest id
    CHECK(g.edges[0].second == 0);
    CHECK(oracle::sweep_graph_energy(g, tie) == doctest::Approx(0.0));

    // 2-uniform hypergraphs reproduce themselves up to orientation.
    Hypergraph pair(2, {{{0, 1}, 3.0}});
    std::vector<double> x{2.0, -1.0};
    auto gp = oracle::sweep_graph(pair, x);
    CHECK(gp.edges[0] == std::make_pair<Vertex, Vertex>(0, 1));
    CHECK(gp.weights[0] == 3.0);
}
