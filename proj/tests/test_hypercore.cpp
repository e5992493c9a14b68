#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "hypersparse/generators.hpp"
#include "hypersparse/hypergraph.hpp"
#include "hypersparse/io.hpp"
#include "hypersparse/rng.hpp"

using namespace hypersparse;

namespace {

std::vector<double> indicator(const std::vector<bool>& s) {
    std::vector<double> x(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) x[i] = s[i] ? 1.0 : 0.0;
    return x;
}

}  // namespace

TEST_CASE("construction validates vertex ids and weights") {
    CHECK_THROWS_AS(Hypergraph(2, {{{0, 2}, 1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph(2, {{{0, 1}, 0.0}}, true), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph(2, {{{0, 1}, -1.0}}, true), std::invalid_argument);
    Hypergraph h(3, {{{0, 1, 1}, 1.0}});  // multiset edge is fine
    CHECK(h.edge(0).multiplicity(1) == 2);
    CHECK(h.degree(1) == doctest::Approx(2.0));
}

TEST_CASE("degrees count multiplicity times weight") {
    Hypergraph h(3, {{{0, 1}, 2.0}, {{1, 1, 2}, 3.0}}, true);
    CHECK(h.degree(0) == doctest::Approx(2.0));
    CHECK(h.degree(1) == doctest::Approx(2.0 + 6.0));
    CHECK(h.degree(2) == doctest::Approx(3.0));
    CHECK(h.total_volume() == doctest::Approx(2.0 * 2 + 3.0 * 3));
}

TEST_CASE("energy is the max pairwise gap squared; self-loops contribute zero") {
    Hypergraph h(4, {{{0, 1, 2}, 2.0}, {{3, 3}, 5.0}});
    std::vector<double> x{0.0, 1.0, 3.0, 7.0};
    CHECK(energy_edge(h, 0, x) == doctest::Approx(2.0 * 9.0));
    CHECK(energy_edge(h, 1, x) == doctest::Approx(0.0));
    CHECK(energy(h, x) == doctest::Approx(18.0));
}

TEST_CASE("cut value equals energy at every indicator vector") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        auto h = random_uniform(8, 20, 3, seed);
        for (std::uint64_t mask = 1; mask + 1 < (1u << 8); ++mask) {
            std::vector<bool> s(8);
            for (std::size_t v = 0; v < 8; ++v) s[v] = mask >> v & 1;
            CHECK(cut_value(h, s) == energy(h, indicator(s)));
        }
    }
}

TEST_CASE("expansion and sparsity ratios") {
    // Two disjoint unit edges; cutting between them costs nothing.
    Hypergraph h(4, {{{0, 1}, 1.0}, {{2, 3}, 1.0}});
    std::vector<bool> s{true, true, false, false};
    CHECK(*expansion_of_set(h, s) == doctest::Approx(0.0));
    CHECK(*phi_of_set(h, s) == doctest::Approx(0.0));

    Hypergraph single(2, {{{0, 1}, 1.0}});
    std::vector<bool> half{true, false};
    CHECK(*expansion_of_set(single, half) == doctest::Approx(1.0));
    CHECK(*phi_of_set(single, half) == doctest::Approx(1.0));

    CHECK_THROWS_AS(expansion_of_set(single, std::vector<bool>{true, true}),
                    std::invalid_argument);
    // Isolated vertex side has zero volume.
    Hypergraph iso(3, {{{0, 1}, 1.0}});
    CHECK(!expansion_of_set(iso, std::vector<bool>{false, false, true}).has_value());
}

TEST_CASE("union-find merges and relabels by smallest member") {
    VertexPartition p(5);
    p.unite(3, 4);
    p.unite(0, 4);
    CHECK(p.same(0, 3));
    CHECK(!p.same(0, 1));
    CHECK(p.class_count() == 3);
    auto ids = p.class_ids();
    CHECK(ids[0] == 0);  // class containing vertex 0 first
    CHECK(ids[1] == 1);
    CHECK(ids[2] == 2);
    CHECK(ids[3] == 0);
    CHECK(ids[4] == 0);
}

TEST_CASE("contraction preserves edge order, length and weight") {
    Hypergraph h(4, {{{0, 1, 2}, 2.0}, {{2, 3}, 3.0}}, true);
    VertexPartition p(4);
    p.unite(0, 1);
    auto c = contract(h, p);
    CHECK(c.graph.vertex_count() == 3);
    CHECK(c.graph.edge_count() == 2);
    CHECK(c.graph.edge(0).vertices == std::vector<Vertex>{0, 0, 1});
    CHECK(c.graph.edge(0).weight == 2.0);
    CHECK(c.graph.edge(1).vertices == std::vector<Vertex>{1, 2});
    // Contraction never increases energy under the lifted vector.
    std::vector<double> x{0.3, 0.3, -1.0, 2.0};
    std::vector<double> lifted{0.3, -1.0, 2.0};
    CHECK(energy(c.graph, lifted) <= energy(h, x) + 1e-12);
}

TEST_CASE("sparsifier materialization and evaluation") {
    Hypergraph h(3, {{{0, 1}, 1.0}, {{1, 2}, 1.0}});
    Sparsifier sp;
    sp.entries.push_back({1, 4.0});
    auto m = sp.materialize(h);
    CHECK(m.edge_count() == 1);
    CHECK(m.edge(0).weight == 4.0);
    std::vector<double> x{0.0, 1.0, 3.0};
    CHECK(sparsifier_energy(h, sp, x) == doctest::Approx(4.0 * 4.0));
    std::vector<bool> s{true, true, false};
    CHECK(sparsifier_cut(h, sp, s) == doctest::Approx(4.0));

    Sparsifier bad;
    bad.entries.push_back({7, 1.0});
    CHECK_THROWS_AS(bad.validate(h), std::invalid_argument);
}

TEST_CASE("text round trip, comments, and diagnostics") {
    Hypergraph h = random_uniform(9, 15, 3, 42);
    std::ostringstream out;
    write_hypergraph(out, h);
    std::istringstream in(out.str());
    CHECK(read_hypergraph(in) == h);

    std::istringstream commented("# header comment\nhgr 3 1 1\n# mid comment\n2.5 0 1 2\n");
    auto g = read_hypergraph(commented);
    CHECK(g.edge(0).weight == doctest::Approx(2.5));

    std::istringstream bad_vertex("hgr 3 1 0\n0 1 7\n");
    CHECK_THROWS_WITH_AS(read_hypergraph(bad_vertex),
                         doctest::Contains("line"), ParseError);
    std::istringstream bad_header("xgr 3 1 0\n");
    CHECK_THROWS_AS(read_hypergraph(bad_header), ParseError);
}

TEST_CASE("directed round trip and arc validation") {
    auto d = random_directed(8, 12, 2, 5);
    std::ostringstream out;
    write_directed_hypergraph(out, d);
    std::istringstream in(out.str());
    auto back = read_directed_hypergraph(in);
    CHECK(back.arc_count() == d.arc_count());
    for (std::size_t i = 0; i < d.arc_count(); ++i) CHECK(back.arc(i) == d.arc(i));

    CHECK_THROWS_AS(DirectedHypergraph(3, {{{0}, {0}, 1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(DirectedHypergraph(3, {{{0}, {1}, 1.0}, {{0}, {1}, 1.0}}),
                    std::invalid_argument);
}

TEST_CASE("generators: counts, determinism, planted bridge") {
    CHECK(complete_uniform(5, 3).edge_count() == 10);
    auto a = random_uniform(10, 30, 3, 7);
    auto b = random_uniform(10, 30, 3, 7);
    CHECK(a == b);
    for (const auto& e : a.edges()) {
        CHECK(e.size() == 3);
        CHECK(e.vertices[0] != e.vertices[1]);
    }

    auto bridge = planted_bridge(5, 15, 3, 1);
    CHECK(bridge.vertex_count() == 10);
    // Exactly one edge straddles the two blocks.
    std::size_t straddling = 0;
    for (const auto& e : bridge.edges()) {
        bool lo = false, hi = false;
        for (Vertex v : e.vertices) (v < 5 ? lo : hi) = true;
        if (lo && hi) ++straddling;
    }
    CHECK(straddling == 1);

    auto bip = bipartite_clique_directed(3);
    CHECK(bip.arc_count() == 9);
    for (const auto& arc : bip.arcs()) {
        CHECK(arc.tail.front() < 3);
        CHECK(arc.head.front() >= 3);
    }
}

TEST_CASE("counter rng is order independent and seed sensitive") {
    CHECK(uniform01(1, 5) == uniform01(1, 5));
    CHECK(uniform01(1, 5) != uniform01(2, 5));
    CHECK(uniform01(1, 5) != uniform01(1, 6));
    double lo = 1.0, hi = 0.0, sum = 0.0;
    for (std::uint64_t k = 0; k < 10000; ++k) {
        const double u = uniform01(9, k);
        lo = std::min(lo, u);
        hi = std::max(hi, u);
        sum += u;
    }
    CHECK(lo >= 0.0);
    CHECK(hi < 1.0);
    CHECK(sum / 10000.0 == doctest::Approx(0.5).epsilon(0.02));
}

TEST_CASE("centered vectors satisfy their moment conditions") {
    auto h = random_uniform(10, 25, 3, 3);
    auto x = random_centered_vector(h, 11);
    double dot = 0.0;
    for (std::size_t v = 0; v < 10; ++v) dot += x[v] * h.degree(static_cast<Vertex>(v));
    CHECK(dot == doctest::Approx(0.0).epsilon(1e-9));

    auto y = random_normalized_vector(h, 11);
    double dot2 = 0.0, norm = 0.0;
    for (std::size_t v = 0; v < 10; ++v) {
        dot2 += y[v] * h.degree(static_cast<Vertex>(v));
        norm += y[v] * y[v] * h.degree(static_cast<Vertex>(v));
    }
    CHECK(dot2 == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(norm == doctest::Approx(1.0));
}
