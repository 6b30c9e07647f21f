#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "oracles.hpp"
#include "periscope/constructions.hpp"
#include "periscope/distance.hpp"
#include "periscope/indices.hpp"

using namespace periscope;

TEST_CASE("standard families") {
    CHECK(balanced_spider(3, 1).vertex_count() == 4);
    CHECK(oracle::isomorphic(balanced_spider(3, 1), star_graph(3)));
    CHECK(spider({1, 1, 2}).vertex_count() == 5);
    for (int a : {2, 3, 5})
        for (int b : {1, 2, 4}) CHECK(balanced_spider(a, b).vertex_count() == a * b + 1);
    CHECK_THROWS_AS(spider({1, 0}), GraphError);
    CHECK_THROWS_AS(spider({}), GraphError);
    CHECK(complete_tripartite(2, 2, 2).edge_count() == 12);
    CHECK(diameter(complete_tripartite(4, 4, 4)) == 2);
}

TEST_CASE("every generated family member is simple and connected") {
    std::vector<Graph> all = {
        path_graph(6),          cycle_graph(7),          complete_graph(5),
        complete_bipartite(3, 4), complete_tripartite(3, 3, 3), star_graph(4),
        spider({1, 2, 3}),      balanced_spider(4, 3),   eperi_extremal(9),
        espr_extremal(4),       pendant_clique(9),       rhombic_dodecahedron(),
        rhombic_triacontahedron()};
    for (const Graph& g : all) {
        CHECK(is_connected(g));
        for (int u = 0; u < g.vertex_count(); ++u) CHECK(!g.has_edge(u, u));
    }
}

TEST_CASE("eperi_extremal structure") {
    CHECK(std::abs(eperi_extremal_alpha() - 0.36602540378) < 1e-10);
    CHECK_THROWS_AS(eperi_extremal(3), GraphError);
    CHECK_THROWS_AS(eperi_extremal(7), GraphError);

    const double alpha = eperi_extremal_alpha();
    for (int s : {8, 10, 50, 200}) {
        Graph g = eperi_extremal(s);
        CHECK(is_connected(g));
        // center vertex 0 has one edge per chain; count chains = i_max + 2
        int i_max = 0;
        while (s * std::pow(alpha, i_max + 1) >= 1 - 1e-9) ++i_max;
        CHECK(g.degree(0) == i_max + 2);
        // clique sizes floor(s/(1-alpha)), floor(s*alpha^i)
        long expect_n = 1;
        expect_n += static_cast<long>(std::floor(s / (1 - alpha) + 1e-9));
        for (int i = 0; i <= i_max; ++i)
            expect_n += static_cast<long>(std::floor(s * std::pow(alpha, i) + 1e-9));
        for (int i = -1; i <= i_max; ++i) expect_n += 2 * i_max + 1 - 2 * i;
        CHECK(g.vertex_count() == expect_n);
    }
    // n/s -> 2/(1-alpha) as s grows
    double limit = 2.0 / (1.0 - alpha);
    double r1 = static_cast<double>(eperi_extremal(100).vertex_count()) / 100;
    double r2 = static_cast<double>(eperi_extremal(1000).vertex_count()) / 1000;
    CHECK(std::abs(r2 - limit) < std::abs(r1 - limit));
    CHECK(std::abs(r2 - limit) < 0.1);
}

TEST_CASE("espr_extremal structure") {
    for (int s : {1, 2, 5, 10}) {
        Graph g = espr_extremal(s);
        const int n = 4 * s + 1;
        CHECK(g.vertex_count() == n);
        // degrees by group
        for (int i = 0; i < s; ++i) {
            CHECK(g.degree(i) == 2 * s - 1);          // a_i
            CHECK(g.degree(s + i) == 2 * s);          // b_i
            CHECK(g.degree(2 * s + i) == 2 * s);      // c_i
            CHECK(g.degree(3 * s + i) == 2 * s - 1);  // d_i
        }
        CHECK(g.degree(4 * s) == 2 * s);  // v
        // a_i ... d_j is the longest geodesic: a-b-v-c-d
        CHECK(diameter(g) == 4);

        // independent rule-predicate scan over all pairs
        auto grp = [s](int v) { return v == 4 * s ? 4 : v / s; };
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                int gu = grp(u), gv = grp(v);
                if (gu > gv) std::swap(gu, gv);
                bool expect = (gu == gv) ||                  // clique inside a group
                              (gu == 0 && gv == 1) ||        // a-b join
                              (gu == 2 && gv == 3) ||        // c-d join
                              (gv == 4 && (gu == 1 || gu == 2));  // v to b and c
                CHECK(g.has_edge(u, v) == expect);
            }
    }
}

TEST_CASE("pendant_clique") {
    CHECK(oracle::isomorphic(pendant_clique(4), path_graph(4)));
    CHECK(nt_graph(closeness_counts(pendant_clique(4))) == 10);
    for (int n = 2; n <= 12; ++n) {
        Graph g = pendant_clique(n);
        int k = (n + 1) / 2;
        CHECK(g.vertex_count() == n);
        CHECK(g.edge_count() == k * (k - 1) / 2 + n / 2);
        CHECK(is_connected(g));
    }
}

TEST_CASE("rhombic dodecahedron") {
    Graph g = rhombic_dodecahedron();
    CHECK(g.vertex_count() == 14);
    CHECK(g.edge_count() == 24);
    auto ds = g.degree_sequence();
    CHECK(std::count(ds.begin(), ds.end(), 3) == 8);
    CHECK(std::count(ds.begin(), ds.end(), 4) == 6);
    CHECK(!g.is_regular());
    CHECK(bipartition(g).has_value());
    CHECK(diameter(g) == 4);
}

TEST_CASE("rhombic triacontahedron") {
    Graph g = rhombic_triacontahedron();
    CHECK(g.vertex_count() == 32);
    CHECK(g.edge_count() == 60);
    auto ds = g.degree_sequence();
    CHECK(std::count(ds.begin(), ds.end(), 3) == 20);
    CHECK(std::count(ds.begin(), ds.end(), 5) == 12);
    CHECK(!g.is_regular());
    CHECK(bipartition(g).has_value());
}

TEST_CASE("table1 witnesses achieve the table values") {
    for (int n = 3; n <= 8; ++n)
        for (GraphClass cls : {GraphClass::trees, GraphClass::connected_graphs}) {
            Graph w = table1_witness(n, cls);
            CHECK(w.vertex_count() == n);
            CHECK(peri_graph(closeness_counts(w, false)) == table1_value(n, cls));
        }
    CHECK_THROWS_AS(table1_witness(2, GraphClass::trees), GraphError);
    CHECK_THROWS_AS(table1_witness(9, GraphClass::trees), GraphError);
}
