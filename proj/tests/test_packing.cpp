#include <doctest.h>

#include <random>

#include "extremal/errors.hpp"
#include "extremal/packing.hpp"
#include "oracles.hpp"

using namespace extremal;

TEST_CASE("clique certificates")
{
    for (int m = 1; m <= 6; ++m)
        for (int d = 2 * m + 2; d <= 2 * m + 5; ++d) {
            const PartitionCertificate c = clique_certificate(m, d);
            CHECK(c.k == m + 1);
            CHECK(c.crossing == m * (2 * m + 1));
            CHECK(c.required == 2 * m * (m + 1));
            CHECK(c.deficit == m);
            CHECK(c.certifies_fewer_than_k());
        }
}

TEST_CASE("Nash-Williams count edge cases")
{
    const Graph g = complete_graph(4);
    const PartitionCertificate one = verify_nash_williams(g, single_part_partition(g), 5);
    CHECK(one.required == 0);
    CHECK(one.passes());
    const PartitionCertificate singles = verify_nash_williams(g, singleton_partition(g), 2);
    CHECK(singles.crossing == 6);
    CHECK(singles.required == 6);
    CHECK(singles.passes());
    CHECK(verify_nash_williams(g, singleton_partition(g), 3).deficit == 3);
}

TEST_CASE("packing and witness on the smallest extremal graph")
{
    const Graph g = build_extremal_graph(1, 4);
    const PackingResult one = pack_spanning_trees(g, 1);
    REQUIRE(one.success());
    CHECK(check_forest_packing(g, *one.packing) == "");
    CHECK(one.packing->trees.size() == 1);

    const PackingResult two = pack_spanning_trees(g, 2);
    CHECK_FALSE(two.success());
    REQUIRE(two.witness);
    CHECK(two.witness->certifies_fewer_than_k());
    CHECK(verify_nash_williams(g, two.witness->partition, 2).deficit == two.witness->deficit);
}

TEST_CASE("two spanning trees of K4")
{
    const Graph g = complete_graph(4);
    const PackingResult r = pack_spanning_trees(g, 2);
    REQUIRE(r.success());
    CHECK(check_forest_packing(g, *r.packing) == "");
    CHECK_FALSE(pack_spanning_trees(g, 3).success());
}

TEST_CASE("sigma of the extremal graphs equals m")
{
    const int cases[][2] = {{1, 4}, {2, 6}, {3, 8}, {2, 9}};
    for (const auto& c : cases) {
        CAPTURE(c[0]);
        CAPTURE(c[1]);
        const Graph g = build_extremal_graph(c[0], c[1]);
        CHECK(sigma(g, c[1]) == c[0]);
        const PackingResult r = pack_spanning_trees(g, c[0]);
        REQUIRE(r.success());
        CHECK(check_forest_packing(g, *r.packing) == "");
    }
    CHECK(sigma(complete_graph(5), 5) == 2);
    CHECK(sigma(complete_graph(6), 5) == 3);
}

TEST_CASE("sigma agrees with brute force on random small graphs")
{
    std::mt19937_64 rng(0);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 2 + trial % 6;
        const double density = 0.3 + 0.7 * coin(rng);
        std::vector<Edge> edges;
        std::vector<std::pair<int, int>> pairs;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng) < density) {
                    edges.push_back({u, v});
                    pairs.emplace_back(u, v);
                }
        const Graph g(n, edges);
        CAPTURE(trial);
        const int s = sigma(g, n);
        CHECK(s == oracle::sigma_by_partitions(n, pairs));
        // monotone: k <= sigma packs, sigma + 1 does not
        for (int k = 1; k <= s; ++k)
            CHECK(pack_spanning_trees(g, k).success());
        const PackingResult fail = pack_spanning_trees(g, s + 1);
        CHECK_FALSE(fail.success());
        REQUIRE(fail.witness);
        CHECK(fail.witness->certifies_fewer_than_k());
    }
}

TEST_CASE("disconnected input")
{
    const Edge e[] = {{0, 1}, {2, 3}};
    const Graph g(4, e);
    CHECK(sigma(g, 3) == 0);
    const PackingResult r = pack_spanning_trees(g, 1);
    CHECK_FALSE(r.success());
    REQUIRE(r.witness);
    CHECK(r.witness->crossing == 0);
    CHECK_THROWS_AS(pack_spanning_trees(g, 0), parameter_error);
}

TEST_CASE("forest packing checker rejects bad packings")
{
    const Graph g = complete_graph(4);
    ForestPacking bad;
    bad.trees = {{{0, 1}, {1, 2}, {2, 3}}, {{0, 1}, {0, 2}, {0, 3}}};
    CHECK(check_forest_packing(g, bad) != "");
    bad.trees = {{{0, 1}, {1, 2}, {0, 2}}};
    CHECK(check_forest_packing(g, bad) != "");
    bad.trees = {{{0, 1}, {1, 2}}};
    CHECK(check_forest_packing(g, bad) != "");
}
