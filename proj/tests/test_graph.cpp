#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <string>

#include "distinguo/colouring.hpp"
#include "distinguo/graph.hpp"

using namespace distinguo;

namespace {

// Reference graph6 decode written from the format description, kept apart
// from the library implementation on purpose.
SimpleGraph reference_graph6(const std::string& s) {
    const int n = s[0] - 63;
    std::vector<int> bits;
    for (std::size_t i = 1; i < s.size(); ++i) {
        const int x = s[i] - 63;
        for (int b = 5; b >= 0; --b)
            bits.push_back((x >> b) & 1);
    }
    std::vector<std::pair<int, int>> edges;
    int idx = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row, ++idx)
            if (bits[idx])
                edges.emplace_back(row, col);
    return SimpleGraph(n, edges);
}

SimpleGraph random_connected(std::mt19937& rng, int n, int extra_edges) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v)
        edges.emplace_back(static_cast<int>(rng() % v), v);
    for (auto& [u, v] : edges)
        if (u > v)
            std::swap(u, v);
    std::set<std::pair<int, int>> have(edges.begin(), edges.end());
    extra_edges = std::min<long>(extra_edges, n * (n - 1L) / 2 - (n - 1));
    int added = 0;
    while (added < extra_edges) {
        int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
        if (u == v)
            continue;
        if (u > v)
            std::swap(u, v);
        if (have.count({u, v}))
            continue;
        have.insert({u, v});
        edges.emplace_back(u, v);
        ++added;
    }
    return SimpleGraph(n, edges);
}

} // namespace

TEST_CASE("edge list parsing") {
    SimpleGraph g = parse_graph("p 3 2\n1 2\n2 3", GraphFormat::EdgeList);
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.degree(0) == 1);
    CHECK(g.degree(1) == 2);
    CHECK(g.degree(2) == 1);

    SUBCASE("comments, CRLF and no header") {
        SimpleGraph h = parse_graph("# a path\r\n1 2\r\n2 3 # tail comment\r\n", GraphFormat::EdgeList);
        CHECK(h == g);
    }
    SUBCASE("vertex out of range") {
        CHECK_THROWS_AS(parse_graph("p 3 1\n1 5", GraphFormat::EdgeList), ParseError);
    }
    SUBCASE("self loop") {
        CHECK_THROWS_AS(parse_graph("p 2 1\n1 1", GraphFormat::EdgeList), ParseError);
    }
    SUBCASE("duplicate edge, either orientation") {
        CHECK_THROWS_AS(parse_graph("1 2\n2 1", GraphFormat::EdgeList), ParseError);
    }
    SUBCASE("malformed line") {
        CHECK_THROWS_AS(parse_graph("1 2 3", GraphFormat::EdgeList), ParseError);
        CHECK_THROWS_AS(parse_graph("1 x", GraphFormat::EdgeList), ParseError);
    }
    SUBCASE("edge count mismatch") {
        CHECK_THROWS_AS(parse_graph("p 3 5\n1 2", GraphFormat::EdgeList), ParseError);
    }
    SUBCASE("absurd sizes are rejected before any allocation") {
        CHECK_THROWS_AS(parse_graph("p 999999999 0", GraphFormat::EdgeList), ParseError);
        CHECK_THROWS_AS(parse_graph("1 999999999", GraphFormat::EdgeList), ParseError);
        CHECK_THROWS_AS(parse_colouring("c 999999999 1\n"), ParseError);
        CHECK_THROWS_AS(parse_family_spec("star:999999999"), ParseError);
    }
}

TEST_CASE("graph6 decoding against an independent decoder") {
    SimpleGraph k4 = parse_graph("C~", GraphFormat::Graph6);
    CHECK(k4.vertex_count() == 4);
    CHECK(k4.edge_count() == 6);
    CHECK(k4 == reference_graph6("C~"));
    CHECK(k4 == complete_graph(4));

    CHECK(parse_graph("DQc", GraphFormat::Graph6) == reference_graph6("DQc"));

    SUBCASE("length mismatch") {
        CHECK_THROWS_AS(parse_graph("C~~", GraphFormat::Graph6), ParseError);
        CHECK_THROWS_AS(parse_graph("D~", GraphFormat::Graph6), ParseError);
    }
    SUBCASE("size over 62 rejected") {
        std::string big(1, static_cast<char>(63 + 63));
        CHECK_THROWS_AS(parse_graph(big, GraphFormat::Graph6), ParseError);
    }
}

TEST_CASE("graph6 round trip on random graphs") {
    std::mt19937 rng(7);
    for (int i = 0; i < 40; ++i) {
        const int n = 2 + static_cast<int>(rng() % 20);
        SimpleGraph g = random_connected(rng, n, static_cast<int>(rng() % (n + 1)));
        CHECK(parse_graph(emit_graph6(g), GraphFormat::Graph6) == g);
    }
}

TEST_CASE("edge list round trip on random graphs") {
    std::mt19937 rng(11);
    for (int i = 0; i < 40; ++i) {
        const int n = 2 + static_cast<int>(rng() % 40);
        SimpleGraph g = random_connected(rng, n, static_cast<int>(rng() % (2 * n)));
        CHECK(parse_graph(emit_edge_list(g), GraphFormat::EdgeList) == g);
    }
}

TEST_CASE("family generators") {
    CHECK(path_graph(4).edge_count() == 3);
    CHECK(path_graph(4).max_degree() == 2);
    CHECK(star_graph(5).degree(0) == 5);
    CHECK(star_graph(5).vertex_count() == 6);
    CHECK(complete_bipartite_graph(4, 4).edge_count() == 16);
    CHECK(complete_bipartite_graph(4, 4).max_degree() == 4);
    CHECK(complete_graph(5).edge_count() == 10);
    CHECK(cycle_graph(3).edge_count() == 3);
    CHECK_THROWS_AS(path_graph(1), InputError);
    CHECK_THROWS_AS(cycle_graph(2), InputError);
    CHECK_THROWS_AS(star_graph(0), InputError);
    CHECK_THROWS_AS(complete_bipartite_graph(0, 3), InputError);
}

TEST_CASE("family spec parsing") {
    CHECK(parse_family_spec("star:9") == star_graph(9));
    CHECK(parse_family_spec("complete_bipartite:4,4") == complete_bipartite_graph(4, 4));
    CHECK_THROWS_AS(parse_family_spec("star"), ParseError);
    CHECK_THROWS_AS(parse_family_spec("blob:3"), ParseError);
    CHECK_THROWS_AS(parse_family_spec("path:x"), ParseError);
}

TEST_CASE("bfs scaffolding") {
    SUBCASE("star rooted at the centre") {
        auto t = bfs_tree(star_graph(5), 0);
        CHECK(t.order[0] == 0);
        for (int leaf = 1; leaf <= 5; ++leaf) {
            CHECK(t.depth[leaf] == 1);
            CHECK(t.parent[leaf] == 0);
        }
    }
    SUBCASE("path rooted at an endpoint") {
        auto t = bfs_tree(path_graph(4), 0);
        CHECK(t.parent == std::vector<int>{-1, 0, 1, 2});
        CHECK(t.depth == std::vector<int>{0, 1, 2, 3});
    }
    SUBCASE("cycle tie-break by index") {
        auto t = bfs_tree(cycle_graph(4), 0);
        CHECK(t.order == std::vector<int>{0, 1, 3, 2});
        CHECK(t.depth == std::vector<int>{0, 1, 2, 1});
    }
    SUBCASE("disconnected graphs are reported") {
        SimpleGraph g(4, {{0, 1}, {2, 3}});
        CHECK_THROWS_WITH_AS(bfs_tree(g, 0), doctest::Contains("unreached"), InputError);
    }
    SUBCASE("depths differ by at most one along any edge") {
        std::mt19937 rng(3);
        for (int i = 0; i < 25; ++i) {
            const int n = 2 + static_cast<int>(rng() % 30);
            SimpleGraph g = random_connected(rng, n, static_cast<int>(rng() % n));
            auto t = bfs_tree(g, static_cast<int>(rng() % n));
            for (auto [u, v] : g.edges())
                CHECK(std::abs(t.depth[u] - t.depth[v]) <= 1);
        }
    }
}

TEST_CASE("adjacency is symmetric and counts are consistent") {
    std::mt19937 rng(5);
    for (int i = 0; i < 25; ++i) {
        const int n = 2 + static_cast<int>(rng() % 30);
        SimpleGraph g = random_connected(rng, n, static_cast<int>(rng() % n));
        long degree_sum = 0;
        for (int v = 0; v < n; ++v) {
            degree_sum += g.degree(v);
            for (int u : g.neighbours(v)) {
                CHECK(g.adjacent(u, v));
                CHECK(g.adjacent(v, u));
            }
        }
        CHECK(degree_sum == 2L * g.edge_count());
    }
}

TEST_CASE("graph6 optional format header") {
    CHECK(parse_graph(">>graph6<<C~", GraphFormat::Graph6) == complete_graph(4));
}
