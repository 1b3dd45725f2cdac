#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "sepgraph/graph.hpp"

using namespace sepgraph;

namespace {

Graph cycle(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
    return make_graph(n, std::move(es));
}

Graph path(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return make_graph(n, std::move(es));
}

Graph complete(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
    return make_graph(n, std::move(es));
}

}  // namespace

TEST_CASE("make_graph canonicalizes and validates") {
    Graph g = make_graph(4, {{3, 1}, {0, 2}, {1, 0}});
    CHECK(g.edges == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 3}});
    CHECK(g.adj[0] == std::vector<int>{1, 2});
    CHECK(g.adj[1] == std::vector<int>{0, 3});
    CHECK(g.degree(0) == 2);
    CHECK(g.max_degree() == 2);
    CHECK(g.has_edge(1, 0));
    CHECK_FALSE(g.has_edge(2, 3));
    CHECK_THROWS_AS(make_graph(3, {{0, 0}}), ParseError);
    CHECK_THROWS_AS(make_graph(3, {{0, 3}}), ParseError);
    CHECK_THROWS_AS(make_graph(3, {{0, 1}, {1, 0}}), ParseError);
    CHECK_THROWS_AS(make_graph(-1, {}), ParseError);
}

TEST_CASE("parse and serialize round trip") {
    std::string doc = "# triangle plus isolated vertex\n4 3\n0 1\n1 2\n2 0\n";
    Graph g = parse_graph(doc);
    CHECK(g.n == 4);
    CHECK(g.edge_count() == 3);
    CHECK(parse_graph(serialize_graph(g)).edges == g.edges);
    CHECK(serialize_graph(g) == "4 3\n0 1\n0 2\n1 2\n");
}

TEST_CASE("parse errors carry line numbers") {
    CHECK_THROWS_WITH(parse_graph("abc\n"), Catch::Matchers::ContainsSubstring("line 1"));
    CHECK_THROWS_WITH(parse_graph("2 1\n0\n"), Catch::Matchers::ContainsSubstring("line 2"));
    CHECK_THROWS_WITH(parse_graph("2 1\n0 5\n"), Catch::Matchers::ContainsSubstring("line 2"));
    CHECK_THROWS_WITH(parse_graph("2 1\n1 1\n"), Catch::Matchers::ContainsSubstring("self-loop"));
    CHECK_THROWS_WITH(parse_graph("2 2\n0 1\n"), Catch::Matchers::ContainsSubstring("promises"));
    CHECK_THROWS_AS(parse_graph(""), ParseError);
    CHECK_THROWS_AS(parse_graph("# only comments\n"), ParseError);
    // Comments and blank lines between edges are fine.
    Graph g = parse_graph("3 2 # header comment\n\n0 1\n# middle\n1 2\n");
    CHECK(g.edge_count() == 2);
}

TEST_CASE("components are sorted by least vertex") {
    Graph g = make_graph(6, {{4, 5}, {0, 2}, {1, 3}});
    auto comps = connected_components(g);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == std::vector<int>{0, 2});
    CHECK(comps[1] == std::vector<int>{1, 3});
    CHECK(comps[2] == std::vector<int>{4, 5});
    CHECK_FALSE(is_connected(g));
    CHECK(is_connected(cycle(5)));
    CHECK(is_connected(make_graph(1, {})));
    CHECK(is_connected(make_graph(0, {})));
}

TEST_CASE("bfs distances with multiple sources and unreached flags") {
    Graph g = make_graph(5, {{0, 1}, {1, 2}, {3, 4}});
    BfsResult r = bfs_distances(g, {0});
    CHECK(r.dist[2] == 2);
    CHECK(r.reached[1]);
    CHECK_FALSE(r.reached[3]);
    BfsResult multi = bfs_distances(g, {0, 2});
    CHECK(multi.dist[1] == 1);
    CHECK(multi.dist[0] == 0);
    CHECK(multi.dist[2] == 0);
    CHECK_THROWS_AS(bfs_distances(g, {}), PreconditionError);
    CHECK_THROWS_AS(bfs_distances(g, {9}), PreconditionError);
}

TEST_CASE("girth on basic graphs") {
    CHECK(girth(cycle(3)) == 3);
    CHECK(girth(cycle(6)) == 6);
    CHECK(girth(complete(4)) == 3);
    CHECK_FALSE(girth(path(6)).has_value());
    CHECK_FALSE(girth(make_graph(3, {})).has_value());
    // Two cycle lengths: the short one wins.
    Graph g = make_graph(7, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 2}});
    CHECK(girth(g) == 3);
}

TEST_CASE("girth agrees with the all-pairs oracle on random graphs") {
    Rng rng(20260819);
    for (int trial = 0; trial < 60; ++trial) {
        int n = rng.range(3, 11);
        Graph g = oracles::random_connected(n, rng, rng.range(0, 2 * n));
        int want = oracles::girth_or_zero(g);
        auto got = girth(g);
        if (want == 0)
            CHECK_FALSE(got.has_value());
        else
            CHECK(got == want);
    }
}

TEST_CASE("growth function") {
    Graph p = path(7);
    CHECK(growth_function(p, 0) == 1);
    CHECK(growth_function(p, 2) == 5);   // middle vertex sees 2 on each side
    CHECK(growth_function(p, 10) == 7);  // saturates at n
    CHECK(growth_function(complete(5), 1) == 5);
    CHECK_THROWS_AS(growth_function(make_graph(0, {}), 1), PreconditionError);
}

TEST_CASE("induced subgraphs relabel in host order") {
    Graph k4 = complete(4);
    Graph sub = induced_graph(k4, {0, 2, 3});
    CHECK(sub.n == 3);
    CHECK(sub.edge_count() == 3);
    auto ref = make_subgraph_ref(std::make_shared<const Graph>(k4), {3, 0, 2, 2});
    CHECK(ref.vertices == std::vector<int>{0, 2, 3});
    CHECK(ref.size() == 3);
    CHECK_THROWS_AS(make_subgraph_ref(std::make_shared<const Graph>(k4), {4}),
                    PreconditionError);
    Graph c5 = cycle(5);
    Graph sub2 = induced_graph(c5, {0, 1, 3});
    CHECK(sub2.edge_count() == 1);  // only 0-1 survives
}

TEST_CASE("disjoint union shifts vertex ids") {
    Graph u = disjoint_union({cycle(3), path(2)});
    CHECK(u.n == 5);
    CHECK(u.edge_count() == 4);
    CHECK(u.has_edge(3, 4));
    auto comps = connected_components(u);
    REQUIRE(comps.size() == 2);
    CHECK(comps[1] == std::vector<int>{3, 4});
}
