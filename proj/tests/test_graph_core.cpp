#include <doctest.h>

#include <fstream>
#include <sstream>

#include "corpus.hpp"
#include "isocover/errors.hpp"
#include "isocover/generators.hpp"
#include "isocover/graph.hpp"
#include "isocover/graph_io.hpp"
#include "isocover/subdivision.hpp"

using namespace isocover;
using V = VertexLabel;

TEST_CASE("vertex labels print, parse and order canonically") {
    const std::vector<V> samples{V::original(0), V::original(42), V::subdiv(3, 7, 1), V::subdiv(3, 7, 5),
                                 V::apex(1), V::apex(12)};
    for (const auto& v : samples)
        CHECK(V::parse(v.str()) == v);
    CHECK(V::original(5).str() == "v5");
    CHECK(V::subdiv(0, 1, 2).str() == "s0_1.2");
    CHECK(V::apex(3).str() == "a3");
    CHECK(std::is_sorted(samples.begin(), samples.end()));
    CHECK(V::subdiv(0, 1, 2) < V::subdiv(0, 1, 10));

    for (const char* bad : {"", "x1", "v", "v1x", "s1_2", "s1_2.", "s1_2.0", "a", "s_1.1"})
        CHECK_THROWS_AS(V::parse(bad), InputError);
}

TEST_CASE("graph construction normalises and rejects malformed input") {
    Graph g({V::original(2), V::original(0), V::original(1)},
            {{V::original(0), V::original(1)}, {V::original(1), V::original(0)}, {V::original(2), V::original(1)}});
    CHECK(g.order() == 3);
    CHECK(g.size() == 2);
    CHECK(g.label(0) == V::original(0));
    CHECK(g.has_edge(V::original(1), V::original(2)));
    CHECK_FALSE(g.has_edge(V::original(0), V::original(2)));

    CHECK_THROWS_AS(Graph({V::original(0)}, {{V::original(0), V::original(0)}}), InputError);
    CHECK_THROWS_AS(Graph({V::original(0), V::original(0)}, {}), InputError);
    CHECK_THROWS_AS(Graph({V::original(0)}, {{V::original(0), V::original(1)}}), InputError);
    CHECK_THROWS_AS(g.index_of(V::apex(1)), InputError);
}

TEST_CASE("induced subgraph keeps exactly the inner edges") {
    const Graph c = cycle(6);
    std::vector<V> s{V::original(0), V::original(1), V::original(2), V::original(4)};
    const Graph h = induced_subgraph(c, s);
    CHECK(h.order() == 4);
    CHECK(h.size() == 2);
    std::vector<V> bad{V::original(0), V::apex(1)};
    CHECK_THROWS_AS(induced_subgraph(c, bad), InputError);
}

TEST_CASE("all-pairs distances agree with Floyd-Warshall on random graphs") {
    for (std::uint32_t seed = 1; seed <= 40; ++seed) {
        // Sparse enough that some instances are disconnected.
        std::mt19937 rng(seed);
        const std::size_t n = 2 + seed % 20;
        std::vector<std::pair<Index, Index>> es;
        std::bernoulli_distribution coin(0.15);
        for (Index i = 0; i < n; ++i)
            for (Index j = i + 1; j < n; ++j)
                if (coin(rng))
                    es.emplace_back(i, j);
        const Graph g = graph_from_indices(n, es);
        const auto oracle = corpus::floyd_warshall(g);
        const auto table = all_pairs_distances(g);
        for (Index i = 0; i < n; ++i)
            for (Index j = 0; j < n; ++j) {
                auto d = table.at(i, j);
                if (oracle[i][j] >= corpus::kInf)
                    CHECK_FALSE(d.has_value());
                else
                    CHECK(d == static_cast<std::size_t>(oracle[i][j]));
            }
        CHECK(is_connected(g) == table.all_reachable());
    }
}

TEST_CASE("wall(2) diameter equals the largest single-source distance") {
    const Graph w = wall(2);
    std::int32_t diameter = 0;
    for (Index s = 0; s < w.order(); ++s)
        for (auto d : bfs_distances(w, s))
            diameter = std::max(diameter, d);
    CHECK(all_pairs_distances(w).max_finite() == static_cast<std::size_t>(diameter));
}

TEST_CASE("radius and eccentricity") {
    CHECK(radius(path(5)) == 2);
    CHECK(radius(path(6)) == 3);
    CHECK(radius(cycle(6)) == 3);
    CHECK(radius(star(4)) == 1);
    CHECK(radius(subdivided_star(4)) == 2);
    CHECK(radius(complete(1)) == 0);
    CHECK_THROWS_AS(radius(Graph{}), DomainError);
    CHECK_THROWS_AS(radius(graph_from_indices(2, {})), DomainError);
    CHECK_FALSE(eccentricity(graph_from_indices(2, {}), 0).has_value());

    // Radius is the minimum eccentricity under the brute-force oracle.
    for (std::uint32_t seed = 1; seed <= 20; ++seed) {
        const Graph g = corpus::random_connected(3 + seed % 12, 0.1, seed);
        const auto d = corpus::floyd_warshall(g);
        int best = corpus::kInf;
        for (const auto& row : d)
            best = std::min(best, *std::max_element(row.begin(), row.end()));
        CHECK(radius(g) == static_cast<std::size_t>(best));
    }
}

TEST_CASE("structural predicates") {
    CHECK(is_tree(path(1)));
    CHECK(is_tree(subdivided_star(3)));
    CHECK_FALSE(is_tree(cycle(3)));
    CHECK_FALSE(is_tree(Graph{}));
    CHECK_FALSE(is_tree(graph_from_indices(3, {{0, 1}})));
    CHECK(is_connected(Graph{}));
    CHECK(connected_components(graph_from_indices(5, {{0, 3}, {1, 4}})).size() == 3);
    CHECK(max_degree(petersen()) == 3);
    CHECK(max_degree(star(5)) == 5);
}

TEST_CASE("generator sizes") {
    for (int n = 1; n <= 8; ++n) {
        CHECK(path(n).size() == static_cast<std::size_t>(n - 1));
        CHECK(complete(n).size() == static_cast<std::size_t>(n * (n - 1) / 2));
    }
    CHECK(petersen().order() == 10);
    CHECK(petersen().size() == 15);
    CHECK(subdivided_star(3).order() == 7);
    CHECK(subdivided_star(3).size() == 6);
    for (int n = 1; n <= 5; ++n)
        for (int m = 1; m <= 5; ++m)
            CHECK(grid(n, m).size() == static_cast<std::size_t>(n * (m - 1) + m * (n - 1)));
    for (int bad : {0, -3}) {
        CHECK_THROWS_AS(path(bad), InputError);
        CHECK_THROWS_AS(wall(bad), InputError);
        CHECK_THROWS_AS(grid(bad, 2), InputError);
    }
    CHECK_THROWS_AS(cycle(2), InputError);
}

TEST_CASE("wall sizes match a direct enumeration of the parity rule") {
    for (int n = 1; n <= 7; ++n) {
        const int cols = 2 * n + 1;
        std::size_t edges = 0;
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= cols; ++b) {
                if (b < cols)
                    ++edges;
                if (a < n && a % 2 == b % 2)
                    ++edges;
            }
        const Graph w = wall(n);
        CHECK(w.order() == static_cast<std::size_t>(n * cols));
        CHECK(w.size() == edges);
        CHECK(max_degree(w) <= 3);
        CHECK(is_connected(w));
    }
    CHECK(wall(4).size() == 46);
    CHECK(wall(1).size() == 2);
}

TEST_CASE("subdivision records ordered paths") {
    const auto sub = subdivide_all(path(2), 5);
    CHECK(sub.graph.order() == 7);
    CHECK(sub.graph.size() == 6);
    const auto& p = sub.map.paths.at(make_source_edge(V::original(0), V::original(1)));
    REQUIRE(p.size() == 5);
    CHECK(sub.graph.has_edge(V::original(0), p.front()));
    CHECK(sub.graph.has_edge(p.back(), V::original(1)));
    for (std::size_t k = 0; k + 1 < p.size(); ++k)
        CHECK(sub.graph.has_edge(p[k], p[k + 1]));

    const Graph x = petersen();
    const auto s = subdivide_all(x, 3);
    CHECK(s.graph.order() == x.order() + 3 * x.size());
    CHECK(s.graph.size() == 4 * x.size());
    CHECK(s.map.paths.size() == x.size());

    CHECK_THROWS_AS(subdivide_edge(path(3), V::original(0), V::original(2), 1), InputError);
    CHECK_THROWS_AS(subdivide_edge(path(3), V::original(0), V::original(1), 0), InputError);
    CHECK_THROWS_AS(subdivide_all(sub.graph, 1), InputError);
}

TEST_CASE("graph6 agrees with an independent reference corpus") {
    std::ifstream in(ISOCOVER_TEST_DATA "/graph6_reference.txt");
    REQUIRE(in);
    std::string line;
    int checked = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        auto a = line.find(';');
        auto b = line.find(';', a + 1);
        const std::size_t n = std::stoul(line.substr(0, a));
        std::vector<std::pair<Index, Index>> es;
        std::istringstream edges(line.substr(a + 1, b - a - 1));
        std::string tok;
        while (edges >> tok) {
            auto dash = tok.find('-');
            es.emplace_back(static_cast<Index>(std::stoul(tok.substr(0, dash))),
                            static_cast<Index>(std::stoul(tok.substr(dash + 1))));
        }
        const std::string expected = line.substr(b + 1);
        const Graph g = graph_from_indices(n, es);
        CHECK(to_graph6(g) == expected);
        const auto parsed = parse_graph6(expected);
        CHECK(parsed.order == n);
        CHECK(graph_from_indices(parsed.order, parsed.edges) == g);
        ++checked;
    }
    CHECK(checked == 100);
}

TEST_CASE("graph6 round trips, headers and malformed strings") {
    for (std::uint32_t seed = 1; seed <= 25; ++seed) {
        const Graph g = corpus::random_connected(1 + seed * 3, 0.2, seed);
        CHECK(from_graph6(to_graph6(g)) == g);
        CHECK(from_graph6(to_graph6(g, true)) == g);
    }
    CHECK(to_graph6(Graph{}) == "?");
    CHECK(from_graph6("?").order() == 0);
    CHECK(from_graph6("Bw\n").size() == 3);

    for (const char* bad : {"", "A", "Bw!", "B\x7f", "A`", "Bww"})
        CHECK_THROWS_AS(parse_graph6(bad), InputError);

    const Graph w = wall(1);
    std::vector<V> labels(w.vertices().begin(), w.vertices().end());
    CHECK(from_graph6(to_graph6(w), labels) == w);
    std::reverse(labels.begin(), labels.end());
    CHECK_THROWS_AS(from_graph6(to_graph6(w), labels), InputError);
    labels.pop_back();
    CHECK_THROWS_AS(from_graph6(to_graph6(w), labels), InputError);
}

TEST_CASE("DOT output lists every vertex and edge") {
    const std::string dot = to_dot(path(3), [](const V& v) { return v == V::original(1) ? "shape=square" : ""; });
    CHECK(dot.find("graph G {") == 0);
    CHECK(dot.find("\"v1\" [shape=square]") != std::string::npos);
    CHECK(dot.find("\"v0\" -- \"v1\"") != std::string::npos);
    CHECK(dot.find("\"v1\" -- \"v2\"") != std::string::npos);
}

TEST_CASE("distance examples and the triangle inequality") {
    const Graph p5 = path(5);
    CHECK(distance(p5, V::original(0), V::original(4)) == 4u);
    CHECK(distance(p5, V::original(2), V::original(2)) == 0u);
    const Graph split = graph_from_indices(4, {{0, 1}, {2, 3}});
    CHECK_FALSE(distance(split, V::original(0), V::original(3)).has_value());
    CHECK_THROWS_AS(distance(p5, V::original(0), V::original(9)), InputError);

    CHECK(all_pairs_distances(path(3)).max_finite() == 2);
    const auto k3 = all_pairs_distances(complete(3));
    for (Index i = 0; i < 3; ++i)
        for (Index j = 0; j < 3; ++j)
            CHECK(k3.at(i, j) == (i == j ? 0u : 1u));

    for (std::uint32_t seed = 1; seed <= 10; ++seed) {
        const Graph g = corpus::random_connected(12, 0.1, seed);
        const auto d = all_pairs_distances(g);
        for (Index u = 0; u < g.order(); ++u)
            for (Index v = 0; v < g.order(); ++v)
                for (Index w = 0; w < g.order(); ++w)
                    CHECK(*d.at(u, w) <= *d.at(u, v) + *d.at(v, w));
    }
}

TEST_CASE("radius of wall(3) matches the all-pairs table") {
    const Graph w = wall(3);
    const auto d = all_pairs_distances(w);
    std::size_t best = w.order();
    for (Index u = 0; u < w.order(); ++u) {
        std::size_t ecc = 0;
        for (Index v = 0; v < w.order(); ++v)
            ecc = std::max(ecc, *d.at(u, v));
        best = std::min(best, ecc);
    }
    CHECK(radius(w) == best);
    for (int n = 2; n <= 6; ++n)
        CHECK(max_degree(wall(n)) == 3);
}

TEST_CASE("subdivision examples and invariants") {
    const Graph k3 = complete(3);
    const Graph once = subdivide_edge(k3, V::original(0), V::original(1), 1);
    CHECK(once.order() == 4);
    CHECK(once.size() == 4);
    CHECK(max_degree(once) == 2);
    CHECK(is_connected(once));
    CHECK(once.has_edge(V::original(0), V::subdiv(0, 1, 1)));
    CHECK_FALSE(once.has_edge(V::original(0), V::original(1)));

    const auto w = subdivide_all(wall(2), 5);
    CHECK(w.graph.order() == 65);
    CHECK(w.graph.size() == 66);
    CHECK(max_degree(w.graph) == max_degree(wall(2)));
    CHECK(is_connected(w.graph));
    const auto dx = all_pairs_distances(wall(2));
    for (const auto& u : wall(2).vertices())
        for (const auto& v : wall(2).vertices())
            CHECK(distance(w.graph, u, v) == 6 * *dx.at(wall(2).index_of(u), wall(2).index_of(v)));
}

TEST_CASE("induced subgraph examples") {
    const Graph k3 = complete(3);
    std::vector<V> all(k3.vertices().begin(), k3.vertices().end());
    CHECK(induced_subgraph(k3, all) == k3);
    CHECK(induced_subgraph(k3, {}).empty());
    std::vector<V> two{V::original(0), V::original(2)};
    CHECK(induced_subgraph(k3, two).size() == 1);
    CHECK(wall(3) == wall(3));
}
