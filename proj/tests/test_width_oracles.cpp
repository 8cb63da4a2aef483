#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <functional>

#include "corpus.hpp"
#include "isocover/cover.hpp"
#include "isocover/errors.hpp"
#include "isocover/generators.hpp"
#include "isocover/width_oracles.hpp"

using namespace isocover;
using V = VertexLabel;

namespace {

// Brute force over all vertex orders: width of eliminating in that order
// (treewidth) and vertex separation of the order (pathwidth).
std::pair<std::size_t, std::size_t> brute_tw_pw(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<Index> perm(n);
    for (Index i = 0; i < n; ++i)
        perm[i] = i;
    std::size_t best_tw = n, best_pw = n;
    do {
        std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
        for (auto [i, j] : g.edges())
            adj[i][j] = adj[j][i] = 1;
        std::vector<char> gone(n, 0);
        std::size_t tw = 0;
        for (Index v : perm) {
            std::vector<Index> later;
            for (Index u = 0; u < n; ++u)
                if (!gone[u] && u != v && adj[v][u])
                    later.push_back(u);
            tw = std::max(tw, later.size());
            for (Index a : later)
                for (Index b : later)
                    if (a != b)
                        adj[a][b] = 1;
            gone[v] = 1;
        }
        std::size_t pw = 0;
        for (std::size_t cut = 1; cut <= n; ++cut) {
            std::size_t boundary = 0;
            for (std::size_t i = 0; i < cut; ++i) {
                bool reaches = false;
                for (std::size_t j = cut; j < n; ++j)
                    reaches = reaches || g.adjacent(perm[i], perm[j]);
                boundary += reaches;
            }
            pw = std::max(pw, boundary);
        }
        best_tw = std::min(best_tw, tw);
        best_pw = std::min(best_pw, pw);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return {n == 0 ? 0 : best_tw, n == 0 ? 0 : best_pw};
}

// Treedepth straight from the recursive definition on vertex sets.
std::size_t brute_td(const Graph& g) {
    if (g.empty())
        return 0;
    const auto comps = connected_components(g);
    if (comps.size() > 1) {
        std::size_t best = 0;
        for (const auto& c : comps) {
            std::vector<V> labels;
            for (Index i : c)
                labels.push_back(g.label(i));
            best = std::max(best, brute_td(induced_subgraph(g, labels)));
        }
        return best;
    }
    std::size_t best = g.order();
    for (const auto& v : g.vertices())
        best = std::min(best, brute_td(without_vertex(g, v)) + 1);
    return best;
}

struct EnvGuard {
    explicit EnvGuard(const char* value) { ::setenv("ISOCOVER_ORACLE_BOUND", value, 1); }
    ~EnvGuard() { ::unsetenv("ISOCOVER_ORACLE_BOUND"); }
};

} // namespace

TEST_CASE("treewidth on known families") {
    CHECK(exact_treewidth(subdivided_star(4)).width == 1);
    CHECK(exact_treewidth(path(7)).width == 1);
    CHECK(exact_treewidth(cycle(7)).width == 2);
    for (int k = 1; k <= 7; ++k)
        CHECK(exact_treewidth(complete(k)).width == static_cast<std::size_t>(k - 1));
    for (int n = 2; n <= 4; ++n)
        CHECK(exact_treewidth(grid(n, n)).width == static_cast<std::size_t>(n));
    CHECK(exact_treewidth(petersen()).width == 4);
    CHECK(exact_treewidth(Graph{}).width == 0);
}

TEST_CASE("pathwidth on known families") {
    for (int n = 2; n <= 10; ++n)
        CHECK(exact_pathwidth(path(n)).width == 1);
    const auto apex_p5 = build_from(path(5), {{V::original(0), V::original(1), V::original(2), V::original(3), V::original(4)}, {}});
    CHECK(exact_pathwidth(induced_subgraph(apex_p5.graph, apex_p5.part1)).width == 2);
    CHECK(exact_pathwidth(grid(2, 4)).width == 2);
    CHECK(brute_tw_pw(grid(2, 4)).second == 2);
    CHECK(exact_pathwidth(subdivided_star(5)).width <= 2);
    CHECK(exact_pathwidth(complete(5)).width == 4);
}

TEST_CASE("treedepth on known families") {
    CHECK(exact_treedepth(Graph{}).depth == 0);
    CHECK(exact_treedepth(path(1)).depth == 1);
    CHECK(exact_treedepth(path(3)).depth == 2);
    CHECK(exact_treedepth(path(5)).depth == 3);
    for (int n = 1; n <= 15; ++n) {
        const auto expected = static_cast<std::size_t>(std::ceil(std::log2(n + 1.0)));
        CHECK(exact_treedepth(path(n)).depth == expected);
    }
    CHECK(exact_treedepth(complete(6)).depth == 6);
    CHECK(exact_treedepth(graph_from_indices(4, {})).depth == 1);
}

TEST_CASE("oracles agree with brute force on small random graphs") {
    for (std::uint32_t seed = 1; seed <= 25; ++seed) {
        const std::size_t n = 3 + seed % 5; // 3..7 vertices keeps 7! orders cheap
        const Graph g = corpus::random_connected(n, 0.3, seed);
        const auto [tw, pw] = brute_tw_pw(g);
        CHECK(exact_treewidth(g).width == tw);
        CHECK(exact_pathwidth(g).width == pw);
        CHECK(exact_treedepth(g).depth == brute_td(g));
    }
    // Disconnected inputs too.
    const Graph two = graph_from_indices(7, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 6}});
    CHECK(exact_treedepth(two).depth == brute_td(two));
    CHECK(exact_treewidth(two).width == brute_tw_pw(two).first);
}

TEST_CASE("certificates verify and the width chain holds") {
    for (std::uint32_t seed = 1; seed <= 40; ++seed) {
        const Graph g = corpus::random_connected(4 + seed % 9, 0.2, seed * 13);
        const auto tw = exact_treewidth(g);
        const auto pw = exact_pathwidth(g);
        const auto td = exact_treedepth(g);
        CHECK(verify_tree_decomposition(g, tw.decomposition).pass);
        CHECK(tw.decomposition.width() == tw.width);
        CHECK(verify_path_decomposition(g, pw.decomposition).pass);
        CHECK(pw.decomposition.width() == pw.width);
        CHECK(verify_elimination_tree(g, g.vertices(), td.tree).pass);
        CHECK(td.tree.depth() == td.depth);
        CHECK(tw.width <= pw.width);
        CHECK(pw.width + 1 <= td.depth);

        // Deleting a vertex never raises a width.
        const Graph h = without_vertex(g, g.label(static_cast<Index>(seed % g.order())));
        CHECK(exact_treewidth(h).width <= tw.width);
        CHECK(exact_pathwidth(h).width <= pw.width);
        CHECK(exact_treedepth(h).depth <= td.depth);
    }
}

TEST_CASE("decomposition verifier") {
    const Graph c = cycle(4);
    std::vector<V> all(c.vertices().begin(), c.vertices().end());
    TreeDecomposition single{Graph({V::original(0)}, {}), {all}};
    CHECK(verify_tree_decomposition(c, single).pass);
    CHECK(single.width() == 3);

    PathDecomposition missing_edge{{{V::original(0), V::original(1), V::original(2)},
                                    {V::original(2), V::original(3)}}};
    CHECK_FALSE(verify_path_decomposition(c, missing_edge).pass);

    PathDecomposition broken_trace{{{V::original(0), V::original(1), V::original(3)},
                                    {V::original(1), V::original(2), V::original(3)},
                                    {V::original(0)}}};
    CHECK_FALSE(verify_path_decomposition(c, broken_trace).pass);

    PathDecomposition ok{{{V::original(0), V::original(1), V::original(3)},
                          {V::original(1), V::original(2), V::original(3)}}};
    CHECK(verify_path_decomposition(c, ok).pass);

    TreeDecomposition not_tree{graph_from_indices(3, {{0, 1}, {1, 2}, {0, 2}}), {all, all, all}};
    CHECK_FALSE(verify_tree_decomposition(c, not_tree).pass);

    PathDecomposition stranger{{{V::original(0), V::original(1), V::original(2), V::original(3), V::apex(1)}}};
    CHECK_FALSE(verify_path_decomposition(c, stranger).pass);
}

TEST_CASE("size bound is explicit") {
    CHECK(oracle_bound() == kOracleDefaultBound);
    CHECK_THROWS_AS(exact_treewidth(path(19)), SizeError);
    CHECK_THROWS_AS(exact_pathwidth(path(6), 5), SizeError);
    CHECK_THROWS_AS(exact_treedepth(path(6), 5), SizeError);
    CHECK(exact_treedepth(path(20), 20).depth == 5);
    {
        EnvGuard env("4");
        CHECK(oracle_bound() == 4);
        CHECK_THROWS_AS(exact_treewidth(path(5)), SizeError);
    }
    {
        EnvGuard env("1000");
        CHECK(oracle_bound() == kOracleHardCap);
    }
    {
        EnvGuard env("many");
        CHECK_THROWS_AS(oracle_bound(), InputError);
    }
    CHECK_THROWS_AS(exact_treewidth(path(30), 30), SizeError);
}
