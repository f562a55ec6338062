#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "c4pn/bitgraph.hpp"
#include "c4pn/dyngraph.hpp"
#include "oracles.hpp"

using namespace c4pn;

namespace {

// Mirrors a DynGraph with small ids into per-colour BitGraphs so the fixed
// board predicates can serve as an oracle.
void mirror(const DynGraph& g, BitGraph& blue, BitGraph& red) {
    for (auto [a, b] : g.edges(Colour::blue)) blue.add_edge(a, b);
    for (auto [a, b] : g.edges(Colour::red)) red.add_edge(a, b);
}

}  // namespace

TEST_CASE("dyngraph: edge bookkeeping") {
    DynGraph g;
    CHECK(g.empty());
    CHECK(g.max_vertex() == -1);
    CHECK(g.vertex_count() == 0);

    g.add_edge(3, 7, Colour::blue);
    g.add_edge(7, 12, Colour::red);
    CHECK(g.edge_count() == 2);
    CHECK(g.blue_edge_count() == 1);
    CHECK(g.red_edge_count() == 1);
    CHECK(g.has_edge(7, 3));
    CHECK(g.edge_colour(3, 7) == Colour::blue);
    CHECK(g.edge_colour(12, 7) == Colour::red);
    CHECK(g.edge_colour(3, 12) == std::nullopt);
    CHECK(g.max_vertex() == 12);
    CHECK(g.vertices() == std::vector<int>{3, 7, 12});
    CHECK(g.blue_degree(7) == 1);
    CHECK(g.red_degree(7) == 1);
    CHECK(g.red_neighbours(7) == std::set<int>{12});
    CHECK(g.blue_neighbours(7) == std::set<int>{3});

    g.remove_edge(3, 7);
    CHECK(!g.has_edge(3, 7));
    CHECK(g.blue_edge_count() == 0);
    // Vertex 3 lost its only edge and disappears from the board.
    CHECK(g.vertices() == std::vector<int>{7, 12});

    g.remove_edge(7, 12);
    CHECK(g.empty());
    CHECK(g.max_vertex() == -1);
}

TEST_CASE("dyngraph: remove_vertex drops every incident edge") {
    DynGraph g;
    g.add_edge(0, 5, Colour::blue);
    g.add_edge(5, 1, Colour::red);
    g.add_edge(5, 2, Colour::red);
    g.add_edge(1, 2, Colour::blue);
    g.remove_vertex(5);
    CHECK(g.edge_count() == 1);
    CHECK(g.has_edge(1, 2));
    CHECK(!g.has_edge(0, 5));
    CHECK(!g.has_edge(5, 1));
    CHECK(!g.has_edge(5, 2));
    CHECK(g.vertices() == std::vector<int>{1, 2});
    CHECK(g.red_degree(5) == 0);
    CHECK(g.blue_degree(5) == 0);
}

TEST_CASE("dyngraph: red_c4_with agrees with the subset-enumeration oracle") {
    std::mt19937 rng(601);
    for (int k = 0; k < 800; ++k) {
        BitGraph red = oracle::random_graph(rng, 9, 3 + k % 9);
        DynGraph g;
        for (auto [a, b] : red.edges()) g.add_edge(a, b, Colour::red);
        for (int a = 0; a < 9; ++a)
            for (int b = a + 1; b < 9; ++b) {
                if (red.has_edge(a, b)) continue;
                BitGraph red2 = red;
                red2.add_edge(a, b);
                REQUIRE(g.red_c4_with(a, b) == oracle::c4_through_edge(red2, a, b));
            }
    }
}

TEST_CASE("dyngraph: blue_exact_path agrees with the fixed-board predicate") {
    std::mt19937 rng(602);
    for (int k = 0; k < 1000; ++k) {
        BitGraph blue = oracle::random_graph(rng, 10, k % 11);
        DynGraph g;
        for (auto [a, b] : blue.edges()) g.add_edge(a, b, Colour::blue);
        for (int n = 2; n <= 11; ++n) REQUIRE(g.blue_exact_path(n) == is_exact_path(blue, n));
    }
}

TEST_CASE("dyngraph: predicates survive large sparse vertex ids") {
    DynGraph g;
    // A blue P5 on non-contiguous ids far beyond any fixed board size.
    g.add_edge(1000000, 40, Colour::blue);
    g.add_edge(40, 999, Colour::blue);
    g.add_edge(999, 123456, Colour::blue);
    g.add_edge(123456, 7, Colour::blue);
    CHECK(g.blue_exact_path(5));
    CHECK(!g.blue_exact_path(4));
    CHECK(!g.blue_exact_path(6));
    CHECK(g.max_vertex() == 1000000);

    // Red path 7 - 2000000 - 3000000 - 40: adding red 7-40 closes the cycle.
    g.add_edge(7, 2000000, Colour::red);
    g.add_edge(2000000, 3000000, Colour::red);
    g.add_edge(3000000, 40, Colour::red);
    CHECK(g.red_c4_with(7, 40));
    CHECK(g.red_c4_with(40, 7));
    CHECK(!g.red_c4_with(7, 999));
    CHECK(!g.red_c4_with(2000000, 40));  // would close a triangle, not a C4
}

TEST_CASE("dyngraph: blue_exact_path rejects extra components, cycles, branches") {
    DynGraph path;
    path.add_edge(0, 1, Colour::blue);
    path.add_edge(1, 2, Colour::blue);
    path.add_edge(2, 3, Colour::blue);
    CHECK(path.blue_exact_path(4));

    // Red edges never disturb the blue predicate.
    path.add_edge(0, 7, Colour::red);
    path.add_edge(9, 10, Colour::red);
    CHECK(path.blue_exact_path(4));

    DynGraph extra = path;
    extra.add_edge(20, 21, Colour::blue);
    CHECK(!extra.blue_exact_path(4));
    CHECK(!extra.blue_exact_path(6));

    DynGraph cycle = path;
    cycle.add_edge(3, 0, Colour::blue);
    CHECK(!cycle.blue_exact_path(4));

    DynGraph branch = path;
    branch.add_edge(1, 5, Colour::blue);
    CHECK(!branch.blue_exact_path(5));
}

TEST_CASE("dyngraph: blue_path_ends walks to both endpoints") {
    DynGraph g;
    g.add_edge(4, 90, Colour::blue);
    g.add_edge(90, 2, Colour::blue);
    g.add_edge(2, 55, Colour::blue);
    for (int v : {4, 90, 2, 55}) {
        auto [x, y] = g.blue_path_ends(v);
        CHECK(std::minmax(x, y) == std::minmax(4, 55));
    }

    // An isolated-in-blue vertex is its own two ends.
    g.add_edge(7, 8, Colour::red);
    auto [x, y] = g.blue_path_ends(7);
    CHECK(x == 7);
    CHECK(y == 7);
}

TEST_CASE("dyngraph: edges() lists each pair once, sorted endpoints") {
    std::mt19937 rng(603);
    for (int k = 0; k < 200; ++k) {
        BitGraph blue = oracle::random_graph(rng, 12, 2 + k % 9);
        BitGraph red = oracle::random_graph(rng, 12, 2 + (k / 3) % 7);
        DynGraph g;
        int expect_blue = 0, expect_red = 0;
        for (auto [a, b] : blue.edges()) g.add_edge(b, a, Colour::blue), ++expect_blue;
        for (auto [a, b] : red.edges()) {
            if (blue.has_edge(a, b)) continue;  // one colour per pair
            g.add_edge(a, b, Colour::red);
            ++expect_red;
        }
        auto bl = g.edges(Colour::blue);
        auto rl = g.edges(Colour::red);
        CHECK(static_cast<int>(bl.size()) == expect_blue);
        CHECK(static_cast<int>(rl.size()) == expect_red);
        for (auto [a, b] : bl) {
            CHECK(a < b);
            CHECK(blue.has_edge(a, b));
        }
        for (auto [a, b] : rl) {
            CHECK(a < b);
            CHECK(red.has_edge(a, b));
        }
        BitGraph back_blue, back_red;
        mirror(g, back_blue, back_red);
        CHECK(back_blue == blue);
    }
}
