#include <doctest.h>

#include <algorithm>
#include <random>

#include "c4pn/game.hpp"
#include "oracles.hpp"

using namespace c4pn;

TEST_CASE("standard starts: shapes and order") {
    const auto& s = standard_starts();
    REQUIRE(s.size() == 6);
    CHECK(std::string(s[0].name) == "empty");
    CHECK(std::string(s[1].name) == "b-path");
    CHECK(std::string(s[2].name) == "br-path");
    CHECK(std::string(s[3].name) == "brr-path");
    CHECK(std::string(s[4].name) == "brb-path");
    CHECK(std::string(s[5].name) == "brrb-path");
    CHECK(s[0].max_vertex() == -1);
    CHECK(s[1].max_vertex() == 1);
    CHECK(s[2].max_vertex() == 2);
    CHECK(s[3].max_vertex() == 3);
    CHECK(s[4].max_vertex() == 3);
    CHECK(s[5].max_vertex() == 4);

    // Each seed is itself a coloured path b(-r...)(-b): blue+red unions are paths.
    for (const auto& sp : s) {
        BitGraph b, r, all;
        sp.fill(b, r);
        for (auto [x, y] : b.edges()) all.add_edge(x, y);
        for (auto [x, y] : r.edges()) all.add_edge(x, y);
        CHECK(is_union_of_paths(all));
        CHECK(path_component_count(all) <= 1);
    }

    CHECK(start_index_by_tag("brb") == 4);
    CHECK(start_index_by_tag("brb-path") == 4);
    CHECK(start_index_by_tag("empty") == 0);
    CHECK(start_index_by_tag("nope") == -1);
}

TEST_CASE("embeddability bound equals union-of-paths plus component budget") {
    std::mt19937 rng(555);
    for (int k = 0; k < 1500; ++k) {
        BitGraph g = oracle::random_graph(rng, 12, k % 10);
        for (int n = 3; n <= 13; ++n)
            REQUIRE(blue_embeds_in_path(g, n) == oracle::embeds_in_path(g, n));
    }
}

TEST_CASE("spare vertex check is the embeddability bound when cap = n+1") {
    std::mt19937 rng(556);
    int done = 0;
    while (done < 1200) {
        const int n = std::uniform_int_distribution<int>(3, 12)(rng);
        GameSpec spec{n, n + 1, 2 * n};
        auto pos = oracle::random_position(rng, spec, 2 * n);
        const BitGraph& blue = pos.blue;
        if (!is_union_of_paths(blue)) continue;
        // All blue graphs reachable under the rules satisfy the bound; verify
        // the equivalence on the raw predicate level.
        REQUIRE(spare_blue_vertex(blue, spec.v) == oracle::embeds_in_path(blue, n));
        ++done;
    }
}

TEST_CASE("legal move set matches the rule-by-rule oracle") {
    std::mt19937 rng(557);
    for (int k = 0; k < 1200; ++k) {
        const int n = std::uniform_int_distribution<int>(3, 9)(rng);
        GameSpec spec{n, n + 1, 2 * n - 2};
        auto pos = oracle::random_position(rng, spec, std::uniform_int_distribution<int>(0, 2 * n - 3)(rng));
        auto got = legal_moves(pos.blue, pos.red, pos.v, spec);
        auto want = oracle::legal_moves(pos.blue, pos.red, pos.v, spec);
        auto norm = [](std::vector<Move> ms) {
            std::sort(ms.begin(), ms.end(), [](Move a, Move b) {
                return std::tuple(a.a, a.b) < std::tuple(b.a, b.b);
            });
            return ms;
        };
        REQUIRE(norm(got) == norm(want));
        for (Move m : got) REQUIRE(move_is_legal(pos.blue, pos.red, pos.v, m.a, m.b, spec));
    }
}

TEST_CASE("legal move ordering: used pairs descending, then fresh ascending") {
    BitGraph blue, red;
    blue.add_edge(0, 1);
    red.add_edge(1, 2);
    GameSpec spec{5, 6, 9};
    auto ms = legal_moves(blue, red, 3, spec);
    REQUIRE(!ms.empty());
    // Used pairs come first, i descending then j descending; fresh moves
    // afterwards with ascending anchor and b == v.
    bool in_fresh = false;
    Move prev{255, 255};
    for (Move m : ms) {
        bool fresh = m.b == 3;
        if (fresh) in_fresh = true;
        REQUIRE((!in_fresh || fresh));  // no used pair after a fresh move
        if (!fresh && prev.a != 255) {
            REQUIRE(std::tuple(-prev.a, -prev.b) <= std::tuple(-m.a, -m.b));
        }
        if (!fresh) prev = m;
    }
}

TEST_CASE("first move on an empty board is 0-1") {
    BitGraph blue, red;
    GameSpec spec{3, 4, 6};
    auto ms = legal_moves(blue, red, 0, spec);
    REQUIRE(ms.size() == 1);
    CHECK(ms[0] == Move{0, 1});
}

TEST_CASE("budget prune boundary") {
    // n=5, e=9: more than e-n+1 = 5 red edges is hopeless, 5 is still fine.
    CHECK_FALSE(budget_exceeded(0, 5, 5, 9));
    CHECK(budget_exceeded(0, 6, 5, 9));
    CHECK(budget_exceeded(5, 0, 5, 9));   // blue overshot the n-1 target
    CHECK_FALSE(budget_exceeded(4, 0, 5, 9));
}
