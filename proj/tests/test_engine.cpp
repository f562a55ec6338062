#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "c4pn/engine.hpp"
#include "c4pn/error.hpp"
#include "c4pn/match.hpp"
#include "fixtures.hpp"
#include "mutations.hpp"

using namespace c4pn;

namespace {

// Runs one engine match and applies the full external audit: the engine must
// win within budget, the transcript must replay, and the final board rebuilt
// from the transcript must be a clean blue path on n vertices.  Phase tags
// and contraction charges are collected into the optional sets.
Transcript audited_match(int n, int start, Painter& painter,
                         const std::shared_ptr<BookStore>& books,
                         std::set<std::string>* phases = nullptr,
                         std::set<int>* charges = nullptr) {
    EngineBuilder builder(n, start, books);
    const Transcript t =
        run_match(builder, painter, GameSpec{n, 0, 2 * n - 2}, start, Ruleset::rr);
    CAPTURE(n);
    CAPTURE(start);
    REQUIRE(t.outcome == MatchOutcome::builder_win);
    REQUIRE(replay_matches(t));
    REQUIRE(builder.engine().done());
    REQUIRE(builder.engine().rounds() == t.rounds);

    DynGraph board;
    const auto& seed = standard_starts()[start];
    for (auto [a, b] : seed.blue) board.add_edge(a, b, Colour::blue);
    for (auto [a, b] : seed.red) board.add_edge(a, b, Colour::red);
    REQUIRE(t.rounds + board.edge_count() <= 2 * n - 2);
    for (const TranscriptEntry& e : t.entries) {
        board.add_edge(e.a, e.b, e.colour);
        if (phases) phases->insert(e.phase);
    }
    REQUIRE(board.blue_edge_count() == n - 1);
    REQUIRE(board.blue_exact_path(n));

    for (const Engine::ContractionRecord& rec : builder.engine().contraction_log()) {
        CAPTURE(rec.context);
        REQUIRE(rec.m == rec.expected_m);
        REQUIRE(rec.k >= 1);
        REQUIRE(rec.m <= 2 * rec.k + 1);
        if (charges) charges->insert(rec.m);
    }
    return t;
}

}  // namespace

TEST_CASE("first-blue classification is total over the staged plan") {
    for (int n = 14; n <= 45; ++n) {
        for (int t = 1; t <= n - 1; ++t) {
            const std::string cls = Engine::classify_first_blue(n, t);
            REQUIRE(!cls.empty());
            if (t <= 7) REQUIRE(cls == "t" + std::to_string(t));
        }
        CHECK_THROWS_AS(Engine::classify_first_blue(n, 0), InvariantError);
        CHECK_THROWS_AS(Engine::classify_first_blue(n, n), InvariantError);
    }
    CHECK_THROWS_AS(Engine::classify_first_blue(13, 1), InvariantError);

    // Boundary classes, pinned.
    CHECK(Engine::classify_first_blue(14, 8) == "t8");
    CHECK(Engine::classify_first_blue(14, 9) == "t9");
    CHECK(Engine::classify_first_blue(14, 10) == "j4");
    CHECK(Engine::classify_first_blue(14, 11) == "j3");
    CHECK(Engine::classify_first_blue(14, 12) == "j2");
    CHECK(Engine::classify_first_blue(14, 13) == "j1");
    CHECK(Engine::classify_first_blue(15, 10) == "even");
    CHECK(Engine::classify_first_blue(15, 11) == "odd");
    CHECK(Engine::classify_first_blue(15, 12) == "j3");
    CHECK(Engine::classify_first_blue(15, 13) == "j2");
    CHECK(Engine::classify_first_blue(15, 14) == "stage3");
    CHECK(Engine::classify_first_blue(16, 10) == "even");
    CHECK(Engine::classify_first_blue(16, 11) == "odd");
    CHECK(Engine::classify_first_blue(16, 12) == "j4");
    CHECK(Engine::classify_first_blue(40, 34) == "even");
    CHECK(Engine::classify_first_blue(40, 35) == "odd");
    CHECK(Engine::classify_first_blue(41, 36) == "even");
    CHECK(Engine::classify_first_blue(41, 37) == "odd");
}

TEST_CASE("engine rejects bad construction") {
    auto store = std::make_shared<BookStore>("no-such-dir");
    CHECK_THROWS_AS(Engine(2, 0, store), InvariantError);
    CHECK_THROWS_AS(Engine(14, 6, store), InvariantError);
    CHECK_THROWS_AS(Engine(14, -1, store), InvariantError);
    CHECK_THROWS_AS(Engine(14, 0, nullptr), InvariantError);
    CHECK_THROWS_AS(Engine(13, 0, store), BookUnavailable);  // no book file to replay
}

TEST_CASE("book store: loads, caches, and refuses what it cannot back") {
    auto books = fixture::books();
    CHECK(BookStore::file_name(13) == "C4P13e24.txt");
    CHECK(BookStore::file_name(7) == "C4P7e12.txt");

    auto idx = books->index(13, 0);
    REQUIRE(idx);
    CHECK(idx->spec().n == 13);
    CHECK(idx->spec().v == 14);
    CHECK(idx->spec().e == 24);
    CHECK(idx->root(0) >= 0);
    CHECK(books->index(13, 3) == idx);  // one index per file, shared

    // The empty P7 seed records rc=0 at budget 12: nothing to replay.
    CHECK_THROWS_AS(books->index(7, 0), BookUnavailable);
    CHECK(books->index(7, 1) != nullptr);
    CHECK_THROWS_AS(books->index(6, 0), BookUnavailable);   // file absent
    CHECK_THROWS_AS(books->index(14, 0), BookUnavailable);  // beyond the series

    BookStore missing("definitely-not-here");
    CHECK_THROWS_AS(missing.index(13, 0), BookUnavailable);
}

TEST_CASE("book store: corrupted files are refused, not replayed") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "c4pn-test-badbooks";
    fs::create_directories(dir);

    std::ifstream in(fs::path(fixture::books_dir()) / BookStore::file_name(8));
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string pristine = buf.str();

    auto expect_refusal = [&](const std::string& text) {
        std::ofstream out(dir / BookStore::file_name(8));
        out << text;
        out.close();
        BookStore store(dir.string());
        CHECK_THROWS_AS(store.index(8, 0), BookUnavailable);
    };

    expect_refusal("not a book at all\n");
    const auto mutants = mutation::mutate_moves(pristine);
    REQUIRE(!mutants.empty());
    expect_refusal(mutants.front().text);
    const auto dropped = mutation::delete_nodes(pristine);
    REQUIRE(!dropped.empty());
    expect_refusal(dropped.front().text);

    // The pristine text, by contrast, loads fine from the same spot.
    std::ofstream out(dir / BookStore::file_name(8));
    out << pristine;
    out.close();
    BookStore store(dir.string());
    CHECK(store.index(8, 0) != nullptr);
}

TEST_CASE("engine replays base-case books to a win") {
    auto books = fixture::books();
    for (int n = 7; n <= 13; ++n) {
        for (int start = 0; start < 6; ++start) {
            if (n == 7 && start == 0) {
                CHECK_THROWS_AS(Engine(7, 0, books), BookUnavailable);
                continue;
            }
            AllRedPainter allred;
            audited_match(n, start, allred, books);
            FirstBlueAtPainter early(1);
            audited_match(n, start, early, books);
            FirstBlueAtPainter mid(3);
            audited_match(n, start, mid, books);
            for (std::uint64_t seed = 1; seed <= 3; ++seed) {
                UniformRandomPainter random(seed * 1009 + n * 17 + start);
                audited_match(n, start, random, books);
            }
        }
    }
}

TEST_CASE("staged plan beats the whole scripted painter battery") {
    auto books = fixture::books();
    std::set<std::string> phases;
    std::set<int> charges;
    for (int n = 14; n <= 20; ++n) {
        AllRedPainter allred;
        audited_match(n, 0, allred, books, &phases, &charges);
        for (int t = 1; t <= 2 * n - 3; ++t) {
            FirstBlueAtPainter painter(t);
            audited_match(n, 0, painter, books, &phases, &charges);
        }
        for (std::uint64_t seed = 1; seed <= 8; ++seed) {
            UniformRandomPainter painter(seed * 7919 + n);
            audited_match(n, 0, painter, books, &phases, &charges);
        }
    }
    // Every phase of the plan shows up somewhere across the battery.
    for (const char* name : {"Stage1", "Stage2", "Stage3", "BlueCaseScript",
                             "ButterflyForce", "MaloEndgame", "BaseCaseBook"})
        CHECK_MESSAGE(phases.count(name) == 1, name);
    // Contraction charges observed across the battery.
    for (int m : {3, 4, 5, 7, 9, 11}) CHECK_MESSAGE(charges.count(m) == 1, m);
}

TEST_CASE("staged plan from seeded starts") {
    auto books = fixture::books();
    for (int n = 14; n <= 16; ++n) {
        for (int start = 1; start < 6; ++start) {
            AllRedPainter allred;
            audited_match(n, start, allred, books);
            FirstBlueAtPainter painter(4);
            audited_match(n, start, painter, books);
            UniformRandomPainter random(n * 31 + start);
            audited_match(n, start, random, books);
        }
    }
}

TEST_CASE("every legal colouring of the opening rounds loses") {
    auto books = fixture::books();
    for (int n : {14, 15}) {
        const int L = n == 14 ? 10 : 9;
        for (std::uint32_t mask = 0; mask < (1u << L); ++mask) {
            // Scripted colour prefix, greedy red afterwards; an illegal red is
            // flipped to blue, so every legal painter behaviour on the first L
            // rounds appears exactly here.
            FunctionPainter painter([&](const LiveGame& g, std::pair<int, int> e) {
                const int r = g.rounds();
                const bool scripted_blue = r < L && ((mask >> r) & 1u) != 0;
                if (scripted_blue || g.board().red_c4_with(e.first, e.second))
                    return Colour::blue;
                return Colour::red;
            });
            CAPTURE(mask);
            audited_match(n, 0, painter, books);
        }
    }
}

TEST_CASE("a suicidal red ends the game on the spot") {
    auto books = fixture::books();
    for (int n : {12, 16}) {
        Engine eng(n, 0, books);
        DynGraph board;
        bool claimed = false;
        while (!claimed) {
            const auto e = eng.next_move();
            const bool forced = board.red_c4_with(e.first, e.second);
            board.add_edge(e.first, e.second, Colour::red);
            eng.observe(e, Colour::red);
            if (forced) {
                CHECK(eng.forced_win_claimed());
                CHECK(eng.done());
                claimed = true;
            } else {
                REQUIRE(!eng.done());
            }
        }
        CHECK_THROWS_AS(eng.next_move(), InvariantError);
    }
}

TEST_CASE("engine api misuse is rejected") {
    auto books = fixture::books();
    Engine eng(14, 0, books);
    const auto e = eng.next_move();
    CHECK_THROWS_AS(eng.next_move(), InvariantError);  // pending, not yet observed
    CHECK_THROWS_AS(eng.observe({e.first + 100, e.second + 100}, Colour::red),
                    InvariantError);
    eng.observe({e.second, e.first}, Colour::red);  // orientation does not matter
    CHECK_THROWS_AS(eng.observe(e, Colour::red), InvariantError);  // nothing pending
    CHECK(eng.rounds() == 1);
}

TEST_CASE("engine play is deterministic") {
    auto books = fixture::books();
    auto play = [&](int n) {
        EngineBuilder builder(n, 0, books);
        UniformRandomPainter painter(4242);
        return serialize_transcript(
            run_match(builder, painter, GameSpec{n, 0, 2 * n - 2}, 0, Ruleset::rr));
    };
    CHECK(play(12) == play(12));
    CHECK(play(17) == play(17));
}
