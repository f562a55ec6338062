#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>

#include "c4pn/book.hpp"
#include "c4pn/error.hpp"
#include "mutations.hpp"

using namespace c4pn;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "cannot open ", path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string golden_path() { return std::string(C4PN_TEST_DATA_DIR) + "/golden_book_n3.txt"; }

GameRecord solve_game(Solver& solver, const GameSpec& spec) {
    solver.begin_game(spec);
    GameRecord rec;
    rec.spec = spec;
    for (std::size_t i = 0; i < standard_starts().size(); ++i)
        rec.starts.push_back(solver.solve_start(static_cast<int>(i)));
    return rec;
}

std::string solve_and_emit(const GameSpec& spec) {
    Solver solver;
    GameRecord rec = solve_game(solver, spec);
    return emit_book(solver, rec);
}

}  // namespace

TEST_CASE("emitted n=3 book matches the published bytes") {
    const std::string golden = read_file(golden_path());
    const std::string text = solve_and_emit({3, 4, 6});
    CHECK(text == golden);
    // a freshly rebuilt table emits identical bytes
    CHECK(solve_and_emit({3, 4, 6}) == golden);
}

TEST_CASE("parse_book structures the golden file") {
    const Book book = parse_book(read_file(golden_path()));
    REQUIRE(book.sections.size() == 5);  // brrb-path needs five vertices and is absent

    CHECK(book_spec(book) == GameSpec{3, 4, 6});
    CHECK(book.sections[0].start_index == 0);
    CHECK(book.sections[0].rc == 1);
    CHECK(book.sections[0].header_line == 1);
    CHECK(book.sections[0].nodes.size() == 14);
    CHECK(book.sections[1].nodes.size() == 1);
    CHECK(book.sections[2].nodes.size() == 1);
    CHECK(book.sections[3].nodes.size() == 2);
    CHECK(book.sections[4].rc == 0);
    CHECK(book.sections[4].nodes.empty());

    // back-references, with line numbers counting headers and backref lines
    std::vector<std::pair<int, int>> refs;
    for (const BookSection& sec : book.sections)
        for (const BookNode& nd : sec.nodes)
            if (nd.backref != 0) refs.emplace_back(nd.line, nd.backref);
    CHECK(refs == std::vector<std::pair<int, int>>{
                      {8, 4}, {10, 5}, {15, 13}, {17, 3}, {19, 4}, {22, 12}});

    // moves keep their printed endpoint order, descending included
    const BookNode& line4 = book.sections[0].nodes[2];
    CHECK(line4.line == 4);
    CHECK(line4.move == Move{2, 1});
    CHECK(line4.depth == 2);
    CHECK(line4.red_edges == std::vector<std::pair<int, int>>{{0, 2}});
    CHECK(line4.blue_edges == std::vector<std::pair<int, int>>{{0, 1}});
}

TEST_CASE("golden book verifies and round-trips") {
    const std::string golden = read_file(golden_path());
    const Book book = parse_book(golden);

    const VerificationReport ok = verify_book(book, {3, 4, 6});
    CHECK(ok.accepted);
    CHECK(ok.reason == VerifyReason::none);

    const VerificationReport wrong = verify_book(book, {3, 4, 7});
    CHECK_FALSE(wrong.accepted);
    CHECK(wrong.reason == VerifyReason::position_mismatch);
    CHECK(wrong.line == 1);
}

TEST_CASE("emitted books for larger games verify") {
    for (const GameSpec spec : {GameSpec{4, 5, 8}, GameSpec{5, 6, 9}, GameSpec{6, 7, 11},
                                GameSpec{7, 8, 13}, GameSpec{7, 8, 12}}) {
        CAPTURE(spec.n);
        CAPTURE(spec.e);
        const std::string text = solve_and_emit(spec);
        const VerificationReport rep = verify_book(parse_book(text), spec);
        CHECK_MESSAGE(rep.accepted, "line ", rep.line, ": ", to_string(rep.reason), " (",
                      rep.detail, ")");
    }
}

TEST_CASE("books emitted from a hint-chained table verify too") {
    Solver solver;
    GameRecord first = solve_game(solver, {7, 8, 13});
    const std::string text1 = emit_book(solver, first);
    GameRecord second = solve_game(solver, {7, 8, 12});  // reuses the previous table as hints
    const std::string text2 = emit_book(solver, second);
    CHECK(verify_book(parse_book(text1), {7, 8, 13}).accepted);
    CHECK(verify_book(parse_book(text2), {7, 8, 12}).accepted);
    CHECK(text2.find("rc(C4,P7,empty,8,12)=0\nrc(C4,P7,b-path,8,12)=1\n") != std::string::npos);
}

TEST_CASE("parse errors carry line numbers") {
    auto line_of = [](const std::string& text) {
        try {
            parse_book(text);
        } catch (const BookParseError& err) {
            return err.line;
        }
        return 0;
    };
    const std::string header = "rc(C4,P3,empty,4,6)=1\n";

    CHECK(line_of("r: b: m: 01\n") == 1);                          // node before any header
    CHECK(line_of(header + "r: b: m: 0x\n") == 2);                 // malformed hex pair
    CHECK(line_of(header + " r: b: m: 01\n") == 2);                // indentation vs edge count
    CHECK(line_of(header + "r: b: m: 01 l: 5\n") == 2);            // back-reference ahead
    CHECK(line_of(header + "r: b: m: 01 l: 0\n") == 2);            // no line zero
    CHECK(line_of(header + "r: b: m: 01 l: x\n") == 2);            // malformed back-reference
    CHECK(line_of(header + "r: 10 b: m: 01\n") == 2);              // edge endpoints swapped
    CHECK(line_of(header + "r: b:  m: 01\n") == 2);                // stray whitespace
    CHECK(line_of("rc(C4,P3,empty,4,6)=2\n") == 1);                // rc out of range
    CHECK(line_of("rc(C4,P3,zz-path,4,6)=1\n") == 1);              // unknown start
    CHECK(line_of("rc(C4,P3,empty,4,6)=1 \n") == 1);               // trailing junk
    CHECK(line_of(header + "\n") == 2);                            // blank line
    CHECK(parse_book(std::string()).sections.empty());             // empty input parses
    CHECK_FALSE(verify_book(parse_book(std::string()), {3, 4, 6}).accepted);
}

TEST_CASE("verifier pinpoints each defect class") {
    const std::string golden = read_file(golden_path());
    std::vector<std::string> lines = mutation::split_lines(golden);

    auto report_for = [&](const std::vector<std::string>& mutated, GameSpec spec) {
        return verify_book(parse_book(mutation::join_lines(mutated)), spec);
    };

    SUBCASE("illegal move") {
        std::vector<std::string> bad = lines;
        bad[1] = "r: b: m: 00";  // loop edge
        const VerificationReport rep = report_for(bad, {3, 4, 6});
        CHECK_FALSE(rep.accepted);
        CHECK(rep.reason == VerifyReason::illegal_move);
        CHECK(rep.line == 2);
    }
    SUBCASE("missing child") {
        std::vector<std::string> bad = lines;
        bad.erase(bad.begin() + 5);  // drop line 6, the red reply of line 5
        const VerificationReport rep = report_for(bad, {3, 4, 6});
        CHECK_FALSE(rep.accepted);
        CHECK(rep.reason == VerifyReason::missing_child);
    }
    SUBCASE("budget exceeded") {
        // Same opening tree, but the header claims a 3-round budget.
        std::vector<std::string> bad(lines.begin(), lines.begin() + 6);
        bad[0] = "rc(C4,P3,empty,4,3)=1";
        const VerificationReport rep = report_for(bad, {3, 4, 3});
        CHECK_FALSE(rep.accepted);
        CHECK(rep.reason == VerifyReason::budget_exceeded);
        CHECK(rep.line == 5);
    }
    SUBCASE("terminal mismatch: tree after an rc=0 header") {
        std::vector<std::string> bad = lines;
        bad.push_back("r: b: m: 01");
        const VerificationReport rep = report_for(bad, {3, 4, 6});
        CHECK_FALSE(rep.accepted);
        CHECK(rep.reason == VerifyReason::terminal_mismatch);
        CHECK(rep.line == 24);
    }
    SUBCASE("terminal mismatch: unreachable trailing node") {
        std::vector<std::string> bad = lines;
        const std::string dup = bad[21];
        bad.insert(bad.begin() + 22, dup);  // duplicate the closed brr-path leaf
        const VerificationReport rep = report_for(bad, {3, 4, 6});
        CHECK_FALSE(rep.accepted);
        CHECK(rep.reason == VerifyReason::terminal_mismatch);
        CHECK(rep.line == 23);
    }
    SUBCASE("dangling back-reference") {
        std::vector<std::string> bad = lines;
        bad[16] = " r: b: 01 m: 02 l: 1";  // header lines are not strategy nodes
        const VerificationReport rep = report_for(bad, {3, 4, 6});
        CHECK_FALSE(rep.accepted);
        CHECK(rep.reason == VerifyReason::dangling_backref);
        CHECK(rep.line == 17);
    }
    SUBCASE("isomorphism mismatch: wrong target") {
        std::vector<std::string> bad = lines;
        bad[16] = " r: b: 01 m: 02 l: 4";
        const VerificationReport rep = report_for(bad, {3, 4, 6});
        CHECK_FALSE(rep.accepted);
        CHECK(rep.reason == VerifyReason::isomorphism_mismatch);
        CHECK(rep.line == 17);
    }
    SUBCASE("isomorphism mismatch: winning move fails to transfer") {
        std::vector<std::string> bad = lines;
        bad[16] = " r: b: 01 m: 12 l: 3";  // legal, even winning, but not line 3's move
        const VerificationReport rep = report_for(bad, {3, 4, 6});
        CHECK_FALSE(rep.accepted);
        CHECK(rep.reason == VerifyReason::isomorphism_mismatch);
        CHECK(rep.line == 17);
    }
    SUBCASE("position mismatch") {
        std::vector<std::string> bad = lines;
        bad[4] = "   r: 02 13 b: 01 m: 03";
        const VerificationReport rep = report_for(bad, {3, 4, 6});
        CHECK_FALSE(rep.accepted);
        CHECK(rep.reason == VerifyReason::position_mismatch);
        CHECK(rep.line == 5);
    }
}

TEST_CASE("every single-node mutation of the published book is rejected") {
    const std::string golden = read_file(golden_path());
    REQUIRE(verify_book(parse_book(golden), {3, 4, 6}).accepted);

    auto rejected = [&](const mutation::Mutant& m) {
        try {
            return !verify_book(parse_book(m.text), {3, 4, 6}).accepted;
        } catch (const BookParseError&) {
            return true;
        }
    };

    std::size_t total = 0;
    for (const auto& gen :
         {mutation::mutate_moves, mutation::delete_nodes, mutation::retarget_backrefs}) {
        for (const mutation::Mutant& m : gen(golden)) {
            CAPTURE(m.kind);
            CAPTURE(m.line);
            CHECK(rejected(m));
            ++total;
        }
    }
    CHECK(total > 400);  // exhaustive set is not accidentally empty
}

TEST_CASE("emit refuses to fabricate a strategy for a lost game") {
    Solver solver;
    solver.begin_game({7, 8, 12});
    GameRecord rec;
    rec.spec = {7, 8, 12};
    StartResult claim;
    claim.spec = rec.spec;
    claim.start_index = 0;  // the empty start of this game is a Painter win
    claim.skipped = false;
    claim.rc = 1;
    rec.starts.push_back(claim);
    CHECK_THROWS_AS(emit_book(solver, rec), InvariantError);
}
