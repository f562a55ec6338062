#pragma once

// Strategy books: pre-order text certificates of winning Builder play.  One
// file covers one game (n,v,e); each section is a header line
//
//     rc(C4,P<n>,<start-name>,<v>,<e>)=<0|1>
//
// followed, when rc=1, by the strategy tree.  A node line such as
//
//        r: 02 12 b: 01 m: 03
//
// lists the position's red and blue edges (hex endpoint pairs in (min,max)
// row-major order), then the winning Builder move, and is indented by one
// space per edge on the board.  A node whose position already appeared
// earlier in the file carries " l: <line>" instead of a subtree.  Children
// follow in pre-order, the blue reply's subtree first, then the red reply's,
// each omitted when that reply ends the game.  Line numbers are 1-based and
// count header, node, and back-reference lines alike.
//
// emit_book dumps the solver's table; parse_book and verify_book re-check a
// file independently of the solver: the verifier replays every branch with
// the game rules alone and accepts only complete winning strategies.

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "c4pn/game.hpp"
#include "c4pn/solver.hpp"

namespace c4pn {

struct BookNode {
    int line = 0;   // 1-based line number in the file
    int depth = 0;  // leading spaces = edges on the board
    std::vector<std::pair<int, int>> red_edges;
    std::vector<std::pair<int, int>> blue_edges;
    Move move{};     // endpoints in printed order (may be descending)
    int backref = 0; // " l: k" target line, 0 when absent
};

struct BookSection {
    GameSpec spec{};
    int start_index = -1;  // into standard_starts()
    int rc = 0;
    int header_line = 0;
    std::vector<BookNode> nodes;  // pre-order
};

struct Book {
    std::vector<BookSection> sections;
};

struct BookParseError : std::runtime_error {
    int line;
    BookParseError(int line_no, const std::string& message);
};

enum class VerifyReason {
    none,
    illegal_move,
    missing_child,
    budget_exceeded,
    terminal_mismatch,
    dangling_backref,
    isomorphism_mismatch,
    position_mismatch,
};

const char* to_string(VerifyReason reason);

struct VerificationReport {
    bool accepted = true;
    int line = 0;  // first failing line, 0 when accepted
    VerifyReason reason = VerifyReason::none;
    std::string detail;
};

// Pre-order dump of the winning strategies for one solved game.  Sections
// appear in record order; skipped starts produce no output and rc=0 starts a
// bare header.  The solver must still hold the game's table.  Throws
// InvariantError if a reachable node has no winning move.
void emit_book(Solver& solver, const GameRecord& record, std::ostream& out);
std::string emit_book(Solver& solver, const GameRecord& record);

// Structured reading; throws BookParseError with the offending line number.
Book parse_book(std::istream& in);
Book parse_book(const std::string& text);

// Independent replay of a parsed book against the game rules.  Shares only
// the graph predicates and rule checks with the solver; never consults a
// transposition table.
VerificationReport verify_book(const Book& book, const GameSpec& spec);

// Game parameters claimed by the book's first header; all-zero when empty.
GameSpec book_spec(const Book& book);

}  // namespace c4pn
