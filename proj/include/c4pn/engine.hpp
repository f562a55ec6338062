#pragma once

// Constructive Builder strategy for the unrestricted game: build a path Pn in
// blue within 2n-2-e(H) selections while never letting Painter sit on a safe
// red C4 refusal.  For n <= 13 the engine replays a solved strategy book; for
// n >= 14 it runs the staged plan:
//
//   Stage 1     seven fixed selections assembling a red scaffold,
//   Stage 2     pendant selections alternating between the two scaffold
//               centers until n-1 (n even) or n-2 (n odd) vertices are used,
//   Stage 3     (n odd) one more pendant closing the scaffold.
//
// The first blue reply interrupts the stages and dispatches on its round t:
// early rounds enter hand-written decision scripts, middle rounds force a long
// blue path through the scaffold's forcing graph, and late rounds finish the
// game directly on the butterfly (MaloEndgame).  Script and forcing lines end
// by contracting the blue path built so far: the board shrinks to a residual
// seed position of a shorter game, which is played the same way (or from a
// book once it is small enough).  Contractions never rename vertices and
// fresh vertices are brand-new ids, so every level plays on the same board.

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "c4pn/bitgraph.hpp"
#include "c4pn/book.hpp"
#include "c4pn/butterfly.hpp"
#include "c4pn/canonical.hpp"
#include "c4pn/dyngraph.hpp"
#include "c4pn/game.hpp"

namespace c4pn {

enum class Phase : unsigned char {
    Stage1,
    Stage2,
    Stage3,
    BlueCaseScript,
    ButterflyForce,
    MaloEndgame,
    BaseCaseBook,
    Done,
};

const char* phase_name(Phase p);

/// Thrown when a requested strategy book cannot back the engine: the file is
/// missing, fails verification, or records rc=0 for the needed start.
struct BookUnavailable : std::runtime_error {
    explicit BookUnavailable(const std::string& message) : std::runtime_error(message) {}
};

/// Strategy tree of one verified book file, flattened for replay: every node
/// carries its move, its red/blue children, and the flat index of its
/// back-reference target when the printed subtree was elided.  Spans all
/// sections of the file, since back-references may point across sections.
class BookIndex {
public:
    explicit BookIndex(std::shared_ptr<const Book> book);

    struct TreeNode {
        Move move;         // endpoints in the node's own labelling
        int v = 0;         // vertices of the position (fresh label == v)
        int backref = -1;  // flat index of the shared subtree's node, -1 none
        int red_child = -1;
        int blue_child = -1;
        const BookNode* src = nullptr;  // printed edge lists
    };

    const TreeNode& at(int i) const { return nodes_[i]; }
    /// Flat index of the section root for this start; -1 when the file has no
    /// winning section for it.
    int root(int start_index) const;
    const GameSpec& spec() const { return spec_; }
    std::size_t size() const { return nodes_.size(); }

    /// Canonical form of node i's printed position (for witness composition
    /// when replay crosses a back-reference).
    CanonicalForm form(int i) const;

private:
    std::shared_ptr<const Book> book_;  // keeps the src pointers alive
    GameSpec spec_{};
    std::vector<TreeNode> nodes_;
    std::vector<int> roots_;
};

/// Loads book files from a directory on demand, verifying each file once and
/// caching per-section move maps.  Thread-safe; sections are shared const.
class BookStore {
public:
    explicit BookStore(std::string dir) : dir_(std::move(dir)) {}

    /// books/C4P<n>e<2n-2>.txt, the budget every residual game needs.
    static std::string file_name(int n);
    const std::string& dir() const { return dir_; }

    /// Throws BookUnavailable when the file is absent, rejected by the
    /// verifier, claims a different game, or records rc=0 for this start.
    std::shared_ptr<const BookIndex> index(int n, int start_index);

private:
    std::string dir_;
    std::mutex mu_;
    std::map<int, std::shared_ptr<const Book>> books_;
    std::map<int, std::shared_ptr<const BookIndex>> maps_;
};

/// Replays a book section on a live board whose vertex ids are arbitrary.
/// The walk follows the strategy tree structurally, maintaining the mapping
/// node label -> live id: it starts as the obvious map between the section's
/// seed layout and the live seed path, grows by one entry per fresh-vertex
/// move, and is recomposed through the isomorphism witness whenever the walk
/// crosses a back-reference.  (Positions cannot be matched by canonical key:
/// equal keys imply isomorphism but not the other way round.)
class BookPlayer {
public:
    /// `seed_path` lists the live ids along the seed path in layout order
    /// (empty for the empty start); `board` must match that seed exactly.
    BookPlayer(std::shared_ptr<const BookIndex> index, int start_index,
               const DynGraph& board, const std::vector<int>& seed_path,
               int first_fresh_id);

    std::pair<int, int> next_move();
    void observe(std::pair<int, int> edge, Colour colour);
    /// True once a blue reply completed the target path: the tree ends here.
    bool finished() const { return finished_; }

private:
    void resolve_backrefs();

    std::shared_ptr<const BookIndex> index_;
    int cur_ = -1;
    std::array<int, 16> to_live_{};
    int v_ = 0;              // node labels 0..v_-1 are bound in to_live_
    int pending_fresh_ = 0;  // fresh labels proposed by next_move, 0..2
    bool finished_ = false;
    int next_fresh_;
};

/// One blue-path contraction: `path` was a blue path of the parent board
/// whose interior was deleted and replaced by the virtual blue edge joining
/// its ends.  Vertex ids are never renamed, so the translation between the
/// two levels is the identity on every surviving vertex.
struct ContractionFrame {
    std::vector<int> path;
    std::pair<int, int> virtual_edge{-1, -1};
    bool replaced_red = false;  // a red ends edge was removed for the virtual one
    std::vector<int> removed;   // deleted interior vertices
    int k = 0;                  // interior size; the target length drops by k
    int m = 0;                  // selections charged to this contraction
};

class Engine {
public:
    /// Builder for the game with target path Pn from the given standard
    /// start.  `books` backs every residual game on at most 13 vertices.
    Engine(int n, int start_index, std::shared_ptr<BookStore> books);

    std::pair<int, int> next_move();
    void observe(std::pair<int, int> edge, Colour colour);

    bool done() const;
    Phase phase() const;
    int target_n() const { return n_; }
    int rounds() const { return rounds_; }
    int budget() const { return budget_; }
    /// True when Painter reddened a selection that closes a red C4; the game
    /// is over on the spot regardless of the board.
    bool forced_win_claimed() const { return forced_win_; }

    const DynGraph& board() const { return board_; }
    const std::vector<ContractionFrame>& frames() const { return frames_; }

    struct ContractionRecord {
        std::string context;
        int k = 0;
        int m = 0;
        int expected_m = 0;
        int depth = 0;  // frames below this one
    };
    const std::vector<ContractionRecord>& contraction_log() const { return log_; }

    /// Classification of a first blue reply in round t of the staged plan for
    /// target n ("t5", "t8", "even", "odd", "j1".."j4"); throws when the pair
    /// is outside the staged plan.  Exposed so totality can be audited.
    static std::string classify_first_blue(int n, int t);

private:
    enum class Mode {
        stage1,
        stage2,
        stage3,
        stage3_blue,
        jcase,
        script,
        force,
        malo,
        book,
        done,
    };

    struct PlannedContraction {
        std::vector<int> path;
        int expected_m = 0;
        bool replace_red = false;
    };

    struct AfterForce {
        enum class Kind { done, contract_list, contract_walk };
        Kind kind = Kind::done;
        std::vector<PlannedContraction> list;
        int walk_from = -1;
        int walk_to = -1;
        int walk_m = 0;
        int residual_start = -1;
        std::vector<int> residual;
        std::string context;
    };

    int fresh_vertex();
    std::pair<int, int> slot_edge(int a, int b);
    int slot_id(int slot);

    void dispatch_first_blue(int t);
    void enter_script_tree(const void* tree, int node, const std::vector<int>& slot_ids);
    void begin_leaf(const void* leaf);
    void enter_force(std::vector<std::pair<int, int>> plan, AfterForce after, Phase tag);
    void after_force_done();
    void push_contraction(const std::vector<int>& path, int expected_m, bool replace_red,
                          const std::string& context);
    void enter_child(int start_index, const std::vector<int>& path_ids,
                     const std::string& context);
    void enter_book_for(int start_index, const std::vector<int>& seed_path);
    /// Red scaffold read off the staged board: chain u6-u2-u0-u1-u4-u7 with
    /// the red pendants of the two centers as wings, minus `exclude`.
    Butterfly scaffold(const std::vector<int>& exclude) const;
    void malo_enter();
    std::pair<int, int> malo_next();
    void malo_observe(std::pair<int, int> edge, Colour colour);
    void malo_finish();
    void handle_t8(int t);
    void handle_t9(int t);
    void handle_generic_even(int t);
    void handle_generic_odd(int t);
    void check_done() const;

    int n_;                 // target path length of the whole game
    int start_index_;
    std::shared_ptr<BookStore> books_;
    int budget_;
    int rounds_ = 0;
    int fresh_ = 0;
    bool forced_win_ = false;

    Mode mode_ = Mode::stage1;
    Phase move_phase_ = Phase::Stage1;  // tag for the move in flight

    DynGraph real_;   // the full board as the harness sees it
    DynGraph board_;  // current frame's board (contracted view)
    int cur_n_;       // target length at the current frame
    std::vector<ContractionFrame> frames_;
    std::vector<ContractionRecord> log_;

    std::optional<std::pair<int, int>> pending_;

    // script interpreter
    const void* tree_ = nullptr;  // const script::Tree*
    int node_ = -1;
    std::array<int, 16> slots_{};

    // force executor
    std::vector<std::pair<int, int>> plan_;
    std::size_t plan_i_ = 0;
    AfterForce after_;

    // stage bookkeeping
    int jcase_left_ = 0;
    int jcase_idx_ = 0;

    // MaloEndgame machine
    int malo_case_ = 0;
    Butterfly malo_B_;  // red scaffold, oriented so side 1 is the c1 of the table
    std::vector<int> malo_blue1_, malo_blue2_;
    int malo_step_ = 0;
    std::vector<int> malo_w_;
    std::pair<int, int> malo_second_{-1, -1};
    bool malo_expect_second_ = false;

    std::optional<BookPlayer> book_;
};

}  // namespace c4pn
