#pragma once

// Exhaustive solver for the restricted game.  For each game in a series it
// computes, per start position, whether Builder has a winning strategy, and
// fills a transposition table mapping canonical position keys to a winning
// first move (0 when Builder cannot win).  Tables from the previous game in
// the series seed move hints for the next one.

#include <cstdint>
#include <vector>

#include "c4pn/bitgraph.hpp"
#include "c4pn/canonical.hpp"
#include "c4pn/game.hpp"

namespace c4pn {

// Winning moves are stored as (s1 << 8) | s2 where s1, s2 are vertex slots in
// the canonical (sorted) labelling of the position; 0 means "no winning move".
using StoredMove = std::uint16_t;

// Open-addressing hash map TableKey -> StoredMove, laid out as sixteen
// independent segments with separate key/value arrays.  Value 0xFFFF marks an
// empty slot (real moves never exceed 0x0f0f and 0 is a legal value).
// Segments grow by 1.5x one at a time, so the transient memory of a rehash is
// a sixteenth of the table rather than all of it -- the largest game stores
// tens of millions of positions and whole-table doubling would not fit in
// memory alongside the previous game's table.
class PositionTable {
public:
    PositionTable() { reset(); }

    void reset(std::size_t segment_capacity = 4096);
    const StoredMove* find(const TableKey& key) const;
    void put(const TableKey& key, StoredMove value);  // insert or overwrite
    std::size_t size() const { return count_; }
    std::size_t capacity_bytes() const;

private:
    static constexpr StoredMove kEmpty = 0xFFFF;
    static constexpr int kSegments = 16;

    struct Segment {
        std::vector<TableKey> keys;
        std::vector<StoredMove> vals;
        std::size_t count = 0;

        void reset(std::size_t cap);
        void grow();
        // fastrange: maps a 64-bit hash onto [0, cap) using the high bits,
        // independent of the low bits that select the segment.
        static std::size_t slot(std::uint64_t h, std::size_t cap) {
            return static_cast<std::size_t>(
                (static_cast<unsigned __int128>(h) * cap) >> 64);
        }
        StoredMove* find_or_insert(const TableKey& key, std::uint64_t h);
        const StoredMove* find(const TableKey& key, std::uint64_t h) const;
    };

    std::array<Segment, kSegments> segs_;
    std::size_t count_ = 0;
};

struct SolveOptions {
    bool use_table = true;         // transposition table (memoisation)
    bool use_budget_prune = true;  // cut positions that cannot finish in budget
    bool use_spare_vertex = true;  // cheap form of the path-embedding bound
    bool use_hints = true;         // try the previous game's stored move first
    bool progress = false;         // stderr progress every 2^23 unique positions
};

struct SolveStats {
    std::uint64_t total = 0;   // construct() entries that reached the key lookup
    std::uint64_t unique = 0;  // first-time positions among those
};

struct StartResult {
    GameSpec spec;
    int start_index = 0;
    bool skipped = false;  // seed needs more vertices than the cap allows
    int rc = 0;
    SolveStats delta;  // positions attributable to this start
    double seconds = 0.0;
};

class Solver {
public:
    explicit Solver(SolveOptions opts = {}) : opts_(opts) {}

    // Rotates tables: the finished game's table becomes the hint source.
    void begin_game(const GameSpec& spec);

    // Solve one seed of the current game (not marked skipped; see
    // StartPosition::max_vertex for the skip rule applied by callers).
    StartResult solve_start(int start_index);

    // Winning move stored for a position of the current game, recomputing the
    // position on a table miss.  Returns 0 when Builder cannot win from it.
    StoredMove position_move(const BitGraph& blue, const BitGraph& red, int v);

    const GameSpec& spec() const { return spec_; }
    const SolveOptions& options() const { return opts_; }
    const SolveStats& stats() const { return stats_; }
    std::size_t table_size() const { return table_.size(); }

private:
    int construct(const BitGraph& blue, const BitGraph& red, int v, int eb, int er);
    int colour(const BitGraph& blue, const BitGraph& red, int v1, int v2, int v_new,
               int eb, int er);

    SolveOptions opts_;
    GameSpec spec_{};
    PositionTable table_;
    PositionTable prev_table_;
    bool have_prev_ = false;
    SolveStats stats_;
};

// One solved game of a series together with its per-start outcomes.
struct GameRecord {
    GameSpec spec;
    std::vector<StartResult> starts;  // includes skipped entries
};

}  // namespace c4pn
