#pragma once

// Painter policy suite and the match runner: pits any Builder (solver-optimal
// or engine) against any Painter under either ruleset.
//
//   rr   the restricted game the engine plays: edges anywhere on K_N,
//        Painter may never complete a red C4, Builder must finish with a
//        blue path on exactly n vertices within the round budget.
//   rrc  the computational variant the solver searches: vertex cap, round
//        budget, connectivity, and the blue-path-extendability rule on
//        Builder's selections; Builder also wins when Painter completes a
//        red C4 (a legal but losing reply there).
//
// The harness enforces legality independently of the policies: an illegal
// selection or colouring aborts the match with a diagnostic transcript
// instead of trusting either side.

#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "c4pn/bitgraph.hpp"
#include "c4pn/dyngraph.hpp"
#include "c4pn/engine.hpp"
#include "c4pn/game.hpp"
#include "c4pn/solver.hpp"

namespace c4pn {

enum class Ruleset : unsigned char { rr, rrc };
const char* to_string(Ruleset r);

enum class MatchOutcome : unsigned char {
    builder_win,
    painter_survive,   // budget exhausted without the blue path
    builder_illegal,   // illegal selection, or the strategy threw
    painter_illegal,   // forbidden colour (rr: red completing a red C4)
};
const char* to_string(MatchOutcome o);

/// Rule state of one running match.  Always keeps the board as a DynGraph;
/// under rrc additionally mirrors it into BitGraphs for the solver-side
/// predicates (cap, connectivity, extendability).
class LiveGame {
public:
    LiveGame(const GameSpec& spec, int start_index, Ruleset rules);

    bool builder_move_legal(std::pair<int, int> edge) const;
    bool painter_colour_legal(std::pair<int, int> edge, Colour colour) const;
    /// Precondition: both legality checks passed.
    void apply(std::pair<int, int> edge, Colour colour);

    bool builder_won() const;
    /// Round budget used up (seed edges count against spec.e).
    bool exhausted() const { return rounds_ >= budget_; }

    const GameSpec& spec() const { return spec_; }
    int start_index() const { return start_index_; }
    Ruleset rules() const { return rules_; }
    int rounds() const { return rounds_; }
    int budget() const { return budget_; }
    const DynGraph& board() const { return board_; }

    // rrc-only mirrors (throw under rr).
    const BitGraph& blue_bits() const;
    const BitGraph& red_bits() const;
    int used_slots() const;

private:
    GameSpec spec_;
    int start_index_;
    Ruleset rules_;
    int budget_;
    int rounds_ = 0;
    DynGraph board_;
    BitGraph blue_, red_;  // rrc only
    int v_ = 0;            // rrc used vertex slots
    bool red_c4_ = false;  // rrc: Painter completed a red C4
};

class Builder {
public:
    virtual ~Builder() = default;
    virtual std::pair<int, int> next_move() = 0;
    virtual void observe(std::pair<int, int> edge, Colour colour) = 0;
    /// Tag recorded in the transcript for the move in flight.
    virtual const char* phase() const { return ""; }
};

class Painter {
public:
    virtual ~Painter() = default;
    virtual Colour choose(const LiveGame& game, std::pair<int, int> edge) = 0;
};

// ---------------------------------------------------------------------------
// Transcripts
// ---------------------------------------------------------------------------

struct TranscriptEntry {
    int round = 0;
    int a = 0, b = 0;
    Colour colour = Colour::red;
    std::string phase;
};

struct Transcript {
    GameSpec spec{};
    int start_index = 0;
    Ruleset rules = Ruleset::rr;
    MatchOutcome outcome = MatchOutcome::builder_win;
    int rounds = 0;
    std::string note;  // diagnostic for aborted matches
    std::vector<TranscriptEntry> entries;
};

/// Line-oriented text: a "# ..." header (game, outcome, rounds), an optional
/// "# note: ..." line, then one "(round) <a> <b> <r|b> [phase]" line per move.
std::string serialize_transcript(const Transcript& t);
Transcript parse_transcript(const std::string& text);  // throws std::runtime_error

/// Replays the moves through a fresh LiveGame and checks that legality,
/// terminal state, outcome, and round count all reproduce.
bool replay_matches(const Transcript& t);

Transcript run_match(Builder& builder, Painter& painter, const GameSpec& spec,
                     int start_index, Ruleset rules);

// ---------------------------------------------------------------------------
// Painter policies
// ---------------------------------------------------------------------------

/// Red unless that completes a red C4, then blue.
class AllRedPainter : public Painter {
public:
    Colour choose(const LiveGame& game, std::pair<int, int> edge) override;
};

/// Red until round t, a voluntary blue in round t, then all-red again.
class FirstBlueAtPainter : public Painter {
public:
    explicit FirstBlueAtPainter(int t) : t_(t) {}
    Colour choose(const LiveGame& game, std::pair<int, int> edge) override;

private:
    int t_;
};

/// Coin flip; an illegal (or immediately losing) red is flipped to blue.
class UniformRandomPainter : public Painter {
public:
    explicit UniformRandomPainter(std::uint64_t seed) : rng_(seed) {}
    Colour choose(const LiveGame& game, std::pair<int, int> edge) override;

private:
    std::mt19937_64 rng_;
};

/// Wraps a plain function as a Painter (test scripting, interactive play).
class FunctionPainter : public Painter {
public:
    using Fn = std::function<Colour(const LiveGame&, std::pair<int, int>)>;
    explicit FunctionPainter(Fn fn) : fn_(std::move(fn)) {}
    Colour choose(const LiveGame& game, std::pair<int, int> edge) override {
        return fn_(game, edge);
    }

private:
    Fn fn_;
};

/// Exact adversary for the rrc game: colours so that Builder has no winning
/// strategy from the resulting position whenever possible.  Runs the solver
/// from every Painter node, so keep it to small games (n <= 8 or so).
class SolverOptimalPainter : public Painter {
public:
    explicit SolverOptimalPainter(const GameSpec& spec);
    Colour choose(const LiveGame& game, std::pair<int, int> edge) override;

private:
    Solver solver_;
};

// ---------------------------------------------------------------------------
// Builders
// ---------------------------------------------------------------------------

/// The constructive strategy of the engine module (ruleset rr).
class EngineBuilder : public Builder {
public:
    EngineBuilder(int n, int start_index, std::shared_ptr<BookStore> books)
        : engine_(n, start_index, std::move(books)) {}

    std::pair<int, int> next_move() override { return engine_.next_move(); }
    void observe(std::pair<int, int> edge, Colour colour) override {
        engine_.observe(edge, colour);
    }
    const char* phase() const override { return phase_name(engine_.phase()); }
    const Engine& engine() const { return engine_; }

private:
    Engine engine_;
};

/// Plays the solver's stored winning move at every turn (ruleset rrc); on a
/// position with no winning move it falls back to the first legal move, so
/// rc=0 games still run to the budget.
class SolverBuilder : public Builder {
public:
    SolverBuilder(const GameSpec& spec, int start_index);

    std::pair<int, int> next_move() override;
    void observe(std::pair<int, int> edge, Colour colour) override;
    const char* phase() const override { return "Solver"; }

private:
    GameSpec spec_;
    Solver solver_;
    BitGraph blue_, red_;
    int v_ = 0;
};

// ---------------------------------------------------------------------------
// Engine sweep
// ---------------------------------------------------------------------------

struct SweepOptions {
    int n_lo = 14;
    int n_hi = 40;
    int start_index = 0;
    int random_count = 100;
    std::uint64_t seed = 1;
    int threads = 1;
};

struct SweepFailure {
    int n = 0;
    std::string painter;
    std::string detail;
};

struct SweepResult {
    int matches = 0;
    int max_rounds = 0;  // largest round count seen across the sweep
    std::vector<SweepFailure> failures;

    bool all_won() const { return failures.empty(); }
};

/// For each n in [n_lo, n_hi]: engine vs allRed, firstBlueAt(t) for every
/// t in 1..2n-3, and random_count uniformRandom painters.  A match counts as
/// failed unless the engine wins within 2n-2 rounds ending with exactly n-1
/// blue edges forming one blue path on n vertices.  Matches run on a worker
/// pool of `threads` threads; failures are aggregated order-independently.
SweepResult run_engine_sweep(const SweepOptions& opts,
                             const std::shared_ptr<BookStore>& books);

}  // namespace c4pn
