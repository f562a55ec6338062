#include "c4pn/match.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "c4pn/canonical.hpp"
#include "c4pn/error.hpp"

namespace c4pn {

const char* to_string(Ruleset r) { return r == Ruleset::rr ? "RR" : "RRC"; }

const char* to_string(MatchOutcome o) {
    switch (o) {
        case MatchOutcome::builder_win: return "builder-win";
        case MatchOutcome::painter_survive: return "painter-survive";
        case MatchOutcome::builder_illegal: return "builder-illegal";
        case MatchOutcome::painter_illegal: return "painter-illegal";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// LiveGame
// ---------------------------------------------------------------------------

LiveGame::LiveGame(const GameSpec& spec, int start_index, Ruleset rules)
    : spec_(spec), start_index_(start_index), rules_(rules) {
    const auto& starts = standard_starts();
    if (start_index_ < 0 || start_index_ >= static_cast<int>(starts.size()))
        throw InvariantError("match: bad start index");
    if (spec_.n < 2) throw InvariantError("match: target path too short");
    const StartPosition& seed = starts[start_index_];
    for (auto [a, b] : seed.blue) board_.add_edge(a, b, Colour::blue);
    for (auto [a, b] : seed.red) board_.add_edge(a, b, Colour::red);
    budget_ = spec_.e - board_.edge_count();
    if (budget_ < 0) throw InvariantError("match: seed alone exceeds the budget");
    if (rules_ == Ruleset::rrc) {
        if (spec_.v < 1 || spec_.v > kMaxVertices)
            throw InvariantError("match: rrc vertex cap out of range");
        seed.fill(blue_, red_);
        v_ = seed.max_vertex() + 1;
        if (v_ > spec_.v) throw InvariantError("match: seed exceeds the vertex cap");
    }
}

bool LiveGame::builder_move_legal(std::pair<int, int> edge) const {
    const auto [a, b] = edge;
    if (a < 0 || b < 0 || a == b) return false;
    if (board_.has_edge(a, b)) return false;
    if (rules_ == Ruleset::rr) return true;
    if (a >= spec_.v || b >= spec_.v) return false;
    return move_is_legal(blue_, red_, v_, a, b, spec_);
}

bool LiveGame::painter_colour_legal(std::pair<int, int> edge, Colour colour) const {
    if (colour == Colour::blue) return true;
    if (rules_ == Ruleset::rrc) return true;  // a suicidal red is legal but loses
    return !board_.red_c4_with(edge.first, edge.second);
}

void LiveGame::apply(std::pair<int, int> edge, Colour colour) {
    const auto [a, b] = edge;
    if (rules_ == Ruleset::rrc) {
        if (colour == Colour::red) {
            if (has_c4_with(red_, a, b)) red_c4_ = true;
            red_.add_edge(a, b);
        } else {
            blue_.add_edge(a, b);
        }
        v_ = std::max({v_, a + 1, b + 1});
    }
    board_.add_edge(a, b, colour);
    ++rounds_;
}

bool LiveGame::builder_won() const {
    if (rules_ == Ruleset::rrc) return red_c4_ || is_exact_path(blue_, spec_.n);
    return board_.blue_exact_path(spec_.n);
}

const BitGraph& LiveGame::blue_bits() const {
    if (rules_ != Ruleset::rrc) throw InvariantError("match: no bit mirror under rr");
    return blue_;
}

const BitGraph& LiveGame::red_bits() const {
    if (rules_ != Ruleset::rrc) throw InvariantError("match: no bit mirror under rr");
    return red_;
}

int LiveGame::used_slots() const {
    if (rules_ != Ruleset::rrc) throw InvariantError("match: no bit mirror under rr");
    return v_;
}

// ---------------------------------------------------------------------------
// Match runner
// ---------------------------------------------------------------------------

Transcript run_match(Builder& builder, Painter& painter, const GameSpec& spec,
                     int start_index, Ruleset rules) {
    Transcript t;
    t.spec = spec;
    t.start_index = start_index;
    t.rules = rules;

    LiveGame game(spec, start_index, rules);
    while (true) {
        if (game.builder_won()) {  // a win on the last budgeted round still counts
            t.outcome = MatchOutcome::builder_win;
            break;
        }
        if (game.exhausted()) {
            t.outcome = MatchOutcome::painter_survive;
            break;
        }

        std::pair<int, int> edge;
        std::string phase;
        try {
            edge = builder.next_move();
            phase = builder.phase();
        } catch (const std::exception& ex) {
            t.outcome = MatchOutcome::builder_illegal;
            t.note = std::string("builder error: ") + ex.what();
            break;
        }
        if (!game.builder_move_legal(edge)) {
            t.outcome = MatchOutcome::builder_illegal;
            t.note = "illegal selection " + std::to_string(edge.first) + "-" +
                     std::to_string(edge.second);
            break;
        }

        Colour colour;
        try {
            colour = painter.choose(game, edge);
        } catch (const std::exception& ex) {
            t.outcome = MatchOutcome::painter_illegal;
            t.note = std::string("painter error: ") + ex.what();
            break;
        }
        if (!game.painter_colour_legal(edge, colour)) {
            t.outcome = MatchOutcome::painter_illegal;
            t.note = "forbidden " + std::string(1, colour_letter(colour)) + " on " +
                     std::to_string(edge.first) + "-" + std::to_string(edge.second);
            break;
        }

        game.apply(edge, colour);
        t.entries.push_back({game.rounds(), edge.first, edge.second, colour, phase});
        try {
            builder.observe(edge, colour);
        } catch (const std::exception& ex) {
            t.outcome = MatchOutcome::builder_illegal;
            t.note = std::string("builder error: ") + ex.what();
            break;
        }
    }
    t.rounds = game.rounds();
    return t;
}

// ---------------------------------------------------------------------------
// Transcripts
// ---------------------------------------------------------------------------

std::string serialize_transcript(const Transcript& t) {
    std::ostringstream out;
    out << "# " << to_string(t.rules) << "(C4,P" << t.spec.n << ','
        << standard_starts()[t.start_index].name;
    if (t.rules == Ruleset::rrc) out << ',' << t.spec.v;
    out << ',' << t.spec.e << ") outcome=" << to_string(t.outcome)
        << " rounds=" << t.rounds << '\n';
    if (!t.note.empty()) out << "# note: " << t.note << '\n';
    for (const TranscriptEntry& e : t.entries)
        out << '(' << e.round << ") " << e.a << ' ' << e.b << ' '
            << colour_letter(e.colour) << " [" << e.phase << "]\n";
    return out.str();
}

namespace {

[[noreturn]] void bad_transcript(const std::string& what) {
    throw std::runtime_error("transcript: " + what);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

int parse_int(const std::string& s) {
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(s, &used);
    } catch (const std::exception&) {
        bad_transcript("expected a number, got '" + s + "'");
    }
    if (used != s.size()) bad_transcript("expected a number, got '" + s + "'");
    return value;
}

}  // namespace

Transcript parse_transcript(const std::string& text) {
    Transcript t;
    std::istringstream in(text);
    std::string line;
    bool have_header = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (line.rfind("# note: ", 0) == 0) {
                t.note = line.substr(8);
                continue;
            }
            if (have_header) bad_transcript("duplicate header");
            const auto open = line.find('(');
            const auto close = line.find(')');
            if (open == std::string::npos || close == std::string::npos || close < open)
                bad_transcript("malformed header");
            const std::string rules = line.substr(2, open - 2);
            if (rules == "RR")
                t.rules = Ruleset::rr;
            else if (rules == "RRC")
                t.rules = Ruleset::rrc;
            else
                bad_transcript("unknown ruleset '" + rules + "'");
            const auto fields = split(line.substr(open + 1, close - open - 1), ',');
            const std::size_t expected = t.rules == Ruleset::rrc ? 5 : 4;
            if (fields.size() != expected || fields[0] != "C4" || fields[1].empty() ||
                fields[1][0] != 'P')
                bad_transcript("malformed game spec");
            t.spec.n = parse_int(fields[1].substr(1));
            t.start_index = start_index_by_tag(fields[2]);
            if (t.start_index < 0) bad_transcript("unknown start '" + fields[2] + "'");
            if (t.rules == Ruleset::rrc) t.spec.v = parse_int(fields[3]);
            t.spec.e = parse_int(fields.back());
            std::istringstream rest(line.substr(close + 1));
            std::string token;
            bool have_outcome = false, have_rounds = false;
            while (rest >> token) {
                if (token.rfind("outcome=", 0) == 0) {
                    const std::string name = token.substr(8);
                    bool found = false;
                    for (MatchOutcome o :
                         {MatchOutcome::builder_win, MatchOutcome::painter_survive,
                          MatchOutcome::builder_illegal, MatchOutcome::painter_illegal})
                        if (name == to_string(o)) {
                            t.outcome = o;
                            found = true;
                        }
                    if (!found) bad_transcript("unknown outcome '" + name + "'");
                    have_outcome = true;
                } else if (token.rfind("rounds=", 0) == 0) {
                    t.rounds = parse_int(token.substr(7));
                    have_rounds = true;
                } else {
                    bad_transcript("unexpected header token '" + token + "'");
                }
            }
            if (!have_outcome || !have_rounds) bad_transcript("incomplete header");
            have_header = true;
            continue;
        }
        if (!have_header) bad_transcript("moves before the header");
        if (line[0] != '(') bad_transcript("malformed move line '" + line + "'");
        const auto close = line.find(')');
        if (close == std::string::npos) bad_transcript("malformed move line '" + line + "'");
        TranscriptEntry e;
        e.round = parse_int(line.substr(1, close - 1));
        std::istringstream rest(line.substr(close + 1));
        std::string sa, sb, sc, sphase;
        if (!(rest >> sa >> sb >> sc)) bad_transcript("malformed move line '" + line + "'");
        e.a = parse_int(sa);
        e.b = parse_int(sb);
        if (sc == "r")
            e.colour = Colour::red;
        else if (sc == "b")
            e.colour = Colour::blue;
        else
            bad_transcript("unknown colour '" + sc + "'");
        std::getline(rest, sphase);
        const auto lb = sphase.find('[');
        const auto rb = sphase.rfind(']');
        if (lb == std::string::npos || rb == std::string::npos || rb < lb)
            bad_transcript("malformed phase tag in '" + line + "'");
        e.phase = sphase.substr(lb + 1, rb - lb - 1);
        t.entries.push_back(std::move(e));
    }
    if (!have_header) bad_transcript("missing header");
    return t;
}

bool replay_matches(const Transcript& t) {
    try {
        LiveGame game(t.spec, t.start_index, t.rules);
        for (const TranscriptEntry& e : t.entries) {
            if (game.builder_won() || game.exhausted()) return false;
            if (e.round != game.rounds() + 1) return false;
            if (!game.builder_move_legal({e.a, e.b})) return false;
            if (!game.painter_colour_legal({e.a, e.b}, e.colour)) return false;
            game.apply({e.a, e.b}, e.colour);
        }
        if (t.rounds != game.rounds()) return false;
        switch (t.outcome) {
            case MatchOutcome::builder_win:
                return game.builder_won();
            case MatchOutcome::painter_survive:
                return !game.builder_won() && game.exhausted();
            case MatchOutcome::builder_illegal:
            case MatchOutcome::painter_illegal:
                return !game.builder_won();  // stopped by an abort, not the rules
        }
        return false;
    } catch (const std::exception&) {
        return false;
    }
}

// ---------------------------------------------------------------------------
// Painter policies
// ---------------------------------------------------------------------------

Colour AllRedPainter::choose(const LiveGame& game, std::pair<int, int> edge) {
    return game.board().red_c4_with(edge.first, edge.second) ? Colour::blue
                                                             : Colour::red;
}

Colour FirstBlueAtPainter::choose(const LiveGame& game, std::pair<int, int> edge) {
    if (game.rounds() + 1 == t_) return Colour::blue;
    return game.board().red_c4_with(edge.first, edge.second) ? Colour::blue
                                                             : Colour::red;
}

Colour UniformRandomPainter::choose(const LiveGame& game, std::pair<int, int> edge) {
    if ((rng_() & 1) != 0 && !game.board().red_c4_with(edge.first, edge.second))
        return Colour::red;
    return Colour::blue;
}

SolverOptimalPainter::SolverOptimalPainter(const GameSpec& spec) {
    solver_.begin_game(spec);
}

Colour SolverOptimalPainter::choose(const LiveGame& game, std::pair<int, int> edge) {
    if (game.rules() != Ruleset::rrc)
        throw InvariantError("solver-optimal painter plays the rrc ruleset only");
    const auto [a, b] = edge;
    const BitGraph& blue = game.blue_bits();
    const BitGraph& red = game.red_bits();
    const int v = std::max({game.used_slots(), a + 1, b + 1});

    bool red_loses = has_c4_with(red, a, b);  // instant Builder win
    if (!red_loses) {
        BitGraph red2 = red;
        red2.add_edge(a, b);
        red_loses = solver_.position_move(blue, red2, v) != 0;
    }
    if (!red_loses) return Colour::red;

    BitGraph blue2 = blue;
    blue2.add_edge(a, b);
    const bool blue_loses = is_exact_path(blue2, game.spec().n) ||
                            solver_.position_move(blue2, red, v) != 0;
    if (!blue_loses) return Colour::blue;
    return Colour::blue;  // doomed either way; at least never hand over a C4
}

// ---------------------------------------------------------------------------
// SolverBuilder
// ---------------------------------------------------------------------------

SolverBuilder::SolverBuilder(const GameSpec& spec, int start_index) : spec_(spec) {
    solver_.begin_game(spec_);
    const StartPosition& seed = standard_starts().at(start_index);
    seed.fill(blue_, red_);
    v_ = seed.max_vertex() + 1;
}

std::pair<int, int> SolverBuilder::next_move() {
    const StoredMove stored = solver_.position_move(blue_, red_, v_);
    if (stored != 0) {
        const CanonicalForm form = canonicalize(blue_, red_, v_);
        return {form.order[(stored >> 8) & 0xff], form.order[stored & 0xff]};
    }
    // No winning move (rc=0 position): keep the game going with the first
    // legal selection so sweeps and witnesses still run to the budget.
    const std::vector<Move> moves = legal_moves(blue_, red_, v_, spec_);
    if (moves.empty()) throw InvariantError("solver builder: no legal selection left");
    return {moves.front().a, moves.front().b};
}

void SolverBuilder::observe(std::pair<int, int> edge, Colour colour) {
    (colour == Colour::red ? red_ : blue_).add_edge(edge.first, edge.second);
    v_ = std::max({v_, edge.first + 1, edge.second + 1});
}

// ---------------------------------------------------------------------------
// Engine sweep
// ---------------------------------------------------------------------------

SweepResult run_engine_sweep(const SweepOptions& opts,
                             const std::shared_ptr<BookStore>& books) {
    struct Job {
        int n = 0;
        int kind = 0;  // 0 allRed, 1 firstBlueAt(param), 2 uniformRandom(seed)
        int param = 0;
        std::uint64_t seed = 0;
    };
    std::vector<Job> jobs;
    for (int n = opts.n_lo; n <= opts.n_hi; ++n) {
        jobs.push_back({n, 0, 0, 0});
        for (int t = 1; t <= 2 * n - 3; ++t) jobs.push_back({n, 1, t, 0});
        for (int i = 0; i < opts.random_count; ++i) {
            // Derived deterministically from (base seed, n, i): results do not
            // depend on the thread schedule.
            const std::uint64_t s =
                opts.seed * 0x9e3779b97f4a7c15ull + (static_cast<std::uint64_t>(n) << 20) +
                static_cast<std::uint64_t>(i);
            jobs.push_back({n, 2, i, s});
        }
    }

    SweepResult result;
    std::mutex mu;
    std::atomic<std::size_t> next{0};

    auto run_job = [&](const Job& job) {
        std::string pname;
        switch (job.kind) {
            case 0: pname = "allRed"; break;
            case 1: pname = "firstBlueAt(" + std::to_string(job.param) + ")"; break;
            default: pname = "uniformRandom(#" + std::to_string(job.param) + ")"; break;
        }
        std::string detail;
        int rounds = 0;
        try {
            std::unique_ptr<Painter> painter;
            switch (job.kind) {
                case 0: painter = std::make_unique<AllRedPainter>(); break;
                case 1: painter = std::make_unique<FirstBlueAtPainter>(job.param); break;
                default: painter = std::make_unique<UniformRandomPainter>(job.seed); break;
            }
            EngineBuilder builder(job.n, opts.start_index, books);
            const GameSpec spec{job.n, 0, 2 * job.n - 2};
            const Transcript t =
                run_match(builder, *painter, spec, opts.start_index, Ruleset::rr);
            rounds = t.rounds;
            if (t.outcome != MatchOutcome::builder_win) {
                detail = to_string(t.outcome);
                if (!t.note.empty()) detail += ": " + t.note;
            } else {
                // Independent final-board audit from the transcript alone.
                DynGraph board;
                const StartPosition& seed = standard_starts()[opts.start_index];
                for (auto [a, b] : seed.blue) board.add_edge(a, b, Colour::blue);
                for (auto [a, b] : seed.red) board.add_edge(a, b, Colour::red);
                for (const TranscriptEntry& e : t.entries)
                    board.add_edge(e.a, e.b, e.colour);
                if (board.blue_edge_count() != job.n - 1)
                    detail = "won with " + std::to_string(board.blue_edge_count()) +
                             " blue edges";
                else if (!board.blue_exact_path(job.n))
                    detail = "won without a clean blue path";
                else if (!replay_matches(t))
                    detail = "transcript does not replay";
            }
        } catch (const std::exception& ex) {
            detail = ex.what();
        }
        std::lock_guard<std::mutex> lock(mu);
        ++result.matches;
        result.max_rounds = std::max(result.max_rounds, rounds);
        if (!detail.empty()) result.failures.push_back({job.n, pname, detail});
    };

    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= jobs.size()) return;
            run_job(jobs[i]);
        }
    };

    const int threads = std::max(1, opts.threads);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (std::thread& th : pool) th.join();
    }
    return result;
}

}  // namespace c4pn
