// Command-line toolkit: solving and certifying the restricted games, engine
// simulation sweeps, and interactive play.
//
// Exit codes: 0 success / accepted, 1 verification or match failure, 2
// configuration error, 3 internal invariant violation.

#include <algorithm>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "c4pn/book.hpp"
#include "c4pn/engine.hpp"
#include "c4pn/error.hpp"
#include "c4pn/game.hpp"
#include "c4pn/match.hpp"
#include "c4pn/series.hpp"
#include "c4pn/solver.hpp"

namespace {

using json = nlohmann::json;
using namespace c4pn;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::vector<SeriesGame> games;
    std::string books_dir = "books";
    bool emit_books = true;
    bool verify_after_emit = true;
    bool hints = true;
    bool progress = false;
    int threads = 1;
};

struct GameArg {
    GameSpec spec{};
    int start_index = -1;  // -1: all starts
};

int parse_int_field(const std::string& value, const std::string& key) {
    std::size_t used = 0;
    int out = 0;
    try {
        out = std::stoi(value, &used);
    } catch (const std::exception&) {
        used = std::string::npos;
    }
    if (used != value.size())
        throw ConfigError("--game: '" + key + "' needs a number, got '" + value + "'");
    return out;
}

// "n=7,v=8,e=12,start=br" with v, e defaulted to n+1 and 2n-2.
GameArg parse_game_arg(const std::string& text) {
    GameArg arg;
    int n = 0, v = -1, e = -1;
    std::istringstream in(text);
    std::string field;
    while (std::getline(in, field, ',')) {
        const auto eq = field.find('=');
        if (eq == std::string::npos)
            throw ConfigError("--game: expected key=value, got '" + field + "'");
        const std::string key = field.substr(0, eq);
        const std::string value = field.substr(eq + 1);
        if (key == "n") {
            n = parse_int_field(value, key);
        } else if (key == "v") {
            v = parse_int_field(value, key);
        } else if (key == "e") {
            e = parse_int_field(value, key);
        } else if (key == "start") {
            arg.start_index = start_index_by_tag(value);
            if (arg.start_index < 0)
                throw ConfigError("--game: unknown start '" + value + "'");
        } else {
            throw ConfigError("--game: unknown key '" + key + "'");
        }
    }
    if (n < 3) throw ConfigError("--game: needs n=<3 or more>");
    arg.spec = {n, v >= 0 ? v : n + 1, e >= 0 ? e : 2 * n - 2};
    return arg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file " + path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& ex) {
        throw ConfigError(path + ": " + ex.what());
    }
    RunConfig cfg;
    cfg.games = default_series();
    if (!doc.is_object()) throw ConfigError(path + ": top level must be an object");
    for (const auto& [key, value] : doc.items()) {
        try {
            if (key == "books_dir") {
                cfg.books_dir = value.get<std::string>();
            } else if (key == "emit_books") {
                cfg.emit_books = value.get<bool>();
            } else if (key == "verify_after_emit") {
                cfg.verify_after_emit = value.get<bool>();
            } else if (key == "hints") {
                cfg.hints = value.get<bool>();
            } else if (key == "progress") {
                cfg.progress = value.get<bool>();
            } else if (key == "threads") {
                cfg.threads = value.get<int>();
            } else if (key == "games") {
                cfg.games.clear();
                for (const json& g : value) {
                    SeriesGame game;
                    const int n = g.at("n").get<int>();
                    game.spec.n = n;
                    game.spec.v = g.value("v", n + 1);
                    game.spec.e = g.value("e", 2 * n - 2);
                    if (g.contains("starts")) {
                        for (const json& tag : g.at("starts")) {
                            const int idx = start_index_by_tag(tag.get<std::string>());
                            if (idx < 0)
                                throw ConfigError(path + ": unknown start '" +
                                                  tag.get<std::string>() + "'");
                            game.starts.push_back(idx);
                        }
                    } else {
                        game.starts = {0, 1, 2, 3, 4, 5};
                    }
                    cfg.games.push_back(std::move(game));
                }
            } else {
                throw ConfigError(path + ": unknown key '" + key + "'");
            }
        } catch (const json::exception& ex) {
            throw ConfigError(path + ": bad value for '" + key + "': " + ex.what());
        }
    }
    return cfg;
}

std::string book_file_name(const GameSpec& spec) {
    return "C4P" + std::to_string(spec.n) + "e" + std::to_string(spec.e) + ".txt";
}

std::string rc_line(const StartResult& r) {
    std::ostringstream out;
    out << "rc(C4,P" << r.spec.n << ',' << standard_starts()[r.start_index].name << ','
        << r.spec.v << ',' << r.spec.e << ")=" << r.rc;
    return out.str();
}

// ---------------------------------------------------------------------------
// solve / bench
// ---------------------------------------------------------------------------

int cmd_solve(const RunConfig& cfg) {
    SolveOptions opts;
    opts.use_hints = cfg.hints;
    opts.progress = cfg.progress;

    if (cfg.emit_books) std::filesystem::create_directories(cfg.books_dir);

    bool verify_failed = false;
    auto per_game = [&](Solver& solver, const GameRecord& rec) {
        for (const StartResult& r : rec.starts) {
            if (r.skipped) {
                std::cout << "# P" << r.spec.n << ' '
                          << standard_starts()[r.start_index].name
                          << " skipped (seed exceeds the vertex cap)\n";
                continue;
            }
            std::cout << rc_line(r) << '\n';
        }
        SolveStats sum;
        double seconds = 0.0;
        for (const StartResult& r : rec.starts) {
            sum.total += r.delta.total;
            sum.unique += r.delta.unique;
            seconds += r.seconds;
        }
        std::ostringstream stats;
        stats.setf(std::ios::fixed);
        stats.precision(2);
        stats << "# P" << rec.spec.n << " v=" << rec.spec.v << " e=" << rec.spec.e
              << ": unique=" << sum.unique << " total=" << sum.total << " time="
              << seconds << "s";
        std::cout << stats.str() << '\n';

        if (!cfg.emit_books) return;
        const std::string text = emit_book(solver, rec);
        const std::filesystem::path path =
            std::filesystem::path(cfg.books_dir) / book_file_name(rec.spec);
        std::ofstream out(path);
        if (!out || !(out << text))
            throw ConfigError("cannot write book file " + path.string());
        out.close();
        std::cout << "# wrote " << path.string() << '\n';

        if (!cfg.verify_after_emit) return;
        const Book parsed = parse_book(text);
        const VerificationReport report = verify_book(parsed, rec.spec);
        if (!report.accepted) {
            std::cout << "# REJECTED " << path.string() << ": line " << report.line
                      << " (" << to_string(report.reason) << "): " << report.detail
                      << '\n';
            verify_failed = true;
        }
    };

    run_series(cfg.games, opts, per_game);
    return verify_failed ? 1 : 0;
}

int cmd_bench(const RunConfig& cfg) {
    SolveOptions opts;
    opts.use_hints = cfg.hints;
    opts.progress = cfg.progress;
    double total_seconds = 0.0;
    std::uint64_t total_unique = 0;
    auto per_game = [&](Solver&, const GameRecord& rec) {
        SolveStats sum;
        double seconds = 0.0;
        for (const StartResult& r : rec.starts) {
            sum.total += r.delta.total;
            sum.unique += r.delta.unique;
            seconds += r.seconds;
        }
        total_seconds += seconds;
        total_unique += sum.unique;
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(2);
        line << "P" << rec.spec.n << " v=" << rec.spec.v << " e=" << rec.spec.e
             << ": " << seconds << "s unique=" << sum.unique << " total=" << sum.total;
        std::cout << line.str() << std::endl;
    };
    run_series(cfg.games, opts, per_game);
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << "series total: " << total_seconds << "s unique=" << total_unique;
    std::cout << line.str() << '\n';
    return 0;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

int cmd_verify(const std::vector<std::string>& files,
               const std::optional<GameArg>& game) {
    bool any_reject = false;
    for (const std::string& file : files) {
        std::ifstream in(file);
        if (!in) throw ConfigError("cannot read book file " + file);
        Book book;
        try {
            book = parse_book(in);
        } catch (const BookParseError& ex) {
            std::cout << "REJECT " << file << ": line " << ex.line << ": " << ex.what()
                      << '\n';
            any_reject = true;
            continue;
        }
        const GameSpec spec = game ? game->spec : book_spec(book);
        const VerificationReport report = verify_book(book, spec);
        if (report.accepted) {
            std::cout << "ACCEPT " << file << '\n';
        } else {
            std::cout << "REJECT " << file << ": line " << report.line << " ("
                      << to_string(report.reason) << ")";
            if (!report.detail.empty()) std::cout << ": " << report.detail;
            std::cout << '\n';
            any_reject = true;
        }
    }
    return any_reject ? 1 : 0;
}

// ---------------------------------------------------------------------------
// engine-sim
// ---------------------------------------------------------------------------

std::unique_ptr<Painter> make_painter(const std::string& kind, std::uint64_t seed,
                                      const GameSpec& rrc_spec, bool* wants_rrc) {
    *wants_rrc = false;
    if (kind == "allred") return std::make_unique<AllRedPainter>();
    if (kind == "random") return std::make_unique<UniformRandomPainter>(seed);
    if (kind.rfind("firstblue=", 0) == 0) {
        const int t = parse_int_field(kind.substr(10), "firstblue");
        if (t < 1) throw ConfigError("--painter: firstblue round must be positive");
        return std::make_unique<FirstBlueAtPainter>(t);
    }
    if (kind == "solver") {
        *wants_rrc = true;
        return std::make_unique<SolverOptimalPainter>(rrc_spec);
    }
    throw ConfigError("--painter: expected allred, random, firstblue=<t>, or solver");
}

int cmd_engine_sim(const std::optional<GameArg>& game, const std::string& painter_kind,
                   std::uint64_t seed, const std::string& books_dir,
                   const std::string& transcript_path, const std::string& sweep_range,
                   int random_count, int threads) {
    auto books = std::make_shared<BookStore>(books_dir);

    if (!sweep_range.empty()) {
        const auto dots = sweep_range.find("..");
        if (dots == std::string::npos)
            throw ConfigError("--sweep-n: expected a..b, got '" + sweep_range + "'");
        SweepOptions opts;
        opts.n_lo = parse_int_field(sweep_range.substr(0, dots), "sweep-n");
        opts.n_hi = parse_int_field(sweep_range.substr(dots + 2), "sweep-n");
        if (opts.n_lo < 14 || opts.n_hi < opts.n_lo)
            throw ConfigError("--sweep-n: range must be 14 or higher and ascending");
        opts.random_count = random_count;
        opts.seed = seed;
        opts.threads = threads;
        opts.start_index = game && game->start_index >= 0 ? game->start_index : 0;

        int matches = 0, failures = 0;
        for (int n = opts.n_lo; n <= opts.n_hi; ++n) {
            SweepOptions one = opts;
            one.n_lo = one.n_hi = n;
            const SweepResult r = run_engine_sweep(one, books);
            matches += r.matches;
            failures += static_cast<int>(r.failures.size());
            std::cout << "n=" << n << ": " << r.matches << " matches, "
                      << r.failures.size() << " failures, longest win " << r.max_rounds
                      << " rounds\n";
            for (const SweepFailure& f : r.failures)
                std::cout << "  FAIL vs " << f.painter << ": " << f.detail << '\n';
        }
        std::cout << "sweep total: " << matches << " matches, " << failures
                  << " failures\n";
        return failures == 0 ? 0 : 1;
    }

    if (!game) throw ConfigError("engine-sim needs --game or --sweep-n");
    const int n = game->spec.n;
    const int start = game->start_index >= 0 ? game->start_index : 0;

    const GameSpec rrc_spec{n, n + 1, 2 * n - 2};
    bool wants_rrc = false;
    std::unique_ptr<Painter> painter = make_painter(painter_kind, seed, rrc_spec, &wants_rrc);
    if (wants_rrc && n > 13)
        throw ConfigError("--painter solver: exact play needs n <= 13");

    EngineBuilder builder(n, start, books);
    const GameSpec spec = wants_rrc ? rrc_spec : GameSpec{n, 0, game->spec.e};
    const Ruleset rules = wants_rrc ? Ruleset::rrc : Ruleset::rr;
    const Transcript t = run_match(builder, *painter, spec, start, rules);

    const std::string text = serialize_transcript(t);
    if (!transcript_path.empty()) {
        std::ofstream out(transcript_path);
        if (!out || !(out << text))
            throw ConfigError("cannot write transcript " + transcript_path);
        std::cout << "wrote " << transcript_path << '\n';
    } else {
        std::cout << text;
    }
    if (!replay_matches(t)) throw InvariantError("transcript does not replay");
    std::cout << to_string(t.outcome) << " in " << t.rounds << " rounds\n";
    return t.outcome == MatchOutcome::builder_win ? 0 : 1;
}

// ---------------------------------------------------------------------------
// play
// ---------------------------------------------------------------------------

void print_board(const DynGraph& board) {
    std::cout << "  red: ";
    for (auto [a, b] : board.edges(Colour::red)) std::cout << ' ' << a << '-' << b;
    std::cout << "\n  blue:";
    for (auto [a, b] : board.edges(Colour::blue)) std::cout << ' ' << a << '-' << b;
    std::cout << '\n';
}

int cmd_play(const std::optional<GameArg>& game, const std::string& builder_kind,
             const std::string& books_dir, const std::string& transcript_path) {
    if (!game) throw ConfigError("play needs --game");
    const int n = game->spec.n;
    const int start = game->start_index >= 0 ? game->start_index : 0;
    if (builder_kind == "book") {
        if (n > 13) throw ConfigError("--builder book replays solved games (n <= 13)");
    } else if (builder_kind != "engine") {
        throw ConfigError("--builder: expected engine or book");
    }

    auto books = std::make_shared<BookStore>(books_dir);
    EngineBuilder builder(n, start, books);
    const GameSpec spec{n, 0, 2 * n - 2};
    LiveGame live(spec, start, Ruleset::rr);

    Transcript t;
    t.spec = spec;
    t.start_index = start;
    t.rules = Ruleset::rr;

    std::cout << "You are Painter in RR(C4,P" << n << ','
              << standard_starts()[start].name << "): answer r or b each round, p "
              << "prints the board, q quits.  Budget " << live.budget() << " rounds.\n";
    if (!live.board().empty()) print_board(live.board());

    bool quit = false;
    while (!live.builder_won() && !live.exhausted() && !quit) {
        const auto edge = builder.next_move();
        const std::string phase = builder.phase();
        std::cout << "round " << live.rounds() + 1 << "/" << live.budget()
                  << ": Builder selects " << edge.first << '-' << edge.second << " ["
                  << phase << "]\n";
        for (;;) {
            std::cout << "colour? ";
            std::cout.flush();
            std::string answer;
            if (!std::getline(std::cin, answer)) {
                quit = true;
                break;
            }
            if (answer == "q" || answer == "quit") {
                quit = true;
                break;
            }
            if (answer == "p") {
                print_board(live.board());
                continue;
            }
            Colour colour;
            if (answer == "r" || answer == "red")
                colour = Colour::red;
            else if (answer == "b" || answer == "blue")
                colour = Colour::blue;
            else {
                std::cout << "  (r, b, p, or q)\n";
                continue;
            }
            if (!live.painter_colour_legal(edge, colour)) {
                std::cout << "  red would complete a red C4 - forbidden here, "
                          << "Painter must answer blue\n";
                continue;
            }
            live.apply(edge, colour);
            t.entries.push_back(
                {live.rounds(), edge.first, edge.second, colour, phase});
            builder.observe(edge, colour);
            break;
        }
    }

    t.rounds = live.rounds();
    if (live.builder_won()) {
        t.outcome = MatchOutcome::builder_win;
        std::cout << "Builder completed the blue P" << n << " in " << live.rounds()
                  << " rounds.\n";
    } else if (live.exhausted()) {
        t.outcome = MatchOutcome::painter_survive;
        std::cout << "You survived the budget - this should be impossible; "
                  << "please report the transcript.\n";
    } else {
        t.outcome = MatchOutcome::painter_survive;
        t.note = "session quit after round " + std::to_string(live.rounds());
        std::cout << "Quit after round " << live.rounds() << ".\n";
    }

    const std::string text = serialize_transcript(t);
    if (!transcript_path.empty()) {
        std::ofstream out(transcript_path);
        if (!out || !(out << text))
            throw ConfigError("cannot write transcript " + transcript_path);
        std::cout << "transcript saved to " << transcript_path << '\n';
    } else {
        std::cout << text;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"red-C4 vs blue-path online Ramsey toolkit"};
    app.require_subcommand(1);

    std::string config_path, game_text, books_dir, transcript_path;
    std::string painter_kind = "allred", builder_kind = "engine", sweep_range;
    std::uint64_t seed = 1;
    int random_count = 100, threads = 1;
    bool no_hints = false, no_books = false, no_verify = false, progress = false;
    std::vector<std::string> verify_files;

    CLI::App* solve = app.add_subcommand("solve", "solve games and emit strategy books");
    solve->add_option("--config", config_path, "JSON config (default: built-in series)");
    solve->add_option("--game", game_text, "single game n=..[,v=..][,e=..][,start=..]");
    solve->add_option("--books-dir", books_dir, "book output directory");
    solve->add_flag("--no-hints", no_hints, "disable move hints between games");
    solve->add_flag("--no-books", no_books, "skip book emission");
    solve->add_flag("--no-verify", no_verify, "skip verification after emission");
    solve->add_flag("--progress", progress, "progress cadence on stderr");

    CLI::App* verify = app.add_subcommand("verify", "verify strategy book files");
    verify->add_option("files", verify_files, "book files")->required();
    verify->add_option("--game", game_text, "expected game n=..[,v=..][,e=..]");

    CLI::App* sim = app.add_subcommand("engine-sim", "engine vs painter matches");
    sim->add_option("--game", game_text, "game n=..[,start=..]");
    sim->add_option("--painter", painter_kind,
                    "allred | random | firstblue=<t> | solver");
    sim->add_option("--seed", seed, "random painter seed");
    sim->add_option("--books-dir", books_dir, "strategy book directory");
    sim->add_option("--transcript", transcript_path, "write the transcript here");
    sim->add_option("--sweep-n", sweep_range, "sweep the full painter set over n=a..b");
    sim->add_option("--random-count", random_count, "random painters per n in sweeps");
    sim->add_option("--threads", threads, "worker threads for sweeps");

    CLI::App* play = app.add_subcommand("play", "interactive match: you are Painter");
    play->add_option("--game", game_text, "game n=..[,start=..]");
    play->add_option("--builder", builder_kind, "engine | book");
    play->add_option("--books-dir", books_dir, "strategy book directory");
    play->add_option("--transcript", transcript_path, "save the transcript here");

    CLI::App* bench = app.add_subcommand("bench", "time the solver series");
    bench->add_option("--config", config_path, "JSON config (default: built-in series)");
    bench->add_option("--game", game_text, "single game n=..[,v=..][,e=..][,start=..]");
    bench->add_flag("--no-hints", no_hints, "disable move hints between games");
    bench->add_flag("--progress", progress, "progress cadence on stderr");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        app.exit(e);
        return 2;
    }

    try {
        std::optional<GameArg> game;
        if (!game_text.empty()) game = parse_game_arg(game_text);

        if (solve->parsed() || bench->parsed()) {
            RunConfig cfg;
            if (!config_path.empty()) cfg = load_config(config_path);
            else cfg.games = default_series();
            if (game) {
                SeriesGame g{game->spec, {0, 1, 2, 3, 4, 5}};
                if (game->start_index >= 0) g.starts = {game->start_index};
                cfg.games = {g};
            }
            if (!books_dir.empty()) cfg.books_dir = books_dir;
            if (no_hints) cfg.hints = false;
            if (no_books) cfg.emit_books = false;
            if (no_verify) cfg.verify_after_emit = false;
            if (progress) cfg.progress = true;
            return solve->parsed() ? cmd_solve(cfg) : cmd_bench(cfg);
        }
        if (verify->parsed()) return cmd_verify(verify_files, game);
        if (sim->parsed())
            return cmd_engine_sim(game, painter_kind, seed,
                                  books_dir.empty() ? "books" : books_dir,
                                  transcript_path, sweep_range, random_count, threads);
        if (play->parsed())
            return cmd_play(game, builder_kind, books_dir.empty() ? "books" : books_dir,
                            transcript_path);
        return 2;
    } catch (const InvariantError& ex) {
        std::cerr << "internal invariant violation: " << ex.what() << '\n';
        return 3;
    } catch (const ConfigError& ex) {
        std::cerr << "config error: " << ex.what() << '\n';
        return 2;
    } catch (const BookUnavailable& ex) {
        std::cerr << "config error: " << ex.what() << '\n';
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 2;
    }
}
