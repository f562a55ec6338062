#pragma once

// Driving the solver through a series of games.  Games are solved in order;
// each game's transposition table provides move hints for the next, so the
// order of the series matters (larger games build on smaller ones).

#include <functional>
#include <string>
#include <vector>

#include "c4pn/solver.hpp"

namespace c4pn {

struct SeriesGame {
    GameSpec spec;
    std::vector<int> starts;  // indices into standard_starts(), in play order
};

// The standard twelve-game series: n = 3..13 with budget 2n-2 (plus the n=7
// budget-13 game before the budget-12 one), all six seeds each.
std::vector<SeriesGame> default_series();

// Solves every game of the series in order.  `per_game`, when set, runs after
// each game while its table is still current (used for book emission).
std::vector<GameRecord> run_series(
    const std::vector<SeriesGame>& series, const SolveOptions& opts,
    const std::function<void(Solver&, const GameRecord&)>& per_game = nullptr);

}  // namespace c4pn
