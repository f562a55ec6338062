#include "c4pn/series.hpp"

namespace c4pn {

std::vector<SeriesGame> default_series() {
    std::vector<SeriesGame> s;
    const std::vector<int> all = {0, 1, 2, 3, 4, 5};
    auto add = [&](int n, int v, int e) { s.push_back({GameSpec{n, v, e}, all}); };
    add(3, 4, 6);
    add(4, 5, 8);
    add(5, 6, 9);
    add(6, 7, 11);
    add(7, 8, 13);
    add(7, 8, 12);
    add(8, 9, 14);
    add(9, 10, 16);
    add(10, 11, 18);
    add(11, 12, 20);
    add(12, 13, 22);
    add(13, 14, 24);
    return s;
}

std::vector<GameRecord> run_series(
    const std::vector<SeriesGame>& series, const SolveOptions& opts,
    const std::function<void(Solver&, const GameRecord&)>& per_game) {
    std::vector<GameRecord> out;
    Solver solver(opts);
    for (const SeriesGame& g : series) {
        solver.begin_game(g.spec);
        GameRecord rec;
        rec.spec = g.spec;
        for (int start : g.starts) rec.starts.push_back(solver.solve_start(start));
        if (per_game) per_game(solver, rec);
        out.push_back(std::move(rec));
    }
    return out;
}

}  // namespace c4pn
