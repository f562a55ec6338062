// Scratch benchmark: solve the default series (optionally truncated) and
// print per-start timings and table sizes.

#include <cstdio>
#include <cstdlib>

#include "c4pn/series.hpp"

using namespace c4pn;

int main(int argc, char** argv) {
    int max_games = argc > 1 ? std::atoi(argv[1]) : 12;
    auto series = default_series();
    if (static_cast<int>(series.size()) > max_games) series.resize(max_games);
    SolveOptions opts;
    opts.progress = true;
    run_series(series, opts, [](Solver& s, const GameRecord& rec) {
        for (const auto& st : rec.starts) {
            const auto& sp = standard_starts()[st.start_index];
            if (st.skipped) {
                std::printf("rc(C4,P%d,%s,%d,%d): skipped\n", rec.spec.n, sp.name,
                            rec.spec.v, rec.spec.e);
                continue;
            }
            std::printf("rc(C4,P%d,%s,%d,%d)=%d  %.2fs  %llu uniq / %llu tot\n",
                        rec.spec.n, sp.name, rec.spec.v, rec.spec.e, st.rc, st.seconds,
                        static_cast<unsigned long long>(st.delta.unique),
                        static_cast<unsigned long long>(st.delta.total));
        }
        std::printf("  table: %zu entries\n", s.table_size());
        std::fflush(stdout);
    });
    return 0;
}
