#pragma once

// Shared lazy fixture: the strategy books backing the engine's base cases
// (P7..P13 at budget 2n-2).  Solved once per test binary into a scratch
// directory; files left over from an earlier run are reused when they still
// parse and verify, so repeated runs skip the expensive solves.

#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "c4pn/book.hpp"
#include "c4pn/engine.hpp"
#include "c4pn/series.hpp"

namespace c4pn::fixture {

inline bool book_ok(const std::filesystem::path& file, const GameSpec& spec) {
    std::ifstream in(file);
    if (!in) return false;
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        const Book book = parse_book(buf.str());
        return verify_book(book, spec).accepted;
    } catch (const std::exception&) {
        return false;
    }
}

/// Directory holding verified books for n = 7..13, solving any missing ones
/// on first use.
inline const std::string& books_dir() {
    static const std::string dir = [] {
        namespace fs = std::filesystem;
        const fs::path root = fs::temp_directory_path() / "c4pn-test-books";
        fs::create_directories(root);

        std::vector<SeriesGame> todo;
        for (int n = 7; n <= 13; ++n) {
            const GameSpec spec{n, n + 1, 2 * n - 2};
            if (!book_ok(root / BookStore::file_name(n), spec))
                todo.push_back({spec, {0, 1, 2, 3, 4, 5}});
        }
        run_series(todo, SolveOptions{}, [&](Solver& solver, const GameRecord& rec) {
            const fs::path file = root / BookStore::file_name(rec.spec.n);
            std::ofstream out(file);
            out << emit_book(solver, rec);
            if (!out) throw std::runtime_error("cannot write " + file.string());
        });
        return root.string();
    }();
    return dir;
}

inline std::shared_ptr<BookStore> books() {
    static auto store = std::make_shared<BookStore>(books_dir());
    return store;
}

}  // namespace c4pn::fixture
