#include "c4pn/engine.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>

#include "c4pn/error.hpp"

namespace c4pn {

const char* phase_name(Phase p) {
    switch (p) {
        case Phase::Stage1: return "Stage1";
        case Phase::Stage2: return "Stage2";
        case Phase::Stage3: return "Stage3";
        case Phase::BlueCaseScript: return "BlueCaseScript";
        case Phase::ButterflyForce: return "ButterflyForce";
        case Phase::MaloEndgame: return "MaloEndgame";
        case Phase::BaseCaseBook: return "BaseCaseBook";
        case Phase::Done: return "Done";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Book-backed play
// ---------------------------------------------------------------------------

BookIndex::BookIndex(std::shared_ptr<const Book> book)
    : book_(std::move(book)), spec_(book_spec(*book_)) {
    std::size_t total = 0;
    for (const BookSection& s : book_->sections) total += s.nodes.size();
    nodes_.reserve(total);
    roots_.assign(standard_starts().size(), -1);

    std::map<int, int> line_to_flat;
    std::vector<std::pair<int, int>> stack;  // (depth, flat index) of open nodes
    std::vector<int> backref_lines(total, 0);

    for (const BookSection& section : book_->sections) {
        if (section.start_index >= 0 &&
            section.start_index < static_cast<int>(roots_.size()) && section.rc == 1 &&
            !section.nodes.empty())
            roots_[section.start_index] = static_cast<int>(nodes_.size());
        stack.clear();
        for (const BookNode& src : section.nodes) {
            const int flat = static_cast<int>(nodes_.size());
            TreeNode node;
            node.move = src.move;
            int vmax = -1;
            for (auto [a, b] : src.red_edges) vmax = std::max({vmax, a, b});
            for (auto [a, b] : src.blue_edges) vmax = std::max({vmax, a, b});
            node.v = vmax + 1;
            node.src = &src;
            backref_lines[flat] = src.backref;

            while (!stack.empty() && stack.back().first >= src.depth) stack.pop_back();
            if (!stack.empty()) {
                TreeNode& parent = nodes_[stack.back().second];
                const bool red_grew =
                    src.red_edges.size() == parent.src->red_edges.size() + 1;
                const bool blue_grew =
                    src.blue_edges.size() == parent.src->blue_edges.size() + 1;
                if (red_grew == blue_grew)
                    throw InvariantError("book index: child grew by not exactly one edge");
                (red_grew ? parent.red_child : parent.blue_child) = flat;
            }
            if (src.backref == 0) stack.emplace_back(src.depth, flat);
            line_to_flat.emplace(src.line, flat);
            nodes_.push_back(std::move(node));
        }
    }
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (backref_lines[i] == 0) continue;
        const auto it = line_to_flat.find(backref_lines[i]);
        if (it == line_to_flat.end())
            throw InvariantError("book index: back-reference to an unknown line");
        nodes_[i].backref = it->second;
    }
}

int BookIndex::root(int start_index) const {
    if (start_index < 0 || start_index >= static_cast<int>(roots_.size())) return -1;
    return roots_[start_index];
}

CanonicalForm BookIndex::form(int i) const {
    const BookNode& src = *nodes_[i].src;
    BitGraph blue, red;
    for (auto [a, b] : src.red_edges) red.add_edge(a, b);
    for (auto [a, b] : src.blue_edges) blue.add_edge(a, b);
    return canonicalize(blue, red, nodes_[i].v);
}

std::string BookStore::file_name(int n) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "C4P%de%d.txt", n, 2 * n - 2);
    return buf;
}

std::shared_ptr<const BookIndex> BookStore::index(int n, int start_index) {
    std::lock_guard<std::mutex> lock(mu_);

    std::shared_ptr<const Book> book;
    if (auto it = books_.find(n); it != books_.end()) {
        book = it->second;
    } else {
        const std::string path = dir_ + "/" + file_name(n);
        std::ifstream in(path);
        if (!in) throw BookUnavailable("missing book file " + path);
        Book parsed;
        try {
            parsed = parse_book(in);
        } catch (const BookParseError& e) {
            throw BookUnavailable(path + ": line " + std::to_string(e.line) + ": " +
                                  e.what());
        }
        const GameSpec expected{n, n + 1, 2 * n - 2};
        if (!(book_spec(parsed) == expected))
            throw BookUnavailable(path + ": header claims a different game");
        VerificationReport report = verify_book(parsed, expected);
        if (!report.accepted)
            throw BookUnavailable(path + ": rejected at line " + std::to_string(report.line) +
                                  " (" + to_string(report.reason) + "): " + report.detail);
        book = std::make_shared<const Book>(std::move(parsed));
        books_.emplace(n, book);
    }

    const BookSection* wanted = nullptr;
    for (const BookSection& section : book->sections)
        if (section.start_index == start_index) wanted = &section;
    if (!wanted)
        throw BookUnavailable(file_name(n) + ": no section for start " +
                              standard_starts()[start_index].name);
    if (wanted->rc != 1)
        throw BookUnavailable(file_name(n) + ": start " +
                              standard_starts()[start_index].name +
                              " records rc=0, no strategy to replay");

    if (auto it = maps_.find(n); it != maps_.end()) return it->second;
    auto index = std::make_shared<const BookIndex>(book);
    maps_.emplace(n, index);
    return index;
}

BookPlayer::BookPlayer(std::shared_ptr<const BookIndex> index, int start_index,
                       const DynGraph& board, const std::vector<int>& seed_path,
                       int first_fresh_id)
    : index_(std::move(index)), next_fresh_(first_fresh_id) {
    cur_ = index_->root(start_index);
    if (cur_ < 0) throw InvariantError("book replay: no winning section for this start");
    if (seed_path.size() > to_live_.size())
        throw InvariantError("book replay: seed path too long");
    to_live_.fill(-1);
    for (std::size_t i = 0; i < seed_path.size(); ++i)
        to_live_[i] = seed_path[i];
    v_ = static_cast<int>(seed_path.size());

    // The section root prints the seed layout itself, so the live board must
    // match it edge for edge under the path binding.
    const BookNode& src = *index_->at(cur_).src;
    if (index_->at(cur_).v != v_ ||
        board.edge_count() !=
            static_cast<int>(src.red_edges.size() + src.blue_edges.size()))
        throw InvariantError("book replay: live board is not the book's seed");
    auto check = [&](const std::vector<std::pair<int, int>>& list, Colour colour) {
        for (auto [a, b] : list) {
            if (a >= v_ || b >= v_)
                throw InvariantError("book replay: seed prints an unbound label");
            const auto got = board.edge_colour(to_live_[a], to_live_[b]);
            if (!got || *got != colour)
                throw InvariantError("book replay: live board is not the book's seed");
        }
    };
    check(src.red_edges, Colour::red);
    check(src.blue_edges, Colour::blue);

    resolve_backrefs();
}

std::pair<int, int> BookPlayer::next_move() {
    if (finished_ || cur_ < 0)
        throw InvariantError("book replay: the strategy is complete");
    if (pending_fresh_ != 0)
        throw InvariantError("book replay: previous selection not observed");
    const Move move = index_->at(cur_).move;
    const int hi = std::max<int>(move.a, move.b);
    const int lo = std::min<int>(move.a, move.b);
    if (hi >= v_ + 2 || (hi == v_ + 1 && lo != v_) ||
        hi >= static_cast<int>(to_live_.size()))
        throw InvariantError("book replay: move skips a vertex slot");
    auto bind = [&](int label) {
        if (label < v_) return to_live_[label];
        const int id = next_fresh_ + (label - v_);
        to_live_[label] = id;
        pending_fresh_ = std::max(pending_fresh_, label - v_ + 1);
        return id;
    };
    const int a = bind(move.a);
    const int b = bind(move.b);
    if (a == b || a < 0 || b < 0) throw InvariantError("book replay: degenerate move");
    return {a, b};
}

void BookPlayer::observe(std::pair<int, int> edge, Colour colour) {
    (void)edge;  // the engine already matched it against the pending selection
    if (finished_ || cur_ < 0)
        throw InvariantError("book replay: observe after the end");
    v_ += pending_fresh_;
    next_fresh_ += pending_fresh_;
    pending_fresh_ = 0;

    const BookIndex::TreeNode& node = index_->at(cur_);
    const int child = (colour == Colour::red) ? node.red_child : node.blue_child;
    if (child < 0) {
        // Red replies that close a red C4 are handled before the walk sees
        // them, so a legal red reply always has a branch; a missing blue
        // branch means this reply completed the path.
        if (colour == Colour::red)
            throw InvariantError("book replay: legal red reply missing from the book");
        finished_ = true;
        cur_ = -1;
        return;
    }
    cur_ = child;
    if (index_->at(cur_).v != v_)
        throw InvariantError("book replay: vertex count out of step with the book");
    resolve_backrefs();
}

void BookPlayer::resolve_backrefs() {
    const BookIndex::TreeNode& node = index_->at(cur_);
    if (node.backref < 0) return;
    const int target = node.backref;
    const CanonicalForm here = index_->form(cur_);
    const CanonicalForm there = index_->form(target);
    if (!(here.key == there.key))
        throw InvariantError("book replay: back-reference joins different positions");
    const auto to = iso_witness(here, there);
    std::array<int, 16> remapped;
    remapped.fill(-1);
    for (int x = 0; x < v_; ++x) remapped[to[x]] = to_live_[x];
    to_live_ = remapped;
    cur_ = target;
    if (index_->at(cur_).backref >= 0)
        throw InvariantError("book replay: chained back-reference");
    if (index_->at(cur_).v != v_)
        throw InvariantError("book replay: back-reference changes the vertex count");
}

// ---------------------------------------------------------------------------
// Blue-case decision scripts
// ---------------------------------------------------------------------------
//
// Each tree handles the position after an early first blue reply.  Slots are
// position-local vertex names bound to board ids when the tree is entered; a
// slot first seen in a `select` is a fresh vertex.  Leaves list selections
// that are forced blue, then the blue-path contractions to perform, then the
// residual seed (a standard start) the shrunken game continues from, spelled
// as the slots along the residual path.  A `forbidden` branch marks a reply
// that would close a red C4 and so can never be chosen; it is the "n/a" cell
// of the decision table it encodes.

namespace script {

struct SEdge {
    int a, b;
};

struct Contraction {
    std::vector<int> path;
    int m;
    bool replace_red = false;
};

struct Leaf {
    std::vector<SEdge> forced;
    std::vector<Contraction> contractions;
    int residual_start;
    std::vector<int> residual;
};

struct Tree;

struct Step {
    enum class Kind { node, leaf, forbidden, jump };
    Kind kind = Kind::forbidden;
    int index = 0;
    const Tree* tree = nullptr;
    std::vector<int> bind;  // target slot i <- current slot bind[i]
};

struct Node {
    SEdge select;
    Step red, blue;
};

struct Tree {
    const char* name;
    std::vector<Node> nodes;
    std::vector<Leaf> leaves;
};

Step to_node(int i) { return {Step::Kind::node, i, nullptr, {}}; }
Step to_leaf(int i) { return {Step::Kind::leaf, i, nullptr, {}}; }
Step forbidden() { return {Step::Kind::forbidden, 0, nullptr, {}}; }
Step jump(const Tree& tree, int node, std::vector<int> bind) {
    return {Step::Kind::jump, node, &tree, std::move(bind)};
}

constexpr int kStartB = 1, kStartBr = 2, kStartBrr = 3, kStartBrb = 4, kStartBrrb = 5;

// First blue in round 7: five forced selections, then one long contraction.
const Tree& t7_tree() {
    static const Tree t = {
        "t7",
        {},
        {{{{4, 2}, {2, 5}, {5, 3}, {3, 6}, {6, 1}},
          {{{7, 4, 2, 5, 3, 6, 1}, 11}},
          kStartBr,
          {7, 1, 0}}},
    };
    return t;
}

const Tree& t6_tree() {
    static const Tree t = {
        "t6",
        {},
        {{{{2, 4}, {4, 3}, {3, 5}},
          {{{6, 2, 4, 3, 5}, 7}},
          kStartBrr,
          {6, 5, 1, 0}}},
    };
    return t;
}

const Tree& t5_tree() {
    static const Tree t = {
        "t5",
        {{{2, 6}, to_leaf(0), to_leaf(1)}},
        {
            {{{1, 6}, {6, 3}, {3, 4}, {4, 2}},
             {{{5, 1, 6, 3, 4, 2}, 9}},
             kStartBr,
             {5, 2, 0}},
            {{{2, 4}, {4, 3}}, {{{6, 2, 4, 3}, 5}}, kStartBrrb, {6, 3, 0, 1, 5}},
        },
    };
    return t;
}

const Tree& t4_tree() {
    static const Tree t = {
        "t4",
        {
            {{1, 5}, jump(t5_tree(), 0, {0, 1, 2, 3, 5, 4}), to_node(1)},
            {{3, 5}, to_leaf(1), to_leaf(0)},
        },
        {
            {{}, {{{4, 1, 5, 3}, 4}}, kStartBrr, {4, 3, 0, 2}},
            {{{5, 2}}, {{{4, 1, 5, 2}, 5}}, kStartBrr, {4, 2, 0, 3}},
        },
    };
    return t;
}

// Position after round 3's (0,3) comes back blue: red 01 02, blue 03, then
// two probing selections at the second scaffold center.
const Tree& table_a_tree();
const Tree& table_b_tree();

const Tree& t3_tree() {
    static const Tree t = {
        "t3",
        {
            {{2, 4}, to_node(1), to_node(2)},
            {{2, 5}, jump(t5_tree(), 0, {2, 0, 4, 5, 1, 3}),
             jump(table_a_tree(), 0, {0, 1, 2, 3, 4, 5})},
            {{2, 5}, jump(table_a_tree(), 0, {0, 1, 2, 3, 5, 4}),
             jump(table_b_tree(), 0, {0, 1, 2, 3, 4, 5})},
        },
        {},
    };
    return t;
}

// Entry position: red 01 02 24, blue 03 25.
const Tree& table_a_tree() {
    static const Tree t = {
        "A",
        {
            {{2, 6}, to_node(2), to_node(1)},
            {{0, 5}, to_leaf(1), to_leaf(0)},
            {{6, 7}, to_leaf(2), to_node(3)},
            {{5, 0}, to_leaf(3), to_leaf(4)},
        },
        {
            {{}, {{{3, 0, 5, 2, 6}, 7}}, kStartB, {3, 6}},
            {{{5, 4}, {4, 1}}, {{{6, 2, 5, 4, 1}, 7}}, kStartBrb, {6, 1, 0, 3}},
            {{{6, 1}, {1, 4}, {4, 7}, {7, 0}},
             {{{3, 0, 7, 4, 1, 6}, 9}},
             kStartBrb,
             {3, 6, 2, 5}},
            {{{6, 1}, {1, 4}, {4, 5}}, {{{7, 6, 1, 4, 5, 2}, 9}}, kStartBrb, {7, 2, 0, 3}},
            {{{6, 1}, {1, 4}},
             {{{7, 6, 1, 4}, 5}, {{3, 0, 5, 2}, 4}},
             kStartBrb,
             {7, 4, 2, 3}},
        },
    };
    return t;
}

// Entry position: red 01 02, blue 03 24 25.
const Tree& table_b_tree() {
    static const Tree t = {
        "B",
        {
            {{1, 3}, to_node(1), to_node(2)},
            {{3, 5}, to_node(3), to_leaf(0)},
            {{0, 5}, to_leaf(2), to_leaf(3)},
            {{0, 5}, forbidden(), to_leaf(1)},
        },
        {
            {{}, {{{4, 2, 5, 3, 0}, 6}}, kStartBr, {4, 0, 1}},
            {{}, {{{4, 2, 5, 0, 3}, 7}}, kStartBr, {4, 3, 1}},
            {{}, {{{4, 2, 5}, 3}, {{0, 3, 1}, 3, true}}, kStartBrb, {4, 5, 0, 1}},
            {{}, {{{4, 2, 5, 0, 3, 1}, 7}}, kStartB, {4, 1}},
        },
    };
    return t;
}

// Seed: blue 20, red 01, blue 13 (path 2-0-1-3).
const Tree& table_c_tree() {
    static const Tree t = {
        "C",
        {
            {{1, 4}, to_node(1), to_node(2)},
            {{4, 3}, to_leaf(0), to_leaf(1)},
            {{0, 4}, to_leaf(2), to_leaf(3)},
        },
        {
            {{{0, 3}}, {{{2, 0, 3, 1}, 5}}, kStartBr, {2, 1, 4}},
            {{}, {{{1, 3, 4}, 3, true}}, kStartBrb, {2, 0, 1, 4}},
            {{}, {{{4, 1, 3}, 3}}, kStartBrb, {2, 0, 4, 3}},
            {{}, {{{2, 0, 4, 1, 3}, 5}}, kStartB, {2, 3}},
        },
    };
    return t;
}

// Seed: blue 20, red 01, red 13 (path 2-0-1-3).
const Tree& table_d_tree() {
    static const Tree t = {
        "D",
        {
            {{3, 4}, to_node(2), to_node(1)},
            {{4, 1}, to_node(3), to_leaf(0)},
            {{4, 0}, forbidden(), to_leaf(3)},
            {{3, 5}, to_leaf(1), to_leaf(2)},
        },
        {
            {{}, {{{1, 4, 3}, 3, true}}, kStartBrb, {2, 0, 1, 3}},
            {{{4, 5}, {5, 0}}, {{{2, 0, 5, 4, 3}, 7}}, kStartBr, {2, 3, 1}},
            {{}, {{{4, 3, 5}, 3}}, kStartBrrb, {2, 0, 1, 4, 5}},
            {{}, {{{2, 0, 4}, 3}}, kStartBrr, {2, 4, 3, 1}},
        },
    };
    return t;
}

// Seed: red 01, blue 02 (path 2-0-1).
const Tree& br_tree() {
    static const Tree t = {
        "br",
        {{{1, 3}, jump(table_d_tree(), 0, {0, 1, 2, 3}),
          jump(table_c_tree(), 0, {0, 1, 2, 3})}},
        {},
    };
    return t;
}

// Seed: blue 01.
const Tree& b_tree() {
    static const Tree t = {
        "b",
        {{{1, 2}, jump(br_tree(), 0, {1, 2, 0}), to_leaf(0)}},
        {{{}, {{{0, 1, 2}, 2}}, kStartB, {0, 2}}},
    };
    return t;
}

}  // namespace script

// ---------------------------------------------------------------------------
// Engine
// ---------------------------------------------------------------------------

namespace {

constexpr int kStartEmpty = 0;

// Stage 1, played when the seed is empty: rounds 1..7 on labels u0..u7.
constexpr std::pair<int, int> kStage1[7] = {{0, 1}, {2, 0}, {0, 3}, {1, 4},
                                            {1, 5}, {6, 2}, {4, 7}};

void check_start_tags() {
    static const bool checked = [] {
        const char* tags[6] = {"empty", "b", "br", "brr", "brb", "brrb"};
        for (int i = 0; i < 6; ++i)
            if (start_index_by_tag(tags[i]) != i)
                throw InvariantError("standard start order changed");
        return true;
    }();
    (void)checked;
}

std::vector<int> sorted_without(const std::set<int>& in, std::initializer_list<int> drop,
                                const std::vector<int>& also_drop = {}) {
    std::vector<int> out;
    for (int v : in) {
        if (std::find(drop.begin(), drop.end(), v) != drop.end()) continue;
        if (std::find(also_drop.begin(), also_drop.end(), v) != also_drop.end()) continue;
        out.push_back(v);
    }
    return out;
}

std::vector<int> blue_walk(const DynGraph& board, int from) {
    if (board.blue_degree(from) != 1)
        throw InvariantError("engine: blue walk must start at a path end");
    std::vector<int> path = {from};
    int prev = -1, cur = from;
    while (true) {
        int next = -1;
        for (int w : board.blue_neighbours(cur))
            if (w != prev) next = w;
        if (next < 0) break;
        prev = cur;
        cur = next;
        path.push_back(cur);
    }
    return path;
}

}  // namespace

Engine::Engine(int n, int start_index, std::shared_ptr<BookStore> books)
    : n_(n), start_index_(start_index), books_(std::move(books)) {
    check_start_tags();
    if (!books_) throw InvariantError("engine: a book store is required");
    if (n_ < 3) throw InvariantError("engine: target path needs at least 3 vertices");
    const auto& starts = standard_starts();
    if (start_index_ < 0 || start_index_ >= static_cast<int>(starts.size()))
        throw InvariantError("engine: bad start index");
    const StartPosition& seed = starts[start_index_];
    for (auto [a, b] : seed.blue) {
        board_.add_edge(a, b, Colour::blue);
        real_.add_edge(a, b, Colour::blue);
    }
    for (auto [a, b] : seed.red) {
        board_.add_edge(a, b, Colour::red);
        real_.add_edge(a, b, Colour::red);
    }
    budget_ = 2 * n_ - 2 - board_.edge_count();
    fresh_ = board_.max_vertex() + 1;
    cur_n_ = n_;
    slots_.fill(-1);

    if (n_ <= 13) {
        std::vector<int> path(seed.max_vertex() + 1);
        for (std::size_t i = 0; i < path.size(); ++i) path[i] = static_cast<int>(i);
        enter_book_for(start_index_, path);
    } else if (start_index_ == kStartEmpty) {
        mode_ = Mode::stage1;
    } else {
        std::vector<int> path(seed.max_vertex() + 1);
        for (std::size_t i = 0; i < path.size(); ++i) path[i] = static_cast<int>(i);
        enter_child(start_index_, path, "seed");
    }
}

bool Engine::done() const { return mode_ == Mode::done; }

Phase Engine::phase() const {
    switch (mode_) {
        case Mode::stage1: return Phase::Stage1;
        case Mode::stage2:
        case Mode::jcase: return Phase::Stage2;
        case Mode::stage3:
        case Mode::stage3_blue: return Phase::Stage3;
        case Mode::script: return Phase::BlueCaseScript;
        case Mode::force: return move_phase_;  // set when the plan was queued
        case Mode::malo: return Phase::MaloEndgame;
        case Mode::book: return Phase::BaseCaseBook;
        case Mode::done: return Phase::Done;
    }
    return Phase::Done;
}

int Engine::fresh_vertex() { return fresh_++; }

int Engine::slot_id(int slot) {
    if (slot < 0 || slot >= static_cast<int>(slots_.size()))
        throw InvariantError("engine: slot out of range");
    return slots_[slot];
}

std::pair<int, int> Engine::slot_edge(int a, int b) {
    int ia = slot_id(a), ib = slot_id(b);
    if (ia < 0 && ib < 0) throw InvariantError("engine: two fresh slots in one selection");
    if (ia < 0) ia = slots_[a] = fresh_vertex();
    if (ib < 0) ib = slots_[b] = fresh_vertex();
    return {ia, ib};
}

std::string Engine::classify_first_blue(int n, int t) {
    if (n < 14) throw InvariantError("staged plan needs n >= 14");
    const int rounds = n - 1;  // selections before the no-blue endgame
    if (t < 1 || t > rounds) throw InvariantError("first blue round out of range");
    if (n % 2 == 1 && t == n - 1) return "stage3";
    if (t <= 7) return "t" + std::to_string(t);
    if (t == n - 1) return "j1";
    if (t == n - 2) return "j2";
    if (t == n - 3) return "j3";
    if (n % 2 == 0 && t == n - 4) return "j4";
    if (t == 8) return "t8";
    if (t == 9) return "t9";
    if (t % 2 == 0) {
        if (t < 10 || t > n - 5) throw InvariantError("even first blue outside staged plan");
        return "even";
    }
    if (t < 11 || t > n - 4) throw InvariantError("odd first blue outside staged plan");
    return "odd";
}

std::pair<int, int> Engine::next_move() {
    if (mode_ == Mode::done)
        throw InvariantError("engine: game already decided");
    if (pending_) throw InvariantError("engine: previous selection not observed");

    std::pair<int, int> edge;
    switch (mode_) {
        case Mode::stage1:
            edge = kStage1[rounds_];
            break;
        case Mode::stage2: {
            const int r = rounds_ + 1;
            const int center = (r % 2 == 0) ? 0 : 1;
            const int pendant = fresh_vertex();
            if (pendant != r) throw InvariantError("engine: stage labels out of step");
            edge = {center, pendant};
            break;
        }
        case Mode::stage3: {
            const int pendant = fresh_vertex();
            if (pendant != n_ - 1) throw InvariantError("engine: stage labels out of step");
            edge = {n_ - 2, pendant};
            break;
        }
        case Mode::stage3_blue:
            edge = {n_ - 1, n_ - 3};
            break;
        case Mode::jcase: {
            const int r = rounds_ + 1;
            const int center = (jcase_idx_ % 2 == 0) ? 1 : 0;
            const int pendant = fresh_vertex();
            if (pendant != r) throw InvariantError("engine: stage labels out of step");
            edge = {center, pendant};
            break;
        }
        case Mode::script: {
            const auto* tree = static_cast<const script::Tree*>(tree_);
            const script::Node& node = tree->nodes[node_];
            edge = slot_edge(node.select.a, node.select.b);
            // A forbidden red branch marks a selection Painter must answer
            // blue; make sure the red C4 really is there.
            if (node.red.kind == script::Step::Kind::forbidden &&
                !board_.red_c4_with(edge.first, edge.second))
                throw InvariantError("engine: scripted forced selection is not forced");
            break;
        }
        case Mode::force: {
            edge = plan_[plan_i_];
            if (!board_.red_c4_with(edge.first, edge.second))
                throw InvariantError("engine: planned forced selection is not forced");
            break;
        }
        case Mode::malo:
            edge = malo_next();
            break;
        case Mode::book:
            edge = book_->next_move();
            break;
        case Mode::done:
            break;
    }

    if (edge.first == edge.second || edge.first < 0 || edge.second < 0)
        throw InvariantError("engine: degenerate selection");
    if (board_.has_edge(edge.first, edge.second))
        throw InvariantError("engine: selection already coloured");
    pending_ = edge;
    return edge;
}

void Engine::observe(std::pair<int, int> edge, Colour colour) {
    if (mode_ == Mode::done) throw InvariantError("engine: observe after the end");
    if (!pending_ || !((pending_->first == edge.first && pending_->second == edge.second) ||
                       (pending_->first == edge.second && pending_->second == edge.first)))
        throw InvariantError("engine: observed edge is not the pending selection");
    edge = *pending_;
    pending_.reset();

    real_.add_edge(edge.first, edge.second, colour);
    board_.add_edge(edge.first, edge.second, colour);
    ++rounds_;
    if (rounds_ > budget_) throw InvariantError("engine: selection budget exceeded");
    fresh_ = std::max(fresh_, std::max(edge.first, edge.second) + 1);

    // A red answer that closes a red C4 ends the game at once, whatever the
    // engine was doing: Painter has lost on the spot.
    if (colour == Colour::red && board_.red_c4_with(edge.first, edge.second)) {
        forced_win_ = true;
        mode_ = Mode::done;
        return;
    }

    switch (mode_) {
        case Mode::stage1:
            if (colour == Colour::blue)
                dispatch_first_blue(rounds_);
            else if (rounds_ == 7)
                mode_ = Mode::stage2;
            break;
        case Mode::stage2:
            if (colour == Colour::blue) {
                dispatch_first_blue(rounds_);
            } else if (n_ % 2 == 0 && rounds_ == n_ - 1) {
                enter_force(force_plan_full(scaffold({})).edges,
                            AfterForce{}, Phase::ButterflyForce);
            } else if (n_ % 2 == 1 && rounds_ == n_ - 2) {
                mode_ = Mode::stage3;
            }
            break;
        case Mode::stage3:
            if (colour == Colour::blue) {
                mode_ = Mode::stage3_blue;
            } else {
                ForcePlan plan = force_plan_full(scaffold({}));
                plan.edges.emplace_back(0, n_ - 1);
                enter_force(plan.edges, AfterForce{}, Phase::ButterflyForce);
            }
            break;
        case Mode::stage3_blue:
            if (colour == Colour::red) {
                ForcePlan plan = force_plan_full(scaffold({n_ - 3, n_ - 2}));
                plan.edges.emplace_back(1, n_ - 1);
                plan.edges.emplace_back(n_ - 2, n_ - 3);
                enter_force(plan.edges, AfterForce{}, Phase::ButterflyForce);
            } else {
                ForcePlan plan =
                    force_plan_full(scaffold({}), std::make_pair(n_ - 3, n_ - 2));
                enter_force(plan.edges, AfterForce{}, Phase::ButterflyForce);
            }
            break;
        case Mode::jcase:
            ++jcase_idx_;
            if (--jcase_left_ == 0) malo_enter();
            break;
        case Mode::script: {
            const auto* tree = static_cast<const script::Tree*>(tree_);
            const script::Node& node = tree->nodes[node_];
            const script::Step& step = (colour == Colour::red) ? node.red : node.blue;
            switch (step.kind) {
                case script::Step::Kind::node:
                    node_ = step.index;
                    break;
                case script::Step::Kind::leaf:
                    begin_leaf(&tree->leaves[step.index]);
                    break;
                case script::Step::Kind::forbidden:
                    forced_win_ = true;
                    mode_ = Mode::done;
                    break;
                case script::Step::Kind::jump: {
                    std::vector<int> bound(slots_.size(), -1);
                    for (std::size_t i = 0; i < step.bind.size(); ++i) {
                        const int from = step.bind[i];
                        if (from < 0) continue;
                        if (slots_[from] < 0)
                            throw InvariantError("engine: jump rebinds an unbound slot");
                        bound[i] = slots_[from];
                    }
                    enter_script_tree(step.tree, step.index, bound);
                    break;
                }
            }
            break;
        }
        case Mode::force:
            if (colour == Colour::red) {
                forced_win_ = true;
                mode_ = Mode::done;
            } else if (++plan_i_ == plan_.size()) {
                after_force_done();
            }
            break;
        case Mode::malo:
            malo_observe(edge, colour);
            break;
        case Mode::book:
            book_->observe(edge, colour);
            if (book_->finished()) {
                mode_ = Mode::done;
                check_done();
            }
            break;
        case Mode::done:
            break;
    }
}

// ---- first blue dispatch --------------------------------------------------

void Engine::dispatch_first_blue(int t) {
    const std::string cls = classify_first_blue(n_, t);
    if (t <= 7) {
        std::vector<int> ids(slots_.size(), -1);
        for (int i = 0; i <= t; ++i) ids[i] = i;  // stage labels are board ids
        const script::Tree* tree = nullptr;
        switch (t) {
            case 1: tree = &script::b_tree(); break;
            case 2: tree = &script::br_tree(); break;
            case 3: tree = &script::t3_tree(); break;
            case 4: tree = &script::t4_tree(); break;
            case 5: tree = &script::t5_tree(); break;
            case 6: tree = &script::t6_tree(); break;
            case 7: tree = &script::t7_tree(); break;
        }
        enter_script_tree(tree, tree->nodes.empty() ? -1 : 0, ids);
        return;
    }
    if (cls == "stage3")
        throw InvariantError("engine: stage-3 blue is handled in stage 3 itself");
    if (cls == "t8") return handle_t8(t);
    if (cls == "t9") return handle_t9(t);
    if (cls == "even") return handle_generic_even(t);
    if (cls == "odd") return handle_generic_odd(t);
    // j-cases: j-1 further pendant selections, alternating centers starting
    // at the second one, then the butterfly endgame.
    const int j = n_ - t;
    jcase_left_ = j - 1;
    jcase_idx_ = 0;
    if (jcase_left_ == 0)
        malo_enter();
    else
        mode_ = Mode::jcase;
}

Butterfly Engine::scaffold(const std::vector<int>& exclude) const {
    Butterfly b;
    b.c1 = 0;
    b.c2 = 1;
    b.mid1 = 2;
    b.tail1 = 6;
    b.mid2 = 4;
    b.tail2 = 7;
    b.wing1 = sorted_without(board_.red_neighbours(0), {1, 2}, exclude);
    b.wing2 = sorted_without(board_.red_neighbours(1), {0, 4}, exclude);
    b.validate_red(board_);
    return b;
}

void Engine::handle_t8(int t) {
    const int x = t;  // the blue pendant at the first center
    Butterfly b = scaffold({});
    if (b.wing1.size() != 1 || b.wing2.size() != 1)
        throw InvariantError("engine: unexpected wings at t=8");
    AfterForce after;
    after.kind = AfterForce::Kind::contract_walk;
    after.walk_from = x;
    after.walk_to = 1;
    after.walk_m = 15;
    after.residual_start = script::kStartB;
    after.residual = {x, 1};
    after.context = "t8";
    enter_force(force_plan_full(b).edges, std::move(after), Phase::ButterflyForce);
}

void Engine::handle_t9(int t) {
    const int x = t;  // the blue pendant at the second center
    Butterfly b = scaffold({8});
    if (b.wing1.size() != 1 || b.wing2.size() != 1)
        throw InvariantError("engine: unexpected wings at t=9");
    AfterForce after;
    after.kind = AfterForce::Kind::contract_walk;
    after.walk_from = x;
    after.walk_to = 0;
    after.walk_m = 15;
    after.residual_start = script::kStartBr;
    after.residual = {x, 0, 8};
    after.context = "t9";
    enter_force(force_plan_full(b).edges, std::move(after), Phase::ButterflyForce);
}

void Engine::handle_generic_even(int t) {
    const int x = t;
    Butterfly b = scaffold({});
    if (b.wing1.size() != b.wing2.size() || b.wing1.size() != (t - 6) / 2u)
        throw InvariantError("engine: unexpected wings at an even first blue");
    const int y = b.wing2.front();
    AfterForce after;
    after.kind = AfterForce::Kind::contract_walk;
    after.walk_from = x;
    after.walk_to = y;
    after.walk_m = 2 * t - 3;
    after.residual_start = script::kStartBr;
    after.residual = {x, y, 1};
    after.context = "even t=" + std::to_string(t);
    enter_force(force_plan_minus_center(b, y).edges, std::move(after),
                Phase::ButterflyForce);
}

void Engine::handle_generic_odd(int t) {
    const int x = t;
    const int z = 3;  // surrendered first-center pendant, kept for the residual
    Butterfly b = scaffold({z}).swapped();
    if (b.wing1.size() != b.wing2.size() || b.wing1.size() != (t - 7) / 2u)
        throw InvariantError("engine: unexpected wings at an odd first blue");
    const int y = b.wing2.front();
    AfterForce after;
    after.kind = AfterForce::Kind::contract_walk;
    after.walk_from = x;
    after.walk_to = y;
    after.walk_m = 2 * t - 5;
    after.residual_start = script::kStartBrr;
    after.residual = {x, y, 0, z};
    after.context = "odd t=" + std::to_string(t);
    enter_force(force_plan_minus_center(b, y).edges, std::move(after),
                Phase::ButterflyForce);
}

// ---- scripts ----------------------------------------------------------

void Engine::enter_script_tree(const void* tree, int node, const std::vector<int>& slot_ids) {
    tree_ = tree;
    node_ = node;
    slots_.fill(-1);
    for (std::size_t i = 0; i < slot_ids.size() && i < slots_.size(); ++i)
        slots_[i] = slot_ids[i];
    mode_ = Mode::script;
    if (node < 0) begin_leaf(&static_cast<const script::Tree*>(tree)->leaves[0]);
}

void Engine::begin_leaf(const void* leaf_ptr) {
    const auto* leaf = static_cast<const script::Leaf*>(leaf_ptr);
    const auto* tree = static_cast<const script::Tree*>(tree_);
    std::vector<std::pair<int, int>> plan;
    for (const script::SEdge& e : leaf->forced) plan.push_back(slot_edge(e.a, e.b));
    AfterForce after;
    after.kind = AfterForce::Kind::contract_list;
    for (const script::Contraction& c : leaf->contractions) {
        PlannedContraction pc;
        for (int s : c.path) {
            const int id = slot_id(s);
            if (id < 0) throw InvariantError("engine: contraction path uses unbound slot");
            pc.path.push_back(id);
        }
        pc.expected_m = c.m;
        pc.replace_red = c.replace_red;
        after.list.push_back(std::move(pc));
    }
    after.residual_start = leaf->residual_start;
    for (int s : leaf->residual) {
        const int id = slot_id(s);
        if (id < 0) throw InvariantError("engine: residual uses unbound slot");
        after.residual.push_back(id);
    }
    after.context = std::string(tree->name) + " leaf";
    enter_force(std::move(plan), std::move(after), Phase::BlueCaseScript);
}

// ---- forced selections -------------------------------------------------

void Engine::enter_force(std::vector<std::pair<int, int>> plan, AfterForce after, Phase tag) {
    plan_ = std::move(plan);
    plan_i_ = 0;
    after_ = std::move(after);
    move_phase_ = tag;
    mode_ = Mode::force;
    if (plan_.empty()) after_force_done();
}

void Engine::after_force_done() {
    switch (after_.kind) {
        case AfterForce::Kind::done:
            mode_ = Mode::done;
            check_done();
            return;
        case AfterForce::Kind::contract_list:
            for (const PlannedContraction& pc : after_.list)
                push_contraction(pc.path, pc.expected_m, pc.replace_red, after_.context);
            break;
        case AfterForce::Kind::contract_walk: {
            const std::vector<int> path = blue_walk(board_, after_.walk_from);
            if (path.back() != after_.walk_to)
                throw InvariantError("engine: assembled blue path ends in the wrong place");
            push_contraction(path, after_.walk_m, false, after_.context);
            break;
        }
    }
    enter_child(after_.residual_start, after_.residual, after_.context);
}

// ---- contraction ---------------------------------------------------------

void Engine::push_contraction(const std::vector<int>& path, int expected_m,
                              bool replace_red, const std::string& context) {
    if (path.size() < 3) throw InvariantError("engine: contraction path too short");
    std::set<int> distinct(path.begin(), path.end());
    if (distinct.size() != path.size())
        throw InvariantError("engine: contraction path repeats a vertex");
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        if (board_.edge_colour(path[i], path[i + 1]) != Colour::blue)
            throw InvariantError("engine: contraction path edge missing or not blue");

    const int ex = path.front(), ey = path.back();
    std::set<int> interior(path.begin() + 1, path.end() - 1);
    // The interior must be clean: its only blue edges are the path's own.
    for (int v : interior)
        for (int w : board_.blue_neighbours(v)) {
            auto at = std::find(path.begin(), path.end(), v);
            const std::size_t i = static_cast<std::size_t>(at - path.begin());
            if (w != path[i - 1] && w != path[i + 1])
                throw InvariantError("engine: blue edge leaves the contraction path");
        }

    const auto ends_colour = board_.edge_colour(ex, ey);
    if (ends_colour && *ends_colour != Colour::red)
        throw InvariantError("engine: contraction ends already joined in blue");
    const bool replacing = ends_colour.has_value();
    if (replacing != replace_red)
        throw InvariantError("engine: unexpected red edge between contraction ends");

    int m = replacing ? 1 : 0;
    for (Colour c : {Colour::red, Colour::blue})
        for (auto [a, b] : board_.edges(c))
            if (interior.count(a) || interior.count(b)) ++m;

    const int k = static_cast<int>(interior.size());
    if (m != expected_m)
        throw InvariantError("engine: contraction accounts for " + std::to_string(m) +
                             " selections, expected " + std::to_string(expected_m));
    if (m > 2 * k + 1)
        throw InvariantError("engine: contraction too expensive for its length");

    if (replacing) board_.remove_edge(ex, ey);
    for (int v : interior) board_.remove_vertex(v);
    board_.add_edge(ex, ey, Colour::blue);

    ContractionFrame frame;
    frame.path = path;
    frame.virtual_edge = {ex, ey};
    frame.replaced_red = replacing;
    frame.removed.assign(interior.begin(), interior.end());
    frame.k = k;
    frame.m = m;
    frames_.push_back(std::move(frame));
    log_.push_back({context, k, m, expected_m, static_cast<int>(frames_.size()) - 1});
    cur_n_ -= k;
}

// ---- residual games --------------------------------------------------------

void Engine::enter_child(int start_index, const std::vector<int>& path_ids,
                         const std::string& context) {
    if (cur_n_ < 7)
        throw InvariantError("engine: residual target shrank below the book range");
    static const char* kPatterns[6] = {"", "b", "br", "brr", "brb", "brrb"};
    const std::string pattern = kPatterns[start_index];
    if (path_ids.size() != pattern.size() + 1)
        throw InvariantError("engine: residual path length mismatch");

    auto norm = [](std::pair<int, int> e) {
        return e.first < e.second ? e : std::make_pair(e.second, e.first);
    };
    std::set<std::pair<int, int>> want_red, want_blue;
    for (std::size_t i = 0; i < pattern.size(); ++i) {
        auto e = norm({path_ids[i], path_ids[i + 1]});
        (pattern[i] == 'r' ? want_red : want_blue).insert(e);
    }
    std::set<std::pair<int, int>> have_red, have_blue;
    for (auto e : board_.edges(Colour::red)) have_red.insert(norm(e));
    for (auto e : board_.edges(Colour::blue)) have_blue.insert(norm(e));
    if (have_red != want_red || have_blue != want_blue)
        throw InvariantError("engine: residual board differs from the expected seed (" +
                             context + ")");

    if (cur_n_ <= 13) {
        enter_book_for(start_index, path_ids);
        return;
    }

    // Bind the seed's decision script: slots are listed along the path.
    std::vector<int> ids(slots_.size(), -1);
    const script::Tree* tree = nullptr;
    int node = 0;
    switch (start_index) {
        case script::kStartB:
            tree = &script::b_tree();
            ids[0] = path_ids[0];
            ids[1] = path_ids[1];
            break;
        case script::kStartBr:
            tree = &script::br_tree();
            ids[0] = path_ids[1];
            ids[1] = path_ids[2];
            ids[2] = path_ids[0];
            break;
        case script::kStartBrr:
        case script::kStartBrb:
            tree = (start_index == script::kStartBrr) ? &script::table_d_tree()
                                                      : &script::table_c_tree();
            ids[0] = path_ids[1];
            ids[1] = path_ids[2];
            ids[2] = path_ids[0];
            ids[3] = path_ids[3];
            break;
        case script::kStartBrrb:
            tree = &script::table_d_tree();
            node = 1;
            ids[0] = path_ids[1];
            ids[1] = path_ids[2];
            ids[2] = path_ids[0];
            ids[3] = path_ids[3];
            ids[4] = path_ids[4];
            break;
        default:
            throw InvariantError("engine: residual cannot be the empty seed");
    }
    enter_script_tree(tree, node, ids);
}

void Engine::enter_book_for(int start_index, const std::vector<int>& seed_path) {
    book_.emplace(books_->index(cur_n_, start_index), start_index, board_, seed_path,
                  fresh_);
    mode_ = Mode::book;
}

// ---- butterfly endgame -----------------------------------------------------

void Engine::malo_enter() {
    auto pendants = [&](int center) {
        std::set<int> all;
        for (int w : board_.red_neighbours(center)) all.insert(w);
        for (int w : board_.blue_neighbours(center)) all.insert(w);
        all.erase(center == 0 ? 1 : 0);
        all.erase(center == 0 ? 2 : 4);
        return all;
    };
    auto blues = [&](int center) {
        return sorted_without(board_.blue_neighbours(center), {});
    };
    const std::set<int> p0 = pendants(0), p1 = pendants(1);
    const int s0 = static_cast<int>(p0.size()), s1 = static_cast<int>(p1.size());
    const int db0 = board_.blue_degree(0), db1v = board_.blue_degree(1);
    int c1;
    if (s0 != s1)
        c1 = s0 > s1 ? 0 : 1;
    else
        c1 = db0 >= db1v ? 0 : 1;
    const int c2 = 1 - c1;

    Butterfly b;
    b.c1 = c1;
    b.c2 = c2;
    b.mid1 = c1 == 0 ? 2 : 4;
    b.tail1 = c1 == 0 ? 6 : 7;
    b.mid2 = c2 == 0 ? 2 : 4;
    b.tail2 = c2 == 0 ? 6 : 7;
    b.wing1 = sorted_without(board_.red_neighbours(c1),
                             c1 == 0 ? std::initializer_list<int>{1, 2}
                                     : std::initializer_list<int>{0, 4});
    b.wing2 = sorted_without(board_.red_neighbours(c2),
                             c2 == 0 ? std::initializer_list<int>{1, 2}
                                     : std::initializer_list<int>{0, 4});
    b.validate_red(board_);

    malo_B_ = b;
    malo_blue1_ = blues(c1);
    malo_blue2_ = blues(c2);
    const int d = (c1 == 0 ? s0 - s1 : s1 - s0);
    const int deg1 = static_cast<int>(malo_blue1_.size());
    const int deg2 = static_cast<int>(malo_blue2_.size());

    struct Row {
        int d, db1, db2, kase;
    };
    static const Row table[] = {
        {0, 1, 0, 3}, {0, 1, 1, 1}, {0, 2, 0, 5}, {0, 2, 1, 3}, {0, 2, 2, 2},
        {1, 1, 0, 1}, {1, 1, 1, 4}, {1, 2, 0, 3}, {1, 2, 1, 2},
    };
    malo_case_ = 0;
    for (const Row& row : table)
        if (row.d == d && row.db1 == deg1 && row.db2 == deg2) malo_case_ = row.kase;
    if (malo_case_ == 0)
        throw InvariantError("engine: wing profile (" + std::to_string(d) + "," +
                             std::to_string(deg1) + "," + std::to_string(deg2) +
                             ") has no endgame case");

    malo_step_ = 0;
    malo_w_.clear();
    malo_expect_second_ = false;
    if (malo_case_ == 1) {
        enter_force(force_plan_full(malo_B_).edges, AfterForce{}, Phase::MaloEndgame);
    } else {
        mode_ = Mode::malo;
    }
}

std::pair<int, int> Engine::malo_next() {
    if (malo_expect_second_) {
        if (!board_.red_c4_with(malo_second_.first, malo_second_.second))
            throw InvariantError("engine: probe fallback is not forced");
        return malo_second_;
    }
    auto probe = [&](int src, std::vector<int> pool) {
        for (int used : malo_w_) pool.erase(std::remove(pool.begin(), pool.end(), used), pool.end());
        if (pool.size() < 2) throw InvariantError("engine: probe needs two targets");
        malo_second_ = {src, pool[1]};
        return std::make_pair(src, pool[0]);
    };
    switch (malo_case_) {
        case 2:
            return malo_step_ == 0 ? probe(malo_blue1_[0], malo_B_.wing1)
                                   : probe(malo_blue2_[0], malo_B_.wing2);
        case 3:
            return probe(malo_blue1_[0], malo_B_.wing2);
        case 4:
            return probe(malo_blue2_[0], malo_B_.wing1);
        case 5:
            return malo_step_ == 0 ? probe(malo_blue1_[0], malo_B_.wing2)
                                   : probe(malo_blue1_[1], malo_B_.wing2);
    }
    throw InvariantError("engine: endgame case lost its way");
}

void Engine::malo_observe(std::pair<int, int> edge, Colour colour) {
    if (colour == Colour::red) {
        if (malo_expect_second_) {  // a forced selection was reddened
            forced_win_ = true;
            mode_ = Mode::done;
            return;
        }
        malo_expect_second_ = true;
        return;
    }
    malo_w_.push_back(edge.second);
    malo_expect_second_ = false;
    ++malo_step_;
    const int probes_needed = (malo_case_ == 2 || malo_case_ == 5) ? 2 : 1;
    if (malo_step_ == probes_needed) malo_finish();
}

void Engine::malo_finish() {
    ForcePlan plan;
    switch (malo_case_) {
        case 2:
            plan = force_plan_crossing(malo_B_, malo_w_[0], malo_w_[1]);
            break;
        case 3: {
            Butterfly reduced = malo_B_;
            reduced.wing2.erase(
                std::find(reduced.wing2.begin(), reduced.wing2.end(), malo_w_[0]));
            const Butterfly oriented = reduced.swapped();
            const int z = oriented.wing2.front();
            plan = force_plan_minus_center(oriented, z);
            plan.edges.emplace_back(malo_w_[0], z);
            break;
        }
        case 4: {
            Butterfly reduced = malo_B_;
            reduced.wing1.erase(
                std::find(reduced.wing1.begin(), reduced.wing1.end(), malo_w_[0]));
            const int z = reduced.wing2.front();
            plan = force_plan_minus_center(reduced, z);
            plan.edges.emplace_back(malo_w_[0], z);
            break;
        }
        case 5: {
            Butterfly reduced = malo_B_;
            for (int w : malo_w_)
                reduced.wing2.erase(
                    std::find(reduced.wing2.begin(), reduced.wing2.end(), w));
            const Butterfly oriented = reduced.swapped();
            const int z = oriented.wing2.front();
            plan = force_plan_minus_center(oriented, z);
            plan.edges.emplace_back(malo_w_[0], z);
            break;
        }
        default:
            throw InvariantError("engine: endgame case lost its way");
    }
    enter_force(std::move(plan.edges), AfterForce{}, Phase::MaloEndgame);
}

// ---- completion -----------------------------------------------------------

void Engine::check_done() const {
    if (!board_.blue_exact_path(cur_n_))
        throw InvariantError("engine: finished without the blue path on this level");
    if (!real_.blue_exact_path(n_))
        throw InvariantError("engine: finished without the full blue path");
    if (rounds_ > budget_) throw InvariantError("engine: selection budget exceeded");
}

}  // namespace c4pn
