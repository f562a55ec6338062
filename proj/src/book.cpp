#include "c4pn/book.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>
#include <unordered_map>

#include "c4pn/canonical.hpp"
#include "c4pn/error.hpp"

namespace c4pn {

namespace {

char hex_digit(int v) { return static_cast<char>(v < 10 ? '0' + v : 'a' + (v - 10)); }

int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

// Appends every edge as "xy " in (min,max) row-major order.
void append_edges(std::string& out, const BitGraph& g) {
    for (int a = 0; a < kMaxVertices; ++a) {
        unsigned rest = static_cast<unsigned>(g.row[a]) >> (a + 1) << (a + 1);
        while (rest != 0) {
            int b = __builtin_ctz(rest);
            rest &= rest - 1;
            out += hex_digit(a);
            out += hex_digit(b);
            out += ' ';
        }
    }
}

struct KeyHash {
    std::size_t operator()(const PositionKey& k) const { return k.hash(); }
};

struct Emitter {
    Solver& solver;
    GameSpec spec;
    std::ostream& out;
    int line = 0;
    std::unordered_map<PositionKey, int, KeyHash> printed;
    std::string buf;

    void write_header(const char* start_name, int rc) {
        char tmp[80];
        int len = std::snprintf(tmp, sizeof tmp, "rc(C4,P%d,%s,%d,%d)=%d\n", spec.n,
                                start_name, spec.v, spec.e, rc);
        out.write(tmp, len);
        ++line;
    }

    void write_node(const BitGraph& blue, const BitGraph& red, int v, int depth) {
        CanonicalForm cf = canonicalize(blue, red, v);
        StoredMove stored = solver.position_move(blue, red, v);
        if (stored == 0)
            throw InvariantError("strategy book reached a position with no winning move");
        int a = cf.order[stored >> 8];
        int b = cf.order[stored & 0xff];

        buf.assign(static_cast<std::size_t>(depth), ' ');
        buf += "r: ";
        append_edges(buf, red);
        buf += "b: ";
        append_edges(buf, blue);
        buf += "m: ";
        buf += hex_digit(a);
        buf += hex_digit(b);

        auto [it, fresh] = printed.try_emplace(cf.key, 0);
        if (!fresh) {
            buf += " l: ";
            buf += std::to_string(it->second);
            buf += '\n';
            out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
            ++line;
            return;
        }
        buf += '\n';
        out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
        it->second = ++line;

        const int lo = std::min(a, b), hi = std::max(a, b);
        const int v2 = std::max(v, hi + 1);
        BitGraph grown = blue;
        grown.add_edge(lo, hi);
        if (!blue_is_target_path(grown, spec.n)) write_node(grown, red, v2, depth + 1);
        if (!has_c4_with(red, lo, hi)) {
            grown = red;
            grown.add_edge(lo, hi);
            write_node(blue, grown, v2, depth + 1);
        }
    }
};

}  // namespace

void emit_book(Solver& solver, const GameRecord& record, std::ostream& out) {
    Emitter emitter{solver, record.spec, out};
    const auto& starts = standard_starts();
    for (const StartResult& sr : record.starts) {
        if (sr.skipped) continue;
        const StartPosition& st = starts[static_cast<std::size_t>(sr.start_index)];
        emitter.write_header(st.name, sr.rc);
        if (sr.rc != 1) continue;
        BitGraph blue, red;
        st.fill(blue, red);
        emitter.write_node(blue, red, st.max_vertex() + 1,
                           static_cast<int>(st.blue.size() + st.red.size()));
    }
}

std::string emit_book(Solver& solver, const GameRecord& record) {
    std::ostringstream out;
    emit_book(solver, record, out);
    return std::move(out).str();
}

BookParseError::BookParseError(int line_no, const std::string& message)
    : std::runtime_error("line " + std::to_string(line_no) + ": " + message),
      line(line_no) {}

namespace {

BookSection parse_header(const std::string& s, int line_no) {
    int n = 0, v = 0, e = 0, rc = 0;
    char name[32];
    if (std::sscanf(s.c_str(), "rc(C4,P%d,%31[^,],%d,%d)=%d", &n, name, &v, &e, &rc) != 5)
        throw BookParseError(line_no, "malformed header");
    char render[96];
    std::snprintf(render, sizeof render, "rc(C4,P%d,%s,%d,%d)=%d", n, name, v, e, rc);
    if (s != render) throw BookParseError(line_no, "malformed header");
    if (rc != 0 && rc != 1) throw BookParseError(line_no, "rc must be 0 or 1");
    const int idx = start_index_by_tag(name);
    if (idx < 0) throw BookParseError(line_no, "unknown start name");

    BookSection sec;
    sec.spec = GameSpec{n, v, e};
    sec.start_index = idx;
    sec.rc = rc;
    sec.header_line = line_no;
    return sec;
}

BookNode parse_node(const std::string& s, int line_no) {
    BookNode node;
    node.line = line_no;
    std::size_t p = 0;
    while (p < s.size() && s[p] == ' ') ++p;
    node.depth = static_cast<int>(p);

    auto expect = [&](std::string_view lit) {
        if (s.compare(p, lit.size(), lit) != 0)
            throw BookParseError(line_no, "expected \"" + std::string(lit) + "\"");
        p += lit.size();
    };
    auto parse_pair = [&](const char* what) {
        if (p + 1 >= s.size())
            throw BookParseError(line_no, std::string("truncated ") + what);
        const int a = hex_value(s[p]), b = hex_value(s[p + 1]);
        if (a < 0 || b < 0)
            throw BookParseError(line_no, std::string("malformed hex pair in ") + what);
        p += 2;
        return std::pair<int, int>{a, b};
    };
    auto parse_edges = [&](std::vector<std::pair<int, int>>& edges, std::string_view stop,
                           const char* what) {
        while (p < s.size() && s.compare(p, stop.size(), stop) != 0) {
            const auto edge = parse_pair(what);
            if (edge.first >= edge.second)
                throw BookParseError(line_no,
                                     std::string(what) + " endpoints not in (min,max) order");
            edges.push_back(edge);
            expect(" ");
        }
    };

    expect("r: ");
    parse_edges(node.red_edges, "b:", "red edge");
    expect("b: ");
    parse_edges(node.blue_edges, "m:", "blue edge");
    expect("m: ");
    const auto mv = parse_pair("move");
    node.move = Move{static_cast<std::uint8_t>(mv.first), static_cast<std::uint8_t>(mv.second)};

    if (p != s.size()) {
        expect(" l: ");
        std::size_t q = p;
        long value = 0;
        while (q < s.size() && s[q] >= '0' && s[q] <= '9') {
            value = value * 10 + (s[q] - '0');
            if (value > 1000000000) throw BookParseError(line_no, "back-reference out of range");
            ++q;
        }
        if (q == p || q != s.size())
            throw BookParseError(line_no, "malformed back-reference");
        if (value <= 0 || value >= line_no)
            throw BookParseError(line_no, "back-reference must target an earlier line");
        node.backref = static_cast<int>(value);
    }

    if (node.depth != static_cast<int>(node.red_edges.size() + node.blue_edges.size()))
        throw BookParseError(line_no, "indentation does not match edge count");
    return node;
}

}  // namespace

Book parse_book(std::istream& in) {
    Book book;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.rfind("rc(", 0) == 0) {
            book.sections.push_back(parse_header(line, line_no));
        } else {
            if (book.sections.empty())
                throw BookParseError(line_no, "node line before any header");
            book.sections.back().nodes.push_back(parse_node(line, line_no));
        }
    }
    return book;
}

Book parse_book(const std::string& text) {
    std::istringstream in(text);
    return parse_book(in);
}

const char* to_string(VerifyReason reason) {
    switch (reason) {
        case VerifyReason::none: return "none";
        case VerifyReason::illegal_move: return "illegal move";
        case VerifyReason::missing_child: return "missing child";
        case VerifyReason::budget_exceeded: return "budget exceeded";
        case VerifyReason::terminal_mismatch: return "terminal mismatch";
        case VerifyReason::dangling_backref: return "dangling back-reference";
        case VerifyReason::isomorphism_mismatch: return "isomorphism mismatch";
        case VerifyReason::position_mismatch: return "position mismatch";
    }
    return "unknown";
}

namespace {

struct SeenNode {
    PositionKey key;
    std::uint16_t slot_move;
};

struct Verifier {
    GameSpec spec;
    VerificationReport report;
    std::unordered_map<int, SeenNode> seen;  // line number -> first-encounter node
    const std::vector<BookNode>* nodes = nullptr;
    std::size_t cursor = 0;

    bool fail(int line, VerifyReason reason, std::string detail) {
        if (report.accepted) {
            report.accepted = false;
            report.line = line;
            report.reason = reason;
            report.detail = std::move(detail);
        }
        return false;
    }

    bool walk(const BitGraph& blue, const BitGraph& red, int v, int depth, int parent_line) {
        if (cursor >= nodes->size())
            return fail(parent_line, VerifyReason::missing_child,
                        "a Painter reply has neither a child node nor a back-reference");
        const BookNode& nd = (*nodes)[cursor];
        if (nd.depth != depth)
            return fail(nd.line, VerifyReason::missing_child,
                        "next node sits at the wrong depth for this branch");
        ++cursor;
        if (nd.red_edges != red.edges() || nd.blue_edges != blue.edges())
            return fail(nd.line, VerifyReason::position_mismatch,
                        "printed position differs from the replayed one");
        if (depth >= spec.e)
            return fail(nd.line, VerifyReason::budget_exceeded,
                        "node moves after the round budget is spent");
        const int a = nd.move.a, b = nd.move.b;
        if (!move_is_legal(blue, red, v, a, b, spec))
            return fail(nd.line, VerifyReason::illegal_move, "printed move is not legal here");

        const CanonicalForm cf = canonicalize(blue, red, v);
        const auto slot_move =
            static_cast<std::uint16_t>((cf.inv[static_cast<std::size_t>(a)] << 8) |
                                       cf.inv[static_cast<std::size_t>(b)]);
        if (nd.backref != 0) {
            const auto it = seen.find(nd.backref);
            if (it == seen.end())
                return fail(nd.line, VerifyReason::dangling_backref,
                            "back-reference does not target an earlier strategy node");
            if (!(it->second.key == cf.key))
                return fail(nd.line, VerifyReason::isomorphism_mismatch,
                            "back-referenced position is not isomorphic to this one");
            if (it->second.slot_move != slot_move)
                return fail(nd.line, VerifyReason::isomorphism_mismatch,
                            "winning move does not transfer along the back-reference");
            return true;
        }
        seen.emplace(nd.line, SeenNode{cf.key, slot_move});

        const int lo = std::min(a, b), hi = std::max(a, b);
        const int v2 = std::max(v, hi + 1);
        BitGraph grown = blue;
        grown.add_edge(lo, hi);
        if (!blue_is_target_path(grown, spec.n) && !walk(grown, red, v2, depth + 1, nd.line))
            return false;
        if (!has_c4_with(red, lo, hi)) {
            grown = red;
            grown.add_edge(lo, hi);
            if (!walk(blue, grown, v2, depth + 1, nd.line)) return false;
        }
        return true;
    }

    bool run_section(const BookSection& sec) {
        if (!(sec.spec == spec))
            return fail(sec.header_line, VerifyReason::position_mismatch,
                        "header announces a different game");
        if (sec.rc == 0) {
            if (!sec.nodes.empty())
                return fail(sec.nodes.front().line, VerifyReason::terminal_mismatch,
                            "strategy tree after an rc=0 header");
            return true;
        }
        const StartPosition& st = standard_starts()[static_cast<std::size_t>(sec.start_index)];
        nodes = &sec.nodes;
        cursor = 0;
        BitGraph blue, red;
        st.fill(blue, red);
        if (!walk(blue, red, st.max_vertex() + 1,
                  static_cast<int>(st.blue.size() + st.red.size()), sec.header_line))
            return false;
        if (cursor != sec.nodes.size())
            return fail(sec.nodes[cursor].line, VerifyReason::terminal_mismatch,
                        "nodes remain after the strategy tree is complete");
        return true;
    }
};

}  // namespace

VerificationReport verify_book(const Book& book, const GameSpec& spec) {
    Verifier verifier{spec};
    if (book.sections.empty()) {
        verifier.fail(0, VerifyReason::missing_child, "book has no sections");
        return verifier.report;
    }
    for (const BookSection& sec : book.sections)
        if (!verifier.run_section(sec)) break;
    return verifier.report;
}

GameSpec book_spec(const Book& book) {
    if (book.sections.empty()) return GameSpec{};
    return book.sections.front().spec;
}

}  // namespace c4pn
