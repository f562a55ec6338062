#include "c4pn/game.hpp"

#include <algorithm>

namespace c4pn {

int StartPosition::max_vertex() const {
    int m = -1;
    for (auto [a, b] : blue) m = std::max({m, a, b});
    for (auto [a, b] : red) m = std::max({m, a, b});
    return m;
}

void StartPosition::fill(BitGraph& blue_g, BitGraph& red_g) const {
    blue_g = BitGraph{};
    red_g = BitGraph{};
    for (auto [a, b] : blue) blue_g.add_edge(a, b);
    for (auto [a, b] : red) red_g.add_edge(a, b);
}

const std::array<StartPosition, 6>& standard_starts() {
    static const std::array<StartPosition, 6> starts = {{
        {"empty", "empty", {}, {}},
        {"b-path", "b", {{0, 1}}, {}},
        {"br-path", "br", {{0, 1}}, {{1, 2}}},
        {"brr-path", "brr", {{0, 1}}, {{1, 2}, {2, 3}}},
        {"brb-path", "brb", {{0, 1}, {2, 3}}, {{1, 2}}},
        {"brrb-path", "brrb", {{0, 1}, {3, 4}}, {{1, 2}, {2, 3}}},
    }};
    return starts;
}

int start_index_by_tag(const std::string& tag) {
    const auto& starts = standard_starts();
    for (int i = 0; i < static_cast<int>(starts.size()); ++i)
        if (tag == starts[i].tag || tag == starts[i].name) return i;
    return -1;
}

bool blue_embeds_in_path(const BitGraph& blue_with_edge, int n) {
    int comps = path_component_count(blue_with_edge);
    if (comps < 0) return false;
    return blue_with_edge.edge_count() + comps <= n;
}

bool spare_blue_vertex(const BitGraph& blue, int cap) {
    for (int i = 0; i < cap; ++i)
        if (blue.row[i] == 0) return true;
    return false;
}

bool move_is_legal(const BitGraph& blue, const BitGraph& red, int v, int a, int b,
                   const GameSpec& spec) {
    if (a == b || a < 0 || b < 0) return false;
    if (a > b) std::swap(a, b);
    if (b >= spec.v) return false;                            // vertex cap
    if (blue.has_edge(a, b) || red.has_edge(a, b)) return false;
    if (v == 0) return a == 0 && b == 1;                      // first edge of all
    if (a >= v) return false;                                 // must touch the board
    if (b > v) return false;                                  // at most one fresh slot
    BitGraph tentative = blue;
    tentative.add_edge(a, b);
    return blue_embeds_in_path(tentative, spec.n);
}

std::vector<Move> legal_moves(const BitGraph& blue, const BitGraph& red, int v,
                              const GameSpec& spec) {
    std::vector<Move> out;
    auto push_if_legal = [&](int a, int b) {
        if (move_is_legal(blue, red, v, a, b, spec))
            out.push_back({static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b)});
    };
    for (int i = v - 1; i >= 0; --i)
        for (int j = v - 1; j > i; --j) push_if_legal(i, j);
    if (v < spec.v)
        for (int i = 0; i < v; ++i) push_if_legal(i, v);
    if (v == 0) push_if_legal(0, 1);
    return out;
}

}  // namespace c4pn
