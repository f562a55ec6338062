#pragma once

// Rules of the restricted online Ramsey game: Builder selects an uncoloured
// edge, Painter colours it red or blue.  Builder tries to force a red C4 or a
// blue path on n vertices subject to a vertex cap v, a round budget e, a
// connectivity requirement, and the rule that the blue graph together with
// the just-selected edge must stay embeddable into the target path.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "c4pn/bitgraph.hpp"

namespace c4pn {

struct GameSpec {
    int n = 0;  // target blue path: n vertices, n-1 edges
    int v = 0;  // vertex cap
    int e = 0;  // total round budget (pre-coloured edges count against it)

    friend bool operator==(const GameSpec&, const GameSpec&) = default;
};

struct Move {
    std::uint8_t a = 0, b = 0;
    friend bool operator==(const Move&, const Move&) = default;
};

struct StartPosition {
    const char* name;       // header name, e.g. "br-path"
    const char* tag;        // short CLI tag, e.g. "br"
    std::vector<std::pair<int, int>> blue;
    std::vector<std::pair<int, int>> red;

    int max_vertex() const;
    void fill(BitGraph& blue_g, BitGraph& red_g) const;
};

// The six standard seeds, in series order: empty, b-path, br-path, brr-path,
// brb-path, brrb-path.
const std::array<StartPosition, 6>& standard_starts();
int start_index_by_tag(const std::string& tag);  // accepts tag or name; -1 if unknown

// Blue-graph side of move legality: blue plus the candidate edge must stay a
// disjoint union of paths with (edges + components) <= n, i.e. embeddable in
// the target path.
bool blue_embeds_in_path(const BitGraph& blue_with_edge, int n);

// True iff some vertex slot in 0..cap-1 has blue degree zero.  With cap = n+1
// this is exactly the embeddability bound above; the solver uses it as the
// cheap form.
bool spare_blue_vertex(const BitGraph& blue, int cap);

// Full legality of Builder selecting (a,b) in the restricted game: edge
// uncoloured, inside the vertex cap, keeps the coloured graph connected
// (touches a used vertex, or is the very first edge 0-1), and blue+edge
// embeds into the target path.  `v` is the number of used vertex slots.
bool move_is_legal(const BitGraph& blue, const BitGraph& red, int v, int a, int b,
                   const GameSpec& spec);

// All legal moves in the solver's exploration order: previously-used pairs
// (i,j) with i scanned downward and j downward toward i, then one fresh-vertex
// extension per used vertex in ascending order, then (0,1) on an empty board.
// Pure-rule version (no transposition bookkeeping); used by tests, the
// verifier and optimal play.
std::vector<Move> legal_moves(const BitGraph& blue, const BitGraph& red, int v,
                              const GameSpec& spec);

// Builder has met the blue goal: blue graph is exactly one path on n vertices.
inline bool blue_is_target_path(const BitGraph& blue, int n) {
    return is_exact_path(blue, n);
}

// Solver budget prune: once blue has n or more edges the target path (n-1
// edges) is unreachable, and with more than e-(n-1) red edges there is no
// room left in the round budget for the n-1 blue edges.
inline bool budget_exceeded(int blue_edges, int red_edges, int n, int e) {
    return blue_edges >= n || red_edges > e - n + 1;
}

}  // namespace c4pn
