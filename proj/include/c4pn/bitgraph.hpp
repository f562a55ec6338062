#pragma once

// Dense undirected graphs on at most 16 vertices, one uint16_t adjacency row
// per vertex.  This is the board representation used by the solver and the
// certificate tooling; everything here is allocation-free and cheap to copy.

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace c4pn {

inline constexpr int kMaxVertices = 16;

struct BitGraph {
    std::array<std::uint16_t, kMaxVertices> row{};

    static constexpr std::uint16_t bit(int v) { return static_cast<std::uint16_t>(1u << v); }

    bool has_edge(int a, int b) const { return (row[a] >> b) & 1u; }

    void add_edge(int a, int b) {
        row[a] |= bit(b);
        row[b] |= bit(a);
    }

    void remove_edge(int a, int b) {
        row[a] &= static_cast<std::uint16_t>(~bit(b));
        row[b] &= static_cast<std::uint16_t>(~bit(a));
    }

    int degree(int v) const { return __builtin_popcount(row[v]); }

    int edge_count() const {
        int twice = 0;
        for (int v = 0; v < kMaxVertices; ++v) twice += degree(v);
        return twice / 2;
    }

    bool empty() const {
        for (int v = 0; v < kMaxVertices; ++v)
            if (row[v]) return false;
        return true;
    }

    // Largest vertex index touched by any edge, or -1 on the empty graph.
    int max_vertex() const {
        for (int v = kMaxVertices - 1; v >= 0; --v)
            if (row[v]) return v;
        return -1;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int a = 0; a < kMaxVertices; ++a)
            for (int b = a + 1; b < kMaxVertices; ++b)
                if (has_edge(a, b)) out.emplace_back(a, b);
        return out;
    }

    friend bool operator==(const BitGraph&, const BitGraph&) = default;
};

// True iff adding edge (a,b) to `red` closes a cycle of length four, i.e.
// red already contains a path a-y-x-b on four distinct vertices.  The edge
// (a,b) itself must not be present.
bool has_c4_with(const BitGraph& red, int a, int b);

// True iff `g` is a disjoint union of paths (no vertex of degree >= 3 and no
// cycle).  Isolated vertices count as trivial paths.
bool is_union_of_paths(const BitGraph& g);

// Incremental form used in the solver hot loop: assuming `g` WITHOUT edge
// (a,b) is a union of paths, decide whether g WITH (a,b) still is.  The edge
// must already be present in `g`.
bool union_of_paths_with(const BitGraph& g, int a, int b);

// True iff `g` is exactly one path on `n` vertices (n-1 edges, nothing else).
bool is_exact_path(const BitGraph& g, int n);

// Number of connected components among non-isolated vertices plus, for the
// union-of-paths case, equals (vertices touched) - (edges).  Helper for rule
// checks; returns -1 if g is not a union of paths.
int path_component_count(const BitGraph& g);

}  // namespace c4pn
