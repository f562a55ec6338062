#pragma once

// Position keys for the transposition table.  Vertices 0..v-1 are sorted by
// (blue degree desc, red degree desc, index asc); the key packs the reordered
// blue adjacency matrix into the strict lower triangle and the reordered red
// matrix into the strict upper triangle of a 16x16 bit matrix (256 bits).
//
// Trailing isolated vertices sort last and contribute no bits, so the key does
// not depend on how many vertex slots have been allocated.  Equal keys imply
// the positions are isomorphic via order/inv (see iso_witness).

#include <array>
#include <cstddef>
#include <cstdint>

#include "c4pn/bitgraph.hpp"

namespace c4pn {

struct PositionKey {
    std::array<std::uint64_t, 4> w{};

    friend bool operator==(const PositionKey&, const PositionKey&) = default;

    bool is_zero() const { return (w[0] | w[1] | w[2] | w[3]) == 0; }

    std::size_t hash() const {
        std::uint64_t h = 0x9e3779b97f4a7c15ull;
        for (std::uint64_t x : w) {
            x *= 0xbf58476d1ce4e5b9ull;
            x ^= x >> 31;
            h = (h ^ x) * 0x94d049bb133111ebull;
        }
        return static_cast<std::size_t>(h ^ (h >> 29));
    }
};

struct CanonicalForm {
    PositionKey key;
    // order[s] = board label of the vertex at sorted position s;
    // inv[b]   = sorted position of board label b.  Positions >= v are padded
    // with the identity so fresh-vertex moves translate unchanged.
    std::array<std::uint8_t, kMaxVertices> order{};
    std::array<std::uint8_t, kMaxVertices> inv{};
};

// Storage form used by the transposition table: for positions on at most 14
// vertices the two strict triangles (91 bits each) fit in three words, a 25%
// saving that matters at the hundred-million-position scale.  The packing is
// bijective, so equality of TableKeys matches equality of PositionKeys.
struct TableKey {
    std::array<std::uint64_t, 3> w{};

    friend bool operator==(const TableKey&, const TableKey&) = default;

    std::uint64_t hash() const {
        std::uint64_t h = 0x9e3779b97f4a7c15ull;
        for (std::uint64_t x : w) {
            x *= 0xbf58476d1ce4e5b9ull;
            x ^= x >> 31;
            h = (h ^ x) * 0x94d049bb133111ebull;
        }
        return h ^ (h >> 29);
    }
};

// Requires the position to touch only vertex slots 0..13.
TableKey pack_key(const PositionKey& key);

CanonicalForm canonicalize(const BitGraph& blue, const BitGraph& red, int v);

// Board-label permutation taking position 1 onto position 2 when their keys
// are equal: label x of board 1 maps to to[x] on board 2.
std::array<std::uint8_t, kMaxVertices> iso_witness(const CanonicalForm& a,
                                                   const CanonicalForm& b);

}  // namespace c4pn
