#include "c4pn/canonical.hpp"

#include <algorithm>

namespace c4pn {

CanonicalForm canonicalize(const BitGraph& blue, const BitGraph& red, int v) {
    CanonicalForm cf;
    struct Slot {
        std::int8_t bd, rd, id;
    };
    std::array<Slot, kMaxVertices> slots;
    for (int i = 0; i < v; ++i)
        slots[i] = {static_cast<std::int8_t>(blue.degree(i)),
                    static_cast<std::int8_t>(red.degree(i)), static_cast<std::int8_t>(i)};
    std::sort(slots.begin(), slots.begin() + v, [](const Slot& a, const Slot& b) {
        if (a.bd != b.bd) return a.bd > b.bd;
        if (a.rd != b.rd) return a.rd > b.rd;
        return a.id < b.id;
    });
    for (int s = 0; s < kMaxVertices; ++s) {
        int label = s < v ? slots[s].id : s;
        cf.order[s] = static_cast<std::uint8_t>(label);
        cf.inv[label] = static_cast<std::uint8_t>(s);
    }

    // Permuted rows in sorted labels, then triangle-split into the key.
    for (int s = 0; s < v; ++s) {
        int b = cf.order[s];
        std::uint16_t pblue = 0, pred = 0;
        std::uint16_t scan = blue.row[b];
        while (scan) {
            int t = __builtin_ctz(scan);
            scan &= static_cast<std::uint16_t>(scan - 1);
            pblue |= BitGraph::bit(cf.inv[t]);
        }
        scan = red.row[b];
        while (scan) {
            int t = __builtin_ctz(scan);
            scan &= static_cast<std::uint16_t>(scan - 1);
            pred |= BitGraph::bit(cf.inv[t]);
        }
        std::uint16_t lower = static_cast<std::uint16_t>(BitGraph::bit(s) - 1);
        std::uint16_t bits = static_cast<std::uint16_t>(
            (pblue & lower) | (pred & static_cast<std::uint16_t>(~(lower | BitGraph::bit(s)))));
        int base = s * 16;
        cf.key.w[base >> 6] |= static_cast<std::uint64_t>(bits) << (base & 63);
    }
    return cf;
}

TableKey pack_key(const PositionKey& key) {
    TableKey out;
    int off = 0;
    auto append = [&](std::uint64_t bits, int width) {
        out.w[off >> 6] |= bits << (off & 63);
        if ((off & 63) + width > 64) out.w[(off >> 6) + 1] |= bits >> (64 - (off & 63));
        off += width;
    };
    for (int s = 0; s < 14; ++s) {
        std::uint64_t row = (key.w[s >> 2] >> ((s & 3) * 16)) & 0xFFFFu;
        // blue bits sit below the diagonal, red bits above it (within 14 cols)
        append(row & ((1u << s) - 1), s);
        append((row >> (s + 1)) & ((1u << (13 - s)) - 1), 13 - s);
    }
    return out;
}

std::array<std::uint8_t, kMaxVertices> iso_witness(const CanonicalForm& a,
                                                   const CanonicalForm& b) {
    std::array<std::uint8_t, kMaxVertices> to{};
    for (int x = 0; x < kMaxVertices; ++x) to[x] = b.order[a.inv[x]];
    return to;
}

}  // namespace c4pn
