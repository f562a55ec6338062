#include "c4pn/solver.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <cstdio>

namespace c4pn {

void PositionTable::Segment::reset(std::size_t cap) {
    keys.assign(cap, TableKey{});
    vals.assign(cap, kEmpty);
    count = 0;
}

const StoredMove* PositionTable::Segment::find(const TableKey& key,
                                               std::uint64_t h) const {
    const std::size_t cap = vals.size();
    std::size_t idx = slot(h, cap);
    for (;;) {
        if (vals[idx] == kEmpty) return nullptr;
        if (keys[idx] == key) return &vals[idx];
        if (++idx == cap) idx = 0;
    }
}

StoredMove* PositionTable::Segment::find_or_insert(const TableKey& key,
                                                   std::uint64_t h) {
    const std::size_t cap = vals.size();
    std::size_t idx = slot(h, cap);
    for (;;) {
        if (vals[idx] == kEmpty) {
            keys[idx] = key;
            ++count;
            return &vals[idx];
        }
        if (keys[idx] == key) return &vals[idx];
        if (++idx == cap) idx = 0;
    }
}

void PositionTable::Segment::grow() {
    std::vector<TableKey> old_keys = std::move(keys);
    std::vector<StoredMove> old_vals = std::move(vals);
    const std::size_t ncap = old_vals.size() + old_vals.size() / 2;
    keys.assign(ncap, TableKey{});
    vals.assign(ncap, kEmpty);
    for (std::size_t i = 0; i < old_vals.size(); ++i) {
        if (old_vals[i] == kEmpty) continue;
        std::size_t idx = slot(old_keys[i].hash(), ncap);
        while (vals[idx] != kEmpty)
            if (++idx == ncap) idx = 0;
        keys[idx] = old_keys[i];
        vals[idx] = old_vals[i];
    }
}

void PositionTable::reset(std::size_t segment_capacity) {
    for (Segment& s : segs_) s.reset(segment_capacity);
    count_ = 0;
}

const StoredMove* PositionTable::find(const TableKey& key) const {
    const std::uint64_t h = key.hash();
    return segs_[h & (kSegments - 1)].find(key, h);
}

void PositionTable::put(const TableKey& key, StoredMove value) {
    const std::uint64_t h = key.hash();
    Segment& seg = segs_[h & (kSegments - 1)];
    const std::size_t before = seg.count;
    StoredMove* v = seg.find_or_insert(key, h);
    *v = value;
    if (seg.count != before) {
        ++count_;
        if (seg.count * 4 >= seg.vals.size() * 3) seg.grow();
    }
}

std::size_t PositionTable::capacity_bytes() const {
    std::size_t bytes = 0;
    for (const Segment& s : segs_)
        bytes += s.keys.size() * sizeof(TableKey) + s.vals.size() * sizeof(StoredMove);
    return bytes;
}

void Solver::begin_game(const GameSpec& spec) {
    if (spec.n < 2 || spec.v < 2 || spec.e < 1)
        throw std::invalid_argument("game needs n >= 2, v >= 2, e >= 1");
    if (spec.v > 14)
        throw std::invalid_argument("vertex caps above 14 are not supported");
    if (spec_.n != 0) {
        prev_table_ = std::move(table_);
        have_prev_ = true;
    }
    table_.reset();
    spec_ = spec;
}

StartResult Solver::solve_start(int start_index) {
    const StartPosition& sp = standard_starts()[static_cast<std::size_t>(start_index)];
    StartResult res;
    res.spec = spec_;
    res.start_index = start_index;
    if (sp.max_vertex() >= spec_.v) {
        res.skipped = true;
        return res;
    }
    BitGraph blue, red;
    sp.fill(blue, red);
    const int v = sp.max_vertex() + 1;
    const SolveStats before = stats_;
    const auto t0 = std::chrono::steady_clock::now();
    int move = construct(blue, red, v, blue.edge_count(), red.edge_count());
    const auto t1 = std::chrono::steady_clock::now();
    res.rc = move ? 1 : 0;
    res.delta = {stats_.total - before.total, stats_.unique - before.unique};
    res.seconds = std::chrono::duration<double>(t1 - t0).count();
    return res;
}

StoredMove Solver::position_move(const BitGraph& blue, const BitGraph& red, int v) {
    CanonicalForm cf = canonicalize(blue, red, v);
    if (opts_.use_table)
        if (const StoredMove* hit = table_.find(pack_key(cf.key))) return *hit;
    return static_cast<StoredMove>(
        construct(blue, red, v, blue.edge_count(), red.edge_count()));
}

int Solver::construct(const BitGraph& blue, const BitGraph& red, int v, int eb, int er) {
    if (opts_.use_budget_prune && budget_exceeded(eb, er, spec_.n, spec_.e)) return 0;

    const CanonicalForm cf = canonicalize(blue, red, v);
    const TableKey tkey = pack_key(cf.key);
    ++stats_.total;
    if (opts_.use_table)
        if (const StoredMove* hit = table_.find(tkey)) return *hit;
    ++stats_.unique;
    if (opts_.progress && (stats_.unique & ((1u << 23) - 1)) == 0)
        std::fprintf(stderr, "  ... %llu unique / %llu total positions\n",
                     static_cast<unsigned long long>(stats_.unique),
                     static_cast<unsigned long long>(stats_.total));

    if (eb + er == spec_.e) return 0;

    // Coloured or already-refuted edges; hint failures are added so the scan
    // below does not retry them.
    std::array<std::uint16_t, kMaxVertices> mask;
    for (int i = 0; i < kMaxVertices; ++i)
        mask[i] = static_cast<std::uint16_t>(blue.row[i] | red.row[i]);

    if (opts_.use_hints && have_prev_) {
        if (const StoredMove* h = prev_table_.find(tkey)) {
            const StoredMove hint = *h;  // copy: recursion below may rehash
            if (hint) {
                const int v1 = cf.order[hint >> 8];
                const int v2 = cf.order[hint & 0xFF];
                const int vn = std::max({v, v1 + 1, v2 + 1});
                if (colour(blue, red, v1, v2, vn, eb, er)) {
                    if (opts_.use_table) table_.put(tkey, hint);
                    return hint;
                }
                mask[v1] |= BitGraph::bit(v2);
                mask[v2] |= BitGraph::bit(v1);
            }
        }
    }

    for (int i = v - 1; i >= 0; --i) {
        if (blue.degree(i) > 1) continue;
        for (int j = v - 1; j > i; --j) {
            if (blue.degree(j) > 1) continue;
            if ((mask[i] >> j) & 1u) continue;
            if (colour(blue, red, i, j, v, eb, er)) {
                const StoredMove mv =
                    static_cast<StoredMove>((cf.inv[i] << 8) | cf.inv[j]);
                if (opts_.use_table) table_.put(tkey, mv);
                return mv;
            }
        }
    }
    if (v < spec_.v) {
        for (int i = 0; i < v; ++i) {
            if (blue.degree(i) > 1) continue;
            if ((mask[i] >> v) & 1u) continue;
            if (colour(blue, red, i, v, v + 1, eb, er)) {
                const StoredMove mv = static_cast<StoredMove>((cf.inv[i] << 8) | v);
                if (opts_.use_table) table_.put(tkey, mv);
                return mv;
            }
        }
    }
    if (v == 0 && colour(blue, red, 0, 1, 2, eb, er)) {
        if (opts_.use_table) table_.put(tkey, 1);
        return 1;
    }

    if (opts_.use_table) table_.put(tkey, 0);
    return 0;
}

int Solver::colour(const BitGraph& blue, const BitGraph& red, int v1, int v2, int v_new,
                   int eb, int er) {
    BitGraph btmp = blue;
    btmp.add_edge(v1, v2);
    if (!union_of_paths_with(btmp, v1, v2)) return 0;
    if (opts_.use_spare_vertex) {
        if (!spare_blue_vertex(btmp, spec_.v)) return 0;
    } else {
        // Equivalent bound stated directly on the blue graph.
        if (!blue_embeds_in_path(btmp, spec_.n)) return 0;
    }

    // Painter answers red: an immediate red C4 is a Builder win, so only a
    // red reply that avoids it can refute the move.
    if (!has_c4_with(red, v1, v2)) {
        BitGraph rtmp = red;
        rtmp.add_edge(v1, v2);
        if (!construct(blue, rtmp, v_new, eb, er + 1)) return 0;
    }

    // Painter answers blue: completing the path wins on the spot.
    if (!(eb + 1 == spec_.n - 1 && blue_is_target_path(btmp, spec_.n))) {
        if (!construct(btmp, red, v_new, eb + 1, er)) return 0;
    }
    return 1;
}

}  // namespace c4pn
