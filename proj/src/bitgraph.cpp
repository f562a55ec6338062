#include "c4pn/bitgraph.hpp"

namespace c4pn {

bool has_c4_with(const BitGraph& red, int a, int b) {
    // Look for y adjacent to b (y != a) whose neighbourhood meets N(a)\{b}:
    // that gives a path a-x-y-b, closing a C4 once ab is added.
    std::uint16_t candidates = red.row[b] & static_cast<std::uint16_t>(~BitGraph::bit(a));
    std::uint16_t a_nbrs = red.row[a] & static_cast<std::uint16_t>(~BitGraph::bit(b));
    while (candidates) {
        int y = __builtin_ctz(candidates);
        candidates &= static_cast<std::uint16_t>(candidates - 1);
        if (red.row[y] & a_nbrs) return true;
    }
    return false;
}

bool is_union_of_paths(const BitGraph& g) {
    std::uint16_t pending = 0;
    for (int v = 0; v < kMaxVertices; ++v) {
        if (g.degree(v) > 2) return false;
        if (g.row[v]) pending |= BitGraph::bit(v);
    }
    // Degrees are all <= 2, so each component is a path or a cycle.  A
    // component is a path iff it contains a vertex of degree <= 1.
    while (pending) {
        int start = __builtin_ctz(pending);
        std::uint16_t comp = BitGraph::bit(start);
        std::uint16_t frontier = comp;
        while (frontier) {
            std::uint16_t next = 0;
            while (frontier) {
                int v = __builtin_ctz(frontier);
                frontier &= static_cast<std::uint16_t>(frontier - 1);
                next |= g.row[v];
            }
            frontier = next & static_cast<std::uint16_t>(~comp);
            comp |= next;
        }
        bool has_end = false;
        std::uint16_t scan = comp;
        while (scan) {
            int v = __builtin_ctz(scan);
            scan &= static_cast<std::uint16_t>(scan - 1);
            if (g.degree(v) <= 1) {
                has_end = true;
                break;
            }
        }
        if (!has_end) return false;
        pending &= static_cast<std::uint16_t>(~comp);
    }
    return true;
}

bool union_of_paths_with(const BitGraph& g, int a, int b) {
    if (g.degree(a) > 2 || g.degree(b) > 2) return false;
    // No vertex elsewhere changed degree, so only a new cycle through (a,b)
    // can break the property: walk from a away from b; if the walk reaches b
    // the edge closed a cycle.
    int prev = b;
    int cur = a;
    for (;;) {
        std::uint16_t nbrs = g.row[cur] & static_cast<std::uint16_t>(~BitGraph::bit(prev));
        if (!nbrs) return true;  // hit a path end
        int next = __builtin_ctz(nbrs);
        if (next == b) return false;
        prev = cur;
        cur = next;
    }
}

bool is_exact_path(const BitGraph& g, int n) {
    if (n <= 0) return false;
    if (n == 1) return g.empty();
    int ends = 0, mids = 0, start = -1;
    for (int v = 0; v < kMaxVertices; ++v) {
        int d = g.degree(v);
        if (d == 0) continue;
        if (d == 1) {
            ++ends;
            start = v;
        } else if (d == 2) {
            ++mids;
        } else {
            return false;
        }
    }
    if (ends != 2 || mids != n - 2) return false;
    // Confirm the n vertices form one component by walking from an end.
    int prev = -1, cur = start, steps = 0;
    while (cur != -1) {
        ++steps;
        std::uint16_t nbrs = g.row[cur];
        if (prev != -1) nbrs &= static_cast<std::uint16_t>(~BitGraph::bit(prev));
        prev = cur;
        cur = nbrs ? __builtin_ctz(nbrs) : -1;
    }
    return steps == n;
}

int path_component_count(const BitGraph& g) {
    if (!is_union_of_paths(g)) return -1;
    int touched = 0, edges = 0;
    for (int v = 0; v < kMaxVertices; ++v) {
        if (g.row[v]) {
            ++touched;
            edges += g.degree(v);
        }
    }
    return touched - edges / 2;
}

}  // namespace c4pn
