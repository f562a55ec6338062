#include "c4pn/dyngraph.hpp"

#include <algorithm>

#include "c4pn/error.hpp"

namespace c4pn {

namespace {
const std::set<int> kNoNeighbours;
}

void DynGraph::add_edge(int a, int b, Colour c) {
    if (a == b) throw InvariantError("DynGraph: loop edge");
    if (has_edge(a, b)) throw InvariantError("DynGraph: duplicate edge");
    auto& adj = (c == Colour::red) ? red_ : blue_;
    adj[a].insert(b);
    adj[b].insert(a);
    ((c == Colour::red) ? red_edges_ : blue_edges_)++;
}

void DynGraph::remove_edge(int a, int b) {
    auto drop = [&](std::map<int, std::set<int>>& adj, int& count) {
        auto it = adj.find(a);
        if (it == adj.end() || it->second.erase(b) == 0) return false;
        if (it->second.empty()) adj.erase(it);
        auto jt = adj.find(b);
        jt->second.erase(a);
        if (jt->second.empty()) adj.erase(jt);
        --count;
        return true;
    };
    if (!drop(red_, red_edges_) && !drop(blue_, blue_edges_))
        throw InvariantError("DynGraph: removing absent edge");
}

void DynGraph::remove_vertex(int v) {
    auto strip = [&](std::map<int, std::set<int>>& adj, int& count) {
        auto it = adj.find(v);
        if (it == adj.end()) return;
        for (int w : it->second) {
            auto jt = adj.find(w);
            jt->second.erase(v);
            if (jt->second.empty()) adj.erase(jt);
            --count;
        }
        adj.erase(v);
    };
    strip(red_, red_edges_);
    strip(blue_, blue_edges_);
}

bool DynGraph::has_edge(int a, int b) const { return edge_colour(a, b).has_value(); }

std::optional<Colour> DynGraph::edge_colour(int a, int b) const {
    if (red_neighbours(a).count(b)) return Colour::red;
    if (blue_neighbours(a).count(b)) return Colour::blue;
    return std::nullopt;
}

const std::set<int>& DynGraph::neighbours(const std::map<int, std::set<int>>& adj,
                                          int v) const {
    auto it = adj.find(v);
    return it == adj.end() ? kNoNeighbours : it->second;
}

const std::set<int>& DynGraph::red_neighbours(int v) const { return neighbours(red_, v); }
const std::set<int>& DynGraph::blue_neighbours(int v) const { return neighbours(blue_, v); }

int DynGraph::red_degree(int v) const { return static_cast<int>(red_neighbours(v).size()); }
int DynGraph::blue_degree(int v) const { return static_cast<int>(blue_neighbours(v).size()); }

std::vector<int> DynGraph::vertices() const {
    std::vector<int> out;
    auto it = red_.begin();
    auto jt = blue_.begin();
    while (it != red_.end() || jt != blue_.end()) {
        int next;
        if (it == red_.end())
            next = (jt++)->first;
        else if (jt == blue_.end())
            next = (it++)->first;
        else if (it->first < jt->first)
            next = (it++)->first;
        else if (jt->first < it->first)
            next = (jt++)->first;
        else {
            next = it->first;
            ++it, ++jt;
        }
        out.push_back(next);
    }
    return out;
}

int DynGraph::vertex_count() const { return static_cast<int>(vertices().size()); }

int DynGraph::max_vertex() const {
    int best = -1;
    if (!red_.empty()) best = std::max(best, red_.rbegin()->first);
    if (!blue_.empty()) best = std::max(best, blue_.rbegin()->first);
    return best;
}

std::vector<std::pair<int, int>> DynGraph::edges(Colour c) const {
    const auto& adj = (c == Colour::red) ? red_ : blue_;
    std::vector<std::pair<int, int>> out;
    for (const auto& [v, nbrs] : adj)
        for (int w : nbrs)
            if (v < w) out.emplace_back(v, w);
    return out;
}

bool DynGraph::red_c4_with(int a, int b) const {
    for (int x : red_neighbours(a)) {
        if (x == b) continue;
        for (int y : red_neighbours(b)) {
            if (y == a || y == x) continue;
            if (red_neighbours(x).count(y)) return true;
        }
    }
    return false;
}

bool DynGraph::blue_exact_path(int n) const {
    if (blue_edges_ != n - 1) return false;
    int touched = 0;
    int ends = 0;
    int start = -1;
    for (const auto& [v, nbrs] : blue_) {
        ++touched;
        if (nbrs.size() > 2) return false;
        if (nbrs.size() == 1) {
            ++ends;
            start = v;
        }
    }
    if (touched != n || ends != 2) return false;
    // Walk from one end; a single path component visits all n vertices.
    int prev = -1;
    int cur = start;
    int seen = 1;
    while (true) {
        int next = -1;
        for (int w : blue_neighbours(cur))
            if (w != prev) next = w;
        if (next < 0) break;
        prev = cur;
        cur = next;
        ++seen;
    }
    return seen == n;
}

std::pair<int, int> DynGraph::blue_path_ends(int v) const {
    auto walk = [&](int from, int first) {
        int prev = from;
        int cur = first;
        while (true) {
            int next = -1;
            for (int w : blue_neighbours(cur))
                if (w != prev) next = w;
            if (next < 0) return cur;
            prev = cur;
            cur = next;
        }
    };
    const auto& nbrs = blue_neighbours(v);
    if (nbrs.empty()) return {v, v};
    if (nbrs.size() == 1) return {v, walk(v, *nbrs.begin())};
    if (nbrs.size() == 2) {
        auto it = nbrs.begin();
        int left = *it++;
        int right = *it;
        return {walk(v, left), walk(v, right)};
    }
    throw InvariantError("DynGraph: blue component at vertex is not a path");
}

}  // namespace c4pn
