#include "c4pn/butterfly.hpp"

#include <algorithm>

#include "c4pn/error.hpp"

namespace c4pn {

Butterfly Butterfly::swapped() const {
    Butterfly out;
    out.c1 = c2;
    out.c2 = c1;
    out.mid1 = mid2;
    out.tail1 = tail2;
    out.mid2 = mid1;
    out.tail2 = tail1;
    out.wing1 = wing2;
    out.wing2 = wing1;
    return out;
}

std::vector<std::pair<int, int>> Butterfly::red_edges() const {
    std::vector<std::pair<int, int>> out = {
        {c1, c2}, {c1, mid1}, {mid1, tail1}, {c2, mid2}, {mid2, tail2}};
    for (int w : wing1) out.emplace_back(c1, w);
    for (int w : wing2) out.emplace_back(c2, w);
    return out;
}

std::vector<int> Butterfly::all_vertices() const {
    std::vector<int> out = {c1, c2, mid1, tail1, mid2, tail2};
    out.insert(out.end(), wing1.begin(), wing1.end());
    out.insert(out.end(), wing2.begin(), wing2.end());
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end())
        throw InvariantError("Butterfly: repeated vertex");
    return out;
}

void Butterfly::validate_red(const DynGraph& board) const {
    all_vertices();  // distinctness
    for (auto [a, b] : red_edges())
        if (board.edge_colour(a, b) != Colour::red)
            throw InvariantError("Butterfly: scaffold edge missing or not red");
}

namespace fg {

int size(int s) { return 2 * s + 4; }
int wing1(int s, int i) {
    (void)s;
    return i;
}
int mid1(int s) { return s; }
int tail2(int s) { return s + 1; }
int wing2(int s, int i) { return s + 2 + i; }
int mid2(int s) { return 2 * s + 2; }
int tail1(int s) { return 2 * s + 3; }

int part(int s, int v) { return v <= s + 1 ? 0 : 1; }

bool adjacent(int s, int x, int y) {
    if (part(s, x) == part(s, y)) return false;
    auto is_pair = [&](int a, int b) { return (x == a && y == b) || (x == b && y == a); };
    if (is_pair(mid1(s), tail1(s))) return false;
    if (is_pair(tail1(s), tail2(s))) return false;
    if (is_pair(tail2(s), mid2(s))) return false;
    return true;
}

namespace {

struct PathSearch {
    int s;
    int n;
    int to;
    std::optional<std::pair<int, int>> required;
    std::vector<char> visited;
    std::vector<int> path;
    int unvisited_by_part[2];

    bool touches_required(int v) const {
        return required && (required->first == v || required->second == v);
    }
    int required_other(int v) const { return required->first == v ? required->second : required->first; }

    bool extend(int cur, bool required_used) {
        if (static_cast<int>(path.size()) == n)
            return cur == to && (!required || required_used);
        // Bipartite balance: the rest of the path strictly alternates parts,
        // so the unvisited counts and the part of the target are pinned.
        int here = part(s, cur);
        int rest = unvisited_by_part[0] + unvisited_by_part[1];
        int need_other = (rest + 1) / 2;
        if (unvisited_by_part[1 - here] != need_other) return false;
        if (part(s, to) != (rest % 2 ? 1 - here : here)) return false;

        std::vector<std::pair<int, int>> next;
        for (int w = 0; w < n; ++w) {
            if (visited[w] || !adjacent(s, cur, w)) continue;
            if (w == to && rest > 1) continue;
            bool uses = required && touches_required(cur) && touches_required(w);
            if (!required_used && !uses && touches_required(w) && visited[required_other(w)])
                continue;  // the required edge can never be traversed any more
            int deg = 0;
            for (int z = 0; z < n; ++z)
                if (!visited[z] && adjacent(s, w, z)) ++deg;
            next.emplace_back(deg, w);
        }
        std::sort(next.begin(), next.end());
        for (auto [deg, w] : next) {
            (void)deg;
            bool uses = required && touches_required(cur) && touches_required(w);
            visited[w] = 1;
            --unvisited_by_part[part(s, w)];
            path.push_back(w);
            if (extend(w, required_used || uses)) return true;
            path.pop_back();
            ++unvisited_by_part[part(s, w)];
            visited[w] = 0;
        }
        return false;
    }
};

}  // namespace

std::vector<int> hamilton_path(int s, int from, int to,
                               std::optional<std::pair<int, int>> required) {
    if (s < 1) throw InvariantError("forcing graph: wing size must be positive");
    int n = size(s);
    if (from < 0 || from >= n || to < 0 || to >= n || from == to)
        throw InvariantError("forcing graph: bad path endpoints");
    if (part(s, from) == part(s, to)) return {};  // equal parts admit no such path
    if (required) {
        auto [a, b] = *required;
        if (!adjacent(s, a, b)) throw InvariantError("forcing graph: required pair not an edge");
    }
    PathSearch search;
    search.s = s;
    search.n = n;
    search.to = to;
    search.required = required;
    search.visited.assign(n, 0);
    search.unvisited_by_part[0] = search.unvisited_by_part[1] = n / 2;
    search.visited[from] = 1;
    --search.unvisited_by_part[part(s, from)];
    search.path.push_back(from);
    if (!search.extend(from, false)) return {};
    return search.path;
}

bool check_hamilton_path(int s, int from, int to, const std::vector<int>& path,
                         std::optional<std::pair<int, int>> required) {
    int n = size(s);
    if (static_cast<int>(path.size()) != n) return false;
    if (path.front() != from || path.back() != to) return false;
    std::vector<char> seen(n, 0);
    for (int v : path) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    bool used = !required;
    for (int i = 0; i + 1 < n; ++i) {
        if (!adjacent(s, path[i], path[i + 1])) return false;
        if (required) {
            auto [a, b] = *required;
            if ((path[i] == a && path[i + 1] == b) || (path[i] == b && path[i + 1] == a))
                used = true;
        }
    }
    return used;
}

}  // namespace fg

namespace {

// abstract forcing-graph id -> board id
std::vector<int> board_ids(const Butterfly& b) {
    int s = static_cast<int>(b.wing1.size());
    if (s < 1 || b.wing2.size() != b.wing1.size())
        throw InvariantError("force plan: wings must be non-empty and balanced");
    std::vector<int> m(fg::size(s));
    for (int i = 0; i < s; ++i) m[fg::wing1(s, i)] = b.wing1[i];
    m[fg::mid1(s)] = b.mid1;
    m[fg::tail2(s)] = b.tail2;
    for (int i = 0; i < s; ++i) m[fg::wing2(s, i)] = b.wing2[i];
    m[fg::mid2(s)] = b.mid2;
    m[fg::tail1(s)] = b.tail1;
    return m;
}

int wing_index(const std::vector<int>& wing, int v, const char* what) {
    auto it = std::find(wing.begin(), wing.end(), v);
    if (it == wing.end()) throw InvariantError(std::string("force plan: ") + what);
    return static_cast<int>(it - wing.begin());
}

ForcePlan emit(const Butterfly& b, const std::vector<int>& path,
               std::optional<std::pair<int, int>> skip_abstract, bool close1, bool close2,
               int end1, int end2) {
    if (path.empty()) throw InvariantError("force plan: no hamilton path");
    auto ids = board_ids(b);
    ForcePlan plan;
    for (size_t i = 0; i + 1 < path.size(); ++i) {
        int x = path[i], y = path[i + 1];
        if (skip_abstract) {
            auto [a, c] = *skip_abstract;
            if ((x == a && y == c) || (x == c && y == a)) continue;
        }
        plan.edges.emplace_back(ids[x], ids[y]);
    }
    if (close1) plan.edges.emplace_back(b.tail2, b.c1);
    if (close2) plan.edges.emplace_back(b.tail1, b.c2);
    plan.end1 = end1;
    plan.end2 = end2;
    return plan;
}

}  // namespace

ForcePlan force_plan_full(const Butterfly& b, std::optional<std::pair<int, int>> skip) {
    int s = static_cast<int>(b.wing1.size());
    std::optional<std::pair<int, int>> req;
    if (skip) {
        int i = wing_index(b.wing1, skip->first, "skip edge must join wing1 to wing2");
        int j = wing_index(b.wing2, skip->second, "skip edge must join wing1 to wing2");
        req = std::make_pair(fg::wing1(s, i), fg::wing2(s, j));
    }
    auto path = fg::hamilton_path(s, fg::tail1(s), fg::tail2(s), req);
    return emit(b, path, req, true, true, b.c1, b.c2);
}

ForcePlan force_plan_minus_center(const Butterfly& b, int y) {
    int s = static_cast<int>(b.wing1.size());
    int j = wing_index(b.wing2, y, "path end must lie in wing2");
    auto path = fg::hamilton_path(s, fg::tail2(s), fg::wing2(s, j));
    return emit(b, path, std::nullopt, true, false, b.c1, y);
}

ForcePlan force_plan_crossing(const Butterfly& b, int x, int y) {
    int s = static_cast<int>(b.wing1.size());
    int i = wing_index(b.wing1, x, "path end must lie in wing1");
    int j = wing_index(b.wing2, y, "path end must lie in wing2");
    auto path = fg::hamilton_path(s, fg::wing1(s, i), fg::wing2(s, j));
    return emit(b, path, std::nullopt, false, false, x, y);
}

}  // namespace c4pn
