#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace c4pn {

enum class Colour : unsigned char { red, blue };

inline char colour_letter(Colour c) { return c == Colour::red ? 'r' : 'b'; }

/// Two-coloured graph over an unbounded vertex id space.
///
/// The strategy engine plays on boards whose vertex ids grow without limit
/// (fresh vertices are always brand-new ids, never recycled), so the fixed
/// 16-slot BitGraph does not fit.  DynGraph keeps one sorted adjacency set
/// per colour per vertex; a vertex exists exactly while it has at least one
/// incident edge.
class DynGraph {
public:
    void add_edge(int a, int b, Colour c);
    void remove_edge(int a, int b);
    /// Removes v together with every incident edge.
    void remove_vertex(int v);

    bool has_edge(int a, int b) const;
    std::optional<Colour> edge_colour(int a, int b) const;

    const std::set<int>& red_neighbours(int v) const;
    const std::set<int>& blue_neighbours(int v) const;
    int red_degree(int v) const;
    int blue_degree(int v) const;

    int edge_count() const { return red_edges_ + blue_edges_; }
    int red_edge_count() const { return red_edges_; }
    int blue_edge_count() const { return blue_edges_; }
    bool empty() const { return edge_count() == 0; }

    /// Vertices with at least one incident edge, ascending.
    std::vector<int> vertices() const;
    int vertex_count() const;
    /// Largest vertex id in use, or -1 on an empty board.
    int max_vertex() const;

    std::vector<std::pair<int, int>> edges(Colour c) const;

    /// True when adding a red edge ab would close a red four-cycle, i.e.
    /// the board already has a red path a-x-y-b on distinct vertices.
    bool red_c4_with(int a, int b) const;

    /// True when the blue edges form exactly one path on n vertices and
    /// nothing else (no isolated blue edges, cycles, or branches).
    bool blue_exact_path(int n) const;

    /// Endpoints of the blue path component containing v (v included when it
    /// has blue degree <= 1).  Precondition: v's blue component is a path.
    std::pair<int, int> blue_path_ends(int v) const;

private:
    const std::set<int>& neighbours(const std::map<int, std::set<int>>& adj, int v) const;

    std::map<int, std::set<int>> red_;
    std::map<int, std::set<int>> blue_;
    int red_edges_ = 0;
    int blue_edges_ = 0;
};

}  // namespace c4pn
