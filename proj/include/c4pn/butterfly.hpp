#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "c4pn/dyngraph.hpp"

namespace c4pn {

/// A butterfly is a red scaffold the engine builds while it waits for blue
/// edges: two adjacent star centers c1, c2, each extended by a two-edge arm
/// (c1-mid1-tail1 and c2-mid2-tail2), plus a "wing" of pendant vertices at
/// each center.  All ids are board vertex ids; all listed edges are red.
struct Butterfly {
    int c1 = -1, c2 = -1;
    int mid1 = -1, tail1 = -1;
    int mid2 = -1, tail2 = -1;
    std::vector<int> wing1;  // pendants at c1
    std::vector<int> wing2;  // pendants at c2

    /// The same butterfly with sides 1 and 2 exchanged.
    Butterfly swapped() const;

    std::vector<std::pair<int, int>> red_edges() const;
    std::vector<int> all_vertices() const;
    int order() const { return 6 + static_cast<int>(wing1.size() + wing2.size()); }

    /// Checks that every scaffold edge is present and red on the board.
    void validate_red(const DynGraph& board) const;
};

/// Abstract forcing graph of a butterfly with equal wings of size s >= 1.
///
/// Its vertices are the butterfly vertices other than the two centers; every
/// edge of this graph, when selected on the butterfly board, is forced blue
/// because a red answer would close a red C4 through the scaffold.  The graph
/// is the complete bipartite graph on parts
///     {wing1, mid1, tail2}  and  {wing2, mid2, tail1}
/// minus the three pairs (mid1,tail1), (tail1,tail2), (tail2,mid2), whose red
/// answers close no C4 (the first two-colour one is already a red edge).
///
/// Vertices are numbered 0..2s+3: wing1 occupies 0..s-1, then mid1, tail2,
/// wing2 (s+2..2s+1), mid2, tail1.
namespace fg {

int size(int s);
int wing1(int s, int i);
int mid1(int s);
int tail2(int s);
int wing2(int s, int i);
int mid2(int s);
int tail1(int s);
/// 0 for the part containing wing1, 1 for the part containing wing2.
int part(int s, int v);
bool adjacent(int s, int x, int y);

/// Hamilton path from `from` to `to`, optionally required to use the edge
/// `required`.  Returns the vertex sequence, or an empty vector when no such
/// path exists (s = 1 admits only the tail1-tail2 pair).  Backtracking search
/// with a most-constrained extension order and a bipartite-balance prune.
std::vector<int> hamilton_path(int s, int from, int to,
                               std::optional<std::pair<int, int>> required = std::nullopt);

/// Independent validation of a claimed Hamilton path: coverage, endpoints,
/// adjacency of every consecutive pair, and use of the required edge.
bool check_hamilton_path(int s, int from, int to, const std::vector<int>& path,
                         std::optional<std::pair<int, int>> required = std::nullopt);

}  // namespace fg

/// An ordered list of selections that are all forced blue on a butterfly
/// board, together with the ends of the blue path they assemble.
struct ForcePlan {
    std::vector<std::pair<int, int>> edges;
    int end1 = -1;
    int end2 = -1;
};

/// Assembles all of V(B) into one blue path with ends c1, c2.  When `skip`
/// names a wing1-wing2 pair, the Hamilton path is required to traverse that
/// pair but the corresponding selection is omitted (the caller already owns a
/// blue detour between those two vertices).
ForcePlan force_plan_full(const Butterfly& b,
                          std::optional<std::pair<int, int>> skip = std::nullopt);

/// Assembles V(B) minus c2 into one blue path with ends c1 and y, where y is
/// a wing2 vertex.
ForcePlan force_plan_minus_center(const Butterfly& b, int y);

/// Assembles V(B) minus both centers into one blue path with ends x in wing1
/// and y in wing2.
ForcePlan force_plan_crossing(const Butterfly& b, int x, int y);

}  // namespace c4pn
