#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zeropath/graph.hpp"

namespace zeropath {

// Coordinates of the elementary wall template: (row, col), both 1-based.
// Row 1 is the top row. An elementary n-wall lives inside the
// (n+1) x (2n+2) grid; vertical edges between rows r and r+1 survive
// exactly at columns c with c == r (mod 2), and the two degree-1
// corners left over by that pattern are deleted.
struct Coord {
    int row = 0;
    int col = 0;

    friend bool operator==(const Coord& a, const Coord& b) {
        return a.row == b.row && a.col == b.col;
    }
    friend bool operator<(const Coord& a, const Coord& b) {
        if (a.row != b.row) return a.row < b.row;
        return a.col < b.col;
    }
};

using CoordEdge = std::pair<Coord, Coord>;

CoordEdge make_coord_edge(Coord a, Coord b);

// The abstract elementary n-wall: which grid positions and elementary
// edges exist. Purely combinatorial; no host vertex ids.
struct WallTemplate {
    int n = 0;
    std::vector<Coord> coords;
    std::vector<CoordEdge> edges;

    bool has_coord(Coord c) const;
    bool has_edge(Coord a, Coord b) const;

    // Nail positions (1, 2j), j = 1..n: the interior degree-2 vertices
    // of the top row.
    std::vector<Coord> nail_coords() const;

    // Horizontal path r as a coordinate sequence, left to right.
    std::vector<Coord> horizontal_coords(int r) const;

    // Vertical path k (1..n+1) as a coordinate sequence, top to bottom.
    // Path k starts at (1, 2k-1) and occupies columns {2k-1, 2k}.
    std::vector<Coord> vertical_coords(int k) const;

    // Brick (i, b): i = row gap 1..n, b = 1..n. The 6-cycle of the
    // brick whose top-left corner sits at column (i odd ? 2b-1 : 2b).
    std::vector<Coord> brick_coords(int i, int b) const;

    // The outer cycle: top row, last vertical path, bottom row
    // reversed, first vertical path reversed.
    std::vector<Coord> outer_cycle_coords() const;
};

WallTemplate build_wall_template(int n);

// Per-elementary-edge subdivision lengths. Edges not listed in
// overrides get default_length. All lengths must be >= 1.
struct SubdivisionRule {
    int default_length = 1;
    std::map<CoordEdge, int> overrides;

    int length_of(const CoordEdge& e) const;
};

// A wall embedded in a host graph: the template plus the embedding.
// position maps template coordinates to branch vertex ids; edge_paths
// maps each elementary edge to its subdivision path in the host,
// oriented from the edge's first coordinate to its second.
class Wall {
  public:
    Wall() = default;
    Wall(WallTemplate tmpl, std::map<Coord, int> position,
         std::map<CoordEdge, std::vector<int>> edge_paths);

    int size() const { return tmpl_.n; }
    const WallTemplate& tmpl() const { return tmpl_; }

    int vertex_at(Coord c) const;
    bool has_position(Coord c) const;

    // Interior vertices included, endpoints included; oriented a -> b.
    Path edge_path(Coord a, Coord b) const;

    // All wall vertices (branch and subdivision).
    VertexSet vertices() const;
    VertexSet branch_vertices() const;

    // Nails in left-to-right top-row order.
    std::vector<int> nails() const;
    // Position of v among the nails (0-based), if it is one.
    std::optional<int> nail_index(int v) const;

    Path horizontal_path(int r) const;
    Path vertical_path(int k) const;
    Path top_row() const { return horizontal_path(1); }
    std::vector<Path> horizontal_paths() const;
    std::vector<Path> vertical_paths() const;

    // Brick (i, b) as a closed walk: first vertex == last vertex.
    std::vector<int> brick_cycle(int i, int b) const;
    // All bricks in row-major order.
    std::vector<std::vector<int>> brick_cycles() const;

    std::vector<int> outer_cycle() const;

    // The wall as a standalone graph (vertex ids as in the host).
    Graph to_graph() const;

    // Walks a template coordinate sequence and concatenates the
    // corresponding host edge paths.
    Path path_along(const std::vector<Coord>& coords) const;

    const std::map<Coord, int>& positions() const { return position_; }
    const std::map<CoordEdge, std::vector<int>>& edge_paths() const {
        return edge_paths_;
    }

  private:
    WallTemplate tmpl_;
    std::map<Coord, int> position_;
    std::map<CoordEdge, std::vector<int>> edge_paths_;
};

// The elementary n-wall with fresh row-major vertex ids. n >= 2.
Wall build_elementary_wall(int n);

// Replaces every elementary edge path by a fresh path of the given
// length. Branch vertices keep their ids; interior ids are allocated
// past the current maximum in sorted edge order.
Wall subdivide_wall(const Wall& w, const SubdivisionRule& rule);

// The m-subwall whose top row starts at host row r0 and whose first
// vertical path is the host's k0-th. Every mapped position and edge
// must exist in the host; otherwise the window is invalid.
Wall extract_subwall(const Wall& w, int r0, int k0, int m);

// All valid (r0, k0) windows for size m, row-major.
std::vector<std::pair<int, int>> subwall_windows(const Wall& w, int m);

// sub avoids the first and last k horizontal and vertical paths of w.
// sub's vertices must all belong to w.
bool k_contained(const Wall& w, const Wall& sub, int k);

// ---------------------------------------------------------------------------
// Linkages

enum class LinkageType { InSeries, Crossing, Nested, Mixed };

std::string to_string(LinkageType t);

struct Linkage {
    std::vector<Path> paths;
};

// Paths pairwise disjoint, each joining two distinct nails of w, with
// no other wall vertex on any path.
void validate_linkage(const Graph& g, const Wall& w, const Linkage& l);

// Pairwise endpoint-order classification; vacuous pairs give InSeries.
LinkageType classify_linkage(const Wall& w, const Linkage& l);

// True iff for every path P of l, P together with the wall is
// non-bipartite. Requires a bipartite wall.
bool is_odd_linkage(const Graph& g, const Wall& w, const Linkage& l);

}  // namespace zeropath
