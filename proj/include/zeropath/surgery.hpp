#pragma once

#include <utility>
#include <vector>

#include "zeropath/graph.hpp"
#include "zeropath/wall.hpp"
#include "zeropath/windmill.hpp"

namespace zeropath {

// Exchange step on two path families ending in a common target set.  The
// kept paths are members of qs left whole; the rerouted ones are rebuilt
// from pieces of both families and keep the B-side endpoints of rs.
struct RerouteResult {
    std::vector<Path> kept;
    std::vector<Path> rerouted;
};

// qs: 2t disjoint paths ending in the target set, rs: t disjoint paths
// ending there as well.  Returns t untouched members of qs plus t rerouted
// B-side paths, all 2t pairwise disjoint, edge-wise inside the input union.
RerouteResult reroute_two_families(const Graph& h, const std::vector<Path>& qs,
                                   const std::vector<Path>& rs);

struct LinkSelection {
    std::vector<Path> a_paths;  // t, end nails form an initial arc of the cut cycle
    std::vector<Path> linkage;  // t, all endpoints beyond that arc
    Edge cut_edge;              // outer cycle edge whose removal yields the order
};

// ps: 3t disjoint paths nicely linking some terminal set to w, ls: linkage
// of w with 6t paths.  Picks t of each, pairwise disjoint, such that on the
// outer cycle cut at cut_edge every a_path endpoint precedes every linkage
// endpoint.
LinkSelection select_link_and_linkage(const Graph& g, const Wall& w,
                                      const std::vector<Path>& ps,
                                      const std::vector<Path>& ls, int t);

// w must have odd brick cycles throughout; linking holds 3k disjoint paths
// from a that nicely link to nails of pairwise disjoint top-row bricks.
// Returns k vertex-disjoint windmills with tips in a.
std::vector<Windmill> windmills_from_odd_wall(const Graph& g, const VertexSet& a,
                                              const Wall& w,
                                              const std::vector<Path>& linking,
                                              int k);

struct WallLink {
    Wall subwall;
    bool linked = false;
    std::vector<Path> paths;  // t nicely-linking paths when linked
    VertexSet separator;      // fewer than 3t^2 vertices otherwise
};

// Either finds a size-r subwall of w together with t disjoint paths from a
// that nicely link to it, or a small separator putting some size-r subwall
// out of reach of a.  Requires size(w) >= 4tr and r >= t.
WallLink link_a_to_subwall(const Graph& g, const VertexSet& a, const Wall& w,
                           int t, int r);

// w4: wall whose subdivided edges all have length 0 mod 4, q its top row.
// ls: 2k linkage paths of w4, odd lengths, all the same residue mod 4.
// ps: 2k disjoint paths nicely linking to w4, all the same residue mod 4,
// with every ps end nail before every ls end nail along q.  Returns k
// disjoint paths between ps-side terminals, each of length 0 mod 4.
std::vector<Path> assemble_zero_paths(const Graph& g, const Wall& w4,
                                      const Path& q, const std::vector<Path>& ls,
                                      const std::vector<Path>& ps, int k);

}  // namespace zeropath
