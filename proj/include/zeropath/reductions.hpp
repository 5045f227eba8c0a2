#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zeropath/clique_model.hpp"
#include "zeropath/graph.hpp"
#include "zeropath/wall.hpp"
#include "zeropath/windmill.hpp"

namespace zeropath {

// Bookkeeping shared by the instance transformations. forward_vertex_map
// sends every surviving original vertex to its images; a_map restricts it
// to the terminal set. Vertices invented by a transformation appear only
// on the right-hand side (or in gadget_owner, keyed to the branch vertex
// whose attachment they serve).
struct ReductionTrace {
  std::map<int, std::vector<int>> forward_vertex_map;
  std::map<int, std::vector<int>> a_map;
  std::map<int, int> gadget_owner;
  std::vector<Edge> removed_edges;
  std::string notes;
};

// --- terminal doubling over a bipartite remainder ---------------------

struct SplitResult {
  Graph g;
  VertexSet a1, a2;
  ReductionTrace trace;
  std::map<int, int> terminal_origin;  // a1/a2 vertex -> original terminal
};

// Replaces each terminal a by a1 adjacent to N(a) in the second colour
// class of g - a and a2 adjacent to N(a) in the first. The result is
// bipartite. Terminal-terminal edges are dropped and recorded; they only
// carry length-1 paths. Zero a1-paths avoiding a2 (and vice versa)
// correspond to the zero A-paths of g whose ends leave A into one class.
SplitResult bipartite_split(const Graph& g, const VertexSet& a);

// Rewrites a path of the split instance back to the original ids.
Path split_pullback_path(const SplitResult& s, const Path& p);

// x1 hits the a1-instance, x2 the a2-instance. Returns the terminals
// whose copies were hit plus the shared non-terminal vertices of either
// cover.
VertexSet split_pullback_hitting_set(const SplitResult& s, const VertexSet& x1,
                                     const VertexSet& x2);

// Labels the edges of a bipartite graph with terminals inside one colour
// class: 0 on terminal-incident edges, 1 elsewhere, over Z4. A-paths of
// length 0 mod 4 are then exactly the A-paths of non-zero total label.
Graph build_gamma_instance(const Graph& g, const VertexSet& a);

// --- block gadget ------------------------------------------------------

struct GadgetResult {
  Graph g;
  ReductionTrace trace;
  VertexSet block;
  std::vector<int> roots;  // attachment vertices that received a tree
};

// Restricts g to block + terminals and replaces every bridge hanging off
// the block by a fixed 10-vertex tree on the bridge's attachment vertex.
// A terminal gets an edge to the tree's depth-p leaf exactly when some
// path of length = p mod 4 joins it to the attachment through the bridge.
// Leaf depths 1, 4, 2, 3 realize entry lengths 2, 1, 3, 0 mod 4, and no
// two leaves combine into a zero path inside the tree, so the zero
// A-paths of g and of the result cross block + terminals identically.
// Preconditions: block is a bipartite block of g - a, and no zero A-path
// lives inside a single bridge (reported with a witness).
GadgetResult block_gadget(const Graph& g, const VertexSet& a,
                          const VertexSet& block);

// Original vertices of x_star, plus the tree roots for any gadget
// vertices in it.
VertexSet gadget_pullback_hitting_set(const GadgetResult& r,
                                      const VertexSet& x_star);

// Largest bipartite block of g - a, ties broken by block enumeration
// order. Throws when every block is odd.
VertexSet default_gadget_block(const Graph& g, const VertexSet& a);

// --- residue shift d = 2 -----------------------------------------------

struct D2Result {
  Graph g;
  ReductionTrace trace;
  std::map<int, Edge> subdivision_vertex;  // new vertex -> split edge
};

// Drops terminal-terminal edges and subdivides every terminal-incident
// edge once, turning length 2 mod 4 A-paths into length 0 mod 4 ones,
// bijectively and preserving disjointness.
D2Result d2_reduction(const Graph& g, const VertexSet& a);

// Deletes the subdivision vertices from a path of the reduced instance.
Path d2_pullback_path(const D2Result& r, const Path& p);

// --- packing-covering gap family ---------------------------------------

// An n x n grid, edges stretched to length 4 except the top row at
// length 2, with n terminals strapped to the left border by length-4
// paths and n to the right border by length d+2 paths. For d in {1, 3}
// the terminal paths of length d mod 4 are exactly the left-right paths
// crossing an odd number of top-row edges; any two of them meet, while
// no small vertex set covers them all.
struct Counterexample {
  Graph g;
  VertexSet a;
  int n = 0;
  int d = 1;
  std::map<Edge, std::vector<int>> edge_internals;      // grid edge -> chain
  std::map<int, std::vector<int>> terminal_internals;   // terminal -> chain

  int grid_vertex(int i, int j) const;  // column i, row j, both 1-based
  int left_terminal(int j) const;
  int right_terminal(int j) const;
};

Counterexample build_counterexample(int n, int d);

// The terminal path visiting the given grid cells, subdivision vertices
// filled in. cells must start at (1, left_j), end at (n, right_j), and
// step between grid neighbours.
Path counterexample_path(const Counterexample& cx, int left_j,
                         const std::vector<std::pair<int, int>>& cells,
                         int right_j);

// --- synthetic inputs ---------------------------------------------------

struct GeneratedWindmill {
  Graph g;
  VertexSet a;  // the three tips
  Windmill wm;
};

// A windmill on fresh vertices: arm i has arm_lengths[i] edges, its cycle
// cycle_lengths[i], and the shared stretch is placed by the seed. Cycle
// lengths must be odd; an arm needs at least 2 edges to keep the cycle
// off the hub.
GeneratedWindmill generate_windmill(std::uint64_t seed,
                                    const std::array<int, 3>& arm_lengths,
                                    const std::array<int, 3>& cycle_lengths);

// One synthesized structure per kind, sized by a single parameter:
//   odd-brick-wall   wall of the given size with one even vertical per
//                    brick, so every brick cycle is odd
//   odd-linkage      in-series linkage of the given size on an
//                    elementary wall of size 2*size + 4, all link paths
//                    of one odd length
//   odd-clique-model complete model of the given order, every pair
//                    joined through an odd chain split between the two
//                    branch sets
struct OddStructure {
  std::string kind;
  Graph g;
  VertexSet a;
  std::optional<Wall> wall;
  std::optional<Linkage> linkage;
  std::optional<CliqueModel> model;
};

OddStructure generate_odd_structures(std::uint64_t seed,
                                     const std::string& kind, int size);

// Everything a zero-path assembly consumes: an all-length-4 wall of size
// 6k, 2k linking paths of residue link_residue mod 4 tied to the first 2k
// nails (fresh tips form the terminal set), and 2k linkage paths of odd
// residue linkage_residue paired in series on the remaining 4k nails.
// Lengths alternate within each residue class to vary the interiors.
struct AssemblyInput {
  Graph g;
  VertexSet a;
  Wall wall;
  std::vector<Path> linkage_paths;
  std::vector<Path> linking_paths;
  int k = 1;
};

AssemblyInput generate_assembly_input(int k, int link_residue,
                                      int linkage_residue);

// Erdos-Renyi instance with a uniformly drawn terminal set.
std::pair<Graph, VertexSet> generate_random_instance(std::uint64_t seed, int n,
                                                     double edge_prob,
                                                     int a_size);

}  // namespace zeropath
