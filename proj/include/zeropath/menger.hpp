#pragma once

#include <vector>

#include "zeropath/graph.hpp"

namespace zeropath {

struct MengerResult {
  std::vector<Path> paths;  // pairwise fully vertex-disjoint source-sink paths
  VertexSet separator;      // |separator| == |paths|; may intersect source/sink
};

// Set-Menger witness pair: a maximum family of pairwise vertex-disjoint
// (endpoints included) source-sink paths in g - avoid, plus a minimum vertex
// separator of the same size. Every vertex has capacity one, so a source
// vertex carries at most one path and the separator may contain source or
// sink vertices. Path interiors avoid source ∪ sink; a vertex in
// source ∩ sink yields a single-vertex path.
// Unit-vertex-capacity max-flow via vertex splitting; deterministic.
// Throws std::invalid_argument when source or sink is empty or avoid meets
// source ∪ sink.
MengerResult menger_paths(const Graph& g, const VertexSet& source,
                          const VertexSet& sink, const VertexSet& avoid = {});

}  // namespace zeropath
