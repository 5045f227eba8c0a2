#pragma once

#include <vector>

#include "zeropath/graph.hpp"

namespace zeropath {

struct Block {
  VertexSet vertices;
  std::vector<int> cutvertices;  // cutvertices of the host graph lying in this block
};

// Biconnected components. Every edge lies in exactly one block; isolated
// vertices form singleton blocks; cutvertices are exactly the vertices shared
// by two or more blocks. Blocks ordered by smallest vertex, then size.
std::vector<Block> blocks_and_cutvertices(const Graph& g);

// Components of g - (block ∖ cutvertices(block)) - E(block). Each bridge
// attached to the block contains exactly one of its cutvertices; components
// of g disconnected from the block are returned too so that block ∪ bridges
// covers g. Throws if block is not a block of g.
std::vector<VertexSet> b_bridges(const Graph& g, const VertexSet& block);

}  // namespace zeropath
