#include "zeropath/blocks.hpp"

#include <algorithm>

namespace zeropath {

std::vector<Block> blocks_and_cutvertices(const Graph& g) {
  std::map<int, int> disc, low;
  std::vector<std::pair<int, int>> estack;
  std::vector<VertexSet> block_sets;
  int timer = 0;

  struct Frame {
    int v;
    int parent;
    size_t idx;
  };

  for (int root : g.vertices()) {
    if (disc.count(root)) continue;
    if (g.neighbors(root).empty()) {
      disc[root] = low[root] = timer++;
      block_sets.push_back({root});
      continue;
    }
    disc[root] = low[root] = timer++;
    std::vector<Frame> stack{{root, -1, 0}};
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& nbrs = g.neighbors(f.v);
      if (f.idx < nbrs.size()) {
        int w = nbrs[f.idx++];
        if (w == f.parent) continue;
        auto it = disc.find(w);
        if (it == disc.end()) {
          estack.push_back({f.v, w});
          disc[w] = low[w] = timer++;
          stack.push_back({w, f.v, 0});
        } else if (it->second < disc[f.v]) {
          estack.push_back({f.v, w});
          low[f.v] = std::min(low[f.v], it->second);
        }
      } else {
        int v = f.v;
        int parent = f.parent;
        stack.pop_back();
        if (parent == -1) continue;
        low[parent] = std::min(low[parent], low[v]);
        if (low[v] >= disc[parent]) {
          VertexSet bs;
          while (true) {
            auto e = estack.back();
            estack.pop_back();
            bs.insert(e.first);
            bs.insert(e.second);
            if (e.first == parent && e.second == v) break;
          }
          block_sets.push_back(std::move(bs));
        }
      }
    }
  }

  std::sort(block_sets.begin(), block_sets.end());
  std::map<int, int> membership;
  for (const auto& bs : block_sets)
    for (int v : bs) ++membership[v];

  std::vector<Block> out;
  out.reserve(block_sets.size());
  for (auto& bs : block_sets) {
    Block b;
    for (int v : bs)
      if (membership[v] >= 2) b.cutvertices.push_back(v);
    b.vertices = std::move(bs);
    out.push_back(std::move(b));
  }
  return out;
}

std::vector<VertexSet> b_bridges(const Graph& g, const VertexSet& block) {
  const Block* found = nullptr;
  auto all = blocks_and_cutvertices(g);
  for (const auto& b : all)
    if (b.vertices == block) {
      found = &b;
      break;
    }
  if (!found) throw std::invalid_argument("given set is not a block of the graph");

  VertexSet interior;
  VertexSet cvs(found->cutvertices.begin(), found->cutvertices.end());
  for (int v : block)
    if (!cvs.count(v)) interior.insert(v);

  Graph h = g.minus(interior);
  for (const auto& [u, v] : g.edges())
    if (block.count(u) && block.count(v)) h.remove_edge(u, v);

  return components(h);
}

}  // namespace zeropath
