#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zeropath {

using VertexSet = std::set<int>;
using Edge = std::pair<int, int>;  // always normalized u < v

// Throws std::invalid_argument on loops.
Edge make_edge(int u, int v);

// Undirected simple graph over integer vertex ids. Adjacency lists are kept
// sorted, so every traversal that walks neighbors in list order is
// deterministic. Optional edge labels live in Z_m when enable_labels(m) has
// been called; label access on an unlabelled graph throws.
class Graph {
 public:
  Graph() = default;

  static Graph with_vertices(const std::vector<int>& vs);
  static Graph complete(int n);          // vertices 0..n-1
  static Graph cycle(int n);             // vertices 0..n-1, n >= 3
  static Graph path_graph(int n);        // vertices 0..n-1

  void add_vertex(int v);
  void add_edge(int u, int v);           // inserts endpoints, ignores duplicates
  void remove_edge(int u, int v);        // ignores missing edges, keeps endpoints
  void remove_vertex(int v);             // drops incident edges and labels

  bool has_vertex(int v) const;
  bool has_edge(int u, int v) const;

  std::vector<int> vertices() const;     // ascending
  const std::vector<int>& neighbors(int v) const;  // ascending; throws if absent
  const std::set<Edge>& edges() const { return edges_; }

  int num_vertices() const { return static_cast<int>(adj_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int max_vertex_id() const;             // -1 when empty

  Graph induced(const VertexSet& keep) const;
  Graph minus(const VertexSet& drop) const;

  // Edge labels in Z_m.
  bool labelled() const { return modulus_ > 0; }
  int modulus() const;                   // throws if unlabelled
  void enable_labels(int m);             // m >= 1; existing edges get label 0
  void set_label(int u, int v, int value);
  int label(int u, int v) const;
  const std::map<Edge, int>& labels() const;

  bool operator==(const Graph& o) const;
  bool operator!=(const Graph& o) const { return !(*this == o); }

 private:
  std::map<int, std::vector<int>> adj_;
  std::set<Edge> edges_;
  int modulus_ = 0;                      // 0 = unlabelled
  std::map<Edge, int> labels_;
};

// Walk given by its vertex sequence. Simplicity is a property of (graph, path)
// and is checked by is_simple_path, not the constructor.
struct Path {
  std::vector<int> v;

  Path() = default;
  explicit Path(std::vector<int> verts) : v(std::move(verts)) {}

  int length() const { return static_cast<int>(v.size()) - 1; }  // edge count
  bool empty() const { return v.empty(); }
  int front() const { return v.front(); }
  int back() const { return v.back(); }
  bool contains(int x) const;
  Path reversed() const;
  Path canonical() const;                // lower endpoint first

  bool operator==(const Path& o) const { return v == o.v; }
  bool operator<(const Path& o) const { return v < o.v; }
};

bool is_simple_path(const Graph& g, const Path& p);  // distinct vertices, consecutive edges
bool paths_disjoint(const Path& a, const Path& b);   // no shared vertex
Path concat_paths(const Path& a, const Path& b);     // a.back() == b.front(); result must be simple as a sequence
VertexSet path_vertices(const Path& p);

// Sum of edge labels mod the graph's modulus. Throws if unlabelled or if p is
// not a path of g.
int path_weight(const Graph& g, const Path& p);

// Separation (C, D): left ∪ right = V(G), no edge crosses left∖right to
// right∖left. Order = |left ∩ right|.
struct Separation {
  VertexSet left;
  VertexSet right;
  int order() const;
};

bool is_valid_separation(const Graph& g, const Separation& s);
Separation make_separation(const Graph& g, VertexSet left, VertexSet right);  // validates

VertexSet reachable_from(const Graph& g, const VertexSet& sources);
std::vector<VertexSet> components(const Graph& g);  // sorted by smallest vertex

// 2-coloring of g - forbidden, deterministic: components scanned by smallest
// vertex, BFS with ascending neighbors, each component's root goes to the
// first class. nullopt when an odd cycle survives.
std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g,
                                                           const VertexSet& forbidden = {});
bool is_bipartite(const Graph& g);

}  // namespace zeropath
