#include "zeropath/graph.hpp"

#include <algorithm>
#include <queue>

namespace zeropath {

Edge make_edge(int u, int v) {
  if (u == v) throw std::invalid_argument("loop edge " + std::to_string(u));
  return u < v ? Edge{u, v} : Edge{v, u};
}

Graph Graph::with_vertices(const std::vector<int>& vs) {
  Graph g;
  for (int v : vs) g.add_vertex(v);
  return g;
}

Graph Graph::complete(int n) {
  Graph g;
  for (int v = 0; v < n; ++v) g.add_vertex(v);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph Graph::cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs >= 3 vertices");
  Graph g;
  for (int v = 0; v < n; ++v) g.add_vertex(v);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph Graph::path_graph(int n) {
  Graph g;
  for (int v = 0; v < n; ++v) g.add_vertex(v);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

void Graph::add_vertex(int v) { adj_.try_emplace(v); }

void Graph::add_edge(int u, int v) {
  Edge e = make_edge(u, v);
  add_vertex(u);
  add_vertex(v);
  if (!edges_.insert(e).second) return;
  auto& au = adj_[u];
  au.insert(std::lower_bound(au.begin(), au.end(), v), v);
  auto& av = adj_[v];
  av.insert(std::lower_bound(av.begin(), av.end(), u), u);
  if (modulus_ > 0) labels_.emplace(e, 0);
}

void Graph::remove_edge(int u, int v) {
  Edge e = make_edge(u, v);
  if (edges_.erase(e) == 0) return;
  auto& au = adj_[u];
  au.erase(std::lower_bound(au.begin(), au.end(), v));
  auto& av = adj_[v];
  av.erase(std::lower_bound(av.begin(), av.end(), u));
  labels_.erase(e);
}

void Graph::remove_vertex(int v) {
  auto it = adj_.find(v);
  if (it == adj_.end()) return;
  std::vector<int> nbrs = it->second;
  for (int u : nbrs) remove_edge(u, v);
  adj_.erase(v);
}

bool Graph::has_vertex(int v) const { return adj_.count(v) > 0; }

bool Graph::has_edge(int u, int v) const {
  if (u == v) return false;
  return edges_.count(u < v ? Edge{u, v} : Edge{v, u}) > 0;
}

std::vector<int> Graph::vertices() const {
  std::vector<int> out;
  out.reserve(adj_.size());
  for (const auto& [v, _] : adj_) out.push_back(v);
  return out;
}

const std::vector<int>& Graph::neighbors(int v) const {
  auto it = adj_.find(v);
  if (it == adj_.end()) throw std::invalid_argument("no vertex " + std::to_string(v));
  return it->second;
}

int Graph::max_vertex_id() const {
  if (adj_.empty()) return -1;
  return adj_.rbegin()->first;
}

Graph Graph::induced(const VertexSet& keep) const {
  Graph g;
  if (modulus_ > 0) g.enable_labels(modulus_);
  for (int v : keep)
    if (has_vertex(v)) g.add_vertex(v);
  for (const auto& [u, v] : edges_) {
    if (keep.count(u) && keep.count(v)) {
      g.add_edge(u, v);
      if (modulus_ > 0) g.set_label(u, v, labels_.at({u, v}));
    }
  }
  return g;
}

Graph Graph::minus(const VertexSet& drop) const {
  VertexSet keep;
  for (const auto& [v, _] : adj_)
    if (!drop.count(v)) keep.insert(v);
  return induced(keep);
}

int Graph::modulus() const {
  if (modulus_ == 0) throw std::invalid_argument("graph is unlabelled");
  return modulus_;
}

void Graph::enable_labels(int m) {
  if (m < 1) throw std::invalid_argument("modulus must be >= 1");
  modulus_ = m;
  for (const Edge& e : edges_) {
    auto [it, inserted] = labels_.emplace(e, 0);
    if (!inserted) it->second = ((it->second % m) + m) % m;
  }
}

void Graph::set_label(int u, int v, int value) {
  Edge e = make_edge(u, v);
  if (modulus_ == 0) throw std::invalid_argument("graph is unlabelled");
  if (!edges_.count(e)) throw std::invalid_argument("no such edge");
  labels_[e] = ((value % modulus_) + modulus_) % modulus_;
}

int Graph::label(int u, int v) const {
  Edge e = make_edge(u, v);
  if (modulus_ == 0) throw std::invalid_argument("graph is unlabelled");
  auto it = labels_.find(e);
  if (it == labels_.end()) throw std::invalid_argument("no such edge");
  return it->second;
}

const std::map<Edge, int>& Graph::labels() const {
  if (modulus_ == 0) throw std::invalid_argument("graph is unlabelled");
  return labels_;
}

bool Graph::operator==(const Graph& o) const {
  return adj_ == o.adj_ && edges_ == o.edges_ && modulus_ == o.modulus_ &&
         labels_ == o.labels_;
}

bool Path::contains(int x) const {
  return std::find(v.begin(), v.end(), x) != v.end();
}

Path Path::reversed() const {
  Path p(*this);
  std::reverse(p.v.begin(), p.v.end());
  return p;
}

Path Path::canonical() const {
  if (v.empty()) return *this;
  return v.front() <= v.back() ? *this : reversed();
}

bool is_simple_path(const Graph& g, const Path& p) {
  if (p.v.empty()) return false;
  VertexSet seen;
  for (int x : p.v) {
    if (!g.has_vertex(x)) return false;
    if (!seen.insert(x).second) return false;
  }
  for (size_t i = 0; i + 1 < p.v.size(); ++i)
    if (!g.has_edge(p.v[i], p.v[i + 1])) return false;
  return true;
}

bool paths_disjoint(const Path& a, const Path& b) {
  VertexSet sa(a.v.begin(), a.v.end());
  for (int x : b.v)
    if (sa.count(x)) return false;
  return true;
}

Path concat_paths(const Path& a, const Path& b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("concat of empty path");
  if (a.back() != b.front())
    throw std::invalid_argument("concat endpoints disagree");
  Path out = a;
  out.v.insert(out.v.end(), b.v.begin() + 1, b.v.end());
  VertexSet seen;
  for (int x : out.v)
    if (!seen.insert(x).second)
      throw std::invalid_argument("concat result revisits " + std::to_string(x));
  return out;
}

VertexSet path_vertices(const Path& p) { return VertexSet(p.v.begin(), p.v.end()); }

int path_weight(const Graph& g, const Path& p) {
  int m = g.modulus();
  if (p.v.empty()) throw std::invalid_argument("weight of empty path");
  long long total = 0;
  for (size_t i = 0; i + 1 < p.v.size(); ++i) {
    if (!g.has_edge(p.v[i], p.v[i + 1]))
      throw std::invalid_argument("path edge missing from graph");
    total += g.label(p.v[i], p.v[i + 1]);
  }
  return static_cast<int>(total % m);
}

int Separation::order() const {
  int n = 0;
  for (int v : left)
    if (right.count(v)) ++n;
  return n;
}

bool is_valid_separation(const Graph& g, const Separation& s) {
  VertexSet all;
  for (int v : s.left) {
    if (!g.has_vertex(v)) return false;
    all.insert(v);
  }
  for (int v : s.right) {
    if (!g.has_vertex(v)) return false;
    all.insert(v);
  }
  if (static_cast<int>(all.size()) != g.num_vertices()) return false;
  for (const auto& [u, v] : g.edges()) {
    bool u_left_only = s.left.count(u) && !s.right.count(u);
    bool v_left_only = s.left.count(v) && !s.right.count(v);
    bool u_right_only = s.right.count(u) && !s.left.count(u);
    bool v_right_only = s.right.count(v) && !s.left.count(v);
    if ((u_left_only && v_right_only) || (u_right_only && v_left_only)) return false;
  }
  return true;
}

Separation make_separation(const Graph& g, VertexSet left, VertexSet right) {
  Separation s{std::move(left), std::move(right)};
  if (!is_valid_separation(g, s))
    throw std::invalid_argument("not a separation");
  return s;
}

VertexSet reachable_from(const Graph& g, const VertexSet& sources) {
  VertexSet seen;
  std::queue<int> q;
  for (int s : sources) {
    if (!g.has_vertex(s)) continue;
    if (seen.insert(s).second) q.push(s);
  }
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (int y : g.neighbors(x))
      if (seen.insert(y).second) q.push(y);
  }
  return seen;
}

std::vector<VertexSet> Graph_components_impl(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet done;
  for (int v : g.vertices()) {
    if (done.count(v)) continue;
    VertexSet comp = reachable_from(g, {v});
    done.insert(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<VertexSet> components(const Graph& g) { return Graph_components_impl(g); }

std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g,
                                                           const VertexSet& forbidden) {
  VertexSet one, two;
  std::map<int, int> color;
  for (int root : g.vertices()) {
    if (forbidden.count(root) || color.count(root)) continue;
    color[root] = 0;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (int y : g.neighbors(x)) {
        if (forbidden.count(y)) continue;
        auto it = color.find(y);
        if (it == color.end()) {
          color[y] = 1 - color[x];
          q.push(y);
        } else if (it->second == color[x]) {
          return std::nullopt;
        }
      }
    }
  }
  for (const auto& [v, c] : color) (c == 0 ? one : two).insert(v);
  return std::make_pair(std::move(one), std::move(two));
}

bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

}  // namespace zeropath
