#include "zeropath/menger.hpp"

#include <algorithm>
#include <queue>

namespace zeropath {

namespace {

struct Arc {
  int to;
  int cap;  // residual capacity; paired arc is index ^ 1
};

struct FlowNet {
  std::vector<Arc> arcs;
  std::vector<std::vector<int>> out;  // node -> arc indices, insertion order

  void add(int u, int v, int cap) {
    out[u].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({v, cap});
    out[v].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({u, 0});
  }
};

}  // namespace

MengerResult menger_paths(const Graph& g, const VertexSet& source,
                          const VertexSet& sink, const VertexSet& avoid) {
  if (source.empty() || sink.empty())
    throw std::invalid_argument("menger_paths needs nonempty source and sink");
  for (int v : avoid)
    if (source.count(v) || sink.count(v))
      throw std::invalid_argument("avoid set meets source or sink");

  std::vector<int> ids;
  std::map<int, int> index;
  for (int v : g.vertices()) {
    if (avoid.count(v)) continue;
    index[v] = static_cast<int>(ids.size());
    ids.push_back(v);
  }
  for (int v : source)
    if (!index.count(v)) throw std::invalid_argument("source vertex not in graph");
  for (int v : sink)
    if (!index.count(v)) throw std::invalid_argument("sink vertex not in graph");

  int n = static_cast<int>(ids.size());
  auto vin = [](int i) { return 2 * i; };
  auto vout = [](int i) { return 2 * i + 1; };
  int super_s = 2 * n;
  int super_t = 2 * n + 1;
  int inf = n + 1;

  FlowNet net;
  net.out.resize(2 * n + 2);
  // Vertex capacities (the only finite arcs, so the min cut is a vertex set).
  for (int i = 0; i < n; ++i) net.add(vin(i), vout(i), 1);
  for (const auto& [u, v] : g.edges()) {
    auto iu = index.find(u), iv = index.find(v);
    if (iu == index.end() || iv == index.end()) continue;
    net.add(vout(iu->second), vin(iv->second), inf);
    net.add(vout(iv->second), vin(iu->second), inf);
  }
  for (int s : source) net.add(super_s, vin(index.at(s)), inf);
  for (int t : sink) net.add(vout(index.at(t)), super_t, inf);

  // Edmonds-Karp; each augmenting path crosses some vertex arc, bottleneck 1.
  std::vector<int> pred_arc(net.out.size());
  while (true) {
    std::fill(pred_arc.begin(), pred_arc.end(), -1);
    std::queue<int> q;
    q.push(super_s);
    pred_arc[super_s] = -2;
    while (!q.empty() && pred_arc[super_t] == -1) {
      int x = q.front();
      q.pop();
      for (int ai : net.out[x]) {
        const Arc& a = net.arcs[ai];
        if (a.cap > 0 && pred_arc[a.to] == -1) {
          pred_arc[a.to] = ai;
          q.push(a.to);
        }
      }
    }
    if (pred_arc[super_t] == -1) break;
    for (int x = super_t; x != super_s;) {
      int ai = pred_arc[x];
      net.arcs[ai].cap -= 1;
      net.arcs[ai ^ 1].cap += 1;
      x = net.arcs[ai ^ 1].to;
    }
  }

  MengerResult res;

  // Separator: vertices whose internal arc is saturated on the residual cut.
  std::vector<char> reach(net.out.size(), 0);
  std::queue<int> q;
  q.push(super_s);
  reach[super_s] = 1;
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (int ai : net.out[x]) {
      const Arc& a = net.arcs[ai];
      if (a.cap > 0 && !reach[a.to]) {
        reach[a.to] = 1;
        q.push(a.to);
      }
    }
  }
  for (int i = 0; i < n; ++i)
    if (reach[vin(i)] && !reach[vout(i)]) res.separator.insert(ids[i]);

  // Path extraction: follow unit flow from each super-fed source vertex, then
  // trim so interiors avoid source ∪ sink (start at the last source vertex
  // before the first sink vertex of the walk).
  auto flow_on = [&](int ai) { return net.arcs[ai ^ 1].cap; };  // forward arcs only
  for (int s : source) {
    int i = index.at(s);
    if (flow_on(2 * i) == 0) continue;  // internal arc of s carries no flow
    bool from_super = false;
    for (int ai : net.out[super_s]) {
      if ((ai & 1) == 0 && net.arcs[ai].to == vin(i) && flow_on(ai) > 0) {
        from_super = true;
        break;
      }
    }
    if (!from_super) continue;  // s is a through-vertex of another path
    std::vector<int> walk{s};
    int cur = i;
    while (true) {
      int next = -1;
      bool done = false;
      for (int ai : net.out[vout(cur)]) {
        if ((ai & 1) != 0 || flow_on(ai) == 0) continue;
        if (net.arcs[ai].to == super_t) {
          done = true;
          break;
        }
        next = net.arcs[ai].to / 2;
        break;
      }
      if (done) break;
      if (next < 0) throw std::logic_error("flow walk lost the path");
      walk.push_back(ids[next]);
      cur = next;
    }
    size_t end = 0;
    while (!sink.count(walk[end])) ++end;
    size_t beg = 0;
    for (size_t x = 0; x <= end; ++x)
      if (source.count(walk[x])) beg = x;
    Path p;
    p.v.assign(walk.begin() + beg, walk.begin() + end + 1);
    res.paths.push_back(std::move(p));
  }

  if (res.paths.size() != res.separator.size())
    throw std::logic_error("max-flow min-cut witness sizes disagree");
  return res;
}

}  // namespace zeropath
