#include "zeropath/reductions.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "zeropath/blocks.hpp"
#include "zeropath/modpath.hpp"
#include "zeropath/random.hpp"

namespace zeropath {

namespace {

void require_vertices(const Graph& g, const VertexSet& a) {
  for (int v : a)
    if (!g.has_vertex(v))
      throw std::invalid_argument("terminal " + std::to_string(v) +
                                  " is not a vertex of the graph");
}

std::string vertex_list(const std::vector<int>& vs) {
  std::ostringstream os;
  for (size_t i = 0; i < vs.size(); ++i) os << (i ? " " : "") << vs[i];
  return os.str();
}

// Length residues mod 4 of the simple u-v paths with nonempty interior.
// Stops once all four residues appear.
struct ResidueSearch {
  const Graph& g;
  int target;
  std::set<int> found;
  std::set<int> on_path;
  long long budget = 4000000;

  void run(int x, int len) {
    if (found.size() == 4) return;
    if (--budget <= 0)
      throw EnumerationOverflow("bridge path enumeration exceeded its budget");
    for (int y : g.neighbors(x)) {
      if (found.size() == 4) return;
      if (y == target) {
        if (len + 1 >= 2) found.insert((len + 1) % 4);
        continue;
      }
      if (on_path.count(y)) continue;
      on_path.insert(y);
      run(y, len + 1);
      on_path.erase(y);
    }
  }
};

std::set<int> interior_path_residues(const Graph& g, int from, int to) {
  ResidueSearch s{g, to};
  s.on_path.insert(from);
  s.run(from, 0);
  return s.found;
}

}  // namespace

SplitResult bipartite_split(const Graph& g, const VertexSet& a) {
  require_vertices(g, a);
  auto classes = bipartition(g, a);
  if (!classes)
    throw std::invalid_argument("graph minus terminals is not bipartite");
  const VertexSet& side2 = classes->second;

  SplitResult out;
  for (int v : g.vertices())
    if (!a.count(v)) out.g.add_vertex(v);
  for (const Edge& e : g.edges()) {
    bool ta = a.count(e.first) > 0, tb = a.count(e.second) > 0;
    if (!ta && !tb) out.g.add_edge(e.first, e.second);
    if (ta && tb) out.trace.removed_edges.push_back(e);
  }

  int next = g.max_vertex_id() + 1;
  for (int v : a) {
    int c1 = next++, c2 = next++;
    out.g.add_vertex(c1);
    out.g.add_vertex(c2);
    out.a1.insert(c1);
    out.a2.insert(c2);
    out.terminal_origin[c1] = v;
    out.terminal_origin[c2] = v;
    out.trace.forward_vertex_map[v] = {c1, c2};
    out.trace.a_map[v] = {c1, c2};
    for (int u : g.neighbors(v)) {
      if (a.count(u)) continue;
      if (side2.count(u))
        out.g.add_edge(c1, u);
      else
        out.g.add_edge(c2, u);
    }
  }
  for (int v : g.vertices())
    if (!a.count(v)) out.trace.forward_vertex_map[v] = {v};
  out.trace.notes = "terminal doubling over the bipartition of g - A";
  return out;
}

Path split_pullback_path(const SplitResult& s, const Path& p) {
  std::vector<int> verts;
  verts.reserve(p.v.size());
  for (int v : p.v) {
    auto it = s.terminal_origin.find(v);
    verts.push_back(it == s.terminal_origin.end() ? v : it->second);
  }
  return Path(verts);
}

VertexSet split_pullback_hitting_set(const SplitResult& s, const VertexSet& x1,
                                     const VertexSet& x2) {
  VertexSet out;
  for (int v : x1) {
    auto it = s.terminal_origin.find(v);
    if (it != s.terminal_origin.end() && s.a1.count(v))
      out.insert(it->second);
    else if (!s.a2.count(v))
      out.insert(v);
  }
  for (int v : x2) {
    auto it = s.terminal_origin.find(v);
    if (it != s.terminal_origin.end() && s.a2.count(v))
      out.insert(it->second);
    else if (!s.a1.count(v))
      out.insert(v);
  }
  return out;
}

Graph build_gamma_instance(const Graph& g, const VertexSet& a) {
  require_vertices(g, a);
  auto classes = bipartition(g);
  if (!classes) throw std::invalid_argument("graph is not bipartite");
  for (const VertexSet& comp : components(g)) {
    bool in1 = false, in2 = false;
    for (int v : comp) {
      if (!a.count(v)) continue;
      (classes->first.count(v) ? in1 : in2) = true;
    }
    if (in1 && in2)
      throw std::invalid_argument("terminals straddle both colour classes");
  }
  Graph out = g;
  out.enable_labels(4);
  for (const Edge& e : g.edges())
    out.set_label(e.first, e.second,
                  a.count(e.first) || a.count(e.second) ? 0 : 1);
  return out;
}

GadgetResult block_gadget(const Graph& g, const VertexSet& a,
                          const VertexSet& block) {
  require_vertices(g, a);
  for (int v : block)
    if (a.count(v))
      throw std::invalid_argument("block contains a terminal");
  Graph gm = g.minus(a);
  std::vector<VertexSet> bridges = b_bridges(gm, block);
  if (!is_bipartite(g.induced(block)))
    throw std::invalid_argument("block is not bipartite");

  // No bridge may hold a complete zero path; everything a bridge can do
  // for a longer path is a matter of entry-length residues.
  for (const VertexSet& h : bridges) {
    VertexSet scope = h;
    VertexSet asub;
    for (int v : a)
      if (g.has_vertex(v)) {
        scope.insert(v);
        asub.insert(v);
      }
    Graph sub = g.induced(scope);
    if (auto zp = find_zero_a_path(sub, asub, ResidueSpec(4, 0)))
      throw std::invalid_argument("a zero terminal path lies inside a bridge: " +
                                  vertex_list(zp->v));
  }

  VertexSet keep = block;
  for (int v : a) keep.insert(v);
  GadgetResult out;
  out.g = g.induced(keep);
  out.block = block;

  int next = g.max_vertex_id() + 1;
  for (const VertexSet& h : bridges) {
    std::vector<int> attach;
    for (int v : h)
      if (block.count(v)) attach.push_back(v);
    if (attach.size() > 1)
      throw std::logic_error("bridge touches the block at " +
                             std::to_string(attach.size()) + " vertices");
    bool trivial = h.size() <= attach.size();
    if (attach.empty() || trivial) continue;
    int root = attach.front();
    out.roots.push_back(root);

    // Fixed replacement tree. Leaf t_p sits at distance p - 1 mod 4 from
    // the root, so an attachment edge plus the leaf-to-root path has
    // length p mod 4. No two leaf-to-leaf distances are 2 mod 4, which
    // keeps the tree free of zero paths of its own.
    int z = next++, x1 = next++, x2 = next++, t1 = next++, t3 = next++;
    int t2 = next++, w1 = next++, w2 = next++, t0 = next++;
    for (int v : {z, x1, x2, t1, t3, t2, w1, w2, t0}) {
      out.g.add_vertex(v);
      out.trace.gadget_owner[v] = root;
    }
    out.g.add_edge(root, z);
    out.g.add_edge(z, x1);
    out.g.add_edge(x1, x2);
    out.g.add_edge(x2, t1);
    out.g.add_edge(z, t3);
    out.g.add_edge(root, t2);
    out.g.add_edge(root, w1);
    out.g.add_edge(w1, w2);
    out.g.add_edge(w2, t0);
    std::array<int, 4> leaf = {t0, t1, t2, t3};

    for (int av : a) {
      bool touches = false;
      for (int u : g.neighbors(av))
        if (h.count(u) && u != root) touches = true;
      if (!touches) continue;
      VertexSet scope = h;
      scope.insert(av);
      Graph sub = g.induced(scope);
      for (int p : interior_path_residues(sub, av, root))
        out.g.add_edge(av, leaf[p]);
    }
  }

  for (int v : keep) out.trace.forward_vertex_map[v] = {v};
  for (int v : a) out.trace.a_map[v] = {v};
  out.trace.notes = "block gadget with " + std::to_string(out.roots.size()) +
                    " replacement trees";
  if (!is_bipartite(out.g.minus(a)))
    throw std::logic_error("gadget construction lost bipartiteness");
  return out;
}

VertexSet gadget_pullback_hitting_set(const GadgetResult& r,
                                      const VertexSet& x_star) {
  VertexSet out;
  for (int v : x_star) {
    auto it = r.trace.gadget_owner.find(v);
    out.insert(it == r.trace.gadget_owner.end() ? v : it->second);
  }
  return out;
}

VertexSet default_gadget_block(const Graph& g, const VertexSet& a) {
  const Graph h = g.minus(a);
  VertexSet best;
  for (const Block& b : blocks_and_cutvertices(h)) {
    if (b.vertices.size() <= best.size()) continue;
    if (is_bipartite(h.induced(b.vertices))) best = b.vertices;
  }
  if (best.empty())
    throw std::invalid_argument("instance has no bipartite block to reduce");
  return best;
}

D2Result d2_reduction(const Graph& g, const VertexSet& a) {
  require_vertices(g, a);
  D2Result out;
  out.g = g;
  for (const Edge& e : g.edges())
    if (a.count(e.first) && a.count(e.second)) {
      out.g.remove_edge(e.first, e.second);
      out.trace.removed_edges.push_back(e);
    }
  std::vector<Edge> split;
  for (const Edge& e : out.g.edges())
    if ((a.count(e.first) > 0) != (a.count(e.second) > 0)) split.push_back(e);
  int next = g.max_vertex_id() + 1;
  for (const Edge& e : split) {
    out.g.remove_edge(e.first, e.second);
    int s = next++;
    out.g.add_vertex(s);
    out.g.add_edge(e.first, s);
    out.g.add_edge(s, e.second);
    out.subdivision_vertex[s] = e;
  }
  for (int v : g.vertices()) out.trace.forward_vertex_map[v] = {v};
  for (int v : a) out.trace.a_map[v] = {v};
  out.trace.notes = "terminal edges removed, terminal-incident edges split once";
  return out;
}

Path d2_pullback_path(const D2Result& r, const Path& p) {
  std::vector<int> verts;
  for (int v : p.v)
    if (!r.subdivision_vertex.count(v)) verts.push_back(v);
  return Path(verts);
}

int Counterexample::grid_vertex(int i, int j) const {
  if (i < 1 || i > n || j < 1 || j > n)
    throw std::out_of_range("grid coordinate outside the counterexample");
  return (j - 1) * n + (i - 1);
}

int Counterexample::left_terminal(int j) const {
  if (j < 1 || j > n) throw std::out_of_range("terminal row outside the counterexample");
  return n * n + (j - 1);
}

int Counterexample::right_terminal(int j) const {
  if (j < 1 || j > n) throw std::out_of_range("terminal row outside the counterexample");
  return n * n + n + (j - 1);
}

Counterexample build_counterexample(int n, int d) {
  if (n < 2) throw std::invalid_argument("counterexample needs n >= 2");
  if (d != 1 && d != 3)
    throw std::invalid_argument("counterexample is defined for d = 1 and d = 3");
  Counterexample cx;
  cx.n = n;
  cx.d = d;
  Graph& g = cx.g;
  for (int j = 1; j <= n; ++j)
    for (int i = 1; i <= n; ++i) g.add_vertex(cx.grid_vertex(i, j));
  for (int j = 1; j <= n; ++j) {
    g.add_vertex(cx.left_terminal(j));
    g.add_vertex(cx.right_terminal(j));
    cx.a.insert(cx.left_terminal(j));
    cx.a.insert(cx.right_terminal(j));
  }

  int next = n * n + 2 * n;
  auto stretch = [&](int u, int v, int internals) {
    std::vector<int> chain;
    int prev = u;
    for (int k = 0; k < internals; ++k) {
      int s = next++;
      g.add_vertex(s);
      g.add_edge(prev, s);
      chain.push_back(s);
      prev = s;
    }
    g.add_edge(prev, v);
    return chain;
  };

  // Row n is the top row; only its horizontal edges stay at length 2.
  for (int j = 1; j <= n; ++j)
    for (int i = 1; i <= n; ++i) {
      if (i < n) {
        int u = cx.grid_vertex(i, j), v = cx.grid_vertex(i + 1, j);
        cx.edge_internals[make_edge(u, v)] = stretch(u, v, j == n ? 1 : 3);
      }
      if (j < n) {
        int u = cx.grid_vertex(i, j), v = cx.grid_vertex(i, j + 1);
        cx.edge_internals[make_edge(u, v)] = stretch(u, v, 3);
      }
    }
  for (int j = 1; j <= n; ++j) {
    int t = cx.left_terminal(j);
    cx.terminal_internals[t] = stretch(t, cx.grid_vertex(1, j), 3);
  }
  for (int j = 1; j <= n; ++j) {
    int t = cx.right_terminal(j);
    cx.terminal_internals[t] = stretch(t, cx.grid_vertex(n, j), d + 1);
  }
  return cx;
}

Path counterexample_path(const Counterexample& cx, int left_j,
                         const std::vector<std::pair<int, int>>& cells,
                         int right_j) {
  if (cells.empty()) throw std::invalid_argument("cell route is empty");
  if (cells.front() != std::make_pair(1, left_j) ||
      cells.back() != std::make_pair(cx.n, right_j))
    throw std::invalid_argument("cell route must join the entry and exit cells");
  std::vector<int> verts;
  int lt = cx.left_terminal(left_j);
  verts.push_back(lt);
  for (int s : cx.terminal_internals.at(lt)) verts.push_back(s);
  verts.push_back(cx.grid_vertex(1, left_j));
  for (size_t k = 1; k < cells.size(); ++k) {
    auto [pi, pj] = cells[k - 1];
    auto [qi, qj] = cells[k];
    if (std::abs(pi - qi) + std::abs(pj - qj) != 1)
      throw std::invalid_argument("cell route step is not a grid edge");
    int u = cx.grid_vertex(pi, pj), v = cx.grid_vertex(qi, qj);
    const std::vector<int>& chain = cx.edge_internals.at(make_edge(u, v));
    if (u < v)
      verts.insert(verts.end(), chain.begin(), chain.end());
    else
      verts.insert(verts.end(), chain.rbegin(), chain.rend());
    verts.push_back(v);
  }
  int rt = cx.right_terminal(right_j);
  const std::vector<int>& rc = cx.terminal_internals.at(rt);
  verts.insert(verts.end(), rc.rbegin(), rc.rend());
  verts.push_back(rt);
  return Path(verts);
}

GeneratedWindmill generate_windmill(std::uint64_t seed,
                                    const std::array<int, 3>& arm_lengths,
                                    const std::array<int, 3>& cycle_lengths) {
  for (int c : cycle_lengths)
    if (c < 3 || c % 2 == 0)
      throw std::invalid_argument("cycle lengths must be odd and at least 3");
  for (int l : arm_lengths)
    if (l < 2)
      throw std::invalid_argument(
          "arm needs at least 2 edges to keep its cycle off the hub");

  Rng rng(seed);
  GeneratedWindmill out;
  out.wm.hub = 0;
  out.g.add_vertex(0);
  int next = 1;
  for (int i = 0; i < 3; ++i) {
    int len = arm_lengths[i], cyc = cycle_lengths[i];
    int omax = std::min(len - 1, cyc - 1);
    int o = 1 + static_cast<int>(rng.below(omax));
    int p = 1 + static_cast<int>(rng.below(len - o));

    std::vector<int> armv = {0};
    for (int k = 0; k < len; ++k) {
      out.g.add_vertex(next);
      out.g.add_edge(armv.back(), next);
      armv.push_back(next++);
    }
    out.wm.arms[i] = Path(armv);
    out.a.insert(armv.back());

    std::vector<int> cycv(armv.begin() + p, armv.begin() + p + o + 1);
    int prev = cycv.back();
    for (int k = 0; k < cyc - o - 1; ++k) {
      out.g.add_vertex(next);
      out.g.add_edge(prev, next);
      cycv.push_back(next);
      prev = next++;
    }
    out.g.add_edge(prev, cycv.front());
    cycv.push_back(cycv.front());
    out.wm.cycles[i] = cycv;
  }
  validate_windmill(out.g, out.wm);
  return out;
}

OddStructure generate_odd_structures(std::uint64_t seed,
                                     const std::string& kind, int size) {
  Rng rng(seed);
  OddStructure out;
  out.kind = kind;

  if (kind == "odd-brick-wall") {
    Wall base = build_elementary_wall(size);
    SubdivisionRule rule;
    // One even vertical per brick: adjacent bricks share their boundary
    // verticals, so stretching every second boundary in a row gap hands
    // each brick exactly one even edge.
    for (int i = 1; i <= size; ++i) {
      int phase = static_cast<int>(rng.below(2));
      for (int j = phase; j <= size; j += 2) {
        int col = i % 2 == 1 ? 2 * j + 1 : 2 * j + 2;
        rule.overrides[make_coord_edge({i, col}, {i + 1, col})] = 2;
      }
    }
    out.wall = subdivide_wall(base, rule);
    out.g = out.wall->to_graph();
    for (const std::vector<int>& cyc : out.wall->brick_cycles())
      if ((cyc.size() - 1) % 2 == 0)
        throw std::logic_error("a brick cycle came out even");
    return out;
  }

  if (kind == "odd-linkage") {
    if (size < 1) throw std::invalid_argument("linkage size must be >= 1");
    Wall w = build_elementary_wall(2 * size + 4);
    out.g = w.to_graph();
    std::vector<int> nails = w.nails();
    int len = 3 + 2 * static_cast<int>(rng.below(2));
    int next = out.g.max_vertex_id() + 1;
    Linkage l;
    for (int i = 0; i < size; ++i) {
      std::vector<int> pv = {nails[2 * i]};
      for (int k = 0; k < len - 1; ++k) {
        out.g.add_vertex(next);
        out.g.add_edge(pv.back(), next);
        pv.push_back(next++);
      }
      out.g.add_edge(pv.back(), nails[2 * i + 1]);
      pv.push_back(nails[2 * i + 1]);
      l.paths.push_back(Path(pv));
    }
    validate_linkage(out.g, w, l);
    if (classify_linkage(w, l) != LinkageType::InSeries)
      throw std::logic_error("linkage pairs are not in series");
    if (!is_odd_linkage(out.g, w, l))
      throw std::logic_error("linkage came out even");
    out.wall = w;
    out.linkage = l;
    return out;
  }

  if (kind == "odd-clique-model") {
    if (size < 3) throw std::invalid_argument("model order must be >= 3");
    CliqueModel m;
    m.branch_sets.resize(size);
    for (int i = 0; i < size; ++i) {
      out.g.add_vertex(i);
      m.branch_sets[i].insert(i);
    }
    int next = size;
    for (int i = 0; i < size; ++i)
      for (int j = i + 1; j < size; ++j) {
        // Odd chain between the centres; each half joins one branch set,
        // so every triangle sums three odd lengths.
        int len = 3 + 2 * static_cast<int>(rng.below(2));
        int half = (len - 1) / 2;
        std::vector<int> chain;
        int prev = i;
        for (int k = 0; k < len - 1; ++k) {
          out.g.add_vertex(next);
          out.g.add_edge(prev, next);
          chain.push_back(next);
          prev = next++;
        }
        out.g.add_edge(prev, j);
        for (int k = 0; k < static_cast<int>(chain.size()); ++k)
          m.branch_sets[k < half ? i : j].insert(chain[k]);
        m.model_edges[{i, j}] = make_edge(chain[half - 1], chain[half]);
      }
    validate_clique_model(out.g, m);
    if (!is_odd_model(out.g, m))
      throw std::logic_error("model came out even");
    out.model = m;
    return out;
  }

  throw std::invalid_argument("unknown structure kind: " + kind);
}

AssemblyInput generate_assembly_input(int k, int link_residue,
                                      int linkage_residue) {
  if (k < 1) throw std::invalid_argument("need k >= 1");
  if (link_residue < 0 || link_residue > 3)
    throw std::invalid_argument("link residue must lie in 0..3");
  if (linkage_residue != 1 && linkage_residue != 3)
    throw std::invalid_argument("linkage residue must be 1 or 3");

  AssemblyInput out;
  out.k = k;
  SubdivisionRule rule;
  rule.default_length = 4;
  out.wall = subdivide_wall(build_elementary_wall(6 * k), rule);
  out.g = out.wall.to_graph();
  int next = out.g.vertices().back() + 1;
  const std::vector<int> nails = out.wall.nails();

  auto chain = [&](int from, int to, int len) {
    std::vector<int> v{from};
    for (int s = 1; s < len; ++s) {
      out.g.add_vertex(next);
      v.push_back(next++);
    }
    v.push_back(to);
    for (std::size_t i = 0; i + 1 < v.size(); ++i) out.g.add_edge(v[i], v[i + 1]);
    return Path{v};
  };

  const int link_base = link_residue == 0 ? 4 : link_residue;
  for (int i = 0; i < 2 * k; ++i) {
    const int tip = next++;
    out.g.add_vertex(tip);
    out.a.insert(tip);
    out.linking_paths.push_back(chain(tip, nails[i], link_base + (i % 2) * 4));
  }
  for (int j = 0; j < 2 * k; ++j)
    out.linkage_paths.push_back(chain(nails[2 * k + 2 * j],
                                      nails[2 * k + 2 * j + 1],
                                      linkage_residue + (j % 2) * 4));
  return out;
}

std::pair<Graph, VertexSet> generate_random_instance(std::uint64_t seed, int n,
                                                     double edge_prob,
                                                     int a_size) {
  if (n < 0) throw std::invalid_argument("vertex count must be >= 0");
  if (edge_prob < 0.0 || edge_prob > 1.0)
    throw std::invalid_argument("edge probability must lie in [0, 1]");
  if (a_size < 0 || a_size > n)
    throw std::invalid_argument("terminal count must lie between 0 and n");
  Rng rng(seed);
  Graph g;
  for (int v = 0; v < n; ++v) g.add_vertex(v);
  const std::uint64_t den = std::uint64_t(1) << 30;
  const std::uint64_t threshold =
      static_cast<std::uint64_t>(edge_prob * static_cast<double>(den));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.below(den) < threshold) g.add_edge(i, j);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (int i = n - 1; i > 0; --i)
    std::swap(order[i], order[rng.below(static_cast<std::uint64_t>(i) + 1)]);
  VertexSet a(order.begin(), order.begin() + a_size);
  return {g, a};
}

}  // namespace zeropath
