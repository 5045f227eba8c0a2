#include "zeropath/clique_model.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "zeropath/menger.hpp"

namespace zeropath {

namespace {

// BFS path between two vertices of g staying inside `inside`.
// Neighbors are scanned ascending, so the result is deterministic.
Path confined_path(const Graph& g, const VertexSet& inside, int from, int to) {
  if (!inside.count(from) || !inside.count(to))
    throw std::logic_error("confined_path endpoints outside region");
  std::map<int, int> parent;
  parent[from] = from;
  std::vector<int> frontier{from};
  while (!frontier.empty() && !parent.count(to)) {
    std::vector<int> next;
    for (int u : frontier) {
      for (int w : g.neighbors(u)) {
        if (!inside.count(w) || parent.count(w)) continue;
        parent[w] = u;
        next.push_back(w);
      }
    }
    frontier = std::move(next);
  }
  if (!parent.count(to))
    throw std::logic_error("confined_path endpoints not connected");
  std::vector<int> rev{to};
  while (rev.back() != from) rev.push_back(parent[rev.back()]);
  std::reverse(rev.begin(), rev.end());
  return Path{rev};
}

int owner_of(const std::map<int, int>& vertex_set, int v) {
  auto it = vertex_set.find(v);
  return it == vertex_set.end() ? -1 : it->second;
}

std::map<int, int> vertex_owners(const CliqueModel& m) {
  std::map<int, int> owner;
  for (int i = 0; i < m.order(); ++i)
    for (int v : m.branch_sets[i]) owner[v] = i;
  return owner;
}

// Number of maximal same-owner runs among the model vertices of p,
// where vertices outside the model do not break a run.
int visit_count(const Path& p, const std::map<int, int>& owner) {
  int count = 0;
  int last = -1;
  for (int v : p.v) {
    int s = owner_of(owner, v);
    if (s < 0) continue;
    if (s != last) {
      ++count;
      last = s;
    }
  }
  return count;
}

CliqueModel restrict_model(const CliqueModel& m, const std::vector<int>& keep) {
  std::map<int, int> rank;
  for (int i = 0; i < static_cast<int>(keep.size()); ++i) rank[keep[i]] = i;
  CliqueModel out;
  for (int i : keep) out.branch_sets.push_back(m.branch_sets[i]);
  for (const auto& [key, e] : m.model_edges) {
    auto i = rank.find(key.first);
    auto j = rank.find(key.second);
    if (i == rank.end() || j == rank.end()) continue;
    out.model_edges[{i->second, j->second}] = e;
  }
  return out;
}

}  // namespace

VertexSet CliqueModel::all_vertices() const {
  VertexSet out;
  for (const auto& s : branch_sets) out.insert(s.begin(), s.end());
  return out;
}

void validate_clique_model(const Graph& g, const CliqueModel& m) {
  const int t = m.order();
  if (t < 1) throw std::invalid_argument("model needs at least one branch set");
  VertexSet seen;
  for (const auto& s : m.branch_sets) {
    if (s.empty()) throw std::invalid_argument("empty branch set");
    for (int v : s) {
      if (!g.has_vertex(v)) throw std::invalid_argument("branch set vertex not in graph");
      if (!seen.insert(v).second) throw std::invalid_argument("branch sets overlap");
    }
    if (reachable_from(g.induced(s), {*s.begin()}).size() != s.size())
      throw std::invalid_argument("branch set not connected");
  }
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j) {
      auto it = m.model_edges.find({i, j});
      if (it == m.model_edges.end())
        throw std::invalid_argument("missing model edge");
      const auto& [u, v] = it->second;
      if (!g.has_edge(u, v)) throw std::invalid_argument("model edge not in graph");
      bool fwd = m.branch_sets[i].count(u) && m.branch_sets[j].count(v);
      bool bwd = m.branch_sets[j].count(u) && m.branch_sets[i].count(v);
      if (!fwd && !bwd)
        throw std::invalid_argument("model edge does not join its branch sets");
    }
  if (m.model_edges.size() != static_cast<size_t>(t) * (t - 1) / 2)
    throw std::invalid_argument("unexpected model edge key");
}

int attachment_vertex(const CliqueModel& m, int i, int j) {
  if (i == j || i < 0 || j < 0 || i >= m.order() || j >= m.order())
    throw std::invalid_argument("attachment_vertex needs two distinct set indices");
  auto key = std::minmax(i, j);
  auto it = m.model_edges.find({key.first, key.second});
  if (it == m.model_edges.end()) throw std::invalid_argument("no such model edge");
  const auto& [u, v] = it->second;
  return m.branch_sets[i].count(u) ? u : v;
}

std::vector<int> model_triangle_cycle(const Graph& g, const CliqueModel& m,
                                      int i, int j, int k) {
  if (i == j || j == k || i == k)
    throw std::invalid_argument("triangle needs three distinct sets");
  std::vector<int> cyc;
  auto walk = [&](int s, int enter, int exit) {
    Path p = confined_path(g, m.branch_sets[s],
                           attachment_vertex(m, s, enter),
                           attachment_vertex(m, s, exit));
    cyc.insert(cyc.end(), p.v.begin(), p.v.end());
  };
  walk(i, k, j);
  walk(j, i, k);
  walk(k, j, i);
  cyc.push_back(cyc.front());
  return cyc;
}

std::optional<std::map<int, int>> odd_model_coloring(const Graph& g,
                                                     const CliqueModel& m) {
  validate_clique_model(g, m);
  const int t = m.order();
  // Base colors: each branch set must induce a tree, which is bipartite.
  std::vector<std::map<int, int>> base(t);
  for (int i = 0; i < t; ++i) {
    Graph h = g.induced(m.branch_sets[i]);
    if (h.num_edges() != h.num_vertices() - 1)
      throw std::invalid_argument("branch set does not induce a tree");
    auto parts = bipartition(h);
    if (!parts) throw std::invalid_argument("branch set does not induce a tree");
    for (int v : parts->first) base[i][v] = 0;
    for (int v : parts->second) base[i][v] = 1;
  }
  // Flip variables, one per set: a model edge (i, j) with ends u, v must be
  // monochromatic after flips, which pins f_i ^ f_j to base_i(u) ^ base_j(v).
  // Tree edges stay bichromatic whatever the flips do.
  std::vector<int> up(t), parity(t, 0);
  for (int i = 0; i < t; ++i) up[i] = i;
  auto find = [&](int x) {
    int p = 0;
    while (up[x] != x) {
      p ^= parity[x];
      x = up[x];
    }
    return std::pair{x, p};
  };
  for (const auto& [key, e] : m.model_edges) {
    auto [i, j] = key;
    int u = m.branch_sets[i].count(e.first) ? e.first : e.second;
    int v = e.first == u ? e.second : e.first;
    int want = base[i][u] ^ base[j][v];
    auto [ri, pi] = find(i);
    auto [rj, pj] = find(j);
    if (ri == rj) {
      if ((pi ^ pj) != want) return std::nullopt;
    } else {
      up[ri] = rj;
      parity[ri] = pi ^ pj ^ want;
    }
  }
  std::map<int, int> color;
  for (int i = 0; i < t; ++i) {
    int f = find(i).second;
    for (const auto& [v, b] : base[i]) color[v] = b ^ f;
  }
  return color;
}

bool is_odd_model(const Graph& g, const CliqueModel& m) {
  return odd_model_coloring(g, m).has_value();
}

namespace {

struct FamilyState {
  std::map<int, int> owner;           // model vertex -> set index
  std::map<int, int> on_path;         // family vertex -> path index
  std::map<int, std::set<int>> meets; // set index -> paths meeting it
  std::vector<int> end_set;           // path index -> its end set
  std::set<int> private_ends;
  int vis = 0;

  void rebuild(const std::vector<Path>& fam, const std::map<int, int>& owner_in) {
    owner = owner_in;
    on_path.clear();
    meets.clear();
    end_set.assign(fam.size(), -1);
    private_ends.clear();
    vis = 0;
    for (int pi = 0; pi < static_cast<int>(fam.size()); ++pi) {
      for (int v : fam[pi].v) {
        on_path[v] = pi;
        int s = owner_of(owner, v);
        if (s >= 0) meets[s].insert(pi);
      }
      end_set[pi] = owner_of(owner, fam[pi].back());
      vis += visit_count(fam[pi], owner);
    }
    for (const auto& [s, who] : meets)
      if (who.size() == 1 && end_set[*who.begin()] == s) private_ends.insert(s);
  }
};

// Truncate every path at its first vertex whose branch set is not some other
// path's end set, repeated to a joint fixpoint.  Afterwards the met sets are
// exactly the 2l distinct end sets and each path touches its own end set only
// at its final vertex.
void normalize_family(std::vector<Path>& fam, const std::map<int, int>& owner) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int pi = 0; pi < static_cast<int>(fam.size()); ++pi) {
      std::set<int> other_ends;
      for (int pj = 0; pj < static_cast<int>(fam.size()); ++pj)
        if (pj != pi) other_ends.insert(owner_of(owner, fam[pj].back()));
      auto& verts = fam[pi].v;
      for (size_t idx = 0; idx + 1 < verts.size(); ++idx) {
        int s = owner_of(owner, verts[idx]);
        if (s < 0 || other_ends.count(s)) continue;
        verts.resize(idx + 1);
        changed = true;
        break;
      }
    }
  }
}

}  // namespace

ModelLinkage find_model_linkage(const Graph& g, const VertexSet& a,
                                const CliqueModel& model, int ell) {
  validate_clique_model(g, model);
  if (ell < 1) throw std::invalid_argument("need ell >= 1");
  const int t = model.order();
  if (t < 3 * ell) throw std::invalid_argument("model too small for requested linkage");
  auto owner = vertex_owners(model);
  for (const auto& [v, s] : owner)
    if (a.count(v)) throw std::invalid_argument("branch sets must avoid the terminal set");

  VertexSet reps;
  for (const auto& s : model.branch_sets) reps.insert(*s.begin());
  MengerResult mr = menger_paths(g, a, reps);

  if (static_cast<int>(mr.paths.size()) < 2 * ell) {
    // The separator is smaller than 2l and the sets it misses lose all
    // contact with the terminals.
    const VertexSet& x = mr.separator;
    std::vector<int> keep;
    for (int i = 0; i < t; ++i) {
      bool hit = std::any_of(model.branch_sets[i].begin(), model.branch_sets[i].end(),
                             [&](int v) { return x.count(v); });
      if (!hit) keep.push_back(i);
    }
    if (static_cast<int>(keep.size()) < t - (2 * ell - 1))
      throw std::logic_error("separator meets too many branch sets");
    VertexSet sources;
    for (int v : a)
      if (!x.count(v)) sources.insert(v);
    if (!sources.empty()) {
      VertexSet reach = reachable_from(g.minus(x), sources);
      for (int i : keep)
        for (int v : model.branch_sets[i])
          if (reach.count(v))
            throw std::logic_error("separator fails to cut a kept branch set");
    }
    return ModelLinkage{restrict_model(model, keep), false, {}, x};
  }

  std::vector<Path> fam(mr.paths.begin(), mr.paths.begin() + 2 * ell);
  normalize_family(fam, owner);

  FamilyState st;
  st.rebuild(fam, owner);

  // Local improvement: raise the number of private ends, breaking ties by
  // shrinking the total visit count.  Each accepted move improves that pair
  // lexicographically, so the loop ends well before the cap.
  const int cap = 4 * ell * (st.vis + 2 * ell + 4);
  for (int iter = 0; iter <= cap; ++iter) {
    if (static_cast<int>(st.private_ends.size()) >= ell) break;
    if (iter == cap) throw std::logic_error("improvement loop stalled");

    int v1 = -1;
    for (int s = 0; s < t; ++s)
      if (!st.meets.count(s)) {
        v1 = s;
        break;
      }
    if (v1 < 0) throw std::logic_error("no unmet branch set");

    // Sets met with a clean tail toward a private end never help: rerouting
    // into them would re-lengthen a finished path.
    std::set<int> blocked = st.private_ends;
    for (int pi = 0; pi < static_cast<int>(fam.size()); ++pi) {
      if (!st.private_ends.count(st.end_set[pi])) continue;
      const auto& verts = fam[pi].v;
      for (size_t idx = 0; idx < verts.size(); ++idx) {
        int s = owner_of(owner, verts[idx]);
        if (s < 0 || s == st.end_set[pi]) continue;
        bool clean = true;
        for (size_t j = idx; j < verts.size() && clean; ++j) {
          int sj = owner_of(owner, verts[j]);
          if (sj >= 0 && sj != s && sj != st.end_set[pi]) clean = false;
        }
        if (clean) blocked.insert(s);
      }
    }

    bool improved = false;
    for (const auto& [v2, who] : st.meets) {
      if (blocked.count(v2)) continue;
      int u2 = -1;
      for (int v : model.branch_sets[v2])
        if (st.on_path.count(v)) {
          u2 = v;
          break;
        }
      if (u2 < 0) continue;
      // Connector with one run per set: across v1, over the model edge, then
      // across v2.  Anything cheaper could zigzag between the two sets and
      // void the visit-count bound.
      Path q = confined_path(g, model.branch_sets[v1],
                             *model.branch_sets[v1].begin(),
                             attachment_vertex(model, v1, v2));
      Path leg = confined_path(g, model.branch_sets[v2],
                               attachment_vertex(model, v2, v1), u2);
      q.v.insert(q.v.end(), leg.v.begin(), leg.v.end());
      size_t qi = 0;
      while (qi < q.v.size() && !st.on_path.count(q.v[qi])) ++qi;
      if (qi == q.v.size()) throw std::logic_error("connector misses the family");
      int pi = st.on_path[q.v[qi]];

      std::vector<int> verts;
      for (int v : fam[pi].v) {
        verts.push_back(v);
        if (v == q.v[qi]) break;
      }
      if (verts.back() != q.v[qi]) throw std::logic_error("family index out of sync");
      for (size_t j = qi; j-- > 0;) verts.push_back(q.v[j]);
      for (size_t j = 0; j < verts.size(); ++j) {
        if (owner_of(owner, verts[j]) == v1) {
          verts.resize(j + 1);
          break;
        }
      }

      std::vector<Path> trial = fam;
      trial[pi] = Path{verts};
      FamilyState ts;
      ts.rebuild(trial, owner);
      bool better = ts.private_ends.size() > st.private_ends.size() ||
                    (ts.private_ends.size() == st.private_ends.size() && ts.vis < st.vis);
      if (better) {
        fam = std::move(trial);
        st = std::move(ts);
        improved = true;
        break;
      }
    }
    if (!improved) throw std::logic_error("improvement loop stalled");
  }

  std::vector<Path> chosen;
  std::set<int> touched;
  std::set<int> kept_ends;
  for (int pi = 0; pi < static_cast<int>(fam.size()) &&
                   static_cast<int>(chosen.size()) < ell;
       ++pi) {
    if (!st.private_ends.count(st.end_set[pi])) continue;
    chosen.push_back(fam[pi]);
    kept_ends.insert(st.end_set[pi]);
    for (int v : fam[pi].v) {
      int s = owner_of(owner, v);
      if (s >= 0) touched.insert(s);
    }
  }
  if (static_cast<int>(chosen.size()) < ell)
    throw std::logic_error("not enough private ends after improvement");

  std::vector<int> keep;
  for (int i = 0; i < t; ++i)
    if (!touched.count(i) || kept_ends.count(i)) keep.push_back(i);
  if (static_cast<int>(keep.size()) < t - 2 * ell)
    throw std::logic_error("linkage touches too many branch sets");
  return ModelLinkage{restrict_model(model, keep), true, chosen, {}};
}

std::vector<Windmill> windmills_from_odd_model(const Graph& g, const VertexSet& a,
                                               const CliqueModel& model,
                                               const std::vector<Path>& ps, int k) {
  if (k < 1) throw std::invalid_argument("need k >= 1");
  if (!is_odd_model(g, model)) throw std::invalid_argument("model is not odd");
  const int t = model.order();
  if (t < 10 * k) throw std::invalid_argument("model too small for k windmills");
  if (static_cast<int>(ps.size()) != 3 * k)
    throw std::invalid_argument("need exactly 3k linking paths");
  auto owner = vertex_owners(model);
  for (const auto& [v, s] : owner)
    if (a.count(v)) throw std::invalid_argument("branch sets must avoid the terminal set");

  // The paths must nicely link the terminals to 3k distinct branch sets:
  // each starts in a, ends in its set, and meets the model nowhere else.
  std::vector<std::pair<int, int>> ends;  // (end set, path index)
  VertexSet used;
  for (int pi = 0; pi < static_cast<int>(ps.size()); ++pi) {
    const Path& p = ps[pi];
    if (!is_simple_path(g, p) || p.length() < 1)
      throw std::invalid_argument("linking path invalid");
    if (!a.count(p.front())) throw std::invalid_argument("linking path must start in the terminal set");
    int sigma = owner_of(owner, p.back());
    if (sigma < 0) throw std::invalid_argument("linking path must end in a branch set");
    for (size_t idx = 0; idx < p.v.size(); ++idx) {
      int v = p.v[idx];
      if (idx > 0 && a.count(v))
        throw std::invalid_argument("linking path revisits the terminal set");
      if (idx + 1 < p.v.size() && owner_of(owner, v) >= 0)
        throw std::invalid_argument("linking path meets the model before its end");
      if (!used.insert(v).second)
        throw std::invalid_argument("linking paths are not disjoint");
    }
    ends.push_back({sigma, pi});
  }
  std::sort(ends.begin(), ends.end());
  for (size_t i = 1; i < ends.size(); ++i)
    if (ends[i].first == ends[i - 1].first)
      throw std::invalid_argument("linking paths share an end set");

  std::vector<int> spare;
  {
    std::set<int> taken;
    for (const auto& [s, pi] : ends) taken.insert(s);
    for (int i = 0; i < t; ++i)
      if (!taken.count(i)) spare.push_back(i);
  }

  std::vector<Windmill> out;
  for (int gi = 0; gi < k; ++gi) {
    // Ten sets per windmill: three path ends, three odd cycles through two
    // fresh sets each, and one hub set tying the cycles together.
    std::array<int, 3> y;
    std::array<const Path*, 3> link;
    for (int i = 0; i < 3; ++i) {
      y[i] = ends[3 * gi + i].first;
      link[i] = &ps[ends[3 * gi + i].second];
    }
    const int* fresh = &spare[7 * gi];
    const int hub_set = fresh[6];

    Windmill wm;
    std::array<Path, 3> hub_legs;
    std::array<int, 3> hub_ends;
    for (int i = 0; i < 3; ++i) {
      int p1 = fresh[2 * i];      // carries the connection to the hub set
      int p2 = fresh[2 * i + 1];
      auto cyc = model_triangle_cycle(g, model, y[i], p1, p2);
      if ((cyc.size() - 1) % 2 == 0)
        throw std::logic_error("model triangle cycle is even");
      wm.cycles[i] = cyc;
      VertexSet on_cycle(cyc.begin(), cyc.end());

      // Reach the cycle from the hub edge inside p1, stopping at first touch.
      Path r = confined_path(g, model.branch_sets[p1],
                             attachment_vertex(model, p1, hub_set),
                             attachment_vertex(model, p1, y[i]));
      size_t stop = 0;
      while (!on_cycle.count(r.v[stop])) ++stop;
      r.v.resize(stop + 1);
      hub_legs[i] = r;
      hub_ends[i] = attachment_vertex(model, hub_set, p1);
    }

    // Hub: median of the three attachment vertices in the hub set's tree.
    const VertexSet& hub_tree = model.branch_sets[hub_set];
    Path m01 = confined_path(g, hub_tree, hub_ends[0], hub_ends[1]);
    Path m02 = confined_path(g, hub_tree, hub_ends[0], hub_ends[2]);
    size_t shared = 0;
    while (shared < m01.v.size() && shared < m02.v.size() &&
           m01.v[shared] == m02.v[shared])
      ++shared;
    wm.hub = m01.v[shared - 1];

    for (int i = 0; i < 3; ++i) {
      const auto& cyc = wm.cycles[i];
      VertexSet on_cycle(cyc.begin(), cyc.end());

      // Walk from the path's landing vertex to the cycle inside the end set.
      int p_end = link[i]->back();
      Path q = confined_path(g, model.branch_sets[y[i]], p_end,
                             attachment_vertex(model, y[i], fresh[2 * i]));
      size_t stop = 0;
      while (!on_cycle.count(q.v[stop])) ++stop;
      q.v.resize(stop + 1);

      // Arc of the cycle from the hub leg's contact to the path's contact.
      std::vector<int> ring(cyc.begin(), cyc.end() - 1);
      int c_r = hub_legs[i].back();
      int c_q = q.back();
      size_t at = std::find(ring.begin(), ring.end(), c_r) - ring.begin();
      std::vector<int> arc{c_r};
      while (arc.back() != c_q) {
        at = (at + 1) % ring.size();
        arc.push_back(ring[at]);
      }

      std::vector<int> arm = confined_path(g, hub_tree, wm.hub, hub_ends[i]).v;
      arm.push_back(hub_legs[i].front());
      arm.insert(arm.end(), hub_legs[i].v.begin() + 1, hub_legs[i].v.end());
      arm.insert(arm.end(), arc.begin() + 1, arc.end());
      for (size_t j = q.v.size() - 1; j-- > 0;) arm.push_back(q.v[j]);
      for (size_t j = link[i]->v.size() - 1; j-- > 0;) arm.push_back(link[i]->v[j]);
      wm.arms[i] = Path{arm};
    }
    validate_windmill(g, a, wm);
    out.push_back(wm);
  }
  return out;
}

}  // namespace zeropath
