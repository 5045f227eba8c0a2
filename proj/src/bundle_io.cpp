#include "zeropath/bundle_io.hpp"

#include <stdexcept>

namespace zeropath {

namespace {

Json paths_to_json(const std::vector<Path>& ps) {
  Json arr = Json::array();
  for (const Path& p : ps) arr.push_back(path_to_json(p));
  return arr;
}

std::vector<Path> paths_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("path list json must be an array");
  std::vector<Path> out;
  for (const auto& e : j) out.push_back(path_from_json(e));
  return out;
}

Json set_to_json(const VertexSet& s) {
  Json arr = Json::array();
  for (int v : s) arr.push_back(v);
  return arr;
}

VertexSet set_from_json(const Json& j) {
  VertexSet out;
  for (const auto& v : j) out.insert(v.get<int>());
  return out;
}

}  // namespace

Json wall_to_json(const Wall& w) {
  Json j;
  j["n"] = w.size();
  Json pos = Json::array();
  for (const auto& [c, v] : w.positions())
    pos.push_back(Json::array({c.row, c.col, v}));
  j["positions"] = pos;
  Json eps = Json::array();
  for (const auto& [e, p] : w.edge_paths())
    eps.push_back(Json::array(
        {e.first.row, e.first.col, e.second.row, e.second.col, Json(p)}));
  j["edge_paths"] = eps;
  return j;
}

Wall wall_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n"))
    throw std::invalid_argument("wall json must be an object with n");
  WallTemplate tmpl = build_wall_template(j.at("n").get<int>());
  std::map<Coord, int> pos;
  for (const auto& e : j.at("positions"))
    pos[{e.at(0).get<int>(), e.at(1).get<int>()}] = e.at(2).get<int>();
  std::map<CoordEdge, std::vector<int>> eps;
  for (const auto& e : j.at("edge_paths")) {
    Coord a{e.at(0).get<int>(), e.at(1).get<int>()};
    Coord b{e.at(2).get<int>(), e.at(3).get<int>()};
    std::vector<int> p;
    for (const auto& v : e.at(4)) p.push_back(v.get<int>());
    eps[make_coord_edge(a, b)] = p;
  }
  return Wall(std::move(tmpl), std::move(pos), std::move(eps));
}

Json windmill_to_json(const Windmill& wm) {
  Json j;
  j["hub"] = wm.hub;
  Json arms = Json::array(), cycles = Json::array();
  for (const Path& p : wm.arms) arms.push_back(path_to_json(p));
  for (const auto& c : wm.cycles) cycles.push_back(Json(c));
  j["arms"] = arms;
  j["cycles"] = cycles;
  return j;
}

Windmill windmill_from_json(const Json& j) {
  Windmill wm;
  wm.hub = j.at("hub").get<int>();
  const Json& arms = j.at("arms");
  const Json& cycles = j.at("cycles");
  if (arms.size() != 3 || cycles.size() != 3)
    throw std::invalid_argument("windmill json needs 3 arms and 3 cycles");
  for (int i = 0; i < 3; ++i) {
    wm.arms[i] = path_from_json(arms.at(i));
    for (const auto& v : cycles.at(i)) wm.cycles[i].push_back(v.get<int>());
  }
  return wm;
}

Json linkage_to_json(const Linkage& l) {
  Json j;
  j["paths"] = paths_to_json(l.paths);
  return j;
}

Linkage linkage_from_json(const Json& j) {
  Linkage l;
  l.paths = paths_from_json(j.at("paths"));
  return l;
}

Json model_to_json(const CliqueModel& m) {
  Json j;
  Json sets = Json::array();
  for (const VertexSet& s : m.branch_sets) sets.push_back(set_to_json(s));
  j["branch_sets"] = sets;
  Json edges = Json::array();
  for (const auto& [key, e] : m.model_edges)
    edges.push_back(Json::array({key.first, key.second, e.first, e.second}));
  j["model_edges"] = edges;
  return j;
}

CliqueModel model_from_json(const Json& j) {
  CliqueModel m;
  for (const auto& s : j.at("branch_sets"))
    m.branch_sets.push_back(set_from_json(s));
  for (const auto& e : j.at("model_edges"))
    m.model_edges[{e.at(0).get<int>(), e.at(1).get<int>()}] =
        make_edge(e.at(2).get<int>(), e.at(3).get<int>());
  return m;
}

Json wall_bundle_to_json(const Graph& g, const VertexSet& a, const Wall& w) {
  Json j = graph_to_json(g, a);
  j["wall"] = wall_to_json(w);
  return j;
}

WallBundle wall_bundle_from_json(const Json& j) {
  GraphInstance gi = graph_from_json(j);
  if (!j.contains("wall"))
    throw std::invalid_argument("bundle json carries no wall");
  return {std::move(gi.g), std::move(gi.a), wall_from_json(j.at("wall"))};
}

Json windmill_bundle_to_json(const Graph& g, const VertexSet& a,
                             const Windmill& wm) {
  Json j = graph_to_json(g, a);
  j["windmill"] = windmill_to_json(wm);
  return j;
}

WindmillBundle windmill_bundle_from_json(const Json& j) {
  GraphInstance gi = graph_from_json(j);
  if (!j.contains("windmill"))
    throw std::invalid_argument("bundle json carries no windmill");
  return {std::move(gi.g), std::move(gi.a), windmill_from_json(j.at("windmill"))};
}

Json odd_structure_to_json(const OddStructure& s) {
  Json j = graph_to_json(s.g, s.a);
  j["kind"] = s.kind;
  if (s.wall) j["wall"] = wall_to_json(*s.wall);
  if (s.linkage) j["linkage"] = linkage_to_json(*s.linkage);
  if (s.model) j["model"] = model_to_json(*s.model);
  return j;
}

OddStructure odd_structure_from_json(const Json& j) {
  GraphInstance gi = graph_from_json(j);
  OddStructure s;
  s.kind = j.at("kind").get<std::string>();
  s.g = std::move(gi.g);
  s.a = std::move(gi.a);
  if (j.contains("wall")) s.wall = wall_from_json(j.at("wall"));
  if (j.contains("linkage")) s.linkage = linkage_from_json(j.at("linkage"));
  if (j.contains("model")) s.model = model_from_json(j.at("model"));
  return s;
}

Json assembly_to_json(const AssemblyInput& in) {
  Json j = graph_to_json(in.g, in.a);
  j["wall"] = wall_to_json(in.wall);
  j["linkage_paths"] = paths_to_json(in.linkage_paths);
  j["linking_paths"] = paths_to_json(in.linking_paths);
  j["k"] = in.k;
  return j;
}

AssemblyInput assembly_from_json(const Json& j) {
  GraphInstance gi = graph_from_json(j);
  for (const char* key : {"wall", "linkage_paths", "linking_paths", "k"})
    if (!j.contains(key))
      throw std::invalid_argument(std::string("assembly json lacks ") + key);
  AssemblyInput in;
  in.g = std::move(gi.g);
  in.a = std::move(gi.a);
  in.wall = wall_from_json(j.at("wall"));
  in.linkage_paths = paths_from_json(j.at("linkage_paths"));
  in.linking_paths = paths_from_json(j.at("linking_paths"));
  in.k = j.at("k").get<int>();
  return in;
}

Json trace_to_json(const ReductionTrace& t) {
  Json j;
  Json fwd = Json::array();
  for (const auto& [v, imgs] : t.forward_vertex_map)
    fwd.push_back(Json::array({v, Json(imgs)}));
  j["forward_vertex_map"] = fwd;
  Json am = Json::array();
  for (const auto& [v, imgs] : t.a_map)
    am.push_back(Json::array({v, Json(imgs)}));
  j["a_map"] = am;
  Json own = Json::array();
  for (const auto& [v, r] : t.gadget_owner) own.push_back(Json::array({v, r}));
  j["gadget_owner"] = own;
  Json rem = Json::array();
  for (const Edge& e : t.removed_edges)
    rem.push_back(Json::array({e.first, e.second}));
  j["removed_edges"] = rem;
  j["notes"] = t.notes;
  return j;
}

Json split_to_json(const SplitResult& s) {
  VertexSet both = s.a1;
  both.insert(s.a2.begin(), s.a2.end());
  Json j = graph_to_json(s.g, both);
  j["a1"] = set_to_json(s.a1);
  j["a2"] = set_to_json(s.a2);
  j["trace"] = trace_to_json(s.trace);
  return j;
}

Json gadget_to_json(const GadgetResult& r, const VertexSet& a) {
  Json j = graph_to_json(r.g, a);
  j["block"] = set_to_json(r.block);
  j["roots"] = Json(r.roots);
  j["trace"] = trace_to_json(r.trace);
  return j;
}

Json d2_to_json(const D2Result& r, const VertexSet& a) {
  Json j = graph_to_json(r.g, a);
  Json subs = Json::array();
  for (const auto& [s, e] : r.subdivision_vertex)
    subs.push_back(Json::array({s, e.first, e.second}));
  j["subdivision_vertices"] = subs;
  j["trace"] = trace_to_json(r.trace);
  return j;
}

Json counterexample_to_json(const Counterexample& cx) {
  Json j = graph_to_json(cx.g, cx.a);
  Json inner;
  inner["n"] = cx.n;
  inner["d"] = cx.d;
  Json eis = Json::array();
  for (const auto& [e, chain] : cx.edge_internals)
    eis.push_back(Json::array({e.first, e.second, Json(chain)}));
  inner["edge_internals"] = eis;
  Json tis = Json::array();
  for (const auto& [t, chain] : cx.terminal_internals)
    tis.push_back(Json::array({t, Json(chain)}));
  inner["terminal_internals"] = tis;
  j["counterexample"] = inner;
  return j;
}

}  // namespace zeropath
