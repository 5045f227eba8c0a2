#include "zeropath/json_io.hpp"

#include <sstream>

namespace zeropath {

Json graph_to_json(const Graph& g, const VertexSet& a) {
  Json j;
  j["m"] = g.labelled() ? Json(g.modulus()) : Json(nullptr);
  j["vertices"] = g.vertices();
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  if (g.labelled()) {
    Json labels = Json::array();
    for (const auto& [e, val] : g.labels()) labels.push_back({e.first, e.second, val});
    j["labels"] = std::move(labels);
  }
  j["A"] = a;
  return j;
}

GraphInstance graph_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("graph json must be an object");
  GraphInstance gi;
  if (j.contains("m") && !j.at("m").is_null())
    gi.g.enable_labels(j.at("m").get<int>());
  if (j.contains("vertices"))
    for (const auto& v : j.at("vertices")) gi.g.add_vertex(v.get<int>());
  if (j.contains("edges")) {
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2)
        throw std::invalid_argument("edge entries must be [u, v]");
      gi.g.add_edge(e[0].get<int>(), e[1].get<int>());
    }
  }
  if (j.contains("labels")) {
    if (!gi.g.labelled())
      throw std::invalid_argument("labels given but \"m\" is null");
    for (const auto& l : j.at("labels")) {
      if (!l.is_array() || l.size() != 3)
        throw std::invalid_argument("label entries must be [u, v, value]");
      gi.g.set_label(l[0].get<int>(), l[1].get<int>(), l[2].get<int>());
    }
  }
  if (j.contains("A")) {
    for (const auto& v : j.at("A")) {
      int x = v.get<int>();
      if (!gi.g.has_vertex(x))
        throw std::invalid_argument("A contains unknown vertex " + std::to_string(x));
      gi.a.insert(x);
    }
  }
  return gi;
}

Json path_to_json(const Path& p) { return Json(p.v); }

Path path_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("path json must be an array");
  Path p;
  for (const auto& v : j) p.v.push_back(v.get<int>());
  return p;
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid json: ") + e.what());
  }
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

std::string to_dot(const Graph& g, const VertexSet& a) {
  std::ostringstream out;
  out << "graph zeropath {\n";
  out << "  node [shape=circle];\n";
  for (int v : g.vertices()) {
    out << "  " << v;
    if (a.count(v)) out << " [shape=box]";
    out << ";\n";
  }
  for (const auto& [u, v] : g.edges()) {
    out << "  " << u << " -- " << v;
    if (g.labelled()) out << " [label=\"" << g.label(u, v) << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace zeropath
