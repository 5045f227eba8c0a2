#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "zeropath/graph.hpp"

namespace zeropath {

// Insertion-ordered json keeps emission canonical: fixed key order, sorted
// vertex and edge lists, 2-space indent, trailing newline.
using Json = nlohmann::ordered_json;

struct GraphInstance {
  Graph g;
  VertexSet a;  // distinguished terminal set, may be empty
};

// {"m": int|null, "vertices": [...], "edges": [[u,v],...],
//  "labels": [[u,v,val],...] only when labelled, "A": [...]}
Json graph_to_json(const Graph& g, const VertexSet& a = {});
GraphInstance graph_from_json(const Json& j);  // tolerates extra keys

Json path_to_json(const Path& p);
Path path_from_json(const Json& j);

// Throws std::invalid_argument carrying the parser's location message.
Json parse_json_text(const std::string& text);
std::string dump_canonical(const Json& j);

// Graphviz export; vertices in A get box shape, everything emitted in
// ascending order. Labels shown when the graph is labelled.
std::string to_dot(const Graph& g, const VertexSet& a = {});

}  // namespace zeropath
