#pragma once

#include "zeropath/clique_model.hpp"
#include "zeropath/json_io.hpp"
#include "zeropath/reductions.hpp"
#include "zeropath/wall.hpp"
#include "zeropath/windmill.hpp"

namespace zeropath {

// Structure serializers. Bundles carry the plain graph keys at the top
// level, so graph_from_json reads any bundle as an instance, plus one
// named key per embedded structure.

Json wall_to_json(const Wall& w);
Wall wall_from_json(const Json& j);

Json windmill_to_json(const Windmill& wm);
Windmill windmill_from_json(const Json& j);

Json linkage_to_json(const Linkage& l);
Linkage linkage_from_json(const Json& j);

Json model_to_json(const CliqueModel& m);
CliqueModel model_from_json(const Json& j);

Json wall_bundle_to_json(const Graph& g, const VertexSet& a, const Wall& w);

struct WallBundle {
  Graph g;
  VertexSet a;
  Wall wall;
};
WallBundle wall_bundle_from_json(const Json& j);

Json windmill_bundle_to_json(const Graph& g, const VertexSet& a,
                             const Windmill& wm);

struct WindmillBundle {
  Graph g;
  VertexSet a;
  Windmill wm;
};
WindmillBundle windmill_bundle_from_json(const Json& j);

Json odd_structure_to_json(const OddStructure& s);
OddStructure odd_structure_from_json(const Json& j);

Json assembly_to_json(const AssemblyInput& in);
AssemblyInput assembly_from_json(const Json& j);

Json trace_to_json(const ReductionTrace& t);
Json split_to_json(const SplitResult& s);
Json gadget_to_json(const GadgetResult& r, const VertexSet& a);
Json d2_to_json(const D2Result& r, const VertexSet& a);
Json counterexample_to_json(const Counterexample& cx);

}  // namespace zeropath
