#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "zeropath/graph.hpp"
#include "zeropath/windmill.hpp"

namespace zeropath {

// Complete-minor model: pairwise disjoint connected branch sets plus
// one host edge per pair of sets.
struct CliqueModel {
    std::vector<VertexSet> branch_sets;
    std::map<std::pair<int, int>, Edge> model_edges;  // keyed (i, j), i < j

    int order() const { return static_cast<int>(branch_sets.size()); }
    VertexSet all_vertices() const;
};

// Branch sets nonempty, disjoint, connected in g; exactly one model
// edge per pair, existing in g, one endpoint per set.
void validate_clique_model(const Graph& g, const CliqueModel& m);

// Endpoint of model edge (i, j) lying in branch set i.
int attachment_vertex(const CliqueModel& m, int i, int j);

// The unique cycle through branch sets i, j, k: tree paths between
// attachment vertices joined by the three model edges. Closed list,
// front() == back(). Branch sets must induce trees.
std::vector<int> model_triangle_cycle(const Graph& g, const CliqueModel& m,
                                      int i, int j, int k);

// A coloring of the model's vertices in {0, 1} with every branch-set
// tree edge bichromatic and every model edge monochromatic, when one
// exists. Branch sets must induce trees. Such a coloring exists iff
// every triangle cycle of the model is odd.
std::optional<std::map<int, int>> odd_model_coloring(const Graph& g,
                                                     const CliqueModel& m);

bool is_odd_model(const Graph& g, const CliqueModel& m);

struct ModelLinkage {
    CliqueModel submodel;
    bool linked = false;
    std::vector<Path> paths;  // nicely linking, when linked
    VertexSet separator;      // separates a from the submodel, when not
};

// Either ell disjoint paths from a that nicely link to a submodel
// missing at most 2*ell branch sets, or a separator of at most
// 2*ell - 1 vertices cutting a from a submodel missing at most
// 2*ell - 1 sets. Requires order >= 3*ell and branch sets disjoint
// from a. Menger routing to per-set representatives, then the
// private-end improvement loop (grow private ends, then shrink
// visits).
ModelLinkage find_model_linkage(const Graph& g, const VertexSet& a,
                                const CliqueModel& model, int ell);

// k disjoint windmills with tips in a, built from 3k nicely-linking
// paths into an odd model with at least 10k branch sets. Each group of
// three paths consumes its three end sets plus seven fresh ones: three
// triangle cycles and a hub tree.
std::vector<Windmill> windmills_from_odd_model(const Graph& g, const VertexSet& a,
                                               const CliqueModel& model,
                                               const std::vector<Path>& ps, int k);

}  // namespace zeropath
