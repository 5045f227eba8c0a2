#pragma once

#include <vector>

#include "zeropath/graph.hpp"
#include "zeropath/modpath.hpp"

namespace zeropath {

struct DualityReport {
  int packing_number = 0;           // ν
  std::vector<Path> packing_witness;
  int covering_number = 0;          // τ
  VertexSet covering_witness;
  long long path_family_size = 0;   // qualifying A-paths enumerated
  bool exact = false;               // solvers ran to completion
};

// Maximum number of pairwise vertex-disjoint qualifying A-paths, with the
// lexicographically least witness (compared as index sequences into the
// canonical enumeration order). Exact branch-and-bound over the enumerated
// family; propagates EnumerationOverflow.
std::pair<int, std::vector<Path>> max_packing(const Graph& g, const VertexSet& a,
                                              const ResidueSpec& spec,
                                              long long cap = 1000000);

// Minimum vertex set meeting every qualifying A-path, lexicographically least
// witness among optima. Verified post hoc: g - witness has no qualifying
// A-path.
std::pair<int, VertexSet> min_hitting_set(const Graph& g, const VertexSet& a,
                                          const ResidueSpec& spec,
                                          long long cap = 1000000);

// Both solvers plus the weak-duality assertion ν ≤ τ.
DualityReport duality_report(const Graph& g, const VertexSet& a,
                             const ResidueSpec& spec, long long cap = 1000000);

enum class SeparationClass { LeftOnly, RightOnly, Both, Neither };

// Which of G[A ∪ C], G[A ∪ D] contains a qualifying A-path, for a separation
// (C, D) of g - a.
SeparationClass classify_separation(const Graph& g, const VertexSet& a,
                                    const ResidueSpec& spec, const Separation& s);

}  // namespace zeropath
