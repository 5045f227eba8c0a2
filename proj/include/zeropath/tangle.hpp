#pragma once

#include <functional>
#include <string>
#include <vector>

#include "zeropath/graph.hpp"
#include "zeropath/wall.hpp"

namespace zeropath {

// Orientation oracle for a tangle of the given order. contains(s) says
// whether the ordered pair (s.left, s.right) belongs to the tangle,
// with s.left the small side. Only separations of order < order are
// meaningful queries.
struct TangleOracle {
    int order = 0;
    std::function<bool(const Separation&)> contains;
};

// All separations of g of order <= max_order, one per unordered pair,
// enumerated boundary-first: for each candidate boundary B the
// components of g - B are split between the sides. Deterministic order.
// Throws EnumerationOverflow past a fixed work budget; requires at most
// 64 vertices.
std::vector<Separation> enumerate_separations(const Graph& g, int max_order);

// True iff s.right holds a complete horizontal path of w and s.left
// does not. For separations of order < size the two sides are checked
// to disagree; a tie means s does not orient against this wall and
// raises std::logic_error.
bool wall_tangle_contains(const Wall& w, const Separation& s);

// The order-size tangle induced by a wall: the big side is the one
// containing a complete horizontal path.
TangleOracle wall_tangle(const Wall& w);

// The tangle induced by a clique on the given vertices, of order
// ceil(2|clique|/3): the big side is the one containing the clique.
TangleOracle clique_tangle(const VertexSet& clique);

struct TangleCheck {
    bool ok = true;
    std::string axiom;                 // "orientation", "proper", "union"
    std::vector<Separation> witness;   // offending separations
};

// Verifies the tangle axioms for the oracle over every separation of g
// of order < oracle.order: each unordered pair gets exactly one
// orientation, no small side covers all of V(g), and no three small
// sides cover all vertices and edges of g. The union check runs over
// inclusion-maximal small sides only.
TangleCheck check_tangle_axioms(const Graph& g, const TangleOracle& t);

// The unique block U of g - x such that no tangle member (C, D) has
// x ∪ V(U) inside the small side C. Throws std::logic_error when no
// block or more than one block qualifies.
VertexSet large_block(const Graph& g, const TangleOracle& t, const VertexSet& x);

// True iff the host wall and the subwall orient every separation of g
// of order < sub.size() the same way: the subwall tangle is a
// truncation of the host wall tangle.
bool subwall_tangle_truncation_check(const Graph& g, const Wall& w, const Wall& sub);

}  // namespace zeropath
