#pragma once

#include <array>
#include <vector>

#include "zeropath/graph.hpp"

namespace zeropath {

// Three arms leaving a common hub plus one odd cycle per arm. Each
// cycle shares a nontrivial arc with its own arm and avoids the other
// arms and cycles entirely, so swapping the shared arc for the rest of
// the cycle flips the arm's length parity without touching the rest of
// the structure.
struct Windmill {
    int hub = 0;
    std::array<Path, 3> arms;                 // hub first, tip last
    std::array<std::vector<int>, 3> cycles;   // closed: front() == back()
};

// Structural validation; throws std::invalid_argument on the first
// violated requirement.
void validate_windmill(const Graph& g, const Windmill& wm);

// Additionally: arm tips lie in a, no other windmill vertex does.
void validate_windmill(const Graph& g, const VertexSet& a, const Windmill& wm);

// Arm i as routed either straight (the arm itself) or through the
// complementary arc of its cycle. The two routes have opposite length
// parity and agree outside the shared arc.
Path windmill_arm_route(const Graph& g, const Windmill& wm, int i, bool complement);

// A tip-to-tip path through the hub of length divisible by four,
// obtained by combining two arm routes. Some combination always works;
// failing to find one is a std::logic_error.
Path extract_zero_path_from_windmill(const Graph& g, const Windmill& wm);

}  // namespace zeropath
