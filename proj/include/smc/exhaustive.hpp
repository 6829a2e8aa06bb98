#pragma once

#include "smc/topologies.hpp"

#include <utility>
#include <vector>

namespace smc {

// Cycles of a candidate and the crossing relation between them.  Two cycles
// drawn on a surface can always be pushed off each other locally; they are
// forced to intersect exactly when, at some shared piece, the four emanating
// strands alternate around it.  That combinatorial test only reads the
// candidate's rotations, so families of pairwise non-crossing cycles depend
// on the candidate alone, never on edge weights.

struct CycleInTopology {
    // Either one of the candidate's free cycles...
    bool free_loop = false;
    int free_index = kNone;
    // ...or a closed walk without vertex repetition through the graph part:
    // steps[i] traverses an edge (dir +1 from u to v), starting at
    // vertices[i].  Stored anchored: the smallest edge comes first and is
    // traversed forward, which fixes one representative per cycle up to
    // rotation and reversal.
    std::vector<std::pair<int, int>> steps;
    std::vector<int> vertices;

    int length() const {
        return free_loop ? 1 : static_cast<int>(steps.size());
    }
    // The induced closed crossing word (unreduced).
    Word word(const Topology& t) const;
};

// All cycles of the candidate, each exactly once: free cycles first, then
// graph cycles grouped by their anchor edge in increasing order.
std::vector<CycleInTopology> cycles_of(const Topology& t);

// Whether two distinct cycles are forced to cross: true exactly when at
// some connected component of their intersection the four emanating
// strands alternate in the rotation around the (contracted) component.
bool cycles_cross(const Topology& t, const CycleInTopology& c1,
                  const CycleInTopology& c2);

// The greedy family: cycles in a fixed order (shorter first, then
// lexicographic by edge ids), each added exactly when it crosses no cycle
// added before it.  The result is pairwise non-crossing and maximal: every
// cycle left out crosses some member.
std::vector<CycleInTopology> exhaustive_family(const Topology& t);

}  // namespace smc
