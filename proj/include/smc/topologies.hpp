#pragma once

#include "smc/homotopy.hpp"

#include <string>
#include <utility>
#include <vector>

namespace smc {

// Candidate shapes for a short multicut dual.  A candidate is an abstract
// graph drawn on the carved surface, recorded purely combinatorially by its
// position relative to the arc system: how often each edge crosses each arc
// and in which order, plus the cyclic order of edge ends around each vertex.
// Weights never enter; the same candidate covers every drawing isotopic to
// it.  Degree-two vertices carry no information and are suppressed, so a
// vertex of a candidate has degree at least three, and closed curves through
// no vertex at all are kept separately as "free cycles".

// One edge of a candidate.  `word` lists the arc crossings in u->v order
// (letters as in homotopy.hpp: +(a+1) crosses arc a left to right).  Loops
// have u == v; the word direction is still meaningful and tied to end 0.
struct TopoEdge {
    int u = kNone, v = kNone;
    Word word;
};

struct Topology {
    int vertices = 0;
    std::vector<TopoEdge> edges;
    // Per vertex, the cyclic order of incident edge ends as (edge index,
    // end) with end 0 at u and 1 at v.  A loop contributes both ends.
    std::vector<std::vector<std::pair<int, int>>> rotation;
    // Vertexless closed curves, one crossing word each, canonical up to
    // rotation and inversion.
    std::vector<Word> free_cycles;
    std::vector<int> arc_crossings;  // total crossings per arc
    int bounds_used = 0;             // kappa the enumeration ran with
    int face_count = 0;              // faces of the drawing on the carved surface
    std::string canon;               // see topology_canon()
    // Edges in the budget sense: graph edges plus free cycles.
    int edge_budget() const {
        return static_cast<int>(edges.size() + free_cycles.size());
    }
};

// The common size budget: vertices, edges and per-arc crossings of a
// candidate are all bounded by kappa * (genus + terminals).
int size_budget(const ArcSystem& sys, int kappa);

// A label-independent canonical form: free cycles normalised and sorted,
// and the graph part encoded by a rotation-driven breadth-first traversal
// minimised over all starting edge ends.  Two Topology values describe the
// same drawing (up to isotopy of the drawing, with the arc system held
// fixed) exactly when their canonical forms are equal.
std::string topology_canon(const Topology& t);

// Streams every candidate within the budget, deduplicated by canonical
// form, in a fixed deterministic order.  Enumeration happens in the disk:
// a candidate crossing arc `a` exactly c_a times meets the disk boundary in
// matched left/right port pairs, the part inside the disk is a non-crossing
// plane forest on those ports, and regluing the shores turns the forest
// into the candidate.  A candidate survives only if every face of its
// drawing on the carved surface contains a terminal.  The empty candidate
// (whole surface one face) is always included.
//
// Candidates appear in crossing-minimal position: a drawing with a bigon
// against an arc is isotopic — across the arc, leaving the abstract graph,
// its rotations and its faces untouched — to a drawing with two crossings
// fewer, so only representatives with reduced crossing words are streamed.
std::vector<Topology> enumerate_candidate_topologies(const ArcSystem& sys,
                                                     int kappa);

// Independent re-enumeration used to cross-check the primary generator:
// different recursion anchoring and visiting order, deduplication by
// canonical-form hashing instead of by construction.  Returns the same
// multiset (sorted by canonical form).
std::vector<Topology> enumerate_candidate_topologies_crosscheck(
    const ArcSystem& sys, int kappa);

// All cyclically reduced closed crossing words with at most `per_arc` letters
// of each arc, excluding the empty (contractible) word, canonical up to
// rotation and inversion, in a fixed deterministic order.
std::vector<Word> enumerate_cycle_words(const ArcSystem& sys, int per_arc);

// The layout stream for pure cycles: per-arc bound kappa * (genus + t).
std::vector<Word> enumerate_cycle_layouts(const ArcSystem& sys, int kappa);

}  // namespace smc
