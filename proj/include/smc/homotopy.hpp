#pragma once

#include "smc/dual.hpp"
#include "smc/instance.hpp"
#include "smc/map.hpp"

#include <array>
#include <map>
#include <vector>

namespace smc {

// Cutting the carved surface open along a system of disjoint arcs turns it
// into a disk.  Closed curves and paths on the surface are then described by
// the sequence of arcs they cross -- a word in the free group whose
// generators are the arcs -- and homotopy questions reduce to shortest-path
// searches in "regions": stacks of disk copies glued along arc shores.  This
// header provides the arc system construction, the region builders, and the
// shortest-path/cycle searches used by the rest of the pipeline.

// --- words -----------------------------------------------------------------

// Arc crossings are recorded as nonzero integers: +(a+1) crosses arc a from
// its left shore to its right shore, -(a+1) the other way.
using Letter = int;
using Word = std::vector<Letter>;

inline int letter_arc(Letter l) { return (l > 0 ? l : -l) - 1; }
inline Letter letter_of(int arc, int dir) { return dir >= 0 ? arc + 1 : -(arc + 1); }

// Free reduction (cancel adjacent inverse pairs) and cyclic reduction
// (additionally cancel inverse first/last letters).  A path word is
// null-homotopic rel endpoints exactly when reduce_word is empty; a cycle
// word is contractible exactly when cyclic_reduce_word is empty.
Word reduce_word(const Word& w);
Word cyclic_reduce_word(const Word& w);

// --- arc system ------------------------------------------------------------

struct ArcRec {
    Rational length;                 // total weight of graph edges crossed
    std::vector<CrossingStep> plan;  // crossing walk, in ids of draw time
    // Shores in the disk, index-aligned: left.rims[i] and right.rims[i] are
    // the two copies of the arc's i-th piece, and re-gluing them recovers
    // the surface.  vertices[] run in arc order on both sides.
    CutShore left, right;
    // Interior disk face flanking each shore rim (slot i is the stretch of
    // the arc between its i-th and (i+1)-th crossings).
    std::vector<FaceId> left_face, right_face;
    // +1 when re-gluing this arc alone preserves the disk's orientation,
    // -1 when it reverses it.  A cycle word yields a Moebius-band region
    // exactly when the product of its letters' flips is -1.
    int flip = +1;
    int slots() const { return static_cast<int>(left.rims.size()); }
};

struct ArcSystem {
    // The carved surface cut open along every arc: genus zero, exactly one
    // hole, orientable.  Holders must not mutate it -- face ids are baked
    // into the records below.
    Map disk;
    std::vector<ArcRec> arcs;
    std::vector<int> face_orientation;  // per disk face, a coherent +-1
    // Boundary labels: every rim of the disk is either a piece of a carved
    // terminal's hole (-> terminal index) or one shore slot of one arc
    // (-> {arc, side, slot} with side 0 = left).
    std::map<EdgeId, int> rim_terminal;
    std::map<EdgeId, std::array<int, 3>> shore_slot;
    int hole = kNone;  // the single surviving hole id of `disk`
    int genus = 0;     // Euler genus of the carved surface
    int terminal_count = 0;
};

// Builds a short system of arcs greedily: candidates are dual geodesics
// between hole pairs and dual geodesic loops through each edge; each round
// the shortest candidate that does not separate the current surface is cut.
// The input must be carved (terminal_holes filled in).
ArcSystem greedy_system_of_arcs(const Surface& s);

// One entry of the disk's boundary circle, in hole-walk order.
struct BoundarySeg {
    EdgeId rim = kNone;
    bool is_shore = false;
    int terminal = kNone;            // when !is_shore
    int arc = kNone, side = 0, slot = 0;  // when is_shore
};
std::vector<BoundarySeg> boundary_cycle(const ArcSystem& sys);

// --- regions ---------------------------------------------------------------

// A region is a set of disk copies glued along arc shores: crossing gluing
// {from,to,letter} moves from copy `from` to copy `to` while crossing the
// letter's arc in the letter's direction.
struct Gluing {
    int from = 0, to = 0;
    Letter letter = 0;
};

enum class RegionKind { universal, annulus, moebius };

struct Region {
    RegionKind kind = RegionKind::universal;
    int copies = 0;
    std::vector<Gluing> gluings;
    Word word;                     // defining word (cyclically reduced for
                                   // annulus/moebius regions)
    std::vector<Word> copy_words;  // universal regions: reduced word per copy
};

// The part of the universal cover a path with crossing word `w` can see:
// one copy per prefix state of the running reduction of w, glued along the
// state-tree edges.  Copy 0 is the empty state; a freely reduced word of k
// letters yields a path of k+1 copies.
Region relevant_region_universal(const ArcSystem& sys, const Word& w);

// The cyclic region of a noncontractible cycle word: copies 0..m-1 for the
// cyclically reduced word l_1..l_m, copy j glued to copy (j+1) mod m along
// l_{j+1}.  Kind is moebius when the flip product of the letters is -1.
// Throws std::invalid_argument on contractible input.
Region annular_region(const ArcSystem& sys, const Word& w);

// --- region search graphs --------------------------------------------------

// One move of a path drawn in a region (copies omitted; the node sequence of
// a PathResult carries them).  Graph moves cross an interior disk edge;
// arc moves cross a gluing at a specific shore slot.
struct RegionStep {
    bool is_arc = false;
    EdgeId edge = kNone;  // graph move: disk edge crossed ...
    int from_side = -1;   // ... entered from this side
    int arc = kNone;      // arc move: arc index ...
    int slot = kNone;     // ... at this shore slot ...
    int dir = 0;          // ... +1 left->right, -1 right->left
    int gluing = kNone;   // region gluing index (kNone for caller input)
    Letter letter() const { return letter_of(arc, dir); }
};

// The dual search graph of a region: one node per (copy, interior disk
// face), an edge of the crossed weight per interior disk edge and copy, and
// weight-0 arc edges per gluing and shore slot.  `tags[t]` decodes the
// search edge carrying tag t back into a RegionStep.
struct RegionGraph {
    SearchGraph graph;
    std::vector<RegionStep> tags;
    int copies = 0;
    std::vector<int> dense_of_face;   // disk face -> interior index, -1 hole
    std::vector<FaceId> face_of_dense;
    int faces_per_copy = 0;
    int node_of(int copy, FaceId f) const;
    std::pair<int, FaceId> copy_face(int node) const;
};

RegionGraph build_region_graph(const ArcSystem& sys, const Region& r);

// --- search results --------------------------------------------------------

struct PathResult {
    Rational length;
    int arc_crossings = 0;
    bool closed = false;
    std::vector<RegionStep> steps;
    // Visited (copy, face) pairs, one more than steps.  For closed results
    // the first and last entries are the same face in copies identified by
    // the region's deck transformation.
    std::vector<std::pair<int, FaceId>> nodes;
    Word word() const;
    std::vector<EdgeId> crossed_edges() const;  // graph moves only, in order
};

// A path on the surface described against the disk: a start face and the
// ordered moves it makes.  Arc moves use RegionStep.arc/slot/dir; gluing
// indices are ignored.
struct CoverWalk {
    FaceId start = kNone;
    std::vector<RegionStep> steps;
};

CoverWalk to_cover_walk(const PathResult& p);

// The unreduced crossing word of a walk: one letter per arc step.
Word walk_word(const CoverWalk& walk);

// Shortest path homotopic (rel endpoint faces) to the given walk: a
// lexicographic Dijkstra across the walk's relevant region from the start
// face in the empty-state copy to the end face in the final-state copy.
PathResult shortest_homotopic_path(const ArcSystem& sys, const CoverWalk& walk);

// Shortest cycle freely homotopic to the (noncontractible) cycle word:
// winding-one searches in the word's annular region, or fiber-to-fiber
// searches in the orientation double cover for a Moebius word.
struct CycleSearch {
    Region region;
    PathResult best;
};
CycleSearch shortest_homotopic_cycle(const ArcSystem& sys, const Word& w);

// Shortest cycle freely homotopic to the region's word among those passing
// through the given (copy, face) of the region.  Annulus regions only.
PathResult shortest_cycle_through_face(const ArcSystem& sys, const Region& r,
                                       int copy, FaceId face);

}  // namespace smc
