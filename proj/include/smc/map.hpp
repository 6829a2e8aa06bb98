#pragma once

#include "smc/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace smc {

// ---------------------------------------------------------------------------
// Combinatorial maps.
//
// A Map is a graph cellularly embedded on a compact surface (orientable or
// not), encoded as a signed rotation system: every vertex carries a cyclic
// order of its incident edge-ends, and every edge carries a sign.  Crossing
// an edge of sign -1 reverses the local orientation; the surface is
// non-orientable exactly when some cycle has negative sign product after
// vertex switchings.  Faces are not stored but traced on demand.
//
// Conventions used throughout:
//   * Edge e owns darts 2e (from u to v) and 2e+1 (from v to u).
//   * A "signed dart" packs a dart with a traversal flag: sd = 2*dart for
//     flag +1 and 2*dart+1 for flag -1.  Face tracing walks signed darts:
//     after traversing dart d with flag s, the flag becomes s*sign(edge) and
//     the walk turns to the rotation successor (flag +1) or predecessor
//     (flag -1) of the reversed dart.  Orbits of this rule come in mirror
//     pairs (same face walked in both directions); each pair is one face.
//   * Boundary components ("holes") are ordinary faces bounded by weight-0
//     rim edges.  Curves may never cross rim edges, so holes behave exactly
//     like punctures.  Euler characteristic bookkeeping counts all faces:
//     V - E + F = 2 - g for a connected surface of Euler genus g, and the
//     spec-level identity V - E + F' = 2 - g - t holds with F' excluding the
//     t hole faces.
//   * Curves drawn on the surface (arcs of the cut system, candidate duals)
//     are materialized in the arrangement as chains of weight-0 edges; each
//     crossing with a graph edge is a degree-4 vertex.  Graph edges keep a
//     `base` id under subdivision: crossing any piece of a subdivided edge
//     costs the original edge's weight.
// ---------------------------------------------------------------------------

using VertexId = int;
using EdgeId = int;
using FaceId = int;
using Dart = int;

constexpr int kNone = -1;

inline Dart dart_of(EdgeId e, int end) { return 2 * e + end; }
inline EdgeId edge_of(Dart d) { return d >> 1; }
inline Dart reversed(Dart d) { return d ^ 1; }

// Signed darts: flag +1 <-> low bit 0.
inline int sdart(Dart d, int flag) { return 2 * d + (flag < 0 ? 1 : 0); }
inline Dart sdart_dart(int sd) { return sd >> 1; }
inline int sdart_flag(int sd) { return (sd & 1) ? -1 : +1; }

enum class EdgeKind : std::uint8_t {
    kGraph,  // weighted edge of the embedded graph; crossings cost its weight
    kRim,    // boundary marker around a hole; cannot be crossed
    kArc,    // piece of a cut-system arc; crossings cost 0 but count
    kCurve,  // piece of an auxiliary drawn curve (candidate duals etc.)
};

struct EdgeRec {
    VertexId u = kNone;      // tail of dart 2e
    VertexId v = kNone;      // tail of dart 2e+1
    int sign = +1;
    EdgeKind kind = EdgeKind::kGraph;
    Rational weight;         // crossing cost; zero for non-graph kinds
    int base = kNone;        // original instance edge id (graph kind)
    int curve = kNone;       // owning curve id (arc/curve kinds)
    bool alive = true;
};

struct FaceRec {
    std::vector<int> steps;  // canonical orbit: signed darts in trace order
    bool hole = false;
};

// A corner names the position where face f's boundary walk leaves step
// `index`: the walk traverses steps[index], arrives at a vertex, and turns
// into steps[index+1].  Chords attach at corners.
struct Corner {
    FaceId face = kNone;
    int index = kNone;
};

// A drawn curve registered with the map.  `pieces` are the weight-0 edges of
// the curve in order; `through` the vertices in order (crossing vertices and,
// for open curves, the two endpoints on rim edges).  For a closed curve
// through[0] is repeated logically, not physically.
struct CurveRec {
    EdgeKind kind = EdgeKind::kCurve;
    bool closed = false;
    bool alive = true;
    std::vector<EdgeId> pieces;
    std::vector<VertexId> through;
    // For every piece: the edge crossed at the vertex *preceding* the piece
    // (kNone for the first piece of an open curve, whose preceding vertex
    // sits on a rim).  Ids refer to the map at crossing time; the edge may
    // have been subdivided since, but its record (weight, base) stays valid.
    std::vector<EdgeId> crossed_before;
};

struct SubdivideResult {
    VertexId mid = kNone;
    EdgeId first = kNone;   // piece incident to the old u
    EdgeId second = kNone;  // piece incident to the old v
};

// One crossing of a prospective curve: cross `edge` entering from its side
// `from_side` (an index into the edge's two side slots, see side_face()).
struct CrossingStep {
    EdgeId edge = kNone;
    int from_side = 0;
};

struct CutShore {
    std::vector<EdgeId> rims;        // duplicated arc pieces, in arc order
    std::vector<VertexId> vertices;  // vertex copies, in arc order (one more
                                     // than rims when counting endpoints)
};

struct CutResult {
    // Ends on distinct holes: they merge and `hole` is the survivor.  Ends
    // on the same hole: the circle splits in two (`hole_a`/`hole_b`) when
    // the arc is two-sided relative to the boundary, or stays one circle
    // (`hole`, fresh id) when it is one-sided, as on a Moebius band.
    int hole = kNone;
    int hole_a = kNone;
    int hole_b = kNone;
    CutShore left;
    CutShore right;
};

class Map {
  public:
    Map() = default;

    // --- construction -----------------------------------------------------
    VertexId add_vertex();
    // Adds an edge; rotation links are wired later via set_rotation().
    EdgeId add_edge(VertexId u, VertexId v, int sign, EdgeKind kind,
                    const Rational& weight, int base = kNone);
    // Installs the cyclic rotation at v (darts with tail v, in cyclic order).
    void set_rotation(VertexId v, const std::vector<Dart>& darts);
    // Validates rotation wiring; throws std::runtime_error on inconsistency.
    void seal();

    // --- basic access -----------------------------------------------------
    int vertex_count() const;          // alive vertices
    int edge_count() const;            // alive edges
    int edge_slots() const { return static_cast<int>(edges_.size()); }
    int vertex_slots() const { return static_cast<int>(vertex_alive_.size()); }
    bool vertex_alive(VertexId v) const { return vertex_alive_[v]; }
    bool edge_alive(EdgeId e) const { return edges_[e].alive; }
    const EdgeRec& edge(EdgeId e) const { return edges_[e]; }
    VertexId tail(Dart d) const { return dart_tail_[d]; }
    VertexId head(Dart d) const { return dart_tail_[reversed(d)]; }
    Dart rot_next(Dart d) const { return rot_next_[d]; }
    Dart rot_prev(Dart d) const { return rot_prev_[d]; }
    // Degree counting only edges of the given kind (kNone-like: all kinds).
    int degree(VertexId v) const;
    int degree_of_kind(VertexId v, EdgeKind kind) const;
    std::vector<Dart> rotation_of(VertexId v) const;

    // --- faces ------------------------------------------------------------
    // Face structure is derived data, recomputed lazily after mutations.
    // Face ids are only stable between mutations.
    int face_count() const;
    const FaceRec& face(FaceId f) const;
    const std::vector<FaceRec>& faces() const;
    FaceId face_of_sdart(int sd) const;
    // Time reversal of a face step: traversing the edge the other way with
    // the flag the reversed walk carries there.  Mirror orbits pair with
    // canonical orbits; the sign factor matters on sign -1 edges.
    int sdart_mirror(int sd) const {
        const Dart d = sdart_dart(sd);
        return sdart(reversed(d), -sdart_flag(sd) * edges_[edge_of(d)].sign);
    }
    // Every alive edge borders exactly two sides.  Sides are intrinsic to
    // the edge, independent of the face trace: side 0 is the mirror pair
    // {(2e,+1), (2e+1,-sign)} and side 1 the complementary pair; each side
    // is traversed by exactly one canonical orbit step.  Intrinsic naming
    // keeps a side meaningful while other parts of the map mutate.
    FaceId side_face(EdgeId e, int side) const;
    Corner side_corner(EdgeId e, int side) const;
    // A side s with side_face(e, s) == f, preferring side 0; -1 if neither.
    int side_of_face(EdgeId e, FaceId f) const;
    // The corner at head(sd) named by the face step sd.  Accepts either
    // orbit representation: a retrace may flip which orbit of a face is
    // canonical, so a remembered step can reappear as its mirror.  The
    // corner after step mirror(u) in the mirrored walk is the corner before
    // u in the canonical one, hence the index shift by one.
    Corner locate_corner(int sd) const;
    // All corners at vertex v in the current trace, ordered by face then
    // position.  A corner at v is a step whose walk arrives at v.
    std::vector<Corner> corners_at(VertexId v) const;

    int hole_count() const;  // alive holes only
    // Hole handles are stable across mutations (unlike face ids).  Handles
    // of holes consumed by cuts stay allocated but dead, so iteration over
    // handles runs to hole_slots(), not hole_count().
    int hole_slots() const;
    FaceId hole_face(int hole) const;
    bool hole_alive(int hole) const;
    int hole_of_face(FaceId f) const;  // -1 if not a hole

    // --- invariants -------------------------------------------------------
    int euler_characteristic_closed() const;  // V - E + F, all faces
    int euler_genus() const;                  // 2 - (V - E + F), connected
    int boundary_count() const { return hole_count(); }
    bool is_connected() const;
    bool is_orientable() const;
    // Heavyweight structural self-check (rotations, trace partition, signs);
    // throws std::runtime_error with a description on failure.
    void check() const;

    // A coherent orientation: one sign per face, +1 to keep the canonical
    // boundary walk and -1 to flip it, such that neighbouring faces induce
    // opposite directions on every shared edge.  Two faces agree across an
    // edge exactly when their canonical steps traverse it with opposite
    // darts (flags and edge signs cancel out of this criterion, because the
    // mirror representation of a walk flips dart and flag together).
    // Empty exactly when the surface is non-orientable.
    std::optional<std::vector<int>> orient_faces() const;

    // --- curves -----------------------------------------------------------
    int curve_count() const { return static_cast<int>(curves_.size()); }
    const CurveRec& curve(int c) const { return curves_[c]; }
    // Registers an empty curve record; Pen strokes append to it.
    int new_curve(EdgeKind kind, bool closed);

    // Draws a curve given its crossing sequence against the *current*
    // arrangement.  Open curves must start and end by crossing rim edges
    // (their endpoints land on the boundary); closed curves cross no rims.
    // The same edge may not be crossed twice (each crossing subdivides it,
    // so a repeat would be ambiguous); callers re-plan against the updated
    // map when longer curves are needed.  Returns the new curve id.
    int draw_curve(const std::vector<CrossingStep>& walk, bool closed,
                   EdgeKind kind);

    // Step-by-step drawing ("pen") used by the topology enumerator.  A pen
    // holds a current corner; each step crosses one edge of the current face
    // or ends on an existing corner.  See Pen below.

    // --- surgery ----------------------------------------------------------
    SubdivideResult subdivide(EdgeId e);

    // Rewrites a signed dart of edge e into the equivalent signed dart on
    // the pieces produced by subdivide(e).  Used by callers (and internally
    // for hole anchors) to keep signed-dart handles valid across splits.
    static int remap_sdart_after_subdivide(int sd, EdgeId e,
                                           const SubdivideResult& r);

    // Inserts a chord of the given kind between two corners of the same
    // face.  The two corners must be distinct.  Returns the new edge.
    EdgeId add_chord(Corner a, Corner b, EdgeKind kind, int curve_id);

    // Creates a fresh vertex in the interior of the face of corner b and
    // connects it to b.  Returns (vertex, edge).
    std::pair<VertexId, EdgeId> add_spur(Corner b, EdgeKind kind, int curve_id);

    // Carves a hole around vertex v: v is replaced by one stub vertex per
    // incident edge-end, and the stubs are joined in rotation order by new
    // rim edges bounding a fresh hole face.  Returns the hole id.
    int carve_vertex(VertexId v);

    // Cuts the surface open along an open arc-kind curve whose endpoints lie
    // on holes.  The curve's pieces are duplicated into two rim shores and
    // the traversed holes merge (or one hole splits in two if both endpoints
    // lie on the same hole).  The curve id becomes invalid.
    CutResult cut_along(int curve_id);

    // --- bookkeeping for callers ------------------------------------------
    // Subdivision remaps edges; callers holding edge ids across mutations
    // can resolve them to the surviving pieces ((kNone, kNone) if e was
    // never subdivided).  Pieces may have been subdivided again in turn.
    std::pair<EdgeId, EdgeId> split_children(EdgeId e) const;

  private:
    struct SideSlots {
        FaceId face[2] = {kNone, kNone};
        int step[2] = {kNone, kNone};
        int count = 0;
    };

    void ensure_faces() const;
    void mark_faces_dirty() { faces_dirty_ = true; }
    int face_next(int sd) const;
    // Moves a dart to a new tail vertex, keeping the edge record in sync.
    void retarget_dart(Dart d, VertexId v);
    void remap_anchor_for_subdivide(EdgeId e, const SubdivideResult& r);
    void insert_dart_after(Dart anchor, Dart fresh);
    void insert_dart_before(Dart anchor, Dart fresh);
    void detach_dart(Dart d);
    // Flag after traversing step `index` of face f's orbit.
    int flag_after(FaceId f, int index) const;

    std::vector<EdgeRec> edges_;
    std::vector<char> vertex_alive_;
    std::vector<Dart> rot_next_;
    std::vector<Dart> rot_prev_;
    std::vector<VertexId> dart_tail_;
    std::vector<CurveRec> curves_;

    // Hole tracking: one signed dart per hole whose face is that hole.
    // Anchors are remapped through subdivisions and cuts so hole handles
    // survive arbitrary surgery.
    std::vector<int> hole_anchors_;
    std::vector<char> hole_alive_;

    std::vector<std::pair<EdgeId, EdgeId>> split_children_;

    mutable bool faces_dirty_ = true;
    mutable std::vector<FaceRec> faces_;
    mutable std::vector<FaceId> face_of_sdart_;
    mutable std::vector<SideSlots> sides_;
    mutable std::vector<int> hole_face_cache_;

    bool sealed_ = false;

    friend class Pen;
};

// A pen draws a connected curve piece by piece.  It is the primitive behind
// the candidate-topology enumerator: every step is validated against the
// live arrangement, so crossing sequences are never ambiguous.
class Pen {
  public:
    // Starts at a fresh vertex placed in the interior of face f.  The face
    // handle is consumed by the pen's first operation; the map must not be
    // mutated between construction and that operation.
    Pen(Map& m, FaceId f, EdgeKind kind, int curve_id);
    // Starts at an existing corner (e.g. a previously drawn vertex).
    Pen(Map& m, Corner at, EdgeKind kind, int curve_id);

    // Crosses `edge` from its side facing the pen's current face; the pen
    // moves to the face on the other side.  When both sides of the edge face
    // the current face the caller must pass the side explicitly.  Returns
    // the crossing vertex.
    VertexId cross(EdgeId edge, int from_side = -1);
    // Ends the stroke on an existing corner of the current face.
    void finish_at(Corner c);
    // Ends the stroke at the stroke's own starting vertex (closed stroke).
    void finish_at_start();

    VertexId start_vertex() const { return start_vertex_; }
    VertexId position_vertex() const { return last_vertex_; }
    FaceId current_face();

  private:
    Corner current_corner();
    Map& map_;
    EdgeKind kind_;
    int curve_id_;
    VertexId start_vertex_ = kNone;
    VertexId last_vertex_ = kNone;
    // The pen's position, encoded robustly as the in-step signed dart of its
    // current corner (resolved to a Corner against the live trace on use).
    // kNone while the pen still floats at a fresh unattached start vertex,
    // in which case float_face_ holds the start face.
    int corner_sd_ = kNone;
    FaceId float_face_ = kNone;
    EdgeId pending_cross_ = kNone;
    bool done_ = false;
};

}  // namespace smc
