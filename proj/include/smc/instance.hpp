#pragma once

#include "smc/map.hpp"
#include "smc/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace smc {

// ---------------------------------------------------------------------------
// Problem instances.
//
// An instance is an edge-weighted graph together with a cellular embedding on
// a compact surface, a list of terminal vertices, and the terminal pairs to
// disconnect.  The embedding is a signed rotation system: for every vertex,
// the cyclic order of its incident edge-ends; for every edge, a sign that
// records whether crossing it reverses local orientation.  The surface
// (genus, orientability) is implied by this data, never stated separately.
//
// JSON exchange format:
//
//   {
//     "vertices": [0, 1, ...],
//     "edges":    [{"id": 0, "u": 0, "v": 1, "w": "2.5", "sign": 1}, ...],
//     "rotations": {"0": [ends...], "1": [ends...], ...},
//     "terminals": [0, 3, ...],
//     "pairs":    [[0, 3], ...]
//   }
//
// An edge-end is encoded as 2*edge_id + end, where end 0 is the end at u and
// end 1 the end at v (a loop contributes both ends to the same vertex's
// list).  Every end must appear in exactly one rotation, at the vertex it is
// attached to.  Weights are decimal strings (or JSON integers); binary
// floating point is rejected so that values round-trip exactly.
// ---------------------------------------------------------------------------

struct InstanceEdge {
    int id = 0;
    int u = 0;
    int v = 0;
    Rational w;
    int sign = +1;
};

struct Instance {
    std::vector<int> vertices;
    std::vector<InstanceEdge> edges;
    std::map<int, std::vector<int>> rotations;  // vertex id -> edge-ends
    std::vector<int> terminals;
    std::vector<std::pair<int, int>> pairs;
};

// Parses the JSON exchange format.  Throws std::invalid_argument with a
// description on schema violations (missing fields, float weights, ...).
// Structural validation beyond the schema happens in build_surface.
Instance parse_instance(const std::string& text);

// Canonical serialization: fixed key order, vertices/edges/rotations sorted
// by id, weights as exact decimals.  Output is byte-stable, so generated
// instances and results can be compared verbatim.
std::string format_instance(const Instance& inst);

// An instance realized as a combinatorial map, with the id translation kept
// around: the map works with dense indices, the outside world talks original
// ids.  Graph edges carry their original id in EdgeRec::base, and that field
// is inherited by subdivision, so cut sets can always be reported in the
// instance's terms no matter how much surgery happened in between.
struct Surface {
    Map map;
    std::vector<int> vertex_ids;        // dense vertex -> original id
    std::vector<int> edge_ids;          // dense edge -> original id
    std::map<int, int> vertex_index;    // original id -> dense vertex
    std::map<int, int> edge_index;      // original id -> dense edge
    std::vector<VertexId> terminals;    // dense
    std::vector<std::pair<VertexId, VertexId>> pairs;  // dense
    std::vector<int> terminal_holes;    // hole id per terminal, after carving
};

// Builds the embedded map.  Throws std::invalid_argument when the instance
// is structurally broken: an edge references an unknown vertex, a rotation
// lists an unknown edge or an end at the wrong vertex, an end is missing or
// duplicated, a weight is not positive, or terminals/pairs are inconsistent
// (unknown ids, duplicate terminals, a pair not between terminals).
Surface build_surface(const Instance& inst);

// Replaces every terminal vertex by a boundary circle: a terminal of degree
// d becomes d degree-one vertices on a new hole, one per incident edge-end.
// Curves can then reach the boundary next to any edge of the terminal but
// can never pass through it.  Fills s.terminal_holes (hole id per terminal,
// in terminal order).  The Euler characteristic that counts hole faces as
// punctures drops by one per terminal.
void carve_terminals(Surface& s);

// Euler characteristic with hole faces treated as punctures (not counted):
// 2 - g - t for a connected surface of Euler genus g with t holes.
int punctured_euler(const Map& m);

// Exact length of a drawn curve: the sum, with multiplicity, of the weights
// of the graph edges it crosses.  Crossings with rims, arcs and other curves
// cost nothing.  Subdivided graph edges count at full original weight (each
// piece keeps the whole edge's crossing cost).
Rational curve_length(const Map& m, int curve_id);

// Draws each walk into the arrangement as an auxiliary curve (kCurve) and
// returns the new curve ids.  Every crossing becomes a degree-4 vertex; the
// surface itself is untouched, so the Euler characteristic that counts all
// faces is preserved.
std::vector<int> overlay(Map& m, const std::vector<std::vector<CrossingStep>>& walks,
                         const std::vector<bool>& closed);

}  // namespace smc
