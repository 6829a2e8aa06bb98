#include "smc/map.hpp"

#include "doctest.h"

#include <stdexcept>
#include <vector>

using namespace smc;

namespace {

Rational one() { return Rational(1); }

// Single vertex with one loop of the given sign: a sphere for +1, a
// projective plane for -1.
Map make_loop(int sign) {
    Map m;
    const VertexId v = m.add_vertex();
    m.add_edge(v, v, sign, EdgeKind::kGraph, one(), 0);
    m.set_rotation(v, {0, 1});
    m.seal();
    return m;
}

Map make_k2() {
    Map m;
    const VertexId u = m.add_vertex();
    const VertexId v = m.add_vertex();
    m.add_edge(u, v, +1, EdgeKind::kGraph, one(), 0);
    m.set_rotation(u, {0});
    m.set_rotation(v, {1});
    m.seal();
    return m;
}

// Two loops a, b at one vertex interleaved as (a, b, a', b'): a torus when
// both signs are +1, a Klein bottle when b is -1.
Map make_two_loops(int sign_b) {
    Map m;
    const VertexId v = m.add_vertex();
    m.add_edge(v, v, +1, EdgeKind::kGraph, one(), 0);
    m.add_edge(v, v, sign_b, EdgeKind::kGraph, one(), 1);
    m.set_rotation(v, {0, 2, 1, 3});
    m.seal();
    return m;
}

// K4 with its planar rotation system (triangle 0-1-2, vertex 3 inside).
Map make_tetrahedron() {
    Map m;
    for (int i = 0; i < 4; ++i) m.add_vertex();
    m.add_edge(0, 1, +1, EdgeKind::kGraph, one(), 0);  // darts 0,1
    m.add_edge(0, 2, +1, EdgeKind::kGraph, one(), 1);  // darts 2,3
    m.add_edge(0, 3, +1, EdgeKind::kGraph, one(), 2);  // darts 4,5
    m.add_edge(1, 2, +1, EdgeKind::kGraph, one(), 3);  // darts 6,7
    m.add_edge(1, 3, +1, EdgeKind::kGraph, one(), 4);  // darts 8,9
    m.add_edge(2, 3, +1, EdgeKind::kGraph, one(), 5);  // darts 10,11
    m.set_rotation(0, {0, 4, 2});
    m.set_rotation(1, {6, 8, 1});
    m.set_rotation(2, {3, 10, 7});
    m.set_rotation(3, {11, 5, 9});
    m.seal();
    return m;
}

// Two vertices joined by three parallel edges, embedded in the sphere.
Map make_theta() {
    Map m;
    const VertexId u = m.add_vertex();
    const VertexId v = m.add_vertex();
    m.add_edge(u, v, +1, EdgeKind::kGraph, one(), 0);  // darts 0,1
    m.add_edge(u, v, +1, EdgeKind::kGraph, one(), 1);  // darts 2,3
    m.add_edge(u, v, +1, EdgeKind::kGraph, one(), 2);  // darts 4,5
    m.set_rotation(u, {2, 0, 4});
    m.set_rotation(v, {1, 3, 5});
    m.seal();
    return m;
}

int interior_face_count(const Map& m) {
    int n = 0;
    for (const FaceRec& f : m.faces()) n += f.hole ? 0 : 1;
    return n;
}

// The face bordered by both edges (used to name the bigons of the theta).
FaceId face_between(const Map& m, EdgeId a, EdgeId b) {
    for (FaceId f = 0; f < m.face_count(); ++f) {
        if (m.face(f).hole) continue;
        if (m.side_of_face(a, f) >= 0 && m.side_of_face(b, f) >= 0) return f;
    }
    FAIL("no face between the given edges");
    return kNone;
}

// The rim edge bounded by the given hole on one side and `inside` on the
// other.
EdgeId rim_toward(const Map& m, int hole, FaceId inside) {
    const FaceId hf = m.hole_face(hole);
    for (EdgeId e = 0; e < m.edge_slots(); ++e) {
        if (!m.edge_alive(e) || m.edge(e).kind != EdgeKind::kRim) continue;
        const FaceId f0 = m.side_face(e, 0);
        const FaceId f1 = m.side_face(e, 1);
        if ((f0 == hf && f1 == inside) || (f1 == hf && f0 == inside)) return e;
    }
    FAIL("no rim between hole and face");
    return kNone;
}

}  // namespace

TEST_CASE("sphere from a single positive loop") {
    Map m = make_loop(+1);
    CHECK(m.vertex_count() == 1);
    CHECK(m.edge_count() == 1);
    CHECK(m.face_count() == 2);
    CHECK(m.euler_characteristic_closed() == 2);
    CHECK(m.euler_genus() == 0);
    CHECK(m.is_orientable());
    CHECK(m.is_connected());
    m.check();
}

TEST_CASE("projective plane from a single negative loop") {
    Map m = make_loop(-1);
    CHECK(m.face_count() == 1);
    CHECK(m.euler_characteristic_closed() == 1);
    CHECK(m.euler_genus() == 1);
    CHECK(!m.is_orientable());
    m.check();
}

TEST_CASE("single edge spans a sphere") {
    Map m = make_k2();
    CHECK(m.face_count() == 1);
    CHECK(m.euler_characteristic_closed() == 2);
    CHECK(m.euler_genus() == 0);
    m.check();
}

TEST_CASE("torus and Klein bottle from two interleaved loops") {
    Map torus = make_two_loops(+1);
    CHECK(torus.face_count() == 1);
    CHECK(torus.euler_characteristic_closed() == 0);
    CHECK(torus.euler_genus() == 2);
    CHECK(torus.is_orientable());
    torus.check();

    Map klein = make_two_loops(-1);
    CHECK(klein.euler_characteristic_closed() == 0);
    CHECK(klein.euler_genus() == 2);
    CHECK(!klein.is_orientable());
    klein.check();
}

TEST_CASE("face orientations exist exactly on orientable maps") {
    const Map fixtures[] = {make_loop(+1),      make_loop(-1), make_k2(),
                            make_two_loops(+1), make_two_loops(-1),
                            make_tetrahedron(), make_theta()};
    for (const Map& m : fixtures) {
        const auto orient = m.orient_faces();
        CHECK(orient.has_value() == m.is_orientable());
        if (orient) {
            REQUIRE(orient->size() == static_cast<std::size_t>(m.face_count()));
            for (int o : *orient) CHECK((o == +1 || o == -1));
        }
    }
}

TEST_CASE("tetrahedron traces four triangles") {
    Map m = make_tetrahedron();
    CHECK(m.face_count() == 4);
    CHECK(m.euler_characteristic_closed() == 2);
    CHECK(m.euler_genus() == 0);
    CHECK(m.is_orientable());
    for (FaceId f = 0; f < 4; ++f) {
        CHECK(m.face(f).steps.size() == 3);
    }
    for (VertexId v = 0; v < 4; ++v) {
        CHECK(m.degree(v) == 3);
        CHECK(m.rotation_of(v).size() == 3);
        CHECK(m.corners_at(v).size() == 3);
    }
    m.check();
}

TEST_CASE("theta graph traces three bigons") {
    Map m = make_theta();
    CHECK(m.face_count() == 3);
    CHECK(m.euler_characteristic_closed() == 2);
    for (FaceId f = 0; f < 3; ++f) {
        CHECK(m.face(f).steps.size() == 2);
    }
    m.check();
}

TEST_CASE("edge sides are coherent") {
    Map m = make_tetrahedron();
    for (EdgeId e = 0; e < m.edge_slots(); ++e) {
        const FaceId f0 = m.side_face(e, 0);
        const FaceId f1 = m.side_face(e, 1);
        CHECK(f0 != f1);  // no tetrahedron edge has one face on both sides
        CHECK(m.side_of_face(e, f0) == 0);
        CHECK(m.side_of_face(e, f1) == 1);
        // The recorded corner really traverses e.
        for (int s = 0; s < 2; ++s) {
            const Corner c = m.side_corner(e, s);
            const int sd = m.face(c.face).steps[c.index];
            CHECK(edge_of(sdart_dart(sd)) == e);
        }
    }
    Map k2 = make_k2();
    CHECK(k2.side_face(0, 0) == k2.side_face(0, 1));
}

TEST_CASE("subdivision preserves the surface and the base id") {
    Map m = make_tetrahedron();
    const SubdivideResult r = m.subdivide(0);
    CHECK(m.vertex_count() == 5);
    CHECK(m.edge_count() == 7);
    CHECK(m.face_count() == 4);
    CHECK(m.euler_characteristic_closed() == 2);
    CHECK(!m.edge_alive(0));
    CHECK(m.edge(r.first).base == 0);
    CHECK(m.edge(r.second).base == 0);
    CHECK(m.edge(r.first).weight == one());
    CHECK(m.degree(r.mid) == 2);
    CHECK(m.split_children(0) == std::pair<EdgeId, EdgeId>(r.first, r.second));
    m.check();
}

TEST_CASE("chords split a face") {
    Map m = make_tetrahedron();
    const int faces_before = m.face_count();
    const FaceId f = m.side_face(0, 0);
    const EdgeId chord = m.add_chord(Corner{f, 0}, Corner{f, 1},
                                     EdgeKind::kCurve, kNone);
    CHECK(m.edge(chord).kind == EdgeKind::kCurve);
    CHECK(m.face_count() == faces_before + 1);
    CHECK(m.euler_characteristic_closed() == 2);
    m.check();
}

TEST_CASE("spurs keep the face count") {
    Map m = make_tetrahedron();
    const int faces_before = m.face_count();
    const FaceId f = m.side_face(0, 0);
    const auto [w, spur] = m.add_spur(Corner{f, 0}, EdgeKind::kCurve, kNone);
    CHECK(m.degree(w) == 1);
    CHECK(m.edge_alive(spur));
    CHECK(m.face_count() == faces_before);
    CHECK(m.euler_characteristic_closed() == 2);
    m.check();
}

TEST_CASE("carving a degree-3 vertex opens a rim-bounded hole") {
    Map m = make_tetrahedron();
    const int hole = m.carve_vertex(3);
    CHECK(m.hole_count() == 1);
    CHECK(m.hole_alive(hole));
    CHECK(m.vertex_count() == 6);
    CHECK(m.edge_count() == 9);
    CHECK(m.face_count() == 5);
    CHECK(m.euler_characteristic_closed() == 2);
    CHECK(interior_face_count(m) == 4);
    // V - E + F' = 2 - g - t with F' the interior faces.
    CHECK(m.vertex_count() - m.edge_count() + interior_face_count(m) == 1);
    const FaceRec& hf = m.face(m.hole_face(hole));
    CHECK(hf.hole);
    CHECK(hf.steps.size() == 3);
    m.check();
}

TEST_CASE("carving a degree-1 vertex wraps it in a rim loop") {
    Map m = make_k2();
    const int hole = m.carve_vertex(0);
    CHECK(m.hole_count() == 1);
    CHECK(m.vertex_count() == 2);
    CHECK(m.edge_count() == 2);
    CHECK(m.euler_characteristic_closed() == 2);
    CHECK(m.face(m.hole_face(hole)).steps.size() == 1);
    m.check();
}

TEST_CASE("hole handles survive rim subdivision") {
    Map m = make_k2();
    const int hole = m.carve_vertex(0);
    EdgeId rim = kNone;
    for (EdgeId e = 0; e < m.edge_slots(); ++e) {
        if (m.edge_alive(e) && m.edge(e).kind == EdgeKind::kRim) rim = e;
    }
    REQUIRE(rim != kNone);
    m.subdivide(rim);
    CHECK(m.hole_count() == 1);
    CHECK(m.hole_alive(hole));
    CHECK(m.face(m.hole_face(hole)).steps.size() == 2);
    m.check();
}

TEST_CASE("carving both theta vertices yields an annulus") {
    Map m = make_theta();
    const int hu = m.carve_vertex(0);
    const int hv = m.carve_vertex(1);
    CHECK(m.hole_count() == 2);
    CHECK(m.vertex_count() == 6);
    CHECK(m.edge_count() == 9);
    CHECK(m.face_count() == 5);
    CHECK(m.euler_characteristic_closed() == 2);
    CHECK(m.vertex_count() - m.edge_count() + interior_face_count(m) == 0);
    CHECK(m.hole_face(hu) != m.hole_face(hv));
    m.check();
}

TEST_CASE("an arc between distinct holes cuts the annulus into a disk") {
    Map m = make_theta();
    const int hu = m.carve_vertex(0);
    const int hv = m.carve_vertex(1);
    const FaceId f01 = face_between(m, 0, 1);
    const EdgeId ru = rim_toward(m, hu, f01);
    const EdgeId rv = rim_toward(m, hv, f01);
    const int su = m.side_of_face(ru, m.hole_face(hu));
    const int sv = m.side_of_face(rv, f01);
    const int arc = m.draw_curve({{ru, su}, {rv, sv}}, false, EdgeKind::kArc);
    CHECK(m.curve(arc).pieces.size() == 1);
    CHECK(m.curve(arc).through.size() == 2);

    const CutResult cut = m.cut_along(arc);
    CHECK(cut.hole == hu);
    CHECK(cut.hole_a == kNone);
    CHECK(m.hole_count() == 1);
    CHECK(m.is_connected());
    CHECK(m.euler_characteristic_closed() == 2);
    CHECK(m.euler_genus() == 0);
    CHECK(cut.left.rims.size() == 1);
    CHECK(cut.left.vertices.size() == 2);
    CHECK(!m.curve(arc).alive);
    m.check();
}

TEST_CASE("an arc crossing a graph edge severs it at the cut") {
    Map m = make_theta();
    const int hu = m.carve_vertex(0);
    const int hv = m.carve_vertex(1);
    const FaceId f01 = face_between(m, 0, 1);
    const FaceId f12 = face_between(m, 1, 2);
    const EdgeId ru = rim_toward(m, hu, f01);
    const EdgeId rv = rim_toward(m, hv, f12);
    const std::vector<CrossingStep> walk = {
        {ru, m.side_of_face(ru, m.hole_face(hu))},
        {1, m.side_of_face(1, f01)},
        {rv, m.side_of_face(rv, f12)},
    };
    const int arc = m.draw_curve(walk, false, EdgeKind::kArc);
    CHECK(m.curve(arc).pieces.size() == 2);
    const VertexId x = m.curve(arc).through[1];
    CHECK(m.degree(x) == 4);
    CHECK(m.curve(arc).crossed_before[1] == 1);

    const auto [half_u, half_v] = m.split_children(1);
    const CutResult cut = m.cut_along(arc);
    CHECK(m.hole_count() == 1);
    CHECK(m.euler_characteristic_closed() == 2);
    CHECK(m.euler_genus() == 0);
    // The crossed edge's halves survive, ending on opposite shores.
    CHECK(m.edge_alive(half_u));
    CHECK(m.edge_alive(half_v));
    const VertexId xl = cut.left.vertices[1];
    const VertexId xr = cut.right.vertices[1];
    const auto touches = [&m](EdgeId e, VertexId v) {
        return m.edge(e).u == v || m.edge(e).v == v;
    };
    CHECK((touches(half_u, xl) || touches(half_u, xr)));
    CHECK((touches(half_v, xl) || touches(half_v, xr)));
    CHECK(touches(half_u, xl) == touches(half_v, xr));
    m.check();
}

TEST_CASE("a closed curve around the annulus crosses each strand once") {
    Map m = make_theta();
    m.carve_vertex(0);
    m.carve_vertex(1);
    const FaceId f01 = face_between(m, 0, 1);
    const FaceId f12 = face_between(m, 1, 2);
    const FaceId f20 = face_between(m, 2, 0);
    const std::vector<CrossingStep> ring = {
        {0, m.side_of_face(0, f20)},
        {1, m.side_of_face(1, f01)},
        {2, m.side_of_face(2, f12)},
    };
    const int chi = m.euler_characteristic_closed();
    const int c = m.draw_curve(ring, true, EdgeKind::kCurve);
    CHECK(m.curve(c).closed);
    CHECK(m.curve(c).pieces.size() == 3);
    CHECK(m.curve(c).through.size() == 3);
    CHECK(m.euler_characteristic_closed() == chi);
    for (VertexId x : m.curve(c).through) {
        CHECK(m.degree(x) == 4);
        CHECK(m.degree_of_kind(x, EdgeKind::kCurve) == 2);
    }
    m.check();
}

TEST_CASE("a pen stroke can draw the same ring step by step") {
    Map m = make_theta();
    m.carve_vertex(0);
    m.carve_vertex(1);
    const FaceId f01 = face_between(m, 0, 1);
    const int chi = m.euler_characteristic_closed();
    const int c = m.new_curve(EdgeKind::kCurve, false);
    Pen pen(m, f01, EdgeKind::kCurve, c);
    pen.cross(1);
    pen.cross(2);
    pen.cross(0);
    pen.finish_at_start();
    CHECK(m.curve(c).pieces.size() == 4);
    CHECK(m.curve(c).through.size() == 5);
    CHECK(m.curve(c).through.front() == m.curve(c).through.back());
    CHECK(m.degree(pen.start_vertex()) == 2);
    CHECK(m.euler_characteristic_closed() == chi);
    m.check();
}

TEST_CASE("arcs on a Moebius band: essential cuts unwind, parallel cuts split") {
    Map m = make_loop(-1);
    const int hole = m.carve_vertex(0);
    CHECK(m.hole_count() == 1);
    CHECK(m.euler_characteristic_closed() == 1);
    CHECK(!m.is_orientable());
    CHECK(m.vertex_count() == 2);
    CHECK(m.edge_count() == 3);
    CHECK(m.face_count() == 2);

    // The single interior face has the graph edge on both of its sides.
    FaceId inside = kNone;
    for (FaceId f = 0; f < m.face_count(); ++f) {
        if (!m.face(f).hole) inside = f;
    }
    CHECK(m.side_face(0, 0) == inside);
    CHECK(m.side_face(0, 1) == inside);

    std::vector<EdgeId> rims;
    for (EdgeId e = 0; e < m.edge_slots(); ++e) {
        if (m.edge_alive(e) && m.edge(e).kind == EdgeKind::kRim) rims.push_back(e);
    }
    REQUIRE(rims.size() == 2);

    SUBCASE("a crosscut between the rims leaves a single disk") {
        const std::vector<CrossingStep> walk = {
            {rims[0], m.side_of_face(rims[0], m.hole_face(hole))},
            {rims[1], m.side_of_face(rims[1], inside)},
        };
        const int arc = m.draw_curve(walk, false, EdgeKind::kArc);
        const CutResult cut = m.cut_along(arc);
        // One-sided case: the boundary stays a single circle.
        CHECK(cut.hole != kNone);
        CHECK(cut.hole_a == kNone);
        CHECK(m.hole_count() == 1);
        CHECK(m.euler_characteristic_closed() == 2);
        CHECK(m.is_connected());
        CHECK(m.is_orientable());
        CHECK(m.euler_genus() == 0);
        m.check();
    }

    SUBCASE("a rim-to-rim arc through the core edge is boundary-parallel") {
        // Crossing the core edge once and landing on the other rim always
        // cuts off a disk, leaving a smaller Moebius band.
        const std::vector<CrossingStep> walk = {
            {rims[0], m.side_of_face(rims[0], m.hole_face(hole))},
            {0, 0},
            {rims[1], m.side_of_face(rims[1], inside)},
        };
        const int arc = m.draw_curve(walk, false, EdgeKind::kArc);
        const CutResult cut = m.cut_along(arc);
        CHECK(cut.hole == kNone);
        CHECK(cut.hole_a != kNone);
        CHECK(cut.hole_b != kNone);
        CHECK(m.hole_count() == 2);
        CHECK(m.euler_characteristic_closed() == 3);
        CHECK(!m.is_connected());
        CHECK(!m.is_orientable());
        m.check();
    }

    SUBCASE("an essential arc crossing the core edge yields one disk") {
        // The essential arc returns to the *same* rim, entering it once on
        // each of its two stretches, so the rim is split up front and the
        // stroke is drawn piecewise.
        const SubdivideResult r_split = m.subdivide(rims[0]);
        const SubdivideResult t_split = m.subdivide(r_split.first);
        Corner start{kNone, kNone};
        for (const Corner& c : m.corners_at(r_split.mid)) {
            if (!m.face(c.face).hole) start = c;
        }
        REQUIRE(start.face != kNone);
        const int cid = m.new_curve(EdgeKind::kArc, false);
        Pen pen(m, start, EdgeKind::kArc, cid);
        pen.cross(0, 0);
        Corner end{kNone, kNone};
        for (const Corner& c : m.corners_at(t_split.mid)) {
            if (c.face == pen.current_face()) end = c;
        }
        REQUIRE(end.face != kNone);
        pen.finish_at(end);
        CHECK(m.curve(cid).pieces.size() == 2);
        CHECK(m.curve(cid).through.size() == 3);
        const CutResult cut = m.cut_along(cid);
        CHECK(cut.hole != kNone);
        CHECK(cut.hole_a == kNone);
        CHECK(m.hole_count() == 1);
        CHECK(m.euler_characteristic_closed() == 2);
        CHECK(m.is_connected());
        CHECK(m.is_orientable());
        CHECK(m.euler_genus() == 0);
        m.check();
    }
}

TEST_CASE("a two-sided same-hole arc splits the boundary circle") {
    Map m = make_k2();
    const int hole = m.carve_vertex(0);
    EdgeId rim = kNone;
    for (EdgeId e = 0; e < m.edge_slots(); ++e) {
        if (m.edge_alive(e) && m.edge(e).kind == EdgeKind::kRim) rim = e;
    }
    const SubdivideResult halves = m.subdivide(rim);
    FaceId outside = kNone;
    for (FaceId f = 0; f < m.face_count(); ++f) {
        if (!m.face(f).hole) outside = f;
    }
    const std::vector<CrossingStep> walk = {
        {halves.first, m.side_of_face(halves.first, m.hole_face(hole))},
        {halves.second, m.side_of_face(halves.second, outside)},
    };
    const int arc = m.draw_curve(walk, false, EdgeKind::kArc);
    const int chi = m.euler_characteristic_closed();
    const CutResult cut = m.cut_along(arc);
    CHECK(cut.hole == kNone);
    CHECK(cut.hole_a != kNone);
    CHECK(cut.hole_b != kNone);
    CHECK(m.hole_count() == 2);
    CHECK(m.euler_characteristic_closed() == chi + 2);
    // The cut separated a disk from a disk: two components.
    CHECK(!m.is_connected());
    m.check();
}

TEST_CASE("curve drawing validates its walk") {
    Map m = make_theta();
    m.carve_vertex(0);
    m.carve_vertex(1);
    const FaceId f01 = face_between(m, 0, 1);
    // Open walks must start on a rim.
    CHECK_THROWS_AS(
        m.draw_curve({{0, 0}, {1, m.side_of_face(1, f01)}}, false,
                     EdgeKind::kArc),
        std::runtime_error);
    // The same edge cannot be crossed twice in one walk.
    CHECK_THROWS_AS(m.draw_curve({{0, 0}, {0, 1}}, true, EdgeKind::kCurve),
                    std::runtime_error);
    // Closed walks must chain through faces.
    CHECK_THROWS_AS(m.draw_curve({{0, 0}}, true, EdgeKind::kCurve),
                    std::runtime_error);
}
