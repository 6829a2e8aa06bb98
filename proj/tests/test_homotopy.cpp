#include "doctest.h"

#include "smc/homotopy.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

using namespace smc;

namespace {

// Triangle on the sphere with two carved terminals: one arc joins the two
// holes and the cut surface is a disk.
const char* kTrianglePair = R"({
  "vertices": [0, 1, 2],
  "edges": [
    {"id": 0, "u": 0, "v": 1, "w": "5", "sign": 1},
    {"id": 1, "u": 1, "v": 2, "w": "3", "sign": 1},
    {"id": 2, "u": 2, "v": 0, "w": "4", "sign": 1}
  ],
  "rotations": {"0": [5, 0], "1": [1, 2], "2": [3, 4]},
  "terminals": [0, 1],
  "pairs": [[0, 1]]
})";

// Same triangle with all three corners carved.
const char* kTriangleTriple = R"({
  "vertices": [0, 1, 2],
  "edges": [
    {"id": 0, "u": 0, "v": 1, "w": "5", "sign": 1},
    {"id": 1, "u": 1, "v": 2, "w": "3", "sign": 1},
    {"id": 2, "u": 2, "v": 0, "w": "4", "sign": 1}
  ],
  "rotations": {"0": [5, 0], "1": [1, 2], "2": [3, 4]},
  "terminals": [0, 1, 2],
  "pairs": [[0, 1], [0, 2]]
})";

// One vertex, two interleaved loops: the torus, with the vertex carved.
const char* kTorusRose = R"({
  "vertices": [0],
  "edges": [
    {"id": 0, "u": 0, "v": 0, "w": "2", "sign": 1},
    {"id": 1, "u": 0, "v": 0, "w": "3", "sign": 1}
  ],
  "rotations": {"0": [0, 2, 1, 3]},
  "terminals": [0],
  "pairs": []
})";

// One carved vertex with a sign -1 loop: the projective plane.
const char* kProjectivePlane = R"({
  "vertices": [7],
  "edges": [{"id": 0, "u": 7, "v": 7, "w": "2.5", "sign": -1}],
  "rotations": {"7": [0, 1]},
  "terminals": [7],
  "pairs": []
})";

// Two interleaved loops, one of sign -1: the Klein bottle.
const char* kKleinRose = R"({
  "vertices": [0],
  "edges": [
    {"id": 0, "u": 0, "v": 0, "w": "2", "sign": -1},
    {"id": 1, "u": 0, "v": 0, "w": "3", "sign": 1}
  ],
  "rotations": {"0": [0, 2, 1, 3]},
  "terminals": [0],
  "pairs": []
})";

ArcSystem build_sys(const char* json) {
    Surface s = build_surface(parse_instance(json));
    carve_terminals(s);
    return greedy_system_of_arcs(s);
}

std::vector<FaceId> interior_faces(const Map& m) {
    std::vector<FaceId> out;
    for (FaceId f = 0; f < m.face_count(); ++f) {
        if (!m.face(f).hole) out.push_back(f);
    }
    return out;
}

// Plain single-copy dual distances on the disk, written independently of
// the region machinery: Dijkstra over interior faces crossing graph edges.
std::map<FaceId, Rational> plain_dists(const Map& m, FaceId src) {
    std::map<FaceId, Rational> dist;
    std::set<std::pair<Rational, FaceId>> queue;
    dist[src] = Rational(0);
    queue.insert({Rational(0), src});
    while (!queue.empty()) {
        const auto [d, f] = *queue.begin();
        queue.erase(queue.begin());
        if (d != dist.at(f)) continue;
        for (EdgeId e = 0; e < m.edge_slots(); ++e) {
            if (!m.edge_alive(e) || m.edge(e).kind != EdgeKind::kGraph) continue;
            FaceId g = kNone;
            if (m.side_face(e, 0) == f) {
                g = m.side_face(e, 1);
            } else if (m.side_face(e, 1) == f) {
                g = m.side_face(e, 0);
            } else {
                continue;
            }
            const Rational nd = d + m.edge(e).weight;
            const auto it = dist.find(g);
            if (it == dist.end() || nd < it->second) {
                dist[g] = nd;
                queue.insert({nd, g});
            }
        }
    }
    return dist;
}

}  // namespace

TEST_CASE("word reduction") {
    CHECK(reduce_word({1, -1}) == Word{});
    CHECK(reduce_word({1, 2, -2, -1, 3}) == Word{3});
    CHECK(reduce_word({1, -2, 2, -1, 1}) == Word{1});
    CHECK(cyclic_reduce_word({2, 1, -1}) == Word{2});
    CHECK(cyclic_reduce_word({1, 2, -1}) == Word{2});
    CHECK(cyclic_reduce_word({-3, 1, 2, -2, 3}) == Word{1});
    CHECK(cyclic_reduce_word({1, 2, -2, -1}) == Word{});
    CHECK(cyclic_reduce_word({1, 2, -1, -2}) == Word({1, 2, -1, -2}));
}

TEST_CASE("arc counts and disk shape per surface") {
    struct Expect {
        const char* json;
        int arcs;
        int genus;
    };
    const Expect table[] = {{kTrianglePair, 1, 0},
                            {kTriangleTriple, 2, 0},
                            {kTorusRose, 2, 2},
                            {kProjectivePlane, 1, 1},
                            {kKleinRose, 2, 2}};
    for (const Expect& ex : table) {
        const ArcSystem sys = build_sys(ex.json);
        CHECK(static_cast<int>(sys.arcs.size()) == ex.arcs);
        CHECK(sys.genus == ex.genus);
        CHECK(punctured_euler(sys.disk) == 1);
        CHECK(sys.disk.euler_genus() == 0);
        CHECK(sys.disk.is_connected());
        CHECK(sys.disk.is_orientable());
        CHECK(sys.face_orientation.size() ==
              static_cast<std::size_t>(sys.disk.face_count()));
        sys.disk.check();
    }
}

TEST_CASE("boundary labels cover the disk boundary once") {
    for (const char* json : {kTrianglePair, kTriangleTriple, kTorusRose,
                             kProjectivePlane, kKleinRose}) {
        const ArcSystem sys = build_sys(json);
        const auto segs = boundary_cycle(sys);
        CHECK(segs.size() ==
              sys.disk.face(sys.disk.hole_face(sys.hole)).steps.size());
        std::set<std::array<int, 3>> shores;
        std::set<int> terminals;
        for (const BoundarySeg& seg : segs) {
            if (seg.is_shore) {
                CHECK(shores.insert({seg.arc, seg.side, seg.slot}).second);
            } else {
                terminals.insert(seg.terminal);
            }
        }
        CHECK(static_cast<int>(terminals.size()) == sys.terminal_count);
        std::size_t slots = 0;
        for (const ArcRec& arc : sys.arcs) slots += 2 * arc.slots();
        CHECK(shores.size() == slots);
    }
}

TEST_CASE("flips match orientability") {
    const ArcSystem tri = build_sys(kTrianglePair);
    CHECK(tri.arcs[0].flip == +1);
    CHECK(tri.arcs[0].length == Rational(0));

    const ArcSystem torus = build_sys(kTorusRose);
    CHECK(torus.arcs[0].flip == +1);
    CHECK(torus.arcs[1].flip == +1);

    const ArcSystem pp = build_sys(kProjectivePlane);
    CHECK(pp.arcs[0].flip == -1);

    const ArcSystem klein = build_sys(kKleinRose);
    CHECK(klein.arcs[0].flip * klein.arcs[1].flip == -1);
}

TEST_CASE("triple-carved triangle cuts along two free arcs") {
    const ArcSystem sys = build_sys(kTriangleTriple);
    CHECK(sys.arcs[0].length == Rational(0));
    CHECK(sys.arcs[1].length == Rational(0));
}

TEST_CASE("universal regions follow the reduced prefix states") {
    const ArcSystem sys = build_sys(kTorusRose);
    const Region empty = relevant_region_universal(sys, {});
    CHECK(empty.copies == 1);
    CHECK(empty.gluings.empty());

    const Region two = relevant_region_universal(sys, {1, 2});
    CHECK(two.copies == 3);
    CHECK(two.gluings.size() == 2);
    CHECK(two.copy_words[0] == Word{});
    CHECK(two.copy_words[1] == Word{1});
    CHECK(two.copy_words[2] == Word({1, 2}));

    const Region back = relevant_region_universal(sys, {1, -1});
    CHECK(back.copies == 2);
    CHECK(back.gluings.size() == 1);
    CHECK(back.gluings[0].from == 0);
    CHECK(back.gluings[0].to == 1);
    CHECK(back.gluings[0].letter == 1);

    const Region mixed = relevant_region_universal(sys, {1, -1, 2});
    CHECK(mixed.copies == 3);
    CHECK(mixed.copy_words[2] == Word{2});
}

TEST_CASE("annular regions cyclically reduce and classify sidedness") {
    const ArcSystem torus = build_sys(kTorusRose);
    const Region core = annular_region(torus, {1});
    CHECK(core.kind == RegionKind::annulus);
    CHECK(core.copies == 1);
    CHECK(core.gluings.size() == 1);

    const Region conj = annular_region(torus, {1, 2, -1});
    CHECK(conj.word == Word{2});

    CHECK_THROWS_AS(annular_region(torus, {1, -1}), std::invalid_argument);
    CHECK_THROWS_AS(annular_region(torus, {}), std::invalid_argument);

    const ArcSystem pp = build_sys(kProjectivePlane);
    CHECK(annular_region(pp, {1}).kind == RegionKind::moebius);
    CHECK(annular_region(pp, {1, 1}).kind == RegionKind::annulus);

    const ArcSystem klein = build_sys(kKleinRose);
    const Letter one_sided =
        klein.arcs[0].flip == -1 ? 1 : 2;
    CHECK(annular_region(klein, {one_sided}).kind == RegionKind::moebius);
    CHECK(annular_region(klein, {one_sided, one_sided}).kind ==
          RegionKind::annulus);
}

TEST_CASE("separating cycle around a triangle hole costs the minimum cut") {
    const ArcSystem sys = build_sys(kTrianglePair);
    const CycleSearch cs = shortest_homotopic_cycle(sys, {1});
    CHECK(cs.region.kind == RegionKind::annulus);
    CHECK(cs.best.closed);
    CHECK(cs.best.length == Rational(8));
    CHECK(cs.best.arc_crossings == 1);
    CHECK(cs.best.nodes.front() == cs.best.nodes.back());
    CHECK(cyclic_reduce_word(cs.best.word()).size() == 1);

    // The minimum winds once, so it meets every interior face.
    for (FaceId f : interior_faces(sys.disk)) {
        const PathResult through =
            shortest_cycle_through_face(sys, cs.region, 0, f);
        CHECK(through.length == Rational(8));
        CHECK(through.closed);
    }
}

TEST_CASE("torus core cycles cross the opposite loop") {
    const ArcSystem sys = build_sys(kTorusRose);
    const CycleSearch a = shortest_homotopic_cycle(sys, {1});
    const CycleSearch b = shortest_homotopic_cycle(sys, {2});
    std::vector<Rational> lens{a.best.length, b.best.length};
    std::sort(lens.begin(), lens.end());
    CHECK(lens[0] == Rational(2));
    CHECK(lens[1] == Rational(3));
    CHECK(a.best.arc_crossings == 1);
    CHECK(b.best.arc_crossings == 1);

    const CycleSearch diag = shortest_homotopic_cycle(sys, {1, 2});
    CHECK(diag.best.length == Rational(5));
    CHECK(diag.best.arc_crossings == 2);

    // The commutator is boundary-parallel.  A cycle enclosing the hole
    // cannot also enclose an essential loop, so it crosses each of the two
    // loops at least twice; twice each is attainable.
    const CycleSearch comm = shortest_homotopic_cycle(sys, {1, 2, -1, -2});
    CHECK(comm.region.kind == RegionKind::annulus);
    CHECK(comm.best.length == Rational(10));
    CHECK(comm.best.arc_crossings == 4);
}

TEST_CASE("through-face minima recover the free minimum") {
    const ArcSystem torus = build_sys(kTorusRose);
    for (const Word& w : {Word{1}, Word{2}, Word({1, 2})}) {
        const CycleSearch cs = shortest_homotopic_cycle(torus, w);
        bool hit = false;
        for (int c = 0; c < cs.region.copies; ++c) {
            for (FaceId f : interior_faces(torus.disk)) {
                const PathResult p =
                    shortest_cycle_through_face(torus, cs.region, c, f);
                CHECK(compare_costs(
                          SearchCost{cs.best.length, cs.best.arc_crossings, {}},
                          SearchCost{p.length, p.arc_crossings, {}}) <= 0);
                if (p.length == cs.best.length) hit = true;
            }
        }
        CHECK(hit);
    }
}

TEST_CASE("one-sided cycles search the orientation double cover") {
    const ArcSystem pp = build_sys(kProjectivePlane);
    const CycleSearch core = shortest_homotopic_cycle(pp, {1});
    CHECK(core.region.kind == RegionKind::moebius);
    CHECK(core.best.closed);
    CHECK(core.best.length == Rational(5, 2));
    // The shortest one-sided cycle crosses the cutting arc exactly once.
    CHECK(core.best.arc_crossings == 1);
    CHECK(cyclic_reduce_word(core.best.word()).size() == 1);

    // The squared word is boundary-parallel; enclosing the hole still
    // forces two crossings of the core loop.
    const CycleSearch par = shortest_homotopic_cycle(pp, {1, 1});
    CHECK(par.region.kind == RegionKind::annulus);
    CHECK(par.best.length == Rational(5));
    CHECK(par.best.arc_crossings == 2);

    CHECK_THROWS_AS(
        shortest_cycle_through_face(pp, core.region, 0,
                                    interior_faces(pp.disk).front()),
        std::runtime_error);
}

TEST_CASE("homotopic path searches match plain dual distances") {
    for (const char* json : {kTrianglePair, kTorusRose}) {
        const ArcSystem sys = build_sys(json);
        const Map& m = sys.disk;
        for (EdgeId e = 0; e < m.edge_slots(); ++e) {
            if (!m.edge_alive(e) || m.edge(e).kind != EdgeKind::kGraph) continue;
            CoverWalk walk;
            walk.start = m.side_face(e, 0);
            RegionStep st;
            st.edge = e;
            st.from_side = 0;
            walk.steps.push_back(st);
            const PathResult p = shortest_homotopic_path(sys, walk);
            const auto dist = plain_dists(m, walk.start);
            CHECK(p.length == dist.at(m.side_face(e, 1)));
            CHECK(p.word().empty());
        }
    }
}

TEST_CASE("direct arc hop is its own homotopic geodesic") {
    const ArcSystem sys = build_sys(kTrianglePair);
    const ArcRec& arc = sys.arcs[0];
    CoverWalk walk;
    walk.start = arc.left_face[0];
    RegionStep st;
    st.is_arc = true;
    st.arc = 0;
    st.slot = 0;
    st.dir = +1;
    walk.steps.push_back(st);
    const PathResult p = shortest_homotopic_path(sys, walk);
    CHECK(p.length == Rational(0));
    CHECK(p.arc_crossings == 1);
    CHECK(reduce_word(p.word()) == Word{1});
    CHECK(p.nodes.front().first == 0);
    CHECK(p.nodes.back().second == arc.right_face[0]);
}

TEST_CASE("homotopic path search is idempotent on its own output") {
    const ArcSystem sys = build_sys(kTorusRose);
    const CycleSearch diag = shortest_homotopic_cycle(sys, {1, 2});
    const CoverWalk walk = to_cover_walk(diag.best);
    const PathResult once = shortest_homotopic_path(sys, walk);
    CHECK(compare_costs(SearchCost{once.length, once.arc_crossings, {}},
                        SearchCost{diag.best.length, diag.best.arc_crossings,
                                   {}}) <= 0);
    CHECK(reduce_word(once.word()) == reduce_word(walk_word(walk)));
    const PathResult twice = shortest_homotopic_path(sys, to_cover_walk(once));
    CHECK(twice.length == once.length);
    CHECK(twice.arc_crossings == once.arc_crossings);
    CHECK(twice.word() == once.word());
}

TEST_CASE("homotopic path rejects walks that do not chain") {
    const ArcSystem sys = build_sys(kTrianglePair);
    const Map& m = sys.disk;
    EdgeId e = kNone;
    for (EdgeId x = 0; x < m.edge_slots(); ++x) {
        if (m.edge_alive(x) && m.edge(x).kind == EdgeKind::kGraph) {
            e = x;
            break;
        }
    }
    REQUIRE(e != kNone);
    CoverWalk walk;
    walk.start = m.side_face(e, 1) == m.side_face(e, 0)
                     ? kNone
                     : m.side_face(e, 1);
    RegionStep st;
    st.edge = e;
    st.from_side = 0;
    walk.steps.push_back(st);
    if (walk.start != kNone && m.side_face(e, 0) != walk.start) {
        CHECK_THROWS_AS(shortest_homotopic_path(sys, walk), std::runtime_error);
    }
}

TEST_CASE("greedy arc systems are deterministic") {
    for (const char* json : {kTriangleTriple, kTorusRose, kKleinRose}) {
        const ArcSystem a = build_sys(json);
        const ArcSystem b = build_sys(json);
        REQUIRE(a.arcs.size() == b.arcs.size());
        for (std::size_t i = 0; i < a.arcs.size(); ++i) {
            CHECK(a.arcs[i].length == b.arcs[i].length);
            CHECK(a.arcs[i].flip == b.arcs[i].flip);
            REQUIRE(a.arcs[i].plan.size() == b.arcs[i].plan.size());
            for (std::size_t j = 0; j < a.arcs[i].plan.size(); ++j) {
                CHECK(a.arcs[i].plan[j].edge == b.arcs[i].plan[j].edge);
                CHECK(a.arcs[i].plan[j].from_side == b.arcs[i].plan[j].from_side);
            }
        }
    }
}
