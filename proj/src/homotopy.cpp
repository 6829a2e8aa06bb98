#include "smc/homotopy.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>

namespace smc {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::runtime_error(msg);
}

// --- word utilities --------------------------------------------------------

void check_letter(Letter l, int arc_count, const char* who) {
    if (l == 0 || letter_arc(l) >= arc_count) throw std::runtime_error(who);
}

}  // namespace

Word reduce_word(const Word& w) {
    Word out;
    for (Letter l : w) {
        if (!out.empty() && out.back() == -l) {
            out.pop_back();
        } else {
            out.push_back(l);
        }
    }
    return out;
}

Word cyclic_reduce_word(const Word& w) {
    Word out = reduce_word(w);
    std::size_t lo = 0, hi = out.size();
    while (hi - lo >= 2 && out[lo] == -out[hi - 1]) {
        ++lo;
        --hi;
    }
    return Word(out.begin() + lo, out.begin() + hi);
}

// --- piece resolution ------------------------------------------------------

namespace {

// Alive descendants of an edge through any chain of subdivisions, ascending.
std::vector<EdgeId> alive_leaves(const Map& m, EdgeId e) {
    std::vector<EdgeId> out, stack{e};
    while (!stack.empty()) {
        const EdgeId x = stack.back();
        stack.pop_back();
        if (m.edge(x).alive) {
            out.push_back(x);
            continue;
        }
        const auto kids = m.split_children(x);
        require(kids.first != kNone, "alive_leaves: dead edge without pieces");
        stack.push_back(kids.first);
        stack.push_back(kids.second);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// The piece of `e` to cross out of face `f`.  While drawing, earlier
// crossings of the same walk may have subdivided `e`; among the alive pieces
// bordering `f` the lowest id is taken, a deterministic stand-in for the
// crossing point the planner meant.
EdgeId pick_piece(const Map& m, EdgeId e, FaceId f) {
    EdgeId best = kNone;
    for (EdgeId p : alive_leaves(m, e)) {
        if (m.side_of_face(p, f) == -1) continue;
        best = p;
        break;
    }
    require(best != kNone, "pick_piece: no piece of the edge borders the face");
    return best;
}

// --- drawing with repeats --------------------------------------------------

// Draws an open arc given its crossing walk, like Map::draw_curve but
// tolerating edges that repeat within the walk (each crossing re-resolves
// the planned edge against the pen's current face).  The first and last
// steps cross rim edges; both rims are subdivided and the stroke runs from
// interior corner to interior corner, so the endpoints are degree-3 rim
// vertices as cut_along() expects.
int draw_arc_walk(Map& m, const std::vector<CrossingStep>& walk) {
    require(walk.size() >= 2, "draw_arc_walk: open walk needs both rim crossings");
    const EdgeId r0 = walk.front().edge;
    require(m.edge_alive(r0) && m.edge(r0).kind == EdgeKind::kRim,
            "draw_arc_walk: walk must start on a rim");
    const SubdivideResult s0 = m.subdivide(r0);

    Corner start{kNone, kNone};
    for (const Corner& c : m.corners_at(s0.mid)) {
        if (m.face(c.face).hole) continue;
        require(start.face == kNone, "draw_arc_walk: ambiguous start corner");
        start = c;
    }
    require(start.face != kNone, "draw_arc_walk: start rim has no interior side");

    const int cid = m.new_curve(EdgeKind::kArc, false);
    Pen pen(m, start, EdgeKind::kArc, cid);

    for (std::size_t i = 1; i + 1 < walk.size(); ++i) {
        const FaceId cur = pen.current_face();
        const EdgeId p = pick_piece(m, walk[i].edge, cur);
        require(m.edge(p).kind != EdgeKind::kRim,
                "draw_arc_walk: interior crossing of a rim");
        int side;
        if (m.side_face(p, 0) == cur && m.side_face(p, 1) == cur) {
            // Both sides face the pen; only meaningful for the unsplit
            // planned edge, whose side indices are stable since planning.
            side = p == walk[i].edge ? walk[i].from_side : 0;
        } else {
            side = m.side_of_face(p, cur);
        }
        require(side != -1, "draw_arc_walk: walk does not chain");
        pen.cross(p, side);
    }

    const EdgeId rl = pick_piece(m, walk.back().edge, pen.current_face());
    require(m.edge(rl).kind == EdgeKind::kRim,
            "draw_arc_walk: walk must end on a rim");
    const SubdivideResult s1 = m.subdivide(rl);
    const FaceId cur = pen.current_face();
    Corner fin{kNone, kNone};
    for (const Corner& c : m.corners_at(s1.mid)) {
        if (c.face != cur) continue;
        require(fin.face == kNone, "draw_arc_walk: ambiguous finish corner");
        fin = c;
    }
    require(fin.face != kNone, "draw_arc_walk: finish corner not on the pen face");
    pen.finish_at(fin);
    return cid;
}

// --- arc candidates --------------------------------------------------------

// Dual search over the current surface: nodes are interior faces plus one
// supernode per alive hole.  Graph edges may be crossed at their weight;
// rims descending from the carved terminals connect their interior face to
// their hole's supernode for free.  Arrows out of holes exist so searches
// can start there; paths never tunnel through an intermediate hole because
// the direct path from that hole is strictly better in word length.
struct ArcSearch {
    SearchGraph g;
    std::vector<CrossingStep> tags;
    std::vector<int> face_node;  // per face id, -1 for holes
    std::vector<int> hole_node;  // per hole id, -1 for dead holes
};

// Builds the dual search graph.  `out_hole` limits which supernodes get
// outgoing arrows: pair searches start from a single hole and must not
// tunnel through another hole's interior, so only the source hole may be
// exited.  kNone keeps every exit, which is safe for multi-source searches
// where every hole is a source and re-entry never relaxes anything.
ArcSearch build_arc_search(const Map& m, const std::map<EdgeId, int>& rim_label,
                           int out_hole) {
    ArcSearch s;
    s.face_node.assign(m.face_count(), -1);
    for (FaceId f = 0; f < m.face_count(); ++f) {
        if (!m.face(f).hole) s.face_node[f] = s.g.add_node();
    }
    s.hole_node.assign(m.hole_slots(), -1);
    for (int h = 0; h < m.hole_slots(); ++h) {
        if (m.hole_alive(h)) s.hole_node[h] = s.g.add_node();
    }
    const auto tag = [&s](EdgeId e, int side) {
        s.tags.push_back(CrossingStep{e, side});
        return static_cast<int>(s.tags.size()) - 1;
    };
    for (EdgeId e = 0; e < m.edge_slots(); ++e) {
        if (!m.edge_alive(e)) continue;
        const EdgeRec& rec = m.edge(e);
        if (rec.kind == EdgeKind::kGraph) {
            const FaceId f0 = m.side_face(e, 0);
            const FaceId f1 = m.side_face(e, 1);
            require(!m.face(f0).hole && !m.face(f1).hole,
                    "build_arc_search: graph edge on a hole");
            s.g.add_arrow(s.face_node[f0], s.face_node[f1], rec.weight, 0, e,
                          tag(e, 0));
            s.g.add_arrow(s.face_node[f1], s.face_node[f0], rec.weight, 0, e,
                          tag(e, 1));
        } else if (rec.kind == EdgeKind::kRim && rim_label.count(e) != 0) {
            const int hs = m.face(m.side_face(e, 0)).hole ? 0 : 1;
            const FaceId hf = m.side_face(e, hs);
            const FaceId in = m.side_face(e, 1 - hs);
            require(m.face(hf).hole && !m.face(in).hole,
                    "build_arc_search: rim not between hole and interior");
            const int hole = m.hole_of_face(hf);
            const int hn = s.hole_node[hole];
            require(hn != -1, "build_arc_search: rim on a dead hole");
            s.g.add_arrow(s.face_node[in], hn, Rational(0), 0, e, tag(e, 1 - hs));
            if (out_hole == kNone || out_hole == hole) {
                s.g.add_arrow(hn, s.face_node[in], Rational(0), 0, e, tag(e, hs));
            }
        }
    }
    return s;
}

struct ArcCandidate {
    SearchCost cost;
    std::vector<CrossingStep> walk;
};

bool candidate_less(const ArcCandidate& a, const ArcCandidate& b) {
    const int c = compare_costs(a.cost, b.cost);
    if (c != 0) return c < 0;
    const std::size_t n = std::min(a.walk.size(), b.walk.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a.walk[i].edge != b.walk[i].edge) return a.walk[i].edge < b.walk[i].edge;
        if (a.walk[i].from_side != b.walk[i].from_side)
            return a.walk[i].from_side < b.walk[i].from_side;
    }
    return a.walk.size() < b.walk.size();
}

std::vector<CrossingStep> tree_walk(const ArcSearch& s, const SearchTree& t,
                                    int target) {
    std::vector<CrossingStep> out;
    for (const auto& [from, idx] : unwind_path(t, target)) {
        out.push_back(s.tags[s.g.adj[from][idx].tag]);
    }
    return out;
}

std::vector<ArcCandidate> collect_candidates(const Map& m,
                                             const std::map<EdgeId, int>& rims) {
    std::vector<ArcCandidate> out;
    const ArcSearch s = build_arc_search(m, rims, kNone);

    // Geodesics between pairs of distinct holes, each from a search that may
    // exit only the source hole.
    std::vector<int> holes;
    for (int h = 0; h < m.hole_slots(); ++h) {
        if (m.hole_alive(h)) holes.push_back(h);
    }
    for (std::size_t i = 0; i < holes.size(); ++i) {
        const ArcSearch si = build_arc_search(m, rims, holes[i]);
        const SearchTree t = lex_dijkstra(si.g, {si.hole_node[holes[i]]});
        for (std::size_t j = i + 1; j < holes.size(); ++j) {
            const int tn = si.hole_node[holes[j]];
            if (!t.reached[tn]) continue;
            out.push_back(ArcCandidate{t.cost[tn], tree_walk(si, t, tn)});
        }
    }

    // Geodesic loops: boundary-to-boundary through each graph edge, stitched
    // from the forest of shortest paths out of all holes at once.
    std::vector<int> sources;
    for (int h : holes) sources.push_back(s.hole_node[h]);
    const SearchTree forest = lex_dijkstra(s.g, sources);
    for (EdgeId e = 0; e < m.edge_slots(); ++e) {
        if (!m.edge_alive(e) || m.edge(e).kind != EdgeKind::kGraph) continue;
        const int n0 = s.face_node[m.side_face(e, 0)];
        const int n1 = s.face_node[m.side_face(e, 1)];
        if (!forest.reached[n0] || !forest.reached[n1]) continue;
        ArcCandidate cand;
        cand.walk = tree_walk(s, forest, n0);
        cand.cost = forest.cost[n0];
        cand.walk.push_back(CrossingStep{e, 0});
        cand.cost.length += m.edge(e).weight;
        cand.cost.word.push_back(e);
        const std::vector<CrossingStep> back = tree_walk(s, forest, n1);
        for (auto it = back.rbegin(); it != back.rend(); ++it) {
            cand.walk.push_back(CrossingStep{it->edge, 1 - it->from_side});
            cand.cost.word.push_back(it->edge);
        }
        cand.cost.length += forest.cost[n1].length;
        out.push_back(std::move(cand));
    }

    std::sort(out.begin(), out.end(), candidate_less);
    return out;
}

// --- shore orientation -----------------------------------------------------

// Direction the interior face induces on a shore rim under the coherent
// orientation, reported relative to the rim's sense away from `from`.
int induced_dir(const Map& m, const std::vector<int>& orient, EdgeId rim,
                VertexId from) {
    const int side = m.face(m.side_face(rim, 0)).hole ? 1 : 0;
    require(!m.face(m.side_face(rim, side)).hole &&
                m.face(m.side_face(rim, 1 - side)).hole,
            "induced_dir: rim does not separate hole from interior");
    const Corner c = m.side_corner(rim, side);
    const Dart d = sdart_dart(m.face(c.face).steps[c.index]);
    Dart along;
    if (m.tail(dart_of(rim, 0)) == from) {
        along = dart_of(rim, 0);
    } else {
        require(m.tail(dart_of(rim, 1)) == from, "induced_dir: bad endpoint");
        along = dart_of(rim, 1);
    }
    return d == along ? orient[c.face] : -orient[c.face];
}

}  // namespace

// --- greedy construction ---------------------------------------------------

ArcSystem greedy_system_of_arcs(const Surface& s) {
    require(!s.terminal_holes.empty(), "greedy_system_of_arcs: carve first");
    ArcSystem sys;
    sys.disk = s.map;
    Map& m = sys.disk;
    sys.terminal_count = static_cast<int>(s.terminals.size());
    const bool orientable = m.is_orientable();

    const int t = static_cast<int>(s.terminal_holes.size());
    const int chi0 = punctured_euler(m);
    sys.genus = 2 - t - chi0;
    require(sys.genus >= 0, "greedy_system_of_arcs: impossible genus");
    const int needed = sys.genus + t - 1;

    // Rims descending from the carved terminals are the only legal arc
    // endpoints; shores of earlier arcs are not (the arcs must stay
    // disjoint).  Labels follow subdivisions through alive_leaves.
    std::map<EdgeId, int> rim_origin;
    for (int i = 0; i < t; ++i) {
        const FaceId hf = m.hole_face(s.terminal_holes[i]);
        for (int st : m.face(hf).steps) {
            rim_origin[edge_of(sdart_dart(st))] = i;
        }
    }
    const auto current_rims = [&]() {
        std::map<EdgeId, int> rims;
        for (const auto& [e, idx] : rim_origin) {
            for (EdgeId leaf : alive_leaves(m, e)) rims[leaf] = idx;
        }
        return rims;
    };

    for (int round = 0; round < needed; ++round) {
        const std::vector<ArcCandidate> cands = collect_candidates(m, current_rims());
        bool accepted = false;
        for (const ArcCandidate& cand : cands) {
            {
                Map probe = m;
                const int pc = draw_arc_walk(probe, cand.walk);
                probe.cut_along(pc);
                if (!probe.is_connected()) continue;
            }
            const int cid = draw_arc_walk(m, cand.walk);
            ArcRec rec;
            rec.length = curve_length(m, cid);
            require(rec.length == cand.cost.length,
                    "greedy_system_of_arcs: planned and drawn lengths differ");
            rec.plan = cand.walk;
            const CutResult cut = m.cut_along(cid);
            require(punctured_euler(m) == chi0 + round + 1,
                    "greedy_system_of_arcs: cut did not open the surface");
            rec.left = cut.left;
            rec.right = cut.right;
            sys.arcs.push_back(std::move(rec));
            accepted = true;
            break;
        }
        require(accepted, "greedy_system_of_arcs: no non-separating candidate");
    }

    require(m.is_connected(), "greedy_system_of_arcs: disk disconnected");
    require(punctured_euler(m) == 1, "greedy_system_of_arcs: not a disk");
    int alive = 0;
    for (int h = 0; h < m.hole_slots(); ++h) {
        if (!m.hole_alive(h)) continue;
        ++alive;
        sys.hole = h;
    }
    require(alive == 1, "greedy_system_of_arcs: disk must have one hole");

    const auto orient = m.orient_faces();
    require(orient.has_value(), "greedy_system_of_arcs: disk not orientable");
    sys.face_orientation = *orient;

    for (const auto& [e, idx] : rim_origin) {
        for (EdgeId leaf : alive_leaves(m, e)) sys.rim_terminal[leaf] = idx;
    }

    int flip_product = +1;
    for (int a = 0; a < static_cast<int>(sys.arcs.size()); ++a) {
        ArcRec& rec = sys.arcs[a];
        const int n = rec.slots();
        require(n >= 1 && rec.right.rims.size() == static_cast<std::size_t>(n) &&
                    rec.left.vertices.size() == static_cast<std::size_t>(n) + 1 &&
                    rec.right.vertices.size() == static_cast<std::size_t>(n) + 1,
                "greedy_system_of_arcs: shores out of step");
        rec.left_face.resize(n);
        rec.right_face.resize(n);
        int flip = 0;
        for (int i = 0; i < n; ++i) {
            for (int side = 0; side < 2; ++side) {
                const CutShore& shore = side == 0 ? rec.left : rec.right;
                const EdgeId r = shore.rims[i];
                require(m.edge_alive(r) && m.edge(r).kind == EdgeKind::kRim,
                        "greedy_system_of_arcs: shore rim vanished");
                require(sys.shore_slot.emplace(r, std::array<int, 3>{a, side, i})
                            .second,
                        "greedy_system_of_arcs: shore rim reused");
                const int hs = m.face(m.side_face(r, 0)).hole ? 0 : 1;
                require(m.face(m.side_face(r, hs)).hole &&
                            !m.face(m.side_face(r, 1 - hs)).hole,
                        "greedy_system_of_arcs: shore not on the boundary");
                (side == 0 ? rec.left_face : rec.right_face)[i] =
                    m.side_face(r, 1 - hs);
            }
            const int dl = induced_dir(m, *orient, rec.left.rims[i],
                                       rec.left.vertices[i]);
            const int dr = induced_dir(m, *orient, rec.right.rims[i],
                                       rec.right.vertices[i]);
            const int f = -dl * dr;
            if (flip == 0) flip = f;
            require(flip == f, "greedy_system_of_arcs: flip varies along arc");
        }
        rec.flip = flip;
        flip_product *= flip;
    }
    require((flip_product == +1) == orientable,
            "greedy_system_of_arcs: flips disagree with orientability");

    // Every boundary rim of the disk carries exactly one label.
    for (int st : m.face(m.hole_face(sys.hole)).steps) {
        const EdgeId e = edge_of(sdart_dart(st));
        const bool term = sys.rim_terminal.count(e) != 0;
        const bool shore = sys.shore_slot.count(e) != 0;
        require(term != shore, "greedy_system_of_arcs: unlabeled boundary rim");
    }
    return sys;
}

std::vector<BoundarySeg> boundary_cycle(const ArcSystem& sys) {
    const Map& m = sys.disk;
    std::vector<BoundarySeg> out;
    for (int st : m.face(m.hole_face(sys.hole)).steps) {
        BoundarySeg seg;
        seg.rim = edge_of(sdart_dart(st));
        if (const auto it = sys.rim_terminal.find(seg.rim);
            it != sys.rim_terminal.end()) {
            seg.terminal = it->second;
        } else {
            const auto& sl = sys.shore_slot.at(seg.rim);
            seg.is_shore = true;
            seg.arc = sl[0];
            seg.side = sl[1];
            seg.slot = sl[2];
        }
        out.push_back(seg);
    }
    return out;
}

// --- regions ---------------------------------------------------------------

Region relevant_region_universal(const ArcSystem& sys, const Word& w) {
    Region r;
    r.kind = RegionKind::universal;
    r.word = w;
    std::map<Word, int> ids;
    const auto visit = [&](const Word& state) {
        const auto [it, fresh] = ids.emplace(state, r.copies);
        if (fresh) {
            ++r.copies;
            r.copy_words.push_back(state);
        }
        return it->second;
    };
    Word cur;
    visit(cur);
    std::set<std::pair<int, int>> seen;
    for (Letter l : w) {
        check_letter(l, static_cast<int>(sys.arcs.size()),
                     "relevant_region_universal: bad letter");
        const int here = ids.at(cur);
        const bool pop = !cur.empty() && cur.back() == -l;
        if (pop) {
            cur.pop_back();
        } else {
            cur.push_back(l);
        }
        const int there = visit(cur);
        const int parent = pop ? there : here;
        const int child = pop ? here : there;
        const Letter push = pop ? -l : l;
        if (seen.emplace(parent, child).second) {
            r.gluings.push_back(Gluing{parent, child, push});
        }
    }
    return r;
}

Region annular_region(const ArcSystem& sys, const Word& w) {
    const Word cw = cyclic_reduce_word(w);
    if (cw.empty()) {
        throw std::invalid_argument("annular_region: contractible word");
    }
    Region r;
    r.word = cw;
    r.copies = static_cast<int>(cw.size());
    int flip = +1;
    for (int j = 0; j < r.copies; ++j) {
        check_letter(cw[j], static_cast<int>(sys.arcs.size()),
                     "annular_region: bad letter");
        r.gluings.push_back(Gluing{j, (j + 1) % r.copies, cw[j]});
        flip *= sys.arcs[letter_arc(cw[j])].flip;
    }
    r.kind = flip < 0 ? RegionKind::moebius : RegionKind::annulus;
    return r;
}

// --- region search graphs --------------------------------------------------

int RegionGraph::node_of(int copy, FaceId f) const {
    require(copy >= 0 && copy < copies, "node_of: bad copy");
    require(f >= 0 && f < static_cast<FaceId>(dense_of_face.size()) &&
                dense_of_face[f] >= 0,
            "node_of: not an interior face");
    return copy * faces_per_copy + dense_of_face[f];
}

std::pair<int, FaceId> RegionGraph::copy_face(int node) const {
    return {node / faces_per_copy, face_of_dense[node % faces_per_copy]};
}

RegionGraph build_region_graph(const ArcSystem& sys, const Region& r) {
    const Map& m = sys.disk;
    RegionGraph rg;
    rg.copies = r.copies;
    rg.dense_of_face.assign(m.face_count(), -1);
    for (FaceId f = 0; f < m.face_count(); ++f) {
        if (m.face(f).hole) continue;
        rg.dense_of_face[f] = static_cast<int>(rg.face_of_dense.size());
        rg.face_of_dense.push_back(f);
    }
    rg.faces_per_copy = static_cast<int>(rg.face_of_dense.size());
    for (int n = r.copies * rg.faces_per_copy; n > 0; --n) rg.graph.add_node();

    const auto tag = [&rg](const RegionStep& st) {
        rg.tags.push_back(st);
        return static_cast<int>(rg.tags.size()) - 1;
    };

    for (EdgeId e = 0; e < m.edge_slots(); ++e) {
        if (!m.edge_alive(e) || m.edge(e).kind != EdgeKind::kGraph) continue;
        const FaceId f0 = m.side_face(e, 0);
        const FaceId f1 = m.side_face(e, 1);
        require(!m.face(f0).hole && !m.face(f1).hole,
                "build_region_graph: graph edge on the boundary");
        RegionStep fwd, bwd;
        fwd.edge = bwd.edge = e;
        fwd.from_side = 0;
        bwd.from_side = 1;
        const int tf = tag(fwd), tb = tag(bwd);
        for (int c = 0; c < r.copies; ++c) {
            rg.graph.add_arrow(rg.node_of(c, f0), rg.node_of(c, f1),
                               m.edge(e).weight, 0, e, tf);
            rg.graph.add_arrow(rg.node_of(c, f1), rg.node_of(c, f0),
                               m.edge(e).weight, 0, e, tb);
        }
    }

    const int label_base = m.edge_slots();
    for (int gi = 0; gi < static_cast<int>(r.gluings.size()); ++gi) {
        const Gluing& gl = r.gluings[gi];
        const int a = letter_arc(gl.letter);
        const int dir = gl.letter > 0 ? +1 : -1;
        const ArcRec& arc = sys.arcs[a];
        const int label_f = label_base + 2 * a + (dir > 0 ? 0 : 1);
        const int label_b = label_base + 2 * a + (dir > 0 ? 1 : 0);
        for (int i = 0; i < arc.slots(); ++i) {
            const FaceId ffrom = dir > 0 ? arc.left_face[i] : arc.right_face[i];
            const FaceId fto = dir > 0 ? arc.right_face[i] : arc.left_face[i];
            RegionStep fwd, bwd;
            fwd.is_arc = bwd.is_arc = true;
            fwd.arc = bwd.arc = a;
            fwd.slot = bwd.slot = i;
            fwd.gluing = bwd.gluing = gi;
            fwd.dir = dir;
            bwd.dir = -dir;
            rg.graph.add_arrow(rg.node_of(gl.from, ffrom), rg.node_of(gl.to, fto),
                               Rational(0), 1, label_f, tag(fwd));
            rg.graph.add_arrow(rg.node_of(gl.to, fto), rg.node_of(gl.from, ffrom),
                               Rational(0), 1, label_b, tag(bwd));
        }
    }
    return rg;
}

// --- results ---------------------------------------------------------------

Word PathResult::word() const {
    Word w;
    for (const RegionStep& st : steps) {
        if (st.is_arc) w.push_back(st.letter());
    }
    return w;
}

std::vector<EdgeId> PathResult::crossed_edges() const {
    std::vector<EdgeId> out;
    for (const RegionStep& st : steps) {
        if (!st.is_arc) out.push_back(st.edge);
    }
    return out;
}

CoverWalk to_cover_walk(const PathResult& p) {
    require(!p.nodes.empty(), "to_cover_walk: empty result");
    CoverWalk w;
    w.start = p.nodes.front().second;
    w.steps = p.steps;
    return w;
}

Word walk_word(const CoverWalk& walk) {
    Word w;
    for (const RegionStep& st : walk.steps) {
        if (st.is_arc) w.push_back(st.letter());
    }
    return w;
}

namespace {

PathResult harvest(const RegionGraph& rg, const SearchTree& t, int target) {
    PathResult p;
    p.length = t.cost[target].length;
    p.arc_crossings = t.cost[target].arc_crossings;
    const auto path = unwind_path(t, target);
    p.nodes.push_back(rg.copy_face(path.empty() ? target : path.front().first));
    for (const auto& [from, idx] : path) {
        const SearchEdge& se = rg.graph.adj[from][idx];
        p.steps.push_back(rg.tags[se.tag]);
        p.nodes.push_back(rg.copy_face(se.to));
    }
    return p;
}

// Reduces strip or double-cover indices back to the base region's.
void project(PathResult& p, int m) {
    for (auto& [copy, face] : p.nodes) copy %= m;
    for (RegionStep& st : p.steps) {
        if (st.is_arc) st.gluing %= m;
    }
}

// An unrolled strip over the cyclic word: `levels` copies in a row, level
// j-1 glued to level j along word[(j-1) mod m].  Level k plays base copy
// k mod m.
Region strip_region(const Region& r, int levels) {
    Region s;
    s.kind = RegionKind::universal;
    s.word = r.word;
    s.copies = levels;
    const int m = r.copies;
    for (int j = 1; j < levels; ++j) {
        s.gluings.push_back(Gluing{j - 1, j, r.word[(j - 1) % m]});
    }
    return s;
}

// Shortest winding-one cycle in an annular region.  Any such cycle crosses
// the gluing between copies m-1 and 0 somewhere; fixing that crossing's
// shore slot and searching the unrolled strip between two consecutive
// occurrences of the interface covers every case.  Shortest representatives
// cross each interface once, so one period of padding on both sides is
// enough room.
PathResult annulus_cycle(const ArcSystem& sys, const Region& r) {
    const int m = r.copies;
    const RegionGraph rg = build_region_graph(sys, strip_region(r, 3 * m));
    const Letter l = r.word[m - 1];
    const int a = letter_arc(l);
    const int dir = l > 0 ? +1 : -1;
    const ArcRec& arc = sys.arcs[a];

    std::optional<SearchCost> best;
    PathResult out;
    for (int i = 0; i < arc.slots(); ++i) {
        const FaceId ffrom = dir > 0 ? arc.left_face[i] : arc.right_face[i];
        const FaceId fto = dir > 0 ? arc.right_face[i] : arc.left_face[i];
        const int snode = rg.node_of(m, fto);
        const int tnode = rg.node_of(2 * m - 1, ffrom);
        const SearchTree t = lex_dijkstra(rg.graph, {snode});
        if (!t.reached[tnode]) continue;
        SearchCost cost = t.cost[tnode];
        cost.arc_crossings += 1;
        cost.word.insert(cost.word.begin(),
                         sys.disk.edge_slots() + 2 * a + (dir > 0 ? 0 : 1));
        if (best && compare_costs(cost, *best) >= 0) continue;
        best = cost;
        PathResult p = harvest(rg, t, tnode);
        RegionStep opening;
        opening.is_arc = true;
        opening.arc = a;
        opening.slot = i;
        opening.dir = dir;
        opening.gluing = m - 1;
        p.steps.insert(p.steps.begin(), opening);
        p.nodes.insert(p.nodes.begin(), {m - 1, ffrom});
        p.length = cost.length;
        p.arc_crossings = cost.arc_crossings;
        p.closed = true;
        out = std::move(p);
    }
    require(best.has_value(), "annulus_cycle: region not connected");
    project(out, m);
    return out;
}

// Shortest cycle freely homotopic to a one-sided (Moebius) word: such
// cycles lift to paths between the two fibre points of a face in the
// orientation double cover, which is the annular region of the squared
// word.  Minimising over all fibre pairs and projecting down preserves
// lengths.
PathResult moebius_cycle(const ArcSystem& sys, const Region& r) {
    const int m = r.copies;
    Word doubled = r.word;
    doubled.insert(doubled.end(), r.word.begin(), r.word.end());
    const Region dr = annular_region(sys, doubled);
    require(dr.kind == RegionKind::annulus && dr.copies == 2 * m,
            "moebius_cycle: double cover is not an annulus");
    const RegionGraph rg = build_region_graph(sys, dr);

    std::optional<SearchCost> best;
    PathResult out;
    for (int c = 0; c < m; ++c) {
        for (int d = 0; d < rg.faces_per_copy; ++d) {
            const FaceId f = rg.face_of_dense[d];
            const int snode = rg.node_of(c, f);
            const int tnode = rg.node_of(c + m, f);
            const SearchTree t = lex_dijkstra(rg.graph, {snode});
            if (!t.reached[tnode]) continue;
            const SearchCost& cost = t.cost[tnode];
            if (best && compare_costs(cost, *best) >= 0) continue;
            best = cost;
            out = harvest(rg, t, tnode);
            out.closed = true;
        }
    }
    require(best.has_value(), "moebius_cycle: cover not connected");
    project(out, m);
    return out;
}

}  // namespace

// --- searches --------------------------------------------------------------

PathResult shortest_homotopic_path(const ArcSystem& sys, const CoverWalk& walk) {
    const Map& m = sys.disk;
    require(walk.start >= 0 && walk.start < m.face_count() &&
                !m.face(walk.start).hole,
            "shortest_homotopic_path: bad start face");
    Word w;
    FaceId cur = walk.start;
    for (const RegionStep& st : walk.steps) {
        if (!st.is_arc) {
            require(st.edge >= 0 && st.edge < m.edge_slots() &&
                        m.edge_alive(st.edge) &&
                        m.edge(st.edge).kind == EdgeKind::kGraph &&
                        (st.from_side == 0 || st.from_side == 1),
                    "shortest_homotopic_path: bad graph step");
            require(m.side_face(st.edge, st.from_side) == cur,
                    "shortest_homotopic_path: walk does not chain");
            cur = m.side_face(st.edge, 1 - st.from_side);
        } else {
            require(st.arc >= 0 && st.arc < static_cast<int>(sys.arcs.size()) &&
                        (st.dir == +1 || st.dir == -1),
                    "shortest_homotopic_path: bad arc step");
            const ArcRec& arc = sys.arcs[st.arc];
            require(st.slot >= 0 && st.slot < arc.slots(),
                    "shortest_homotopic_path: bad shore slot");
            const FaceId ffrom =
                st.dir > 0 ? arc.left_face[st.slot] : arc.right_face[st.slot];
            const FaceId fto =
                st.dir > 0 ? arc.right_face[st.slot] : arc.left_face[st.slot];
            require(ffrom == cur,
                    "shortest_homotopic_path: walk does not chain at an arc");
            cur = fto;
            w.push_back(st.letter());
        }
    }

    const Region r = relevant_region_universal(sys, w);
    const RegionGraph rg = build_region_graph(sys, r);
    const Word endstate = reduce_word(w);
    int endcopy = -1;
    for (int c = 0; c < r.copies; ++c) {
        if (r.copy_words[c] == endstate) {
            endcopy = c;
            break;
        }
    }
    require(endcopy >= 0, "shortest_homotopic_path: end state missing");
    const SearchTree t = lex_dijkstra(rg.graph, {rg.node_of(0, walk.start)});
    const int tnode = rg.node_of(endcopy, cur);
    require(t.reached[tnode], "shortest_homotopic_path: region not connected");
    return harvest(rg, t, tnode);
}

CycleSearch shortest_homotopic_cycle(const ArcSystem& sys, const Word& w) {
    CycleSearch out;
    out.region = annular_region(sys, w);
    out.best = out.region.kind == RegionKind::moebius
                   ? moebius_cycle(sys, out.region)
                   : annulus_cycle(sys, out.region);
    return out;
}

PathResult shortest_cycle_through_face(const ArcSystem& sys, const Region& r,
                                       int copy, FaceId face) {
    require(r.kind == RegionKind::annulus,
            "shortest_cycle_through_face: annulus regions only");
    const int m = r.copies;
    require(copy >= 0 && copy < m, "shortest_cycle_through_face: bad copy");
    const RegionGraph rg = build_region_graph(sys, strip_region(r, 3 * m));
    const int snode = rg.node_of(m + copy, face);
    const int tnode = rg.node_of(2 * m + copy, face);
    const SearchTree t = lex_dijkstra(rg.graph, {snode});
    require(t.reached[tnode], "shortest_cycle_through_face: region not connected");
    PathResult out = harvest(rg, t, tnode);
    out.closed = true;
    project(out, m);
    return out;
}

}  // namespace smc
