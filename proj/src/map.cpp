#include "smc/map.hpp"

#include "smc/require.hpp"

#include <algorithm>
#include <unordered_set>

namespace smc {

namespace {

// Intrinsic side class of a traversal of edge e: side 0 is the mirror pair
// of (2e,+1), which is (2e+1, -sign).  Sides named this way are stable
// while unrelated parts of the map mutate, and each side is traversed by
// exactly one canonical orbit step.
int side_class(EdgeId e, int sign, int sd) {
    const Dart d = sdart_dart(sd);
    const int flag = sdart_flag(sd);
    if (d == dart_of(e, 0)) return flag > 0 ? 0 : 1;
    if (d == dart_of(e, 1)) return flag == -sign ? 0 : 1;
    fail("side_class: signed dart does not belong to edge");
}

}  // namespace

// --- construction ----------------------------------------------------------

VertexId Map::add_vertex() {
    vertex_alive_.push_back(1);
    mark_faces_dirty();
    return static_cast<VertexId>(vertex_alive_.size()) - 1;
}

EdgeId Map::add_edge(VertexId u, VertexId v, int sign, EdgeKind kind,
                     const Rational& weight, int base) {
    require(u >= 0 && u < vertex_slots() && vertex_alive_[u], "add_edge: bad u");
    require(v >= 0 && v < vertex_slots() && vertex_alive_[v], "add_edge: bad v");
    require(sign == +1 || sign == -1, "add_edge: bad sign");
    EdgeRec rec;
    rec.u = u;
    rec.v = v;
    rec.sign = sign;
    rec.kind = kind;
    rec.weight = weight;
    rec.base = base;
    edges_.push_back(rec);
    split_children_.emplace_back(kNone, kNone);
    rot_next_.push_back(kNone);
    rot_next_.push_back(kNone);
    rot_prev_.push_back(kNone);
    rot_prev_.push_back(kNone);
    dart_tail_.push_back(u);
    dart_tail_.push_back(v);
    mark_faces_dirty();
    return static_cast<EdgeId>(edges_.size()) - 1;
}

void Map::set_rotation(VertexId v, const std::vector<Dart>& darts) {
    require(!sealed_, "set_rotation: map already sealed");
    require(!darts.empty(), "set_rotation: empty rotation");
    for (Dart d : darts) {
        require(d >= 0 && d < 2 * edge_slots(), "set_rotation: dart out of range");
        require(edges_[edge_of(d)].alive, "set_rotation: dead edge");
        require(dart_tail_[d] == v, "set_rotation: dart not at vertex");
    }
    const int n = static_cast<int>(darts.size());
    for (int i = 0; i < n; ++i) {
        rot_next_[darts[i]] = darts[(i + 1) % n];
        rot_prev_[darts[(i + 1) % n]] = darts[i];
    }
    mark_faces_dirty();
}

void Map::seal() {
    require(!sealed_, "seal: already sealed");
    // Every dart of an alive edge must sit in a rotation cycle at its tail.
    std::vector<char> seen(2 * edge_slots(), 0);
    for (EdgeId e = 0; e < edge_slots(); ++e) {
        if (!edges_[e].alive) continue;
        for (int end = 0; end < 2; ++end) {
            const Dart d = dart_of(e, end);
            if (seen[d]) continue;
            require(rot_next_[d] != kNone, "seal: dart missing from rotation");
            Dart cur = d;
            do {
                require(!seen[cur], "seal: rotation cycles overlap");
                seen[cur] = 1;
                require(dart_tail_[cur] == dart_tail_[d],
                        "seal: rotation mixes vertices");
                require(rot_prev_[rot_next_[cur]] == cur,
                        "seal: rotation links inconsistent");
                cur = rot_next_[cur];
            } while (cur != d);
        }
    }
    sealed_ = true;
    mark_faces_dirty();
}

// --- basic access ----------------------------------------------------------

int Map::vertex_count() const {
    return static_cast<int>(std::count(vertex_alive_.begin(), vertex_alive_.end(), 1));
}

int Map::edge_count() const {
    int n = 0;
    for (const EdgeRec& e : edges_) n += e.alive ? 1 : 0;
    return n;
}

int Map::degree(VertexId v) const {
    int n = 0;
    for (EdgeId e = 0; e < edge_slots(); ++e) {
        if (!edges_[e].alive) continue;
        if (dart_tail_[dart_of(e, 0)] == v) ++n;
        if (dart_tail_[dart_of(e, 1)] == v) ++n;
    }
    return n;
}

int Map::degree_of_kind(VertexId v, EdgeKind kind) const {
    int n = 0;
    for (EdgeId e = 0; e < edge_slots(); ++e) {
        if (!edges_[e].alive || edges_[e].kind != kind) continue;
        if (dart_tail_[dart_of(e, 0)] == v) ++n;
        if (dart_tail_[dart_of(e, 1)] == v) ++n;
    }
    return n;
}

std::vector<Dart> Map::rotation_of(VertexId v) const {
    // Deterministic entry point: the lowest dart with tail v.
    Dart entry = kNone;
    for (Dart d = 0; d < 2 * edge_slots(); ++d) {
        if (edges_[edge_of(d)].alive && dart_tail_[d] == v) {
            entry = d;
            break;
        }
    }
    std::vector<Dart> out;
    if (entry == kNone) return out;
    Dart cur = entry;
    do {
        out.push_back(cur);
        cur = rot_next_[cur];
        require(cur != kNone, "rotation_of: broken rotation link");
        require(out.size() <= static_cast<std::size_t>(2 * edge_slots()),
                "rotation_of: rotation does not close");
    } while (cur != entry);
    return out;
}

// --- face tracing ----------------------------------------------------------

int Map::face_next(int sd) const {
    const Dart d = sdart_dart(sd);
    const int s2 = sdart_flag(sd) * edges_[edge_of(d)].sign;
    const Dart r = reversed(d);
    const Dart nd = s2 > 0 ? rot_next_[r] : rot_prev_[r];
    require(nd != kNone, "face_next: broken rotation link");
    return sdart(nd, s2);
}

void Map::ensure_faces() const {
    if (!faces_dirty_) return;
    faces_.clear();
    face_of_sdart_.assign(static_cast<std::size_t>(4) * edge_slots(), kNone);
    sides_.assign(edge_slots(), SideSlots{});

    for (int sd = 0; sd < 4 * edge_slots(); ++sd) {
        if (!edges_[edge_of(sdart_dart(sd))].alive) continue;
        if (face_of_sdart_[sd] != kNone) continue;
        // Trace the canonical orbit from the smallest unvisited signed dart,
        // then mark its mirror orbit with the same face id.  Ascending order
        // makes face numbering deterministic.
        const FaceId f = static_cast<FaceId>(faces_.size());
        FaceRec rec;
        int cur = sd;
        do {
            require(face_of_sdart_[cur] == kNone, "trace: orbits collide");
            face_of_sdart_[cur] = f;
            rec.steps.push_back(cur);
            cur = face_next(cur);
        } while (cur != sd);
        for (std::size_t i = 0; i < rec.steps.size(); ++i) {
            const int m = sdart_mirror(rec.steps[i]);
            require(face_of_sdart_[m] == kNone, "trace: self-mirror orbit");
            face_of_sdart_[m] = f;
        }
        for (std::size_t i = 0; i < rec.steps.size(); ++i) {
            const int t = rec.steps[i];
            const EdgeId e = edge_of(sdart_dart(t));
            const int cls = side_class(e, edges_[e].sign, t);
            require(sides_[e].face[cls] == kNone, "trace: side visited twice");
            sides_[e].face[cls] = f;
            sides_[e].step[cls] = static_cast<int>(i);
            ++sides_[e].count;
        }
        faces_.push_back(std::move(rec));
    }

    for (EdgeId e = 0; e < edge_slots(); ++e) {
        if (!edges_[e].alive) continue;
        require(sides_[e].count == 2 && sides_[e].face[0] != kNone &&
                    sides_[e].face[1] != kNone,
                "trace: edge does not bound exactly two sides");
    }

    // Resolve hole anchors to faces.  Hole faces must be bounded purely by
    // rim edges; anything else indicates broken surgery.
    hole_face_cache_.assign(hole_anchors_.size(), kNone);
    for (std::size_t h = 0; h < hole_anchors_.size(); ++h) {
        if (!hole_alive_[h]) continue;
        const int sd = hole_anchors_[h];
        require(edges_[edge_of(sdart_dart(sd))].alive, "hole anchor on dead edge");
        const FaceId f = face_of_sdart_[sd];
        require(f != kNone, "hole anchor unresolved");
        require(!faces_[f].hole, "two holes resolve to one face");
        faces_[f].hole = true;
        hole_face_cache_[h] = f;
        for (int t : faces_[f].steps) {
            require(edges_[edge_of(sdart_dart(t))].kind == EdgeKind::kRim,
                    "hole face bounded by a non-rim edge");
        }
    }

    faces_dirty_ = false;
}

int Map::face_count() const {
    ensure_faces();
    return static_cast<int>(faces_.size());
}

const FaceRec& Map::face(FaceId f) const {
    ensure_faces();
    require(f >= 0 && f < static_cast<FaceId>(faces_.size()), "face: bad id");
    return faces_[f];
}

const std::vector<FaceRec>& Map::faces() const {
    ensure_faces();
    return faces_;
}

FaceId Map::face_of_sdart(int sd) const {
    ensure_faces();
    require(sd >= 0 && sd < static_cast<int>(face_of_sdart_.size()),
            "face_of_sdart: out of range");
    const FaceId f = face_of_sdart_[sd];
    require(f != kNone, "face_of_sdart: dead dart");
    return f;
}

FaceId Map::side_face(EdgeId e, int side) const {
    ensure_faces();
    require(e >= 0 && e < edge_slots() && edges_[e].alive, "side_face: bad edge");
    require(side == 0 || side == 1, "side_face: bad side");
    return sides_[e].face[side];
}

Corner Map::side_corner(EdgeId e, int side) const {
    ensure_faces();
    require(e >= 0 && e < edge_slots() && edges_[e].alive, "side_corner: bad edge");
    require(side == 0 || side == 1, "side_corner: bad side");
    return Corner{sides_[e].face[side], sides_[e].step[side]};
}

int Map::side_of_face(EdgeId e, FaceId f) const {
    ensure_faces();
    if (sides_[e].face[0] == f) return 0;
    if (sides_[e].face[1] == f) return 1;
    return -1;
}

Corner Map::locate_corner(int sd) const {
    ensure_faces();
    const FaceId f = face_of_sdart(sd);
    require(f != kNone, "locate_corner: signed dart not in any face");
    const auto& steps = faces_[f].steps;
    const int len = static_cast<int>(steps.size());
    const int mirror = sdart_mirror(sd);
    for (int i = 0; i < len; ++i) {
        if (steps[i] == sd) return Corner{f, i};
        if (steps[i] == mirror) return Corner{f, (i - 1 + len) % len};
    }
    fail("locate_corner: signed dart missing from its face orbit");
}

std::vector<Corner> Map::corners_at(VertexId v) const {
    ensure_faces();
    std::vector<Corner> out;
    for (FaceId f = 0; f < static_cast<FaceId>(faces_.size()); ++f) {
        const auto& steps = faces_[f].steps;
        for (std::size_t i = 0; i < steps.size(); ++i) {
            const Dart d = sdart_dart(steps[i]);
            if (dart_tail_[reversed(d)] == v) {
                out.push_back(Corner{f, static_cast<int>(i)});
            }
        }
    }
    return out;
}

int Map::hole_count() const {
    int n = 0;
    for (char a : hole_alive_) n += a ? 1 : 0;
    return n;
}

int Map::hole_slots() const { return static_cast<int>(hole_alive_.size()); }

FaceId Map::hole_face(int hole) const {
    ensure_faces();
    require(hole >= 0 && hole < static_cast<int>(hole_anchors_.size()) &&
                hole_alive_[hole],
            "hole_face: bad hole");
    return hole_face_cache_[hole];
}

bool Map::hole_alive(int hole) const {
    return hole >= 0 && hole < static_cast<int>(hole_alive_.size()) &&
           hole_alive_[hole];
}

int Map::hole_of_face(FaceId f) const {
    ensure_faces();
    for (std::size_t h = 0; h < hole_anchors_.size(); ++h) {
        if (hole_alive_[h] && hole_face_cache_[h] == f) return static_cast<int>(h);
    }
    return kNone;
}

int Map::flag_after(FaceId f, int index) const {
    const int t = faces_[f].steps[index];
    return sdart_flag(t) * edges_[edge_of(sdart_dart(t))].sign;
}

// --- invariants ------------------------------------------------------------

int Map::euler_characteristic_closed() const {
    return vertex_count() - edge_count() + face_count();
}

int Map::euler_genus() const {
    require(is_connected(), "euler_genus: map not connected");
    return 2 - euler_characteristic_closed();
}

bool Map::is_connected() const {
    VertexId start = kNone;
    for (VertexId v = 0; v < vertex_slots(); ++v) {
        if (vertex_alive_[v]) {
            start = v;
            break;
        }
    }
    if (start == kNone) return true;
    std::vector<char> seen(vertex_slots(), 0);
    std::vector<VertexId> stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
        const VertexId v = stack.back();
        stack.pop_back();
        for (Dart d : rotation_of(v)) {
            const VertexId w = dart_tail_[reversed(d)];
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    for (VertexId v = 0; v < vertex_slots(); ++v) {
        if (vertex_alive_[v] && !seen[v]) return false;
    }
    return true;
}

bool Map::is_orientable() const {
    // Vertex switching: assign rho(v) in {+1,-1} along a spanning forest and
    // check every non-tree edge satisfies sign(e) == rho(u)*rho(v).  Cycle
    // sign products are switching-invariant, so the map is orientable exactly
    // when this succeeds (a sign -1 loop always fails).
    std::vector<int> rho(vertex_slots(), 0);
    for (VertexId root = 0; root < vertex_slots(); ++root) {
        if (!vertex_alive_[root] || rho[root] != 0) continue;
        rho[root] = +1;
        std::vector<VertexId> stack{root};
        while (!stack.empty()) {
            const VertexId v = stack.back();
            stack.pop_back();
            for (Dart d : rotation_of(v)) {
                const VertexId w = dart_tail_[reversed(d)];
                const int s = edges_[edge_of(d)].sign;
                if (rho[w] == 0) {
                    rho[w] = rho[v] * s;
                    stack.push_back(w);
                } else if (rho[w] != rho[v] * s) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::optional<std::vector<int>> Map::orient_faces() const {
    ensure_faces();
    // A canonical step traverses its edge in the direction of its dart, so
    // two faces induce opposite directions on a shared edge exactly when the
    // stored steps of the two sides use different darts.  Keeping a face as
    // traced counts as +1 and reversing it as -1; propagate the resulting
    // +-1 constraints and report a contradiction as non-orientability.
    std::vector<int> orient(faces_.size(), 0);
    for (FaceId root = 0; root < static_cast<FaceId>(faces_.size()); ++root) {
        if (orient[root] != 0) continue;
        orient[root] = +1;
        std::vector<FaceId> stack{root};
        while (!stack.empty()) {
            const FaceId f = stack.back();
            stack.pop_back();
            for (int t : faces_[f].steps) {
                const EdgeId e = edge_of(sdart_dart(t));
                const int cls = side_class(e, edges_[e].sign, t);
                const FaceId g = sides_[e].face[1 - cls];
                const int tg = faces_[g].steps[sides_[e].step[1 - cls]];
                const int rel = sdart_dart(t) == sdart_dart(tg) ? -1 : +1;
                const int want = orient[f] * rel;
                if (orient[g] == 0) {
                    orient[g] = want;
                    stack.push_back(g);
                } else if (orient[g] != want) {
                    return std::nullopt;
                }
            }
        }
    }
    return orient;
}

void Map::check() const {
    require(sealed_, "check: map not sealed");
    // Rotations partition the alive darts into per-vertex cycles.
    std::vector<char> seen(2 * edge_slots(), 0);
    int alive_darts = 0;
    for (EdgeId e = 0; e < edge_slots(); ++e) {
        if (!edges_[e].alive) continue;
        alive_darts += 2;
        require(edges_[e].u == dart_tail_[dart_of(e, 0)] &&
                    edges_[e].v == dart_tail_[dart_of(e, 1)],
                "check: edge record out of sync with dart tails");
        require(vertex_alive_[edges_[e].u] && vertex_alive_[edges_[e].v],
                "check: edge touches a dead vertex");
        for (int end = 0; end < 2; ++end) {
            const Dart d = dart_of(e, end);
            if (seen[d]) continue;
            Dart cur = d;
            do {
                require(!seen[cur], "check: rotation cycles overlap");
                seen[cur] = 1;
                require(edges_[edge_of(cur)].alive, "check: dead dart in rotation");
                require(dart_tail_[cur] == dart_tail_[d],
                        "check: rotation mixes vertices");
                require(rot_prev_[rot_next_[cur]] == cur,
                        "check: rotation links inconsistent");
                cur = rot_next_[cur];
            } while (cur != d);
        }
    }
    int seen_darts = 0;
    for (char c : seen) seen_darts += c ? 1 : 0;
    require(seen_darts == alive_darts, "check: darts missing from rotations");
    for (VertexId v = 0; v < vertex_slots(); ++v) {
        if (vertex_alive_[v]) {
            require(degree(v) >= 1, "check: isolated vertex");
        }
    }
    ensure_faces();
    // Canonical orbits carry each alive edge twice, i.e. one signed dart per
    // physical dart.
    std::size_t step_total = 0;
    for (const FaceRec& f : faces_) step_total += f.steps.size();
    require(step_total == static_cast<std::size_t>(alive_darts),
            "check: face orbits do not cover the darts");
    // Curves: alive curve pieces must be alive edges chained along `through`.
    for (const CurveRec& c : curves_) {
        if (!c.alive) continue;
        require(c.pieces.size() == c.crossed_before.size(),
                "check: curve bookkeeping out of step");
        for (std::size_t i = 0; i < c.pieces.size(); ++i) {
            const EdgeId p = c.pieces[i];
            require(edges_[p].alive, "check: dead curve piece");
            const VertexId a = c.through[i];
            const VertexId b = c.through[(i + 1) % c.through.size()];
            const bool fwd = edges_[p].u == a && edges_[p].v == b;
            const bool bwd = edges_[p].u == b && edges_[p].v == a;
            require(fwd || bwd, "check: curve piece detached from through list");
        }
    }
}

// --- curves ----------------------------------------------------------------

int Map::new_curve(EdgeKind kind, bool closed) {
    CurveRec rec;
    rec.kind = kind;
    rec.closed = closed;
    curves_.push_back(std::move(rec));
    return static_cast<int>(curves_.size()) - 1;
}

// --- surgery ---------------------------------------------------------------

namespace {

// Rewires the rotation at one vertex as the given cyclic sequence.
void wire_cycle(std::vector<Dart>& rn, std::vector<Dart>& rp,
                const std::vector<Dart>& cyc) {
    const int n = static_cast<int>(cyc.size());
    for (int i = 0; i < n; ++i) {
        rn[cyc[i]] = cyc[(i + 1) % n];
        rp[cyc[(i + 1) % n]] = cyc[i];
    }
}

}  // namespace

SubdivideResult Map::subdivide(EdgeId e) {
    require(sealed_, "subdivide: map not sealed");
    require(e >= 0 && e < edge_slots() && edges_[e].alive, "subdivide: bad edge");
    const EdgeRec old = edges_[e];
    const bool loop = old.u == old.v;

    SubdivideResult res;
    res.mid = add_vertex();
    // The u-side piece keeps the sign; the v-side piece is +1, so the total
    // sign along the pair equals the original and crossing either piece
    // still refers to the original weight through `base`.
    res.first = add_edge(old.u, res.mid, old.sign, old.kind, old.weight, old.base);
    res.second = add_edge(res.mid, old.v, +1, old.kind, old.weight, old.base);
    edges_[res.first].curve = old.curve;
    edges_[res.second].curve = old.curve;

    const Dart d0 = dart_of(e, 0), d1 = dart_of(e, 1);
    const Dart f0 = dart_of(res.first, 0), f1 = dart_of(res.first, 1);
    const Dart g0 = dart_of(res.second, 0), g1 = dart_of(res.second, 1);

    std::vector<Dart> rot_u = rotation_of(old.u);
    for (Dart& d : rot_u) {
        if (d == d0) d = f0;
        if (loop && d == d1) d = g1;
    }
    wire_cycle(rot_next_, rot_prev_, rot_u);
    if (!loop) {
        std::vector<Dart> rot_v = rotation_of(old.v);
        for (Dart& d : rot_v) {
            if (d == d1) d = g1;
        }
        wire_cycle(rot_next_, rot_prev_, rot_v);
    }
    wire_cycle(rot_next_, rot_prev_, {f1, g0});

    edges_[e].alive = false;
    split_children_[e] = {res.first, res.second};

    // Keep the owning curve's bookkeeping aligned: the subdivided piece is
    // replaced by its two halves in curve order and the new vertex joins the
    // through-list (the crossing edge there is not known yet).
    if (old.curve != kNone && curves_[old.curve].alive) {
        CurveRec& c = curves_[old.curve];
        auto it = std::find(c.pieces.begin(), c.pieces.end(), e);
        require(it != c.pieces.end(), "subdivide: piece missing from curve");
        const std::size_t k = static_cast<std::size_t>(it - c.pieces.begin());
        const VertexId tail_vertex = c.through[k];
        std::pair<EdgeId, EdgeId> ordered;
        if (old.u == tail_vertex) {
            ordered = {res.first, res.second};
        } else {
            require(old.v == tail_vertex, "subdivide: curve through-list broken");
            ordered = {res.second, res.first};
        }
        c.pieces[k] = ordered.first;
        c.pieces.insert(c.pieces.begin() + k + 1, ordered.second);
        c.through.insert(c.through.begin() + k + 1, res.mid);
        c.crossed_before.insert(c.crossed_before.begin() + k + 1, kNone);
    }

    for (std::size_t h = 0; h < hole_anchors_.size(); ++h) {
        if (!hole_alive_[h]) continue;
        hole_anchors_[h] = remap_sdart_after_subdivide(hole_anchors_[h], e, res);
    }

    mark_faces_dirty();
    return res;
}

int Map::remap_sdart_after_subdivide(int sd, EdgeId e, const SubdivideResult& r) {
    const Dart d = sdart_dart(sd);
    const int flag = sdart_flag(sd);
    // A traversal of e becomes a traversal of two pieces; the remapped dart
    // is the piece leg *arriving at the new vertex*, which also preserves
    // "this signed dart's orbit belongs to face F".
    if (d == dart_of(e, 0)) return sdart(dart_of(r.first, 0), flag);
    if (d == dart_of(e, 1)) return sdart(dart_of(r.second, 1), flag);
    return sd;
}

void Map::retarget_dart(Dart d, VertexId v) {
    dart_tail_[d] = v;
    if (d & 1) {
        edges_[edge_of(d)].v = v;
    } else {
        edges_[edge_of(d)].u = v;
    }
}

void Map::insert_dart_after(Dart anchor, Dart fresh) {
    const Dart n = rot_next_[anchor];
    rot_next_[anchor] = fresh;
    rot_prev_[fresh] = anchor;
    rot_next_[fresh] = n;
    rot_prev_[n] = fresh;
}

void Map::insert_dart_before(Dart anchor, Dart fresh) {
    const Dart p = rot_prev_[anchor];
    rot_next_[p] = fresh;
    rot_prev_[fresh] = p;
    rot_next_[fresh] = anchor;
    rot_prev_[anchor] = fresh;
}

void Map::detach_dart(Dart d) {
    const Dart n = rot_next_[d];
    const Dart p = rot_prev_[d];
    require(n != d, "detach_dart: cannot empty a rotation");
    rot_next_[p] = n;
    rot_prev_[n] = p;
    rot_next_[d] = kNone;
    rot_prev_[d] = kNone;
}

EdgeId Map::add_chord(Corner a, Corner b, EdgeKind kind, int curve_id) {
    ensure_faces();
    require(a.face == b.face, "add_chord: corners on different faces");
    require(a.face >= 0 && a.face < static_cast<FaceId>(faces_.size()),
            "add_chord: bad face");
    require(!faces_[a.face].hole, "add_chord: cannot chord a hole");
    require(!(a.index == b.index), "add_chord: corners must be distinct");
    const auto& steps = faces_[a.face].steps;
    require(a.index >= 0 && a.index < static_cast<int>(steps.size()) &&
                b.index >= 0 && b.index < static_cast<int>(steps.size()),
            "add_chord: corner index out of range");

    const Dart da = sdart_dart(steps[a.index]);
    const Dart db = sdart_dart(steps[b.index]);
    const VertexId wa = dart_tail_[reversed(da)];
    const VertexId wb = dart_tail_[reversed(db)];
    const int sa = flag_after(a.face, a.index);
    const int sb = flag_after(b.face, b.index);

    // The chord must become the walk's next turn at both corners: with flag
    // +1 the walk turns to the rotation successor of the arrival dart's
    // reverse, with flag -1 to the predecessor.  The chord's sign sa*sb makes
    // the walk arrive at the far corner with that corner's flag.
    const EdgeId chord = add_edge(wa, wb, sa * sb, kind, Rational(0), kNone);
    edges_[chord].curve = curve_id;
    const Dart ca = dart_of(chord, 0);
    const Dart cb = dart_of(chord, 1);
    if (sa > 0) {
        insert_dart_after(reversed(da), ca);
    } else {
        insert_dart_before(reversed(da), ca);
    }
    if (sb > 0) {
        insert_dart_after(reversed(db), cb);
    } else {
        insert_dart_before(reversed(db), cb);
    }
    mark_faces_dirty();
    return chord;
}

std::pair<VertexId, EdgeId> Map::add_spur(Corner b, EdgeKind kind, int curve_id) {
    ensure_faces();
    require(b.face >= 0 && b.face < static_cast<FaceId>(faces_.size()),
            "add_spur: bad face");
    require(!faces_[b.face].hole, "add_spur: cannot spur into a hole");
    const auto& steps = faces_[b.face].steps;
    require(b.index >= 0 && b.index < static_cast<int>(steps.size()),
            "add_spur: corner index out of range");
    const Dart db = sdart_dart(steps[b.index]);
    const VertexId wb = dart_tail_[reversed(db)];
    const int sb = flag_after(b.face, b.index);

    const VertexId w = add_vertex();
    const EdgeId spur = add_edge(wb, w, +1, kind, Rational(0), kNone);
    edges_[spur].curve = curve_id;
    const Dart at_b = dart_of(spur, 0);
    const Dart at_w = dart_of(spur, 1);
    if (sb > 0) {
        insert_dart_after(reversed(db), at_b);
    } else {
        insert_dart_before(reversed(db), at_b);
    }
    wire_cycle(rot_next_, rot_prev_, {at_w});
    mark_faces_dirty();
    return {w, spur};
}

int Map::draw_curve(const std::vector<CrossingStep>& walk, bool closed,
                    EdgeKind kind) {
    ensure_faces();
    require(!walk.empty(), "draw_curve: empty walk");
    {
        std::unordered_set<EdgeId> distinct;
        for (const CrossingStep& st : walk) {
            require(st.edge >= 0 && st.edge < edge_slots() &&
                        edges_[st.edge].alive,
                    "draw_curve: bad edge in walk");
            require(st.from_side == 0 || st.from_side == 1,
                    "draw_curve: bad side in walk");
            require(distinct.insert(st.edge).second,
                    "draw_curve: edge crossed twice (subdivide and re-plan)");
        }
    }
    const std::size_t n = walk.size();
    if (closed) {
        for (std::size_t i = 0; i < n; ++i) {
            require(edges_[walk[i].edge].kind != EdgeKind::kRim,
                    "draw_curve: closed curve crossing a rim");
            const CrossingStep& cur = walk[i];
            const CrossingStep& nxt = walk[(i + 1) % n];
            const FaceId between = side_face(cur.edge, 1 - cur.from_side);
            require(between == side_face(nxt.edge, nxt.from_side),
                    "draw_curve: walk faces do not chain");
            require(!faces_[between].hole, "draw_curve: walk enters a hole");
        }
    } else {
        require(n >= 2, "draw_curve: open walk needs both rim crossings");
        require(edges_[walk.front().edge].kind == EdgeKind::kRim &&
                    edges_[walk.back().edge].kind == EdgeKind::kRim,
                "draw_curve: open walk must start and end on rims");
        require(faces_[side_face(walk.front().edge, walk.front().from_side)].hole,
                "draw_curve: open walk must start from a hole");
        require(faces_[side_face(walk.back().edge, 1 - walk.back().from_side)].hole,
                "draw_curve: open walk must end in a hole");
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (i > 0) {
                require(edges_[walk[i].edge].kind != EdgeKind::kRim,
                        "draw_curve: interior crossing of a rim");
            }
            const FaceId between = side_face(walk[i].edge, 1 - walk[i].from_side);
            require(between == side_face(walk[i + 1].edge, walk[i + 1].from_side),
                    "draw_curve: walk faces do not chain");
            require(!faces_[between].hole, "draw_curve: walk enters a hole");
        }
    }

    const int cid = new_curve(kind, closed);
    CurveRec& rec = curves_[cid];

    // Per crossing: snapshot the two side traversals, subdivide, and recover
    // the near/far corners of the new vertex through the signed-dart remap.
    // prev_sd tracks the corner the next chord leaves from.
    int prev_sd = kNone;
    int first_entry_sd = kNone;
    EdgeId pending_cross = kNone;

    for (std::size_t i = 0; i < n; ++i) {
        ensure_faces();
        const EdgeId e = walk[i].edge;
        const int s = walk[i].from_side;
        const int t_entry = faces_[sides_[e].face[s]].steps[sides_[e].step[s]];
        const int t_far =
            faces_[sides_[e].face[1 - s]].steps[sides_[e].step[1 - s]];
        if (prev_sd != kNone) {
            require(face_of_sdart(prev_sd) == side_face(e, s),
                    "draw_curve: drifted out of the chained face");
        }
        const SubdivideResult sub = subdivide(e);
        const int near_sd = remap_sdart_after_subdivide(t_entry, e, sub);
        const int far_sd = remap_sdart_after_subdivide(t_far, e, sub);
        if (prev_sd != kNone) {
            const Corner a = locate_corner(prev_sd);
            const Corner b = locate_corner(near_sd);
            const EdgeId chord = add_chord(a, b, kind, cid);
            rec.pieces.push_back(chord);
            rec.crossed_before.push_back(pending_cross);
        } else if (closed) {
            first_entry_sd = near_sd;
        }
        rec.through.push_back(sub.mid);
        pending_cross = (edges_[e].kind == EdgeKind::kRim) ? kNone : e;
        prev_sd = far_sd;
    }
    if (closed) {
        const Corner a = locate_corner(prev_sd);
        const Corner b = locate_corner(first_entry_sd);
        const EdgeId chord = add_chord(a, b, kind, cid);
        rec.pieces.push_back(chord);
        rec.crossed_before.push_back(pending_cross);
    }
    require(rec.pieces.size() + (closed ? 0 : 1) == rec.through.size(),
            "draw_curve: piece bookkeeping out of step");
    return cid;
}

int Map::carve_vertex(VertexId v) {
    require(sealed_, "carve_vertex: map not sealed");
    require(v >= 0 && v < vertex_slots() && vertex_alive_[v],
            "carve_vertex: bad vertex");
    const std::vector<Dart> rot = rotation_of(v);
    const int d = static_cast<int>(rot.size());
    require(d >= 1, "carve_vertex: isolated vertex");

    std::vector<VertexId> stubs(d);
    for (int i = 0; i < d; ++i) stubs[i] = add_vertex();

    if (d == 1) {
        // A single incident end gets one stub with a rim loop around it; the
        // loop's inside is the hole.
        const EdgeId r = add_edge(stubs[0], stubs[0], +1, EdgeKind::kRim, Rational(0));
        retarget_dart(rot[0], stubs[0]);
        wire_cycle(rot_next_, rot_prev_, {rot[0], dart_of(r, 0), dart_of(r, 1)});
        vertex_alive_[v] = 0;
        hole_anchors_.push_back(sdart(dart_of(r, 0), -1));
        hole_alive_.push_back(1);
        mark_faces_dirty();
        return static_cast<int>(hole_anchors_.size()) - 1;
    }

    std::vector<EdgeId> rims(d);
    for (int i = 0; i < d; ++i) {
        rims[i] = add_edge(stubs[i], stubs[(i + 1) % d], +1, EdgeKind::kRim,
                           Rational(0));
    }
    // Stub i keeps the original end rot[i] and sits between rim i (towards
    // stub i+1) and rim i-1 (towards stub i-1); every old corner (rot[i] ->
    // rot[i+1]) becomes (rot[i] -> rim i -> rot[i+1]), and the rims traced
    // against the flow bound the new hole.
    for (int i = 0; i < d; ++i) {
        retarget_dart(rot[i], stubs[i]);
        const Dart out_rim = dart_of(rims[i], 0);
        const Dart in_rim = dart_of(rims[(i + d - 1) % d], 1);
        wire_cycle(rot_next_, rot_prev_, {rot[i], out_rim, in_rim});
    }
    vertex_alive_[v] = 0;
    hole_anchors_.push_back(sdart(dart_of(rims[0], 0), -1));
    hole_alive_.push_back(1);
    mark_faces_dirty();
    return static_cast<int>(hole_anchors_.size()) - 1;
}

CutResult Map::cut_along(int curve_id) {
    require(curve_id >= 0 && curve_id < curve_count(), "cut_along: bad curve");
    CurveRec& c = curves_[curve_id];
    require(c.alive, "cut_along: curve already dead");
    require(!c.closed, "cut_along: only open arcs can be cut");
    require(c.kind == EdgeKind::kArc, "cut_along: curve is not an arc");
    const int m = static_cast<int>(c.pieces.size());
    require(m >= 1 && c.through.size() == static_cast<std::size_t>(m) + 1,
            "cut_along: malformed arc");

    ensure_faces();
    const int chi_before = euler_characteristic_closed();
    const int holes_before = hole_count();

    // Forward darts along the arc and accumulated sign parity; sigma[k] is
    // the parity after traversing pieces 1..k and decides which of the two
    // transversal edges at each crossing is on the "left" shore (left/right
    // are arbitrary but must be consistent along the arc).
    std::vector<Dart> fwd(m);
    std::vector<int> sigma(m + 1, +1);
    for (int k = 0; k < m; ++k) {
        const EdgeId p = c.pieces[k];
        require(edges_[p].alive, "cut_along: dead piece");
        if (edges_[p].u == c.through[k]) {
            fwd[k] = dart_of(p, 0);
        } else {
            require(edges_[p].v == c.through[k], "cut_along: through-list broken");
            fwd[k] = dart_of(p, 1);
        }
        sigma[k + 1] = sigma[k] * edges_[p].sign;
    }

    // Identify the holes at the two endpoints before any surgery.
    const auto hole_at = [this](VertexId v, Dart arc_dart) {
        const Dart r1 = rot_next_[arc_dart];
        const Dart r2 = rot_prev_[arc_dart];
        require(rot_next_[r1] == r2 && rot_next_[r2] == arc_dart,
                "cut_along: endpoint is not a degree-3 rim vertex");
        require(edges_[edge_of(r1)].kind == EdgeKind::kRim &&
                    edges_[edge_of(r2)].kind == EdgeKind::kRim,
                "cut_along: endpoint not on a hole boundary");
        (void)v;
        const EdgeId rim = edge_of(r1);
        const FaceId f0 = side_face(rim, 0);
        const FaceId f1 = side_face(rim, 1);
        if (faces_[f0].hole) return hole_of_face(f0);
        require(faces_[f1].hole, "cut_along: endpoint rim not on a hole");
        return hole_of_face(f1);
    };
    const Dart start_out = fwd[0];
    const Dart end_in = reversed(fwd[m - 1]);
    const int h1 = hole_at(c.through[0], start_out);
    const int h2 = hole_at(c.through[m], end_in);
    require(h1 != kNone && h2 != kNone, "cut_along: endpoints not on holes");

    // Collect per-crossing transversal darts before rewiring anything.
    std::vector<Dart> left_g(m + 1, kNone), right_g(m + 1, kNone);
    for (int k = 1; k < m; ++k) {
        const Dart rin = reversed(fwd[k - 1]);
        const Dart f = fwd[k];
        const Dart A = rot_next_[rin];
        require(A != f && rot_next_[A] == f,
                "cut_along: crossing is not a clean degree-4 vertex");
        const Dart B = rot_next_[f];
        require(B != rin && rot_next_[B] == rin,
                "cut_along: crossing is not a clean degree-4 vertex");
        left_g[k] = sigma[k] > 0 ? A : B;
        right_g[k] = sigma[k] > 0 ? B : A;
    }
    // Endpoint rims: at the start the left rim is the rotation predecessor
    // of the outgoing arc dart; at the end it depends on the parity.
    const Dart start_left_rim = rot_prev_[start_out];
    const Dart start_right_rim = rot_next_[start_out];
    const Dart end_left_rim =
        sigma[m] > 0 ? rot_next_[end_in] : rot_prev_[end_in];
    const Dart end_right_rim =
        sigma[m] > 0 ? rot_prev_[end_in] : rot_next_[end_in];

    // Build the two shores.
    CutResult res;
    std::vector<VertexId> L(m + 1), R(m + 1);
    for (int i = 0; i <= m; ++i) {
        L[i] = add_vertex();
        R[i] = add_vertex();
    }
    std::vector<EdgeId> pl(m), pr(m);
    for (int k = 0; k < m; ++k) {
        const int sign = edges_[c.pieces[k]].sign;
        pl[k] = add_edge(L[k], L[k + 1], sign, EdgeKind::kRim, Rational(0));
        pr[k] = add_edge(R[k], R[k + 1], sign, EdgeKind::kRim, Rational(0));
    }
    const auto fl = [&](int k) { return dart_of(pl[k], 0); };   // forward left
    const auto fr = [&](int k) { return dart_of(pr[k], 0); };   // forward right

    // Rotations: each copy keeps the old corners of its side and gains one
    // new corner facing the cut channel.
    wire_cycle(rot_next_, rot_prev_, {fl(0), start_left_rim});
    wire_cycle(rot_next_, rot_prev_, {fr(0), start_right_rim});
    retarget_dart(start_left_rim, L[0]);
    retarget_dart(start_right_rim, R[0]);
    for (int k = 1; k < m; ++k) {
        if (sigma[k] > 0) {
            wire_cycle(rot_next_, rot_prev_, {reversed(fl(k - 1)), left_g[k], fl(k)});
            wire_cycle(rot_next_, rot_prev_, {fr(k), right_g[k], reversed(fr(k - 1))});
        } else {
            wire_cycle(rot_next_, rot_prev_, {fl(k), left_g[k], reversed(fl(k - 1))});
            wire_cycle(rot_next_, rot_prev_, {reversed(fr(k - 1)), right_g[k], fr(k)});
        }
        retarget_dart(left_g[k], L[k]);
        retarget_dart(right_g[k], R[k]);
    }
    wire_cycle(rot_next_, rot_prev_, {reversed(fl(m - 1)), end_left_rim});
    wire_cycle(rot_next_, rot_prev_, {reversed(fr(m - 1)), end_right_rim});
    retarget_dart(end_left_rim, L[m]);
    retarget_dart(end_right_rim, R[m]);

    for (int k = 0; k < m; ++k) edges_[c.pieces[k]].alive = false;
    for (int i = 0; i <= m; ++i) vertex_alive_[c.through[i]] = 0;
    c.alive = false;
    mark_faces_dirty();

    // Hole bookkeeping.  Ends on distinct circles always merge them into one
    // circle through the cut channel, and h1's anchor still lies on it.
    // Ends on the same circle split it into two circles when the arc is
    // two-sided relative to the boundary, but into *one* circle when it is
    // one-sided (cutting a Moebius band along a core-crossing arc leaves a
    // single boundary circle).  Which case occurred is detected, not
    // assumed: the two shore-facing signed darts land on one face or two.
    const int anchor_left = sdart(reversed(fl(0)), edges_[pl[0]].sign);
    const int anchor_right = sdart(reversed(start_right_rim),
                                   edges_[edge_of(start_right_rim)].sign);
    if (h1 != h2) {
        hole_alive_[h2] = 0;
        res.hole = h1;
        require(face_of_sdart(anchor_left) == face_of_sdart(anchor_right),
                "cut_along: merged circle split unexpectedly");
    } else {
        hole_alive_[h1] = 0;
        const FaceId fa = face_of_sdart(anchor_left);
        const FaceId fb = face_of_sdart(anchor_right);
        if (fa == fb) {
            hole_anchors_.push_back(anchor_left);
            hole_alive_.push_back(1);
            res.hole = static_cast<int>(hole_anchors_.size()) - 1;
        } else {
            hole_anchors_.push_back(anchor_left);
            hole_alive_.push_back(1);
            res.hole_a = static_cast<int>(hole_anchors_.size()) - 1;
            hole_anchors_.push_back(anchor_right);
            hole_alive_.push_back(1);
            res.hole_b = static_cast<int>(hole_anchors_.size()) - 1;
        }
        mark_faces_dirty();
    }

    ensure_faces();
    const int chi_after = euler_characteristic_closed();
    const int holes_after = hole_count();
    // Cutting along an arc raises the bordered Euler characteristic by one;
    // with holes counted as faces this reads as below for every case.
    require(chi_after == chi_before + 1 + (holes_after - holes_before),
            "cut_along: Euler bookkeeping broken");
    if (h1 != h2) {
        require(holes_after == holes_before - 1, "cut_along: hole merge failed");
    } else {
        require(holes_after == holes_before || holes_after == holes_before + 1,
                "cut_along: hole split failed");
        if (res.hole_a != kNone) {
            require(hole_face(res.hole_a) != hole_face(res.hole_b),
                    "cut_along: split circles coincide");
        }
    }

    res.left.rims = pl;
    res.left.vertices = L;
    res.right.rims = pr;
    res.right.vertices = R;
    return res;
}

std::pair<EdgeId, EdgeId> Map::split_children(EdgeId e) const {
    require(e >= 0 && e < edge_slots(), "split_children: bad edge");
    return split_children_[e];
}

// --- pen -------------------------------------------------------------------

Pen::Pen(Map& m, FaceId f, EdgeKind kind, int curve_id)
    : map_(m), kind_(kind), curve_id_(curve_id) {
    map_.ensure_faces();
    require(f >= 0 && f < static_cast<FaceId>(map_.faces_.size()), "Pen: bad face");
    require(!map_.faces_[f].hole, "Pen: cannot start in a hole");
    start_vertex_ = map_.add_vertex();
    last_vertex_ = start_vertex_;
    float_face_ = f;
    map_.curves_[curve_id_].through.push_back(start_vertex_);
}

Pen::Pen(Map& m, Corner at, EdgeKind kind, int curve_id)
    : map_(m), kind_(kind), curve_id_(curve_id) {
    map_.ensure_faces();
    require(at.face >= 0 && at.face < static_cast<FaceId>(map_.faces_.size()),
            "Pen: bad corner face");
    require(!map_.faces_[at.face].hole, "Pen: cannot start in a hole");
    const auto& steps = map_.faces_[at.face].steps;
    require(at.index >= 0 && at.index < static_cast<int>(steps.size()),
            "Pen: bad corner index");
    corner_sd_ = steps[at.index];
    start_vertex_ = map_.dart_tail_[reversed(sdart_dart(corner_sd_))];
    last_vertex_ = start_vertex_;
    map_.curves_[curve_id_].through.push_back(start_vertex_);
}

Corner Pen::current_corner() {
    require(corner_sd_ != kNone, "Pen: no corner while floating");
    return map_.locate_corner(corner_sd_);
}

FaceId Pen::current_face() {
    require(!done_, "Pen: stroke already finished");
    if (corner_sd_ == kNone) return float_face_;
    return map_.face_of_sdart(corner_sd_);
}

VertexId Pen::cross(EdgeId e, int from_side) {
    require(!done_, "Pen: stroke already finished");
    map_.ensure_faces();
    require(e >= 0 && e < map_.edge_slots() && map_.edges_[e].alive,
            "Pen: bad edge");
    require(map_.edges_[e].kind != EdgeKind::kRim, "Pen: cannot cross a rim");
    const FaceId f = current_face();
    int s = from_side;
    if (s == -1) {
        const bool s0 = map_.side_face(e, 0) == f;
        const bool s1 = map_.side_face(e, 1) == f;
        require(s0 || s1, "Pen: edge not on the current face");
        require(!(s0 && s1), "Pen: ambiguous crossing; pass the side");
        s = s0 ? 0 : 1;
    }
    require(map_.side_face(e, s) == f, "Pen: edge side not on the current face");
    require(!map_.faces_[map_.side_face(e, 1 - s)].hole,
            "Pen: crossing into a hole");

    const int t_entry =
        map_.faces_[map_.sides_[e].face[s]].steps[map_.sides_[e].step[s]];
    const int t_far =
        map_.faces_[map_.sides_[e].face[1 - s]].steps[map_.sides_[e].step[1 - s]];

    const SubdivideResult sub = map_.subdivide(e);
    const int near_sd = Map::remap_sdart_after_subdivide(t_entry, e, sub);
    const int far_sd = Map::remap_sdart_after_subdivide(t_far, e, sub);
    if (corner_sd_ != kNone) {
        corner_sd_ = Map::remap_sdart_after_subdivide(corner_sd_, e, sub);
    }

    CurveRec& rec = map_.curves_[curve_id_];
    EdgeId piece;
    if (corner_sd_ == kNone) {
        // First piece of a floating stroke: a spur from the isolated start
        // vertex to the crossing vertex.  The start vertex's frame is free,
        // so sign +1 and a singleton rotation are enough.
        map_.ensure_faces();
        const Corner b = map_.locate_corner(near_sd);
        require(!map_.faces_[b.face].hole, "Pen: crossing attaches inside a hole");
        const int b_sd = map_.faces_[b.face].steps[b.index];
        const int sb = map_.flag_after(b.face, b.index);
        piece = map_.add_edge(start_vertex_, sub.mid, +1, kind_, Rational(0));
        map_.edges_[piece].curve = curve_id_;
        const Dart at_start = dart_of(piece, 0);
        const Dart at_mid = dart_of(piece, 1);
        if (sb > 0) {
            map_.insert_dart_after(reversed(sdart_dart(b_sd)), at_mid);
        } else {
            map_.insert_dart_before(reversed(sdart_dart(b_sd)), at_mid);
        }
        map_.rot_next_[at_start] = at_start;
        map_.rot_prev_[at_start] = at_start;
        map_.mark_faces_dirty();
        float_face_ = kNone;
    } else {
        map_.ensure_faces();
        const Corner a = current_corner();
        const Corner b = map_.locate_corner(near_sd);
        require(b.face == a.face, "Pen: crossing corner left the current face");
        piece = map_.add_chord(a, b, kind_, curve_id_);
    }
    rec.pieces.push_back(piece);
    rec.crossed_before.push_back(pending_cross_);
    rec.through.push_back(sub.mid);
    pending_cross_ = e;
    corner_sd_ = far_sd;
    last_vertex_ = sub.mid;
    return sub.mid;
}

void Pen::finish_at(Corner c) {
    require(!done_, "Pen: stroke already finished");
    map_.ensure_faces();
    require(c.face >= 0 && c.face < static_cast<FaceId>(map_.faces_.size()),
            "Pen: bad finish face");
    require(!map_.faces_[c.face].hole, "Pen: cannot finish in a hole");
    const auto& steps = map_.faces_[c.face].steps;
    require(c.index >= 0 && c.index < static_cast<int>(steps.size()),
            "Pen: bad finish corner");
    const VertexId target = map_.dart_tail_[reversed(sdart_dart(steps[c.index]))];

    CurveRec& rec = map_.curves_[curve_id_];
    EdgeId piece;
    if (corner_sd_ == kNone) {
        require(c.face == float_face_, "Pen: finish corner not in the start face");
        const int sb = map_.flag_after(c.face, c.index);
        piece = map_.add_edge(start_vertex_, target, +1, kind_, Rational(0));
        map_.edges_[piece].curve = curve_id_;
        const Dart at_start = dart_of(piece, 0);
        const Dart at_target = dart_of(piece, 1);
        if (sb > 0) {
            map_.insert_dart_after(reversed(sdart_dart(steps[c.index])), at_target);
        } else {
            map_.insert_dart_before(reversed(sdart_dart(steps[c.index])), at_target);
        }
        map_.rot_next_[at_start] = at_start;
        map_.rot_prev_[at_start] = at_start;
        map_.mark_faces_dirty();
        float_face_ = kNone;
    } else {
        const Corner a = current_corner();
        require(a.face == c.face, "Pen: finish corner not on the current face");
        require(!(a.index == c.index), "Pen: finish corner equals pen corner");
        piece = map_.add_chord(a, c, kind_, curve_id_);
    }
    rec.pieces.push_back(piece);
    rec.crossed_before.push_back(pending_cross_);
    rec.through.push_back(target);
    last_vertex_ = target;
    done_ = true;
}

void Pen::finish_at_start() {
    require(!done_, "Pen: stroke already finished");
    const FaceId f = current_face();
    map_.ensure_faces();
    Corner found{kNone, kNone};
    int hits = 0;
    for (const Corner& c : map_.corners_at(start_vertex_)) {
        if (c.face == f) {
            found = c;
            ++hits;
        }
    }
    require(hits >= 1, "Pen: start vertex not on the current face");
    require(hits == 1, "Pen: ambiguous closing corner; use finish_at");
    finish_at(found);
}

}  // namespace smc
