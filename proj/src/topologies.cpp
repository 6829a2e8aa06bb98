#include "smc/topologies.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace smc {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::runtime_error(msg);
}

// --- word utilities --------------------------------------------------------

Word inverse_word(const Word& w) {
    Word out(w.rbegin(), w.rend());
    for (Letter& l : out) l = -l;
    return out;
}

// Lexicographic minimum over all rotations of w and of its inverse: the
// canonical representative of an undirected unbased closed curve's word.
Word canonical_cycle_word(const Word& w) {
    Word best = w;
    for (const Word& base : {w, inverse_word(w)}) {
        for (std::size_t s = 0; s < base.size(); ++s) {
            Word rot(base.begin() + s, base.end());
            rot.insert(rot.end(), base.begin(), base.begin() + s);
            if (rot < best) best = rot;
        }
    }
    return best;
}

std::string word_str(const Word& w) {
    std::string s = "[";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(w[i]);
    }
    return s + "]";
}

// --- the disk boundary pattern ---------------------------------------------

// The cut-open disk's boundary circle, coarsened to stretches: terminal
// stretches (pieces of a carved hole) and arc sides.  `dir` is +1 when the
// boundary walk traverses the side in arc order, -1 against it; the two
// sides of an orientation-preserving arc run in opposite directions, the
// two sides of an orientation-reversing one in the same direction.
struct PatternItem {
    bool is_side = false;
    int terminal = kNone;
    int arc = kNone, side = 0, dir = 0;
};

std::vector<PatternItem> boundary_pattern(const ArcSystem& sys) {
    const Map& m = sys.disk;
    const auto& steps = m.face(m.hole_face(sys.hole)).steps;
    const auto side_dir = [&](int arc, int side, int slot, Dart d) {
        const CutShore& shore =
            side == 0 ? sys.arcs[arc].left : sys.arcs[arc].right;
        if (m.tail(d) == shore.vertices[slot]) return +1;
        require(m.tail(d) == shore.vertices[slot + 1],
                "boundary_pattern: rim dart off its shore");
        return -1;
    };
    std::vector<PatternItem> items;
    for (int st : steps) {
        const Dart d = sdart_dart(st);
        const EdgeId rim = edge_of(d);
        if (const auto it = sys.rim_terminal.find(rim);
            it != sys.rim_terminal.end()) {
            if (!items.empty() && !items.back().is_side &&
                items.back().terminal == it->second) {
                continue;
            }
            PatternItem pi;
            pi.terminal = it->second;
            items.push_back(pi);
        } else {
            const auto& sl = sys.shore_slot.at(rim);
            const int dir = side_dir(sl[0], sl[1], sl[2], d);
            if (!items.empty() && items.back().is_side &&
                items.back().arc == sl[0] && items.back().side == sl[1]) {
                require(items.back().dir == dir,
                        "boundary_pattern: side changes direction");
                continue;
            }
            PatternItem pi;
            pi.is_side = true;
            pi.arc = sl[0];
            pi.side = sl[1];
            pi.dir = dir;
            items.push_back(pi);
        }
    }
    // The walk is cyclic: a stretch split by the array seam appears at both
    // ends and is stored once.
    while (items.size() >= 2) {
        const PatternItem& a = items.front();
        const PatternItem& b = items.back();
        const bool same =
            a.is_side == b.is_side &&
            (a.is_side ? (a.arc == b.arc && a.side == b.side)
                       : a.terminal == b.terminal);
        if (!same) break;
        if (a.is_side) require(a.dir == b.dir, "boundary_pattern: seam dir");
        items.erase(items.begin());
    }
    std::set<std::pair<int, int>> sides;
    std::set<int> terms;
    for (const auto& it : items) {
        if (it.is_side) {
            require(sides.emplace(it.arc, it.side).second,
                    "boundary_pattern: side visited twice");
        } else {
            terms.insert(it.terminal);
        }
    }
    require(static_cast<int>(sides.size()) ==
                2 * static_cast<int>(sys.arcs.size()),
            "boundary_pattern: missing side");
    require(static_cast<int>(terms.size()) == sys.terminal_count,
            "boundary_pattern: missing terminal");
    return items;
}

// --- ports and gaps --------------------------------------------------------

// Fixing how often each arc is crossed, the boundary circle refines into
// atoms: terminal stretches, crossing ports, and the arc intervals between
// consecutive crossings (interval k of an arc lies between its k-th and
// (k+1)-th crossing; 0 and c_a are the end intervals).  A candidate meets
// the boundary exactly at the ports; the gaps between cyclically consecutive
// ports carry the terminals and intervals used for face bookkeeping.
struct Gaps {
    int nports = 0;
    std::vector<std::array<int, 3>> port;  // (arc, pos 1..c, side)
    std::vector<int> twin;                 // same (arc, pos), other side
    std::vector<std::set<int>> gap_terminals;
    std::vector<std::vector<std::array<int, 3>>> gap_intervals;  // (arc,k,side)
};

Gaps build_gaps(const std::vector<PatternItem>& pattern,
                const std::vector<int>& counts) {
    struct Atom {
        int kind = 0;  // 0 terminal, 1 interval, 2 port
        int a = kNone, b = 0, c = 0;
    };
    std::vector<Atom> atoms;
    for (const auto& it : pattern) {
        if (!it.is_side) {
            atoms.push_back({0, it.terminal, 0, 0});
            continue;
        }
        const int c = counts[it.arc];
        if (it.dir > 0) {
            for (int k = 0; k <= c; ++k) {
                atoms.push_back({1, it.arc, k, it.side});
                if (k < c) atoms.push_back({2, it.arc, k + 1, it.side});
            }
        } else {
            for (int k = c; k >= 0; --k) {
                atoms.push_back({1, it.arc, k, it.side});
                if (k > 0) atoms.push_back({2, it.arc, k, it.side});
            }
        }
    }
    Gaps g;
    std::vector<std::size_t> port_pos;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        if (atoms[i].kind == 2) {
            port_pos.push_back(i);
            g.port.push_back({atoms[i].a, atoms[i].b, atoms[i].c});
        }
    }
    g.nports = static_cast<int>(port_pos.size());
    std::map<std::pair<int, int>, std::vector<int>> by_crossing;
    for (int p = 0; p < g.nports; ++p) {
        by_crossing[{g.port[p][0], g.port[p][1]}].push_back(p);
    }
    g.twin.assign(g.nports, kNone);
    for (const auto& kv : by_crossing) {
        const auto& ps = kv.second;
        require(ps.size() == 2 && g.port[ps[0]][2] != g.port[ps[1]][2],
                "build_gaps: crossing without two ports");
        g.twin[ps[0]] = ps[1];
        g.twin[ps[1]] = ps[0];
    }
    const int ngaps = std::max(g.nports, 1);
    g.gap_terminals.assign(ngaps, {});
    g.gap_intervals.assign(ngaps, {});
    const auto file = [&](int gap, const Atom& at) {
        if (at.kind == 0) {
            g.gap_terminals[gap].insert(at.a);
        } else if (at.kind == 1) {
            g.gap_intervals[gap].push_back({at.a, at.b, at.c});
        }
    };
    if (g.nports == 0) {
        for (const Atom& at : atoms) file(0, at);
        return g;
    }
    for (int p = 0; p < g.nports; ++p) {
        std::size_t i = port_pos[p] + 1;
        const std::size_t stop = port_pos[(p + 1) % g.nports];
        while (i % atoms.size() != stop) {
            file(p, atoms[i % atoms.size()]);
            ++i;
        }
    }
    return g;
}

// --- candidate enumeration -------------------------------------------------

// A candidate's part inside the disk is a non-crossing plane forest whose
// leaves are exactly the ports, one leaf per port, and whose inner nodes
// have degree at least three (degree-two nodes are suppressed by
// convention, and a node of smaller degree would survive regluing as a
// degree <= 1 vertex).  Forests are enumerated as non-crossing partitions
// of the port cycle into blocks, with every series-reduced plane tree shape
// on each block; regluing the matched ports chains the tree edges into the
// candidate's edges and free cycles.
struct FNode {
    int port = kNone;       // >= 0: leaf sitting on that port
    std::vector<int> kids;  // child nodes, in boundary order
};

// Non-owning continuation references.  The recursion below is strict
// continuation-passing with stack discipline: every continuation is built
// in a scope that outlives all its invocations, so a plain pointer to the
// closure avoids the allocation cost of std::function in the hot path.
struct Cont {
    void* obj = nullptr;
    void (*fn)(void*) = nullptr;
    void operator()() const { fn(obj); }
};

template <class F>
Cont cont(F&& f) {
    return Cont{const_cast<void*>(static_cast<const void*>(&f)),
                [](void* o) { (*static_cast<std::remove_reference_t<F>*>(o))(); }};
}

struct NodeCont {
    void* obj = nullptr;
    void (*fn)(void*, int) = nullptr;
    void operator()(int n) const { fn(obj, n); }
};

template <class F>
NodeCont ncont(F&& f) {
    return NodeCont{
        const_cast<void*>(static_cast<const void*>(&f)),
        [](void* o, int n) { (*static_cast<std::remove_reference_t<F>*>(o))(n); }};
}

struct CandidateEnum {
    const ArcSystem& sys;
    int kappa;
    bool mirror;  // cross-check mode: reversed visiting order, hash dedup

    int budget = 0;
    std::vector<PatternItem> pattern;
    std::vector<Topology> out;
    std::set<std::string> seen;

    // Per-counts state.
    std::vector<int> counts;
    Gaps gp;
    int crossings = 0;

    // Forest under construction.  Both the node arena and the per-block
    // partner lists live in pools with stack discipline, so steady-state
    // recursion allocates nothing.
    std::vector<FNode> nodes;
    int nodes_top = 0;
    std::deque<std::vector<int>> partner_pool;
    int pdepth = 0;
    std::vector<int> roots;
    int internals = 0;
    int trees = 0;
    int ports_left = 0;
    int closed_excess = 0;  // sum of (block size - 2) over decided blocks

    CandidateEnum(const ArcSystem& s, int k, bool m)
        : sys(s), kappa(k), mirror(m) {
        require(kappa >= 1, "enumerate_candidate_topologies: kappa >= 1");
        budget = size_budget(sys, kappa);
        pattern = boundary_pattern(sys);
    }

    // Two lower bounds prune hopeless branches early.  The edge count of the
    // finished candidate is crossings + internals - blocks + free cycles, and
    // at most ports_left / 2 further blocks can still close.  Independently,
    // edges end at internal vertices of degree at least three, which forces
    //   sum over blocks of (size - 2)  +  2 * internals  <=  2 * budget
    // for any candidate within the edge budget.
    bool fits() const {
        return crossings + internals - (trees + ports_left / 2) <= budget &&
               closed_excess + 2 * internals <= 2 * budget;
    }

    // The same degree bound applied to the block still being grown: a block
    // of p >= 3 ports costs at least p of the 2 * budget allowance, since it
    // keeps at least p - 2 excess and needs an internal vertex.
    bool block_fits(int p) const {
        return closed_excess + 2 * internals + (p >= 3 ? p : 0) <=
               2 * budget;
    }

    void run() {
        const int arcs = static_cast<int>(sys.arcs.size());
        emit_empty();
        counts.assign(arcs, 0);
        for (;;) {
            // Odometer over all crossing-count vectors, ascending; the
            // mirror enumerator walks the complements, i.e. descending.
            std::vector<int> use = counts;
            if (mirror) {
                for (int a = 0; a < arcs; ++a) use[a] = budget - counts[a];
            }
            bool all_zero = true;
            for (int c : use) all_zero = all_zero && c == 0;
            if (!all_zero) run_counts(use);
            int i = arcs - 1;
            while (i >= 0 && counts[i] == budget) counts[i--] = 0;
            if (i < 0) break;
            ++counts[i];
        }
        if (mirror) {
            std::sort(out.begin(), out.end(),
                      [](const Topology& a, const Topology& b) {
                          return a.canon < b.canon;
                      });
        }
    }

    void emit_empty() {
        Topology t;
        t.arc_crossings.assign(sys.arcs.size(), 0);
        t.bounds_used = kappa;
        t.face_count = 1;
        t.canon = topology_canon(t);
        seen.insert(t.canon);
        out.push_back(std::move(t));
    }

    void run_counts(const std::vector<int>& use) {
        gp = build_gaps(pattern, use);
        crossings = 0;
        for (int c : use) crossings += c;
        nodes_top = 0;
        pdepth = 0;
        roots.clear();
        internals = 0;
        trees = 0;
        ports_left = gp.nports;
        closed_excess = 0;
        auto done = [&] { finish(use); };
        cover(0, gp.nports - 1, cont(done));
    }

    // --- forest recursion (primary order) ----------------------------------

    std::vector<int>& fresh_partners() {
        if (pdepth == static_cast<int>(partner_pool.size())) {
            partner_pool.emplace_back();
        }
        std::vector<int>& p = partner_pool[pdepth++];
        p.clear();
        return p;
    }

    void cover(int l, int r, Cont k) {
        if (l > r) {
            k();
            return;
        }
        std::vector<int>& partners = fresh_partners();
        if (!mirror) {
            partners.push_back(l);
            extend(partners, l, r, k);
        } else {
            partners.push_back(r);
            extend_m(partners, l, r, k);
        }
        --pdepth;
    }

    // The block of its leftmost uncovered port: partners join left to right,
    // and the span skipped between consecutive partners is covered first by
    // independent blocks.
    void extend(std::vector<int>& partners, int last, int r, Cont k) {
        if (!block_fits(static_cast<int>(partners.size()))) return;
        for (int j = last + 1; j <= r; ++j) {
            auto step = [&, j, r] {
                partners.push_back(j);
                extend(partners, j, r, k);
                partners.pop_back();
            };
            cover(last + 1, j - 1, cont(step));
        }
        if (partners.size() >= 2) {
            auto rest = [&, last, r] { cover(last + 1, r, k); };
            close_block(partners, cont(rest));
        }
    }

    void extend_m(std::vector<int>& partners, int l, int r, Cont k) {
        if (!block_fits(static_cast<int>(partners.size()))) return;
        const int last = partners.back();
        for (int j = last - 1; j >= l; --j) {
            auto step = [&, j, l, r] {
                partners.push_back(j);
                extend_m(partners, l, r, k);
                partners.pop_back();
            };
            cover(j + 1, last - 1, cont(step));
        }
        if (partners.size() >= 2) {
            auto rest = [&, l, last] { cover(l, last - 1, k); };
            close_block_m(partners, cont(rest));
        }
    }

    int new_node(int port) {
        if (nodes_top == static_cast<int>(nodes.size())) {
            nodes.emplace_back();
        }
        FNode& n = nodes[nodes_top];
        n.port = port;
        n.kids.clear();
        return nodes_top++;
    }

    int new_leaf(int port) {
        --ports_left;
        return new_node(port);
    }

    int new_internal() {
        ++internals;
        return new_node(kNone);
    }

    void pop_leaf() {
        --nodes_top;
        ++ports_left;
    }

    void pop_internal() {
        --nodes_top;
        --internals;
    }

    // Anchor the tree at its first leaf: the anchor port hangs directly off
    // the subtree built over the remaining partners.
    // A chord joining two ports of the same arc and side glues into a pair
    // of adjacent cancelling letters: the drawing has a bigon against that
    // arc, and sliding the edge across the arc (an isotopy of the drawing,
    // which never obstructs on the arc) yields the same candidate with two
    // crossings fewer, already streamed under a smaller count vector.  Only
    // reduced-word representatives are kept.
    bool chord_cancels(int p, int q) const {
        return gp.port[p][0] == gp.port[q][0] &&
               gp.port[p][2] == gp.port[q][2];
    }

    void close_block(const std::vector<int>& partners, Cont k) {
        const int kb = static_cast<int>(partners.size());
        if (kb == 2 && chord_cancels(partners[0], partners[1])) return;
        closed_excess += kb - 2;
        const int root = new_leaf(partners[0]);
        if (fits()) {
            auto hook = [&, root](int c) {
                nodes[root].kids.push_back(c);
                roots.push_back(root);
                ++trees;
                k();
                --trees;
                roots.pop_back();
                nodes[root].kids.pop_back();
            };
            subtree(partners, 1, kb - 1, ncont(hook));
        }
        pop_leaf();
        closed_excess -= kb - 2;
    }

    void close_block_m(const std::vector<int>& partners, Cont k) {
        std::vector<int> asc(partners.rbegin(), partners.rend());
        const int kb = static_cast<int>(asc.size());
        if (kb == 2 && chord_cancels(asc[0], asc[1])) return;
        closed_excess += kb - 2;
        const int root = new_leaf(asc.back());
        if (fits()) {
            auto hook = [&, root](int c) {
                nodes[root].kids.push_back(c);
                roots.push_back(root);
                ++trees;
                k();
                --trees;
                roots.pop_back();
                nodes[root].kids.pop_back();
            };
            subtree_m(asc, 0, kb - 2, ncont(hook));
        }
        pop_leaf();
        closed_excess -= kb - 2;
    }

    // All hanging subtree shapes over the leaf run [lo, hi]: a single leaf,
    // or an inner node splitting the run into at least two consecutive
    // parts, each a hanging subtree in turn.
    void subtree(const std::vector<int>& leaves, int lo, int hi, NodeCont f) {
        if (lo == hi) {
            const int n = new_leaf(leaves[lo]);
            if (fits()) f(n);
            pop_leaf();
            return;
        }
        if (internals >= budget) return;
        const int v = new_internal();
        if (fits()) parts(leaves, lo, hi, v, true, f);
        pop_internal();
    }

    void parts(const std::vector<int>& leaves, int start, int hi, int v,
               bool first, NodeCont f) {
        const int maxend = first ? hi - 1 : hi;
        for (int end = start; end <= maxend; ++end) {
            auto attach = [&, end, hi, v](int c) {
                nodes[v].kids.push_back(c);
                if (end == hi) {
                    f(v);
                } else {
                    parts(leaves, end + 1, hi, v, false, f);
                }
                nodes[v].kids.pop_back();
            };
            subtree(leaves, start, end, ncont(attach));
        }
    }

    void subtree_m(const std::vector<int>& leaves, int lo, int hi,
                   NodeCont f) {
        if (lo == hi) {
            const int n = new_leaf(leaves[lo]);
            if (fits()) f(n);
            pop_leaf();
            return;
        }
        if (internals >= budget) return;
        const int v = new_internal();
        if (fits()) parts_m(leaves, lo, hi, v, true, f);
        pop_internal();
    }

    void parts_m(const std::vector<int>& leaves, int lo, int end, int v,
                 bool first, NodeCont f) {
        const int minstart = first ? lo + 1 : lo;
        for (int start = end; start >= minstart; --start) {
            auto attach = [&, start, lo, v](int c) {
                nodes[v].kids.insert(nodes[v].kids.begin(), c);
                if (start == lo) {
                    f(v);
                } else {
                    parts_m(leaves, lo, start - 1, v, false, f);
                }
                nodes[v].kids.erase(nodes[v].kids.begin());
            };
            subtree_m(leaves, start, end, ncont(attach));
        }
    }

    // --- regluing and emission ---------------------------------------------

    void finish(const std::vector<int>& use) {
        const int N = gp.nports;
        // Lay the forest out flat: polygon node ids (ports 0..N-1, then the
        // inner nodes in depth-first order), strands with their slot lists.
        std::vector<int> inner_of_node(nodes.size(), kNone);
        std::vector<int> poly_internals;        // inner idx -> arena node
        std::vector<std::array<int, 2>> strand;  // poly node ids (x, y)
        std::vector<std::vector<int>> inner_slots;  // inner idx -> 2*strand+end
        std::vector<int> port_strand(N, kNone);     // port -> 2*strand+end

        const std::function<void(int, int)> lay = [&](int node, int pslot) {
            if (nodes[node].port != kNone) {
                port_strand[nodes[node].port] = pslot;
                return;
            }
            const int idx = static_cast<int>(poly_internals.size());
            inner_of_node[node] = idx;
            poly_internals.push_back(node);
            inner_slots.push_back({pslot});
            for (int kid : nodes[node].kids) {
                const int s = static_cast<int>(strand.size());
                strand.push_back({N + idx, kNone});
                inner_slots[idx].push_back(2 * s + 0);
                lay(kid, 2 * s + 1);
                strand[s][1] = nodes[kid].port != kNone
                                   ? nodes[kid].port
                                   : N + inner_of_node[kid];
            }
        };
        for (int root : roots) {
            // The anchor leaf owns the root strand's x end.
            const int s = static_cast<int>(strand.size());
            strand.push_back({nodes[root].port, kNone});
            port_strand[nodes[root].port] = 2 * s + 0;
            const int kid = nodes[root].kids[0];
            lay(kid, 2 * s + 1);
            strand[s][1] = nodes[kid].port != kNone ? nodes[kid].port
                                                    : N + inner_of_node[kid];
        }
        const int S = static_cast<int>(strand.size());
        const int V = static_cast<int>(poly_internals.size());

        // Chain strands through matched ports into edges and free cycles.
        std::vector<char> used(S, 0);
        std::vector<TopoEdge> tedges;
        // Per strand end (2*strand+end): the edge end it became.
        std::vector<std::pair<int, int>> slot_edge(2 * S, {kNone, kNone});
        const auto hop_letter = [&](int p) {
            const auto& pt = gp.port[p];
            return pt[2] == 0 ? letter_of(pt[0], +1) : letter_of(pt[0], -1);
        };
        for (int idx = 0; idx < V; ++idx) {
            for (int sl : inner_slots[idx]) {
                if (used[sl >> 1]) continue;
                int cs = sl >> 1, ce = sl & 1;
                Word letters;
                for (;;) {
                    used[cs] = 1;
                    const int node = strand[cs][ce ^ 1];
                    if (node >= N) break;
                    letters.push_back(hop_letter(node));
                    const int q = gp.twin[node];
                    cs = port_strand[q] >> 1;
                    ce = port_strand[q] & 1;
                }
                const int e = static_cast<int>(tedges.size());
                TopoEdge te;
                te.u = idx;
                te.v = strand[cs][ce ^ 1] - N;
                te.word = std::move(letters);
                tedges.push_back(std::move(te));
                slot_edge[sl] = {e, 0};
                slot_edge[2 * cs + (ce ^ 1)] = {e, 1};
            }
        }
        std::vector<Word> cycles;
        for (int s0 = 0; s0 < S; ++s0) {
            if (used[s0]) continue;
            int cs = s0, ce = 0;
            Word letters;
            do {
                used[cs] = 1;
                const int node = strand[cs][ce ^ 1];
                require(node < N, "finish: free chain hit an inner node");
                letters.push_back(hop_letter(node));
                const int q = gp.twin[node];
                cs = port_strand[q] >> 1;
                ce = port_strand[q] & 1;
            } while (cs != s0 || ce != 0);
            cycles.push_back(canonical_cycle_word(letters));
        }
        if (static_cast<int>(tedges.size() + cycles.size()) > budget) return;

        int face_count = 0;
        if (!faces_have_terminals(strand, inner_slots, port_strand,
                                  &face_count)) {
            return;
        }

        Topology t;
        t.vertices = V;
        t.edges = std::move(tedges);
        t.rotation.resize(V);
        for (int idx = 0; idx < V; ++idx) {
            for (int sl : inner_slots[idx]) {
                require(slot_edge[sl].first != kNone, "finish: unchained slot");
                t.rotation[idx].push_back(slot_edge[sl]);
            }
        }
        std::sort(cycles.begin(), cycles.end());
        t.free_cycles = std::move(cycles);
        t.arc_crossings = use;
        t.bounds_used = kappa;
        t.face_count = face_count;
        t.canon = topology_canon(t);
        if (!seen.insert(t.canon).second) return;
        out.push_back(std::move(t));
    }

    // Faces of the candidate's drawing on the carved surface: trace the
    // faces of the forest-in-polygon arrangement, then merge the two copies
    // of every arc interval (the candidate does not see the arcs).  Valid
    // exactly when every merged face touches a terminal stretch.
    bool faces_have_terminals(const std::vector<std::array<int, 2>>& strand,
                              const std::vector<std::vector<int>>& inner_slots,
                              const std::vector<int>& port_strand,
                              int* face_count) const {
        const int N = gp.nports;
        const int V = static_cast<int>(inner_slots.size());
        const int S = static_cast<int>(strand.size());
        const int EP = N + S;  // boundary edge g: port g -> port g+1
        std::vector<int> rot_next(2 * EP, kNone);
        const auto install = [&](const std::vector<int>& rot) {
            for (std::size_t i = 0; i < rot.size(); ++i) {
                require(rot_next[rot[i]] == kNone, "faces: dart reused");
                rot_next[rot[i]] = rot[(i + 1) % rot.size()];
            }
        };
        const auto strand_dart = [&](int sl) {
            return 2 * (N + (sl >> 1)) + (sl & 1);
        };
        for (int g = 0; g < N; ++g) {
            install({2 * g, strand_dart(port_strand[g]),
                     2 * ((g + N - 1) % N) + 1});
        }
        for (int idx = 0; idx < V; ++idx) {
            std::vector<int> rot;
            for (int sl : inner_slots[idx]) rot.push_back(strand_dart(sl));
            install(rot);
        }
        for (int d = 0; d < 2 * EP; ++d) {
            require(rot_next[d] != kNone, "faces: dart missing");
        }
        // Faces as orbits of d -> rot_next[reverse(d)].
        std::vector<int> face_of(2 * EP, kNone);
        int nfaces = 0;
        for (int d = 0; d < 2 * EP; ++d) {
            if (face_of[d] != kNone) continue;
            int cur = d;
            while (face_of[cur] == kNone) {
                face_of[cur] = nfaces;
                cur = rot_next[cur ^ 1];
            }
            require(cur == d, "faces: orbit does not close");
            ++nfaces;
        }
        require(N + V - EP + nfaces == 2, "faces: polygon not planar");
        // The outer face is the unique one walking only boundary edges:
        // every interior face of a forest-in-disk touches some strand.
        std::vector<char> touches_strand(nfaces, 0);
        for (int d = 2 * N; d < 2 * EP; ++d) touches_strand[face_of[d]] = 1;
        int outer = kNone;
        for (int f = 0; f < nfaces; ++f) {
            if (touches_strand[f]) continue;
            require(outer == kNone, "faces: two outer faces");
            outer = f;
        }
        require(outer != kNone, "faces: no outer face");
        std::vector<int> region(N);
        for (int g = 0; g < N; ++g) {
            const int a = face_of[2 * g], b = face_of[2 * g + 1];
            require((a == outer) != (b == outer), "faces: gap off the rim");
            region[g] = a == outer ? b : a;
        }
        // Union-find over interior faces.
        std::vector<int> up(nfaces);
        for (int f = 0; f < nfaces; ++f) up[f] = f;
        const std::function<int(int)> find = [&](int f) {
            return up[f] == f ? f : up[f] = find(up[f]);
        };
        std::map<std::pair<int, int>, std::array<int, 2>> interval_gap;
        for (int g = 0; g < N; ++g) {
            for (const auto& iv : gp.gap_intervals[g]) {
                auto& slot = interval_gap[{iv[0], iv[1]}][iv[2]];
                require(slot == 0, "faces: interval in two gaps");
                slot = g + 1;  // 1-based, 0 = unseen
            }
        }
        for (const auto& kv : interval_gap) {
            const auto& gs = kv.second;
            require(gs[0] != 0 && gs[1] != 0, "faces: unmatched interval");
            up[find(region[gs[0] - 1])] = find(region[gs[1] - 1]);
        }
        std::map<int, std::set<int>> class_terms;
        for (int g = 0; g < N; ++g) {
            auto& dst = class_terms[find(region[g])];
            dst.insert(gp.gap_terminals[g].begin(), gp.gap_terminals[g].end());
        }
        std::set<int> interior_roots;
        for (int f = 0; f < nfaces; ++f) {
            if (f != outer) interior_roots.insert(find(f));
        }
        require(class_terms.size() == interior_roots.size(),
                "faces: region untouched by any gap");
        *face_count = static_cast<int>(class_terms.size());
        for (const auto& kv : class_terms) {
            if (kv.second.empty()) return false;
        }
        return true;
    }
};

}  // namespace

int size_budget(const ArcSystem& sys, int kappa) {
    return kappa * (sys.genus + sys.terminal_count);
}

std::string topology_canon(const Topology& t) {
    // Graph part: per connected component, a rotation-driven breadth-first
    // encoding minimised over all starting edge ends.  Ids never enter, so
    // the string is invariant under vertex/edge relabeling, edge
    // orientation flips, and rotation phase.
    std::vector<int> up(t.vertices);
    for (int v = 0; v < t.vertices; ++v) up[v] = v;
    const std::function<int(int)> find = [&](int v) {
        return up[v] == v ? v : up[v] = find(up[v]);
    };
    for (const TopoEdge& e : t.edges) up[find(e.u)] = find(e.v);

    const auto slot_index = [&](int v, int e, int end) {
        const auto& rot = t.rotation[v];
        for (std::size_t i = 0; i < rot.size(); ++i) {
            if (rot[i] == std::make_pair(e, end)) return static_cast<int>(i);
        }
        throw std::runtime_error("topology_canon: slot not in rotation");
    };
    const auto encode_from = [&](int v0, int s0) {
        std::vector<int> vid(t.vertices, kNone), entry(t.vertices, kNone);
        std::vector<int> eid(t.edges.size(), kNone);
        std::vector<int> order{v0};
        vid[v0] = 0;
        entry[v0] = s0;
        int nv = 1, ne = 0;
        std::string s;
        for (std::size_t q = 0; q < order.size(); ++q) {
            const int x = order[q];
            const auto& rot = t.rotation[x];
            s += '(';
            for (std::size_t i = 0; i < rot.size(); ++i) {
                const auto [e, end] = rot[(entry[x] + i) % rot.size()];
                if (eid[e] == kNone) {
                    eid[e] = ne++;
                    const Word w = end == 0 ? t.edges[e].word
                                            : inverse_word(t.edges[e].word);
                    const int y = end == 0 ? t.edges[e].v : t.edges[e].u;
                    s += 'E';
                    s += word_str(w);
                    if (vid[y] == kNone) {
                        vid[y] = nv++;
                        entry[y] = slot_index(y, e, end ^ 1);
                        order.push_back(y);
                        s += ">n";
                    } else {
                        s += '>';
                        s += std::to_string(vid[y]);
                    }
                } else {
                    s += 'e';
                    s += std::to_string(eid[e]);
                }
            }
            s += ')';
        }
        return s;
    };
    std::map<int, std::string> comp_best;
    for (int v = 0; v < t.vertices; ++v) {
        const int root = find(v);
        if (t.rotation[v].empty()) {
            // Cannot happen for emitted candidates (degrees are >= 3), but
            // keep hand-built values encodable.
            auto [it, fresh] = comp_best.emplace(root, "()");
            if (!fresh && "()" < it->second) it->second = "()";
            continue;
        }
        for (std::size_t i = 0; i < t.rotation[v].size(); ++i) {
            const std::string cand = encode_from(v, static_cast<int>(i));
            auto [it, fresh] = comp_best.emplace(root, cand);
            if (!fresh && cand < it->second) it->second = cand;
        }
    }
    std::vector<std::string> parts;
    for (const auto& kv : comp_best) parts.push_back(kv.second);
    std::sort(parts.begin(), parts.end());
    std::string s = "V" + std::to_string(t.vertices) + ";";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += '|';
        s += parts[i];
    }
    s += ";C:";
    std::vector<Word> cycles;
    for (const Word& w : t.free_cycles) cycles.push_back(canonical_cycle_word(w));
    std::sort(cycles.begin(), cycles.end());
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        if (i) s += ',';
        s += word_str(cycles[i]);
    }
    return s;
}

std::vector<Topology> enumerate_candidate_topologies(const ArcSystem& sys,
                                                     int kappa) {
    CandidateEnum ce(sys, kappa, false);
    ce.run();
    return std::move(ce.out);
}

std::vector<Topology> enumerate_candidate_topologies_crosscheck(
    const ArcSystem& sys, int kappa) {
    CandidateEnum ce(sys, kappa, true);
    ce.run();
    return std::move(ce.out);
}

std::vector<Word> enumerate_cycle_words(const ArcSystem& sys, int per_arc) {
    const int arcs = static_cast<int>(sys.arcs.size());
    std::vector<Word> out;
    if (per_arc <= 0 || arcs == 0) return out;
    // A canonical word is minimal among all rotations of itself and its
    // inverse, so its first letter is the negative letter of the largest
    // arc present; letters of larger arcs can never appear after it.
    Word cur;
    std::vector<int> cnt(arcs, 0);
    const std::function<void()> dfs = [&] {
        if (!cur.empty() && cur.back() != -cur.front() &&
            canonical_cycle_word(cur) == cur) {
            out.push_back(cur);
        }
        if (static_cast<int>(cur.size()) >= arcs * per_arc) return;
        for (int l = -arcs; l <= arcs; ++l) {
            if (l == 0) continue;
            if (cur.empty()) {
                if (l > 0) continue;
            } else {
                if (l == -cur.back()) continue;
                if (l < cur.front() || l > -cur.front()) continue;
            }
            const int a = letter_arc(l);
            if (cnt[a] == per_arc) continue;
            cur.push_back(l);
            ++cnt[a];
            dfs();
            cur.pop_back();
            --cnt[a];
        }
    };
    dfs();
    return out;
}

std::vector<Word> enumerate_cycle_layouts(const ArcSystem& sys, int kappa) {
    require(kappa >= 1, "enumerate_cycle_layouts: kappa >= 1");
    return enumerate_cycle_words(sys, size_budget(sys, kappa));
}

}  // namespace smc
