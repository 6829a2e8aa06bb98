#include "smc/exhaustive.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <iterator>
#include <map>
#include <set>
#include <stdexcept>

namespace smc {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::runtime_error(msg);
}

Word inverse_word(const Word& w) {
    Word out(w.rbegin(), w.rend());
    for (Letter& l : out) l = -l;
    return out;
}

// The cycle's two rotation slots at a visited vertex: the edge end it
// arrives on and the edge end it leaves on.  For the single-loop cycle both
// ends of the loop come back, which is exactly right.
std::array<std::pair<int, int>, 2> slots_at(const CycleInTopology& c, int x) {
    const int n = static_cast<int>(c.steps.size());
    for (int i = 0; i < n; ++i) {
        if (c.vertices[i] != x) continue;
        const auto& in = c.steps[(i + n - 1) % n];
        const auto& out = c.steps[i];
        return {std::make_pair(in.first, in.second > 0 ? 1 : 0),
                std::make_pair(out.first, out.second > 0 ? 0 : 1)};
    }
    throw std::runtime_error("slots_at: vertex not on cycle");
}

// Tags (0 = first cycle, 1 = second) in cyclic order alternate exactly when
// opposite entries agree and neighbours differ.
bool alternates(const std::vector<int>& tags) {
    require(tags.size() == 4, "alternates: want four strands");
    return tags[0] == tags[2] && tags[1] == tags[3] && tags[0] != tags[1];
}

}  // namespace

Word CycleInTopology::word(const Topology& t) const {
    if (free_loop) return t.free_cycles[free_index];
    Word w;
    for (const auto& [e, dir] : steps) {
        const Word part =
            dir > 0 ? t.edges[e].word : inverse_word(t.edges[e].word);
        w.insert(w.end(), part.begin(), part.end());
    }
    return w;
}

std::vector<CycleInTopology> cycles_of(const Topology& t) {
    std::vector<CycleInTopology> out;
    for (std::size_t i = 0; i < t.free_cycles.size(); ++i) {
        CycleInTopology c;
        c.free_loop = true;
        c.free_index = static_cast<int>(i);
        out.push_back(std::move(c));
    }
    const int ne = static_cast<int>(t.edges.size());
    // Incidences per vertex: (edge, dir) pairs leaving it, loops excluded
    // (a loop at an inner path vertex would repeat it; the loop cycle
    // itself is emitted directly from its anchor).
    std::vector<std::vector<std::pair<int, int>>> leave(t.vertices);
    for (int e = 0; e < ne; ++e) {
        if (t.edges[e].u == t.edges[e].v) continue;
        leave[t.edges[e].u].push_back({e, +1});
        leave[t.edges[e].v].push_back({e, -1});
    }
    for (auto& l : leave) std::sort(l.begin(), l.end());

    CycleInTopology cur;
    std::vector<char> on_path;
    // Depth-first extension of a simple path from `at` back to `home`,
    // using edges greater than the anchor only; every closing edge found
    // emits one cycle, anchored and hence unique up to rotation/reversal.
    const std::function<void(int, int, int)> grow = [&](int anchor, int at,
                                                        int home) {
        for (const auto& [e, dir] : leave[at]) {
            if (e <= anchor) continue;
            const int to = dir > 0 ? t.edges[e].v : t.edges[e].u;
            if (to == home) {
                cur.steps.push_back({e, dir});
                cur.vertices.push_back(at);
                out.push_back(cur);
                cur.steps.pop_back();
                cur.vertices.pop_back();
            } else if (!on_path[to]) {
                cur.steps.push_back({e, dir});
                cur.vertices.push_back(at);
                on_path[to] = 1;
                grow(anchor, to, home);
                on_path[to] = 0;
                cur.steps.pop_back();
                cur.vertices.pop_back();
            }
        }
    };
    for (int e = 0; e < ne; ++e) {
        const int u = t.edges[e].u, v = t.edges[e].v;
        if (u == v) {
            CycleInTopology c;
            c.steps = {{e, +1}};
            c.vertices = {u};
            out.push_back(std::move(c));
            continue;
        }
        cur = CycleInTopology{};
        cur.steps = {{e, +1}};
        cur.vertices = {u};
        on_path.assign(t.vertices, 0);
        on_path[u] = 1;
        on_path[v] = 1;
        grow(e, v, u);
    }
    return out;
}

bool cycles_cross(const Topology& t, const CycleInTopology& c1,
                  const CycleInTopology& c2) {
    if (c1.free_loop || c2.free_loop) return false;
    std::set<int> e1, e2;
    for (const auto& s : c1.steps) e1.insert(s.first);
    for (const auto& s : c2.steps) e2.insert(s.first);
    std::set<int> shared_e;
    std::set_intersection(e1.begin(), e1.end(), e2.begin(), e2.end(),
                          std::inserter(shared_e, shared_e.begin()));
    std::set<int> v1(c1.vertices.begin(), c1.vertices.end());
    std::set<int> shared_v;
    for (int x : c2.vertices) {
        if (v1.count(x)) shared_v.insert(x);
    }
    if (shared_v.empty()) return false;

    // Components of the intersection; both cycles are vertex-simple, so
    // each component is a path (possibly a single vertex) unless the two
    // cycles coincide entirely.
    std::map<int, std::vector<int>> adj;  // shared vertex -> shared edges
    for (int x : shared_v) adj[x];
    for (int e : shared_e) {
        adj[t.edges[e].u].push_back(e);
        adj[t.edges[e].v].push_back(e);
    }
    std::set<int> seen;
    for (int start : shared_v) {
        if (seen.count(start)) continue;
        std::vector<int> comp_v{start};
        std::set<int> comp_e;
        seen.insert(start);
        for (std::size_t q = 0; q < comp_v.size(); ++q) {
            for (int e : adj[comp_v[q]]) {
                comp_e.insert(e);
                for (int y : {t.edges[e].u, t.edges[e].v}) {
                    if (!seen.count(y)) {
                        seen.insert(y);
                        comp_v.push_back(y);
                    }
                }
            }
        }
        // Path ends: vertices meeting at most one component edge.
        std::vector<int> ends;
        for (int x : comp_v) {
            int deg = 0;
            for (int e : comp_e) {
                if (t.edges[e].u == x) ++deg;
                if (t.edges[e].v == x) ++deg;
            }
            if (deg <= 1) ends.push_back(x);
        }
        if (ends.empty()) continue;  // the whole cycle: c1 == c2
        std::sort(ends.begin(), ends.end());

        // The four strands: each cycle's slots at the path ends that are
        // not component edges.  Contracting the path merges the rotations
        // at the two ends, each read from just after its path edge.
        std::vector<std::pair<std::pair<int, int>, int>> strands;  // slot,tag
        for (int tag = 0; tag < 2; ++tag) {
            const CycleInTopology& c = tag == 0 ? c1 : c2;
            for (int x : ends) {
                for (const auto& sl : slots_at(c, x)) {
                    if (!comp_e.count(sl.first)) strands.push_back({sl, tag});
                }
            }
        }
        require(strands.size() == 4, "cycles_cross: want four strands");
        std::vector<int> tags;
        const auto collect = [&](int x, std::pair<int, int> after) {
            const auto& rot = t.rotation[x];
            const int n = static_cast<int>(rot.size());
            int base = 0;
            if (after.first != kNone) {
                base = kNone;
                for (int i = 0; i < n; ++i) {
                    if (rot[i] == after) base = i + 1;
                }
                require(base != kNone, "cycles_cross: path slot missing");
            }
            for (int i = 0; i < n; ++i) {
                const auto& slot = rot[(base + i) % n];
                for (const auto& [sl, tag] : strands) {
                    if (sl == slot &&
                        (after.first == kNone || slot != after)) {
                        tags.push_back(tag);
                    }
                }
            }
        };
        if (ends.size() == 1) {
            collect(ends[0], {kNone, kNone});
        } else {
            require(ends.size() == 2, "cycles_cross: component not a path");
            for (int x : ends) {
                // The unique component edge at x.
                std::pair<int, int> pslot{kNone, kNone};
                for (int e : comp_e) {
                    if (t.edges[e].u == x) pslot = {e, 0};
                    if (t.edges[e].v == x) pslot = {e, 1};
                }
                require(pslot.first != kNone, "cycles_cross: lonely end");
                collect(x, pslot);
            }
        }
        if (alternates(tags)) return true;
    }
    return false;
}

std::vector<CycleInTopology> exhaustive_family(const Topology& t) {
    std::vector<CycleInTopology> cycles = cycles_of(t);
    std::stable_sort(cycles.begin(), cycles.end(),
                     [](const CycleInTopology& a, const CycleInTopology& b) {
                         if (a.length() != b.length())
                             return a.length() < b.length();
                         if (a.free_loop != b.free_loop) return b.free_loop;
                         if (a.free_loop) return a.free_index < b.free_index;
                         return a.steps < b.steps;
                     });
    std::vector<CycleInTopology> family;
    for (const auto& c : cycles) {
        bool blocked = false;
        for (const auto& f : family) {
            if (cycles_cross(t, f, c)) {
                blocked = true;
                break;
            }
        }
        if (!blocked) family.push_back(c);
    }
    return family;
}

}  // namespace smc
