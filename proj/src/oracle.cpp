#include "smc/oracle.hpp"

#include "smc/require.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace smc {

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument(what); }

// --- disjoint set union ----------------------------------------------------

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// --- branch and bound ------------------------------------------------------

struct BnB {
    int n = 0;
    std::vector<Rational> weight;                      // by dense edge index
    std::vector<std::vector<std::pair<int, int>>> adj;  // vertex -> (nbr, edge)
    std::vector<std::pair<int, int>> pairs;             // dense vertices

    Rational best_weight;
    std::uint64_t best_mask = 0;
    bool have_best = false;
    std::unordered_set<std::uint64_t> expanded;

    // Shortest-hop path between the first still-connected pair, as a list of
    // dense edge indices; empty when every pair is separated.
    bool find_violated_path(std::uint64_t cut, std::vector<int>& path) const {
        std::vector<int> parent_edge(n), parent_vertex(n);
        for (const auto& [s, t] : pairs) {
            std::fill(parent_edge.begin(), parent_edge.end(), -2);
            parent_edge[s] = -1;
            std::vector<int> queue = {s};
            for (size_t head = 0; head < queue.size(); ++head) {
                const int v = queue[head];
                for (const auto& [w, e] : adj[v]) {
                    if (cut >> e & 1) continue;
                    if (parent_edge[w] != -2) continue;
                    parent_edge[w] = e;
                    parent_vertex[w] = v;
                    queue.push_back(w);
                }
            }
            if (parent_edge[t] == -2) continue;  // this pair is separated
            path.clear();
            for (int v = t; v != s; v = parent_vertex[v]) path.push_back(parent_edge[v]);
            std::reverse(path.begin(), path.end());
            return true;
        }
        return false;
    }

    static std::vector<int> mask_bits(std::uint64_t mask) {
        std::vector<int> bits;
        for (int i = 0; mask >> i; ++i)
            if (mask >> i & 1) bits.push_back(i);
        return bits;
    }

    void search(std::uint64_t cut, const Rational& cut_weight) {
        std::vector<int> path;
        if (!find_violated_path(cut, path)) {
            // Every pair separated: a candidate.  Ties go to the smaller
            // sorted edge-index sequence so the result is deterministic.
            if (!have_best || cut_weight < best_weight ||
                (cut_weight == best_weight && mask_bits(cut) < mask_bits(best_mask))) {
                best_weight = cut_weight;
                best_mask = cut;
                have_best = true;
            }
            return;
        }
        // Any further edge strictly increases the weight (weights are
        // positive), so an already-matched weight cannot improve.
        if (have_best && cut_weight >= best_weight) return;
        if (!expanded.insert(cut).second) return;
        for (int e : path) search(cut | (std::uint64_t{1} << e), cut_weight + weight[e]);
    }
};

// --- generator helpers -----------------------------------------------------

// Plain modulo reduction: biased in principle, deterministic everywhere.
// std::uniform_int_distribution is implementation-defined, so it never
// appears here.
int rand_int(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

double rand_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// A planar embedding under construction: dense vertex/edge ids, per-vertex
// rotations stored as dart lists (dart = 2*edge + end, identical to the
// instance's edge-end encoding while ids stay dense).
struct Builder {
    std::vector<std::pair<int, int>> edges;  // u, v
    std::vector<std::vector<int>> rotation;  // vertex -> darts in cyclic order
    int vertex_count = 0;

    int add_vertex() {
        rotation.emplace_back();
        return vertex_count++;
    }
    int add_edge(int u, int v) {
        edges.emplace_back(u, v);
        return static_cast<int>(edges.size()) - 1;
    }
    void insert_after(int vertex, int anchor, int fresh) {
        auto& rot = rotation[vertex];
        auto it = std::find(rot.begin(), rot.end(), anchor);
        require(it != rot.end(), "generator: rotation anchor missing");
        rot.insert(it + 1, fresh);
    }
};

Builder make_grid(int rows, int cols) {
    Builder b;
    for (int i = 0; i < rows * cols; ++i) b.add_vertex();
    auto at = [&](int r, int c) { return r * cols + c; };
    // Horizontal edges first, then vertical, row-major within each group.
    std::vector<std::vector<int>> east(rows, std::vector<int>(cols, -1));
    std::vector<std::vector<int>> south(rows, std::vector<int>(cols, -1));
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c + 1 < cols; ++c) east[r][c] = b.add_edge(at(r, c), at(r, c + 1));
    for (int r = 0; r + 1 < rows; ++r)
        for (int c = 0; c < cols; ++c) south[r][c] = b.add_edge(at(r, c), at(r + 1, c));
    // Clockwise rotation N, E, S, W at every vertex embeds the grid in the
    // plane (trace yields genus 0; the tests assert it).
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            auto& rot = b.rotation[at(r, c)];
            if (r > 0) rot.push_back(2 * south[r - 1][c] + 1);        // north
            if (c + 1 < cols) rot.push_back(2 * east[r][c]);          // east
            if (r + 1 < rows) rot.push_back(2 * south[r][c]);         // south
            if (c > 0) rot.push_back(2 * east[r][c - 1] + 1);         // west
        }
    return b;
}

Builder make_stacked_triangulation(int vertex_target, std::mt19937_64& rng) {
    Builder b;
    const int a0 = b.add_vertex(), a1 = b.add_vertex(), a2 = b.add_vertex();
    const int e01 = b.add_edge(a0, a1);
    const int e12 = b.add_edge(a1, a2);
    const int e20 = b.add_edge(a2, a0);
    b.rotation[a0] = {2 * e20 + 1, 2 * e01};
    b.rotation[a1] = {2 * e01 + 1, 2 * e12};
    b.rotation[a2] = {2 * e12 + 1, 2 * e20};
    // Faces tracked as dart triples in walk order; start with both sides of
    // the triangle.
    std::vector<std::array<int, 3>> faces;
    faces.push_back({2 * e01, 2 * e12, 2 * e20});
    faces.push_back({2 * e20 + 1, 2 * e12 + 1, 2 * e01 + 1});
    auto head = [&](int dart) {
        const auto& [u, v] = b.edges[dart >> 1];
        return (dart & 1) ? u : v;
    };
    while (b.vertex_count < vertex_target) {
        const int pick = rand_int(rng, 0, static_cast<int>(faces.size()) - 1);
        const auto [da, db, dc] = faces[pick];
        const int va = head(dc), vb = head(da), vc = head(db);
        const int x = b.add_vertex();
        const int fa = b.add_edge(x, va);
        const int fb = b.add_edge(x, vb);
        const int fc = b.add_edge(x, vc);
        b.insert_after(vb, da ^ 1, 2 * fb + 1);
        b.insert_after(vc, db ^ 1, 2 * fc + 1);
        b.insert_after(va, dc ^ 1, 2 * fa + 1);
        b.rotation[x] = {2 * fa, 2 * fc, 2 * fb};
        faces[pick] = {da, 2 * fb + 1, 2 * fa};
        faces.push_back({db, 2 * fc + 1, 2 * fb});
        faces.push_back({dc, 2 * fa + 1, 2 * fc});
    }
    return b;
}

bool connected_without(const Builder& b, const std::vector<bool>& alive, int skip) {
    Dsu dsu(b.vertex_count);
    for (int e = 0; e < static_cast<int>(b.edges.size()); ++e)
        if (alive[e] && e != skip) dsu.unite(b.edges[e].first, b.edges[e].second);
    const int root = dsu.find(0);
    for (int v = 1; v < b.vertex_count; ++v)
        if (dsu.find(v) != root) return false;
    return true;
}

}  // namespace

MulticutResult exact_multicut(const Instance& inst, int edge_cap) {
    if (static_cast<int>(inst.edges.size()) > edge_cap)
        bad("exact_multicut: instance has " + std::to_string(inst.edges.size()) +
            " edges, cap is " + std::to_string(edge_cap));
    if (edge_cap > 62) bad("exact_multicut: cap above 62 is unsupported");
    if (inst.pairs.empty()) bad("exact_multicut: no pairs to separate");

    // Dense ids sorted by original id; the mask-index order is then also the
    // original-id order, which the tie-break relies on.
    std::map<int, int> vertex_index;
    for (int v : inst.vertices) vertex_index[v] = 0;
    int next = 0;
    for (auto& [id, dense] : vertex_index) dense = next++;

    std::vector<InstanceEdge> edges = inst.edges;
    std::sort(edges.begin(), edges.end(),
              [](const InstanceEdge& a, const InstanceEdge& b) { return a.id < b.id; });

    BnB bnb;
    bnb.n = next;
    bnb.adj.resize(next);
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
        const auto& e = edges[i];
        if (e.w <= 0) bad("exact_multicut: weights must be positive");
        bnb.weight.push_back(e.w);
        bnb.adj[vertex_index.at(e.u)].emplace_back(vertex_index.at(e.v), i);
        bnb.adj[vertex_index.at(e.v)].emplace_back(vertex_index.at(e.u), i);
    }
    for (const auto& [a, b] : inst.pairs)
        bnb.pairs.emplace_back(vertex_index.at(a), vertex_index.at(b));

    bnb.search(0, Rational(0));
    require(bnb.have_best, "exact_multicut: search found no cut");

    MulticutResult result;
    result.weight = bnb.best_weight;
    for (int i : BnB::mask_bits(bnb.best_mask)) result.cut_edges.push_back(edges[i].id);
    return result;
}

bool validate_multicut(const Instance& inst, const std::vector<int>& cut_edges) {
    std::map<int, int> vertex_index;
    for (int v : inst.vertices) vertex_index[v] = 0;
    int next = 0;
    for (auto& [id, dense] : vertex_index) dense = next++;

    std::set<int> known;
    for (const auto& e : inst.edges) known.insert(e.id);
    std::set<int> cut;
    for (int id : cut_edges) {
        if (!known.count(id)) bad("validate_multicut: unknown edge id " + std::to_string(id));
        cut.insert(id);
    }

    Dsu dsu(next);
    for (const auto& e : inst.edges)
        if (!cut.count(e.id)) dsu.unite(vertex_index.at(e.u), vertex_index.at(e.v));
    for (const auto& [a, b] : inst.pairs)
        if (dsu.find(vertex_index.at(a)) == dsu.find(vertex_index.at(b))) return false;
    return true;
}

Instance random_planar_instance(std::uint64_t seed, int vertex_target,
                                int terminal_count, double pair_density,
                                int weight_lo, int weight_hi) {
    if (vertex_target < 3) bad("random_planar_instance: need at least 3 vertices");
    if (terminal_count < 2 || terminal_count > vertex_target)
        bad("random_planar_instance: terminal count out of range");
    if (weight_lo < 1 || weight_hi < weight_lo)
        bad("random_planar_instance: weight range must satisfy 1 <= lo <= hi");

    std::mt19937_64 rng(seed);
    Builder b;
    if (rng() & 1) {
        const int rows = std::max(2, static_cast<int>(std::sqrt(double(vertex_target))));
        const int cols = std::max(2, (vertex_target + rows - 1) / rows);
        b = make_grid(rows, cols);
    } else {
        b = make_stacked_triangulation(std::max(3, vertex_target), rng);
    }

    // Thin the graph: a third of the edges get a deletion attempt, honored
    // when the graph stays connected.
    const int m0 = static_cast<int>(b.edges.size());
    std::vector<bool> alive(m0, true);
    for (int attempt = 0; attempt < m0 / 3; ++attempt) {
        const int e = rand_int(rng, 0, m0 - 1);
        if (!alive[e]) continue;
        if (!connected_without(b, alive, e)) continue;
        alive[e] = false;
        auto& ru = b.rotation[b.edges[e].first];
        auto& rv = b.rotation[b.edges[e].second];
        ru.erase(std::find(ru.begin(), ru.end(), 2 * e));
        rv.erase(std::find(rv.begin(), rv.end(), 2 * e + 1));
    }

    // Survivors get dense ids in construction order.
    std::vector<int> new_id(m0, -1);
    int m = 0;
    for (int e = 0; e < m0; ++e)
        if (alive[e]) new_id[e] = m++;

    Instance inst;
    for (int v = 0; v < b.vertex_count; ++v) inst.vertices.push_back(v);
    for (int e = 0; e < m0; ++e) {
        if (!alive[e]) continue;
        InstanceEdge rec;
        rec.id = new_id[e];
        rec.u = b.edges[e].first;
        rec.v = b.edges[e].second;
        rec.w = Rational(rand_int(rng, weight_lo, weight_hi));
        rec.sign = +1;
        inst.edges.push_back(rec);
    }
    for (int v = 0; v < b.vertex_count; ++v) {
        std::vector<int> ends;
        for (int dart : b.rotation[v]) ends.push_back(2 * new_id[dart >> 1] + (dart & 1));
        inst.rotations[v] = std::move(ends);
    }

    std::vector<int> order(b.vertex_count);
    std::iota(order.begin(), order.end(), 0);
    for (int i = 0; i < terminal_count; ++i) {
        const int j = rand_int(rng, i, b.vertex_count - 1);
        std::swap(order[i], order[j]);
        inst.terminals.push_back(order[i]);
    }
    std::vector<int> sorted_terminals = inst.terminals;
    std::sort(sorted_terminals.begin(), sorted_terminals.end());
    for (size_t i = 0; i < sorted_terminals.size(); ++i)
        for (size_t j = i + 1; j < sorted_terminals.size(); ++j)
            if (rand_unit(rng) < pair_density)
                inst.pairs.emplace_back(sorted_terminals[i], sorted_terminals[j]);
    if (inst.pairs.empty())
        inst.pairs.emplace_back(sorted_terminals[0], sorted_terminals[1]);
    return inst;
}

}  // namespace smc
