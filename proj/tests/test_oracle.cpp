#include "doctest.h"

#include "smc/instance.hpp"
#include "smc/oracle.hpp"

#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

using namespace smc;

namespace {

Instance path_instance() {
    // 0 --5-- 1 --3-- 2, terminals 0 and 2.
    Instance inst;
    inst.vertices = {0, 1, 2};
    inst.edges = {{0, 0, 1, Rational(5), +1}, {1, 1, 2, Rational(3), +1}};
    inst.rotations[0] = {0};
    inst.rotations[1] = {1, 2};
    inst.rotations[2] = {3};
    inst.terminals = {0, 2};
    inst.pairs = {{0, 2}};
    return inst;
}

Instance triangle_instance() {
    Instance inst;
    inst.vertices = {0, 1, 2};
    inst.edges = {{0, 0, 1, Rational(5), +1},
                  {1, 1, 2, Rational(3), +1},
                  {2, 2, 0, Rational(4), +1}};
    inst.rotations[0] = {5, 0};
    inst.rotations[1] = {1, 2};
    inst.rotations[2] = {3, 4};
    inst.terminals = {0, 2};
    inst.pairs = {{0, 2}};
    return inst;
}

// Independent reference: sweep all edge subsets, keep the best multicut
// under the same (weight, sorted ids) order the solver promises.
MulticutResult exhaustive_multicut(const Instance& inst) {
    const int m = static_cast<int>(inst.edges.size());
    REQUIRE(m <= 14);
    std::map<int, int> vid;
    for (int v : inst.vertices) vid[v] = 0;
    int n = 0;
    for (auto& [k, d] : vid) d = n++;

    MulticutResult best;
    bool have = false;
    for (int mask = 0; mask < (1 << m); ++mask) {
        std::vector<int> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        Rational w = 0;
        std::vector<int> ids;
        for (int i = 0; i < m; ++i) {
            if (mask >> i & 1) {
                w += inst.edges[i].w;
                ids.push_back(inst.edges[i].id);
            } else {
                parent[find(vid.at(inst.edges[i].u))] = find(vid.at(inst.edges[i].v));
            }
        }
        bool ok = true;
        for (const auto& [a, b] : inst.pairs)
            if (find(vid.at(a)) == find(vid.at(b))) ok = false;
        if (!ok) continue;
        std::sort(ids.begin(), ids.end());
        if (!have || w < best.weight || (w == best.weight && ids < best.cut_edges)) {
            best.weight = w;
            best.cut_edges = ids;
            have = true;
        }
    }
    REQUIRE(have);
    return best;
}

}  // namespace

TEST_CASE("exact multicut on a path cuts the cheap edge") {
    const MulticutResult r = exact_multicut(path_instance());
    CHECK(r.weight == Rational(3));
    CHECK(r.cut_edges == std::vector<int>{1});
}

TEST_CASE("exact multicut on a triangle needs two edges") {
    const MulticutResult r = exact_multicut(triangle_instance());
    // Separating 0 from 2 requires edge 2 plus the cheaper of edges 0, 1.
    CHECK(r.weight == Rational(7));
    CHECK(r.cut_edges == std::vector<int>{1, 2});
}

TEST_CASE("exact multicut refuses oversized instances") {
    CHECK_THROWS_AS(exact_multicut(triangle_instance(), 2), std::invalid_argument);
}

TEST_CASE("validate_multicut checks separation and ids") {
    const Instance inst = triangle_instance();
    CHECK(validate_multicut(inst, {1, 2}));
    CHECK(validate_multicut(inst, {0, 1, 2}));
    CHECK_FALSE(validate_multicut(inst, {0, 1}));
    CHECK_FALSE(validate_multicut(inst, {}));
    CHECK_THROWS_AS(validate_multicut(inst, {17}), std::invalid_argument);
}

TEST_CASE("exact multicut agrees with the exhaustive sweep") {
    int checked = 0;
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        const Instance inst = random_planar_instance(seed, 6, 3, 0.8, 1, 16);
        if (inst.edges.size() > 14) continue;
        const MulticutResult fast = exact_multicut(inst);
        const MulticutResult slow = exhaustive_multicut(inst);
        CHECK(fast.weight == slow.weight);
        CHECK(fast.cut_edges == slow.cut_edges);
        CHECK(validate_multicut(inst, fast.cut_edges));
        ++checked;
    }
    CHECK(checked >= 15);
}

TEST_CASE("generated instances are planar, connected and reproducible") {
    for (std::uint64_t seed : {3u, 14u, 159u, 2653u}) {
        const Instance inst = random_planar_instance(seed, 9, 3, 0.7, 1, 16);
        Surface s = build_surface(inst);
        CHECK(s.map.euler_genus() == 0);
        CHECK(s.map.is_orientable());
        s.map.check();
        CHECK(inst.terminals.size() == 3);
        CHECK(!inst.pairs.empty());
        // Byte-identical regeneration.
        const Instance again = random_planar_instance(seed, 9, 3, 0.7, 1, 16);
        CHECK(format_instance(inst) == format_instance(again));
    }
    // Different seeds give different instances.
    CHECK(format_instance(random_planar_instance(1, 9, 3, 0.7, 1, 16)) !=
          format_instance(random_planar_instance(2, 9, 3, 0.7, 1, 16)));
}

TEST_CASE("generated weights respect the requested range") {
    const Instance inst = random_planar_instance(11, 12, 4, 0.5, 2, 6);
    for (const auto& e : inst.edges) {
        CHECK(e.w >= 2);
        CHECK(e.w <= 6);
    }
    std::set<int> terminals(inst.terminals.begin(), inst.terminals.end());
    CHECK(terminals.size() == 4);
    for (const auto& [a, b] : inst.pairs) {
        CHECK(terminals.count(a));
        CHECK(terminals.count(b));
        CHECK(a != b);
    }
}
