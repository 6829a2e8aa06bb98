#pragma once

#include "smc/instance.hpp"
#include "smc/rational.hpp"

#include <cstdint>
#include <vector>

namespace smc {

// ---------------------------------------------------------------------------
// Exact reference solver and instance generator.
//
// The exact solver is deliberately independent of all surface machinery: it
// works on the abstract weighted graph, so it can serve as an oracle for the
// approximation pipeline without sharing code paths with it.
// ---------------------------------------------------------------------------

struct MulticutResult {
    Rational weight;
    std::vector<int> cut_edges;  // original edge ids, sorted ascending
};

// Minimum multicut by branch and bound: repeatedly pick a still-connected
// terminal pair, find a shortest-hop path between them, and branch on which
// path edge joins the cut.  Exact for any weights; intended for small
// instances and refuses anything above `edge_cap` edges.  Deterministic:
// ties between optimal cuts resolve to the lexicographically smallest sorted
// edge-id list.
MulticutResult exact_multicut(const Instance& inst, int edge_cap = 22);

// True iff removing `cut_edges` (original ids) disconnects every pair.
// Throws std::invalid_argument on unknown edge ids.
bool validate_multicut(const Instance& inst, const std::vector<int>& cut_edges);

// Seeded random planar instance: a rectangular grid or a stacked
// triangulation (picked by the seed), thinned by random edge deletions that
// keep the graph connected, with uniform integer weights in
// [weight_lo, weight_hi], `terminal_count` distinct random terminals and a
// random nonempty subset of the terminal pairs (each kept with probability
// `pair_density`).  The embedding is planar: the rotation system always
// traces to Euler genus 0.  Byte-identical output for equal arguments on
// every platform: randomness comes from std::mt19937_64 (whose sequence the
// standard pins down) through plain modulo reduction.
Instance random_planar_instance(std::uint64_t seed, int vertex_target,
                                int terminal_count, double pair_density,
                                int weight_lo, int weight_hi);

}  // namespace smc
