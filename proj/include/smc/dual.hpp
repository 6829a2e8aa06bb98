#pragma once

#include "smc/rational.hpp"

#include <vector>

namespace smc {

// ---------------------------------------------------------------------------
// Lexicographic shortest paths.
//
// Curves are found as shortest paths in explicit search graphs whose nodes
// are faces (of the arrangement, of a cut-open region, of a stack of glued
// region copies) and whose edges are crossings.  All searches share one cost
// discipline so that every geodesic is unique and deterministic:
//
//   (length, arc crossings, word length, word)
//
// compared lexicographically.  `length` is the exact crossing weight, `arc
// crossings` counts crossings of cut-system arcs, and `word` is the sequence
// of edge labels along the path.  The word length is compared before the
// word's content: appending a label then preserves strict comparisons (plain
// lexicographic order on words of different lengths would not survive
// appends when zero-cost labels are involved), which is exactly the
// monotonicity Dijkstra's invariant needs.
// ---------------------------------------------------------------------------

struct SearchCost {
    Rational length;
    int arc_crossings = 0;
    std::vector<int> word;
};

// Negative, zero, positive for a < b, a == b, a > b.
int compare_costs(const SearchCost& a, const SearchCost& b);

struct SearchEdge {
    int to = 0;
    Rational length;
    int arc = 0;    // 1 when this crossing traverses a cut-system arc
    int label = 0;  // tie-break letter, also reported on reconstruction
    int tag = 0;    // caller payload, opaque to the search
};

struct SearchGraph {
    std::vector<std::vector<SearchEdge>> adj;

    int add_node() {
        adj.emplace_back();
        return static_cast<int>(adj.size()) - 1;
    }
    int node_count() const { return static_cast<int>(adj.size()); }
    void add_arrow(int from, int to, const Rational& length, int arc, int label,
                   int tag) {
        adj[from].push_back(SearchEdge{to, length, arc, label, tag});
    }
    // Both directions with the same label/tag (crossings are symmetric).
    void add_edge(int a, int b, const Rational& length, int arc, int label, int tag) {
        add_arrow(a, b, length, arc, label, tag);
        add_arrow(b, a, length, arc, label, tag);
    }
};

struct SearchTree {
    std::vector<char> reached;
    std::vector<SearchCost> cost;
    std::vector<int> parent;       // predecessor node, -1 at sources
    std::vector<int> parent_edge;  // index into adj[parent], -1 at sources
};

// Multi-source Dijkstra under the lexicographic cost.  All sources start at
// zero cost; ties between equal-cost relaxations resolve toward the smaller
// (label, to) pair, so the tree is deterministic.
SearchTree lex_dijkstra(const SearchGraph& g, const std::vector<int>& sources);

// The edges of the tree path into `target`, source first: pairs of
// (node the edge leaves, index into adj[node]).
std::vector<std::pair<int, int>> unwind_path(const SearchTree& t, int target);

}  // namespace smc
