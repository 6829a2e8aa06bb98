#include "smc/dual.hpp"

#include "smc/require.hpp"

#include <algorithm>
#include <queue>

namespace smc {

int compare_costs(const SearchCost& a, const SearchCost& b) {
    if (a.length != b.length) return a.length < b.length ? -1 : 1;
    if (a.arc_crossings != b.arc_crossings) return a.arc_crossings < b.arc_crossings ? -1 : 1;
    if (a.word.size() != b.word.size()) return a.word.size() < b.word.size() ? -1 : 1;
    if (a.word != b.word) return a.word < b.word ? -1 : 1;
    return 0;
}

namespace {

struct QueueItem {
    SearchCost cost;
    int node;
    int from;
    int from_edge;
};

struct QueueOrder {
    // std::priority_queue pops the largest element, so "greater" cost means
    // served later.
    bool operator()(const QueueItem& a, const QueueItem& b) const {
        const int c = compare_costs(a.cost, b.cost);
        if (c != 0) return c > 0;
        if (a.node != b.node) return a.node > b.node;
        if (a.from != b.from) return a.from > b.from;
        return a.from_edge > b.from_edge;
    }
};

}  // namespace

SearchTree lex_dijkstra(const SearchGraph& g, const std::vector<int>& sources) {
    const int n = g.node_count();
    SearchTree t;
    t.reached.assign(n, 0);
    t.cost.resize(n);
    t.parent.assign(n, -1);
    t.parent_edge.assign(n, -1);

    std::priority_queue<QueueItem, std::vector<QueueItem>, QueueOrder> queue;
    for (int s : sources) {
        require(0 <= s && s < n, "lex_dijkstra: source out of range");
        queue.push(QueueItem{SearchCost{}, s, -1, -1});
    }
    while (!queue.empty()) {
        QueueItem item = queue.top();
        queue.pop();
        if (t.reached[item.node]) continue;
        t.reached[item.node] = 1;
        t.cost[item.node] = item.cost;
        t.parent[item.node] = item.from;
        t.parent_edge[item.node] = item.from_edge;
        const auto& out = g.adj[item.node];
        for (int i = 0; i < static_cast<int>(out.size()); ++i) {
            const SearchEdge& e = out[i];
            if (t.reached[e.to]) continue;
            SearchCost next;
            next.length = t.cost[item.node].length + e.length;
            next.arc_crossings = t.cost[item.node].arc_crossings + e.arc;
            next.word = t.cost[item.node].word;
            next.word.push_back(e.label);
            queue.push(QueueItem{std::move(next), e.to, item.node, i});
        }
    }
    return t;
}

std::vector<std::pair<int, int>> unwind_path(const SearchTree& t, int target) {
    require(target >= 0 && target < static_cast<int>(t.reached.size()),
            "unwind_path: target out of range");
    require(t.reached[target], "unwind_path: target unreached");
    std::vector<std::pair<int, int>> path;
    for (int v = target; t.parent[v] != -1; v = t.parent[v])
        path.emplace_back(t.parent[v], t.parent_edge[v]);
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace smc
