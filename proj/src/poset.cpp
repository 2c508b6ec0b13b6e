#include "partsched/poset.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace partsched {

Reachability::Reachability(const CompDag& dag) {
    const std::size_t n = dag.vertex_count();
    const auto order = dag.require_topological_order();
    descendants_.assign(n, VertexBits(n));
    ancestors_.assign(n, VertexBits(n));
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        auto u = *it;
        descendants_[u].set(u);
        for (auto v : dag.successors(u)) descendants_[u] |= descendants_[v];
    }
    for (auto u : order) {
        ancestors_[u].set(u);
        for (auto w : dag.predecessors(u)) ancestors_[u] |= ancestors_[w];
    }
}

std::size_t maximum_bipartite_matching(const std::vector<std::vector<std::size_t>>& adj,
                                       std::size_t right_count) {
    constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
    const std::size_t left_count = adj.size();
    std::vector<std::size_t> match_left(left_count, none);
    std::vector<std::size_t> match_right(right_count, none);
    std::vector<std::size_t> dist(left_count);

    auto bfs = [&]() {
        std::queue<std::size_t> q;
        bool found = false;
        for (std::size_t u = 0; u < left_count; ++u) {
            if (match_left[u] == none) {
                dist[u] = 0;
                q.push(u);
            } else {
                dist[u] = none;
            }
        }
        while (!q.empty()) {
            auto u = q.front();
            q.pop();
            for (auto v : adj[u]) {
                auto w = match_right[v];
                if (w == none) {
                    found = true;
                } else if (dist[w] == none) {
                    dist[w] = dist[u] + 1;
                    q.push(w);
                }
            }
        }
        return found;
    };

    // iterative DFS along the layered graph
    std::vector<std::size_t> next_edge(left_count);
    auto dfs = [&](std::size_t root) {
        std::vector<std::size_t> path{root};
        while (!path.empty()) {
            auto u = path.back();
            if (next_edge[u] == adj[u].size()) {
                dist[u] = none;
                path.pop_back();
                continue;
            }
            auto v = adj[u][next_edge[u]++];
            auto w = match_right[v];
            if (w == none) {
                // augment along the path
                for (auto it = path.rbegin(); it != path.rend(); ++it) {
                    auto x = *it;
                    auto prev = match_left[x];
                    match_left[x] = v;
                    match_right[v] = x;
                    v = prev;
                }
                return true;
            }
            if (dist[w] == dist[u] + 1) path.push_back(w);
        }
        return false;
    };

    std::size_t matching = 0;
    while (bfs()) {
        std::fill(next_edge.begin(), next_edge.end(), 0);
        for (std::size_t u = 0; u < left_count; ++u) {
            if (match_left[u] == none && dfs(u)) ++matching;
        }
    }
    return matching;
}

std::size_t poset_width(const Reachability& order, const VertexBits& members) {
    std::vector<std::size_t> local(order.size(), 0);
    std::vector<std::size_t> ids;
    for (auto i = members.find_first(); i != VertexBits::npos; i = members.find_next(i)) {
        local[i] = ids.size();
        ids.push_back(i);
    }
    std::vector<std::vector<std::size_t>> adj(ids.size());
    for (std::size_t a = 0; a < ids.size(); ++a) {
        const auto& below = order.descendants(ids[a]);
        for (auto j = below.find_first(); j != VertexBits::npos; j = below.find_next(j)) {
            if (j != ids[a] && members.test(j)) adj[a].push_back(local[j]);
        }
    }
    return ids.size() - maximum_bipartite_matching(adj, ids.size());
}

std::size_t poset_width(const CompDag& dag) {
    if (dag.vertex_count() == 0) return 0;
    Reachability order(dag);
    VertexBits all(dag.vertex_count());
    all.set();
    return poset_width(order, all);
}

std::size_t computation_width(const CompDag& dag) {
    Reachability order(dag);
    // u <= v implies S(v) is a subposet of S(u), so the maximum is attained
    // at an initial vertex
    std::size_t best = 0;
    for (std::size_t i = 0; i < dag.vertex_count(); ++i) {
        if (dag.in_edges(i).empty()) best = std::max(best, poset_width(order, order.descendants(i)));
    }
    return best;
}

} // namespace partsched
