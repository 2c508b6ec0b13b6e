#pragma once

// Independent oracles for the unit and acceptance tests. Nothing here calls
// into the library's graph algorithms; everything is recomputed from edge
// lists by enumeration.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "partsched/comp_dag.hpp"
#include "partsched/io.hpp"

namespace partsched::testing {

using Matrix = std::vector<std::vector<bool>>;

/// Reflexive reachability by Floyd-Warshall over an edge list.
inline Matrix reachability_matrix(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    Matrix r(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) r[i][i] = true;
    for (auto [u, v] : edges) r[u][v] = true;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (r[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (r[k][j]) r[i][j] = true;
    return r;
}

inline std::vector<std::pair<std::size_t, std::size_t>> index_edges(const CompDag& dag) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (const auto& e : dag.edges()) out.emplace_back(dag.index_of(e.from), dag.index_of(e.to));
    return out;
}

/// Largest antichain among `members` by trying every subset.
inline std::size_t brute_force_width(const Matrix& reach, const std::vector<std::size_t>& members) {
    const std::size_t n = members.size();
    std::size_t best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::size_t size = static_cast<std::size_t>(__builtin_popcount(mask));
        if (size <= best) continue;
        bool antichain = true;
        for (std::size_t a = 0; a < n && antichain; ++a) {
            if (!(mask >> a & 1)) continue;
            for (std::size_t b = a + 1; b < n && antichain; ++b) {
                if (!(mask >> b & 1)) continue;
                if (reach[members[a]][members[b]] || reach[members[b]][members[a]]) antichain = false;
            }
        }
        if (antichain) best = size;
    }
    return best;
}

inline std::size_t brute_force_width(const CompDag& dag) {
    auto reach = reachability_matrix(dag.vertex_count(), index_edges(dag));
    std::vector<std::size_t> all(dag.vertex_count());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return brute_force_width(reach, all);
}

/// max over v of the brute-force width of the vertices reachable from v.
inline std::size_t brute_force_computation_width(const CompDag& dag) {
    auto reach = reachability_matrix(dag.vertex_count(), index_edges(dag));
    std::size_t best = 0;
    for (std::size_t v = 0; v < dag.vertex_count(); ++v) {
        std::vector<std::size_t> below;
        for (std::size_t u = 0; u < dag.vertex_count(); ++u)
            if (reach[v][u]) below.push_back(u);
        best = std::max(best, brute_force_width(reach, below));
    }
    return best;
}

/// Random DAG on n vertices: edges only from lower to higher index, each
/// present with probability density. Vertex ids equal indices; every vertex
/// gets a dummy group so the structure can be fed to poset routines.
inline CompDag random_order_dag(std::size_t n, double density, std::mt19937_64& rng) {
    CompDag dag(1, 1);
    for (std::size_t i = 0; i < n; ++i) dag.add_vertex(static_cast<VertexId>(i), 0, ProcessorSet::all(1));
    std::bernoulli_distribution coin(density);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (coin(rng)) dag.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(j), ProcessorSet::all(1));
    return dag;
}

/// Quota sums of every maximal (source-to-sink) path, sorted.
inline std::vector<std::size_t> maximal_path_sums(const CompDag& dag) {
    std::vector<std::size_t> sums;
    std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t v, std::size_t acc) {
        acc += dag.vertex(v).h;
        auto next = dag.successors(v);
        if (next.empty()) {
            sums.push_back(acc);
            return;
        }
        for (auto s : next) walk(s, acc);
    };
    for (std::size_t v = 0; v < dag.vertex_count(); ++v)
        if (dag.in_edges(v).empty()) walk(v, 0);
    std::sort(sums.begin(), sums.end());
    return sums;
}

inline CompDag example_fixture() {
    return load_pattern(std::string(PARTSCHED_DATA_DIR) + "/example_pattern.json");
}

/// Names of the vertices of `sub`, sorted.
inline std::vector<std::string> names_of(const CompDag& sub) {
    std::vector<std::string> out;
    for (const auto& v : sub.vertices()) out.push_back(v.name);
    std::sort(out.begin(), out.end());
    return out;
}

/// Two singleton groups with quota 1 merging into a pair group with quota 2.
inline CompDag tiny_merge_pattern(std::size_t t = 2) {
    CompDag dag(2, t);
    dag.add_vertex(1, 1, ProcessorSet::of(2, {1}));
    dag.add_vertex(2, 1, ProcessorSet::of(2, {2}));
    dag.add_vertex(3, 2, ProcessorSet::all(2));
    dag.add_edge(1, 3, ProcessorSet::of(2, {1}));
    dag.add_edge(2, 3, ProcessorSet::of(2, {2}));
    return dag;
}

} // namespace partsched::testing
