#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "partsched/comp_dag.hpp"

namespace partsched {

using VertexBits = boost::dynamic_bitset<std::uint64_t>;

/// Reflexive transitive closure of a computation pattern, one bit row per
/// vertex index. Requires an acyclic pattern (throws CyclicDependencyError).
class Reachability {
public:
    explicit Reachability(const CompDag& dag);

    std::size_t size() const { return descendants_.size(); }
    /// u <= v
    bool reaches(std::size_t u, std::size_t v) const { return descendants_[u].test(v); }
    const VertexBits& descendants(std::size_t u) const { return descendants_[u]; }
    const VertexBits& ancestors(std::size_t v) const { return ancestors_[v]; }

private:
    std::vector<VertexBits> descendants_;
    std::vector<VertexBits> ancestors_;
};

/// Maximum matching of a bipartite graph given as left-side adjacency lists
/// over right vertices [0, right_count). Hopcroft-Karp, O(E sqrt(V)).
std::size_t maximum_bipartite_matching(const std::vector<std::vector<std::size_t>>& left_adjacency,
                                       std::size_t right_count);

/// Width of the subposet induced by `members` under the order in `order`:
/// |members| minus a maximum matching of the strict comparability graph
/// (minimum chain cover, Dilworth).
std::size_t poset_width(const Reachability& order, const VertexBits& members);

/// Maximum antichain size of the vertex poset of an acyclic pattern.
std::size_t poset_width(const CompDag& dag);

/// Maximum over vertices v of the width of the successor graph of v.
std::size_t computation_width(const CompDag& dag);

} // namespace partsched
