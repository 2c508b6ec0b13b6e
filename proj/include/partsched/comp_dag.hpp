#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "partsched/processor_set.hpp"

namespace partsched {

using VertexId = int;

/// A processor group between two reconfigurations, with its work quota.
struct CompVertex {
    VertexId id = 0;
    std::size_t h = 0;
    ProcessorSet group;
    std::string name; // optional display label, e.g. "g7" or "S"
};

/// Processors flowing from one group vertex into the next.
struct CompEdge {
    VertexId from = 0;
    VertexId to = 0;
    ProcessorSet phi;
};

/// Computation pattern over p processors and t tasks.
///
/// Vertices carry caller-chosen ids; internally they are stored densely and
/// addressed by index (the order of insertion). Construction only checks
/// referential integrity; the structural clauses are checked by validate().
class CompDag {
public:
    CompDag() = default;
    CompDag(std::size_t processor_count, std::size_t task_count)
        : p_(processor_count), t_(task_count) {}

    std::size_t processor_count() const { return p_; }
    std::size_t task_count() const { return t_; }
    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    /// Returns the index of the new vertex. Throws std::invalid_argument on a duplicate id.
    std::size_t add_vertex(VertexId id, std::size_t h, ProcessorSet group, std::string name = {});
    /// Throws std::invalid_argument if either endpoint is unknown.
    std::size_t add_edge(VertexId from, VertexId to, ProcessorSet phi);

    const std::vector<CompVertex>& vertices() const { return vertices_; }
    const std::vector<CompEdge>& edges() const { return edges_; }
    const CompVertex& vertex(std::size_t index) const { return vertices_.at(index); }
    CompVertex& vertex(std::size_t index) { return vertices_.at(index); }

    std::optional<std::size_t> find(VertexId id) const;
    /// Throws std::invalid_argument on an unknown id.
    std::size_t index_of(VertexId id) const;
    /// First vertex carrying this display name; throws std::invalid_argument if absent.
    std::size_t index_of_name(const std::string& name) const;

    /// Edge indices.
    const std::vector<std::size_t>& in_edges(std::size_t index) const { return in_.at(index); }
    const std::vector<std::size_t>& out_edges(std::size_t index) const { return out_.at(index); }
    std::vector<std::size_t> predecessors(std::size_t index) const;
    std::vector<std::size_t> successors(std::size_t index) const;

    std::size_t total_quota() const;
    VertexId max_id() const;

    /// Vertex indices in a topological order (Kahn, smallest index first),
    /// or nullopt if the graph has a cycle.
    std::optional<std::vector<std::size_t>> topological_order() const;
    /// As above but throws CyclicDependencyError.
    std::vector<std::size_t> require_topological_order() const;

    /// Subgraph induced by the given vertex indices (kept in index order).
    CompDag induced(const std::vector<std::size_t>& indices) const;

private:
    std::size_t p_ = 0;
    std::size_t t_ = 0;
    std::vector<CompVertex> vertices_;
    std::vector<CompEdge> edges_;
    std::vector<std::vector<std::size_t>> in_;
    std::vector<std::vector<std::size_t>> out_;
    std::unordered_map<VertexId, std::size_t> index_;
};

enum class ViolationKind {
    cycle,
    empty_group,
    empty_flow,
    processor_range,
    quota_range,
    initial_condition,
    inflow_conservation,
    outflow_conservation,
    path_weight,
};

const char* to_string(ViolationKind kind);

struct Violation {
    ViolationKind kind;
    std::optional<VertexId> vertex;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    bool has(ViolationKind kind) const;
    std::string summary() const;
};

/// Checks every structural clause of a computation pattern and reports all
/// violations found: acyclicity, nonempty groups and flows, quotas in [0, t],
/// the initial groups partitioning [1, p], disjoint-union conservation into
/// and out of every vertex, and every maximal path carrying at least t quota.
ValidationReport validate(const CompDag& dag);

/// Union of all paths ending at the given vertex.
CompDag predecessor_graph(const CompDag& dag, VertexId v);
/// Union of all paths starting at the given vertex.
CompDag successor_graph(const CompDag& dag, VertexId v);

} // namespace partsched
