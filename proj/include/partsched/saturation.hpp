#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "partsched/comp_dag.hpp"
#include "partsched/task_graph.hpp"

namespace partsched {

/// Saturated/unsaturated partition of a pattern's vertices.
///
/// A vertex is saturated when the total quota of its predecessor graph
/// (itself included) is at most t: its group is then forced to execute its
/// whole quota no matter which tasks earlier groups picked.
struct SaturationReport {
    std::vector<VertexId> saturated;
    std::vector<VertexId> unsaturated;
    /// H(P(v)) by vertex index, v included.
    std::vector<std::size_t> predecessor_work;
    /// Saturated vertices with H(P(v)) >= alpha_1 * t. Empty without a task graph.
    std::vector<VertexId> l1_unsaturated;
    /// level_unsaturated[i]: saturated vertices with H(P(v)) >= alpha_i * t.
    std::vector<std::vector<VertexId>> level_unsaturated;

    bool is_saturated(std::size_t index, std::size_t t) const { return predecessor_work.at(index) <= t; }
};

SaturationReport classify_saturation(const CompDag& dag, const TaskGraph* tasks = nullptr);
inline SaturationReport classify_saturation(const CompDag& dag, const TaskGraph& tasks) {
    return classify_saturation(dag, &tasks);
}

/// Splits every unsaturated vertex whose strict predecessors carry less than
/// t quota into a saturated head (quota t - prior) and an unsaturated tail
/// (the rest), joined by an edge carrying the vertex's whole group. Incoming
/// edges enter the head, outgoing edges leave the tail; the head keeps the
/// original id and the tail receives a fresh id above every existing one.
///
/// Throws ValidationError if the pattern is invalid for any reason other than
/// quotas above t (those are exactly what splitting brings back in range).
CompDag normalize_split(const CompDag& dag);

} // namespace partsched
