#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "partsched/fraction.hpp"

namespace partsched {

using TaskId = std::size_t;
using TaskEdge = std::pair<TaskId, TaskId>;

/// Membership over the task ids [0, t).
using TaskSet = boost::dynamic_bitset<std::uint64_t>;

TaskSet make_task_set(std::size_t t, std::initializer_list<TaskId> members = {});
TaskSet make_task_set(std::size_t t, std::span<const TaskId> members);
std::vector<TaskId> members_of(const TaskSet& set);

/// Leveled task dependency graph.
///
/// Labels are longest-path depths from the independent tasks; level i holds
/// every task labelled i. Graphs produced by build_leveled keep their
/// complete inter-level edges implicit, so a level of n tasks followed by a
/// level of m tasks costs O(n + m) memory rather than O(n * m).
class TaskGraph {
public:
    /// Complete k-partite graph: every task of level i precedes every task of level i + 1.
    static TaskGraph build_leveled(std::span<const std::size_t> level_sizes);
    static TaskGraph build_leveled(std::initializer_list<std::size_t> level_sizes) {
        return build_leveled(std::span<const std::size_t>(level_sizes.begin(), level_sizes.size()));
    }

    /// Arbitrary DAG over [0, t). Throws CyclicDependencyError on a cycle and
    /// std::invalid_argument on an out-of-range endpoint or a self loop.
    static TaskGraph label_dag(std::size_t t, std::span<const TaskEdge> edges);

    std::size_t task_count() const { return labels_.size(); }
    std::size_t level_count() const { return level_sizes_.size(); }
    std::size_t label(TaskId task) const { return labels_.at(task); }
    const std::vector<std::size_t>& labels() const { return labels_; }
    const std::vector<std::size_t>& level_sizes() const { return level_sizes_; }

    /// alpha_i = level_sizes[i] / t, exact.
    std::vector<Fraction> level_fractions() const;

    /// Tasks of one level in increasing id order.
    std::span<const TaskId> tasks_at_level(std::size_t level) const;

    /// True if built by build_leveled, or if the explicit edge set is exactly
    /// the complete inter-level edge set of its labelling.
    bool is_complete_leveled() const { return complete_leveled_; }

    std::vector<TaskId> predecessors(TaskId task) const;
    std::vector<TaskId> successors(TaskId task) const;
    std::size_t edge_count() const;
    /// Materialized, sorted edge list.
    std::vector<TaskEdge> edges() const;

    /// All predecessors of task are in known.
    bool dependencies_met(TaskId task, const TaskSet& known) const;
    /// Every member of known has all of its predecessors in known.
    bool is_dependency_closed(const TaskSet& known) const;

private:
    TaskGraph() = default;
    void index_levels();

    std::vector<std::size_t> labels_;
    std::vector<std::size_t> level_sizes_;
    std::vector<std::vector<TaskId>> by_level_;
    // explicit adjacency; empty when implicit_
    std::vector<std::vector<TaskId>> preds_;
    std::vector<std::vector<TaskId>> succs_;
    bool implicit_ = false;
    bool complete_leveled_ = false;
};

/// Incomplete tasks whose dependencies are all in known_complete.
/// Throws PreconditionError if known_complete is not dependency-closed.
TaskSet eligible_tasks(const TaskGraph& graph, const TaskSet& known_complete);

/// Incomplete tasks carrying the smallest label among incomplete tasks.
/// Throws EmptyChoiceError when every task is complete.
TaskSet minimal_label_incomplete(const TaskGraph& graph, const TaskSet& known_complete);

} // namespace partsched
