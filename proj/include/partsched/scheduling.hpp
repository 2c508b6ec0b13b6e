#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "partsched/comp_dag.hpp"
#include "partsched/random.hpp"
#include "partsched/task_graph.hpp"

namespace partsched {

enum class PolicyKind {
    /// Uniform over the incomplete tasks of minimal label.
    modified_rs,
    /// Uniform over every dependency-eligible incomplete task.
    eligible_rs,
    /// Smallest task id among the incomplete tasks of minimal label.
    lowest_label_det,
};

struct SchedulerPolicy {
    PolicyKind kind = PolicyKind::modified_rs;

    bool randomized() const { return kind != PolicyKind::lowest_label_det; }
};

/// CLI spellings: "mrs", "rs", "det".
std::string_view policy_name(PolicyKind kind);
std::optional<PolicyKind> parse_policy(std::string_view name);

/// Tasks the policy may pick next, given what is known complete.
TaskSet candidate_tasks(const SchedulerPolicy& policy, const TaskGraph& graph, const TaskSet& known_complete);

/// Picks the next task to execute. Randomized kinds draw one uniform index
/// over the candidates in increasing id order; the deterministic kind draws
/// nothing. Throws EmptyChoiceError when every task is complete.
TaskId choose_next(const SchedulerPolicy& policy, const TaskGraph& graph, const TaskSet& known_complete,
                   RandomStream& rng);

/// Lower bound on the offline optimum of a pattern.
struct OptBound {
    std::size_t saturated_work = 0;
    std::size_t trivial_floor = 0;
    /// (vertex id, max(h(v), t - sum of quota strictly before v)) per unsaturated vertex.
    std::vector<std::pair<VertexId, std::size_t>> unsaturated_obligations;
    std::size_t lower_bound = 0;
};

/// max(t, total quota of saturated vertices), evaluated on the normalized
/// pattern (normalization is applied here; it is idempotent).
OptBound opt_lower_bound(const CompDag& dag, const TaskGraph& graph);

} // namespace partsched
