#include "partsched/scheduling.hpp"

#include <algorithm>
#include <stdexcept>

#include "partsched/errors.hpp"
#include "partsched/poset.hpp"
#include "partsched/saturation.hpp"

namespace partsched {

std::string_view policy_name(PolicyKind kind) {
    switch (kind) {
    case PolicyKind::modified_rs: return "mrs";
    case PolicyKind::eligible_rs: return "rs";
    case PolicyKind::lowest_label_det: return "det";
    }
    return "?";
}

std::optional<PolicyKind> parse_policy(std::string_view name) {
    if (name == "mrs") return PolicyKind::modified_rs;
    if (name == "rs") return PolicyKind::eligible_rs;
    if (name == "det") return PolicyKind::lowest_label_det;
    return std::nullopt;
}

TaskSet candidate_tasks(const SchedulerPolicy& policy, const TaskGraph& graph, const TaskSet& known_complete) {
    if (known_complete.count() >= graph.task_count()) {
        throw EmptyChoiceError("choose_next: no incomplete task remains");
    }
    if (policy.kind == PolicyKind::eligible_rs) return eligible_tasks(graph, known_complete);
    return minimal_label_incomplete(graph, known_complete);
}

TaskId choose_next(const SchedulerPolicy& policy, const TaskGraph& graph, const TaskSet& known_complete,
                   RandomStream& rng) {
    TaskSet candidates = candidate_tasks(policy, graph, known_complete);
    if (candidates.none()) {
        throw SchedulerDeadlockError("choose_next: incomplete tasks remain but none is selectable");
    }
    if (policy.kind == PolicyKind::lowest_label_det) return candidates.find_first();
    std::size_t pick = rng.uniform_index(candidates.count());
    auto task = candidates.find_first();
    while (pick-- > 0) task = candidates.find_next(task);
    return task;
}

OptBound opt_lower_bound(const CompDag& dag, const TaskGraph& graph) {
    if (graph.task_count() != dag.task_count()) {
        throw std::invalid_argument("opt_lower_bound: task graph and pattern disagree on t");
    }
    const CompDag normal = normalize_split(dag);
    const std::size_t t = normal.task_count();
    const auto report = classify_saturation(normal);

    OptBound bound;
    bound.trivial_floor = t;
    for (std::size_t i = 0; i < normal.vertex_count(); ++i) {
        const auto& v = normal.vertex(i);
        const std::size_t h_pred = report.predecessor_work[i];
        if (h_pred <= t) {
            bound.saturated_work += v.h;
        } else {
            const std::size_t prior = h_pred - v.h;
            const std::size_t remaining = prior < t ? t - prior : 0;
            bound.unsaturated_obligations.emplace_back(v.id, std::max(v.h, remaining));
        }
    }
    bound.lower_bound = std::max(bound.saturated_work, bound.trivial_floor);
    return bound;
}

} // namespace partsched
