#include "partsched/task_graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "partsched/errors.hpp"

namespace partsched {

TaskSet make_task_set(std::size_t t, std::initializer_list<TaskId> members) {
    return make_task_set(t, std::span<const TaskId>(members.begin(), members.size()));
}

TaskSet make_task_set(std::size_t t, std::span<const TaskId> members) {
    TaskSet set(t);
    for (TaskId m : members) {
        if (m >= t) {
            throw std::invalid_argument("task id " + std::to_string(m) + " out of range");
        }
        set.set(m);
    }
    return set;
}

std::vector<TaskId> members_of(const TaskSet& set) {
    std::vector<TaskId> out;
    out.reserve(set.count());
    for (auto i = set.find_first(); i != TaskSet::npos; i = set.find_next(i)) {
        out.push_back(i);
    }
    return out;
}

TaskGraph TaskGraph::build_leveled(std::span<const std::size_t> level_sizes) {
    if (level_sizes.empty()) {
        throw std::invalid_argument("build_leveled: at least one level is required");
    }
    TaskGraph g;
    for (std::size_t level = 0; level < level_sizes.size(); ++level) {
        if (level_sizes[level] == 0) {
            throw std::invalid_argument("build_leveled: level " + std::to_string(level) + " is empty");
        }
        g.labels_.insert(g.labels_.end(), level_sizes[level], level);
    }
    g.implicit_ = true;
    g.complete_leveled_ = true;
    g.index_levels();
    return g;
}

TaskGraph TaskGraph::label_dag(std::size_t t, std::span<const TaskEdge> edges) {
    TaskGraph g;
    g.preds_.resize(t);
    g.succs_.resize(t);
    std::vector<TaskEdge> sorted(edges.begin(), edges.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (auto [u, v] : sorted) {
        if (u >= t || v >= t) {
            throw std::invalid_argument("label_dag: edge endpoint out of range");
        }
        if (u == v) {
            throw CyclicDependencyError("label_dag: self loop on task " + std::to_string(u));
        }
        g.succs_[u].push_back(v);
        g.preds_[v].push_back(u);
    }

    // longest-path labelling over a Kahn order: the fixed point of raising a
    // label whenever a predecessor offers a larger one
    std::vector<std::size_t> indeg(t);
    for (TaskId v = 0; v < t; ++v) indeg[v] = g.preds_[v].size();
    std::vector<TaskId> ready;
    for (TaskId v = t; v-- > 0;) {
        if (indeg[v] == 0) ready.push_back(v);
    }
    g.labels_.assign(t, 0);
    std::size_t processed = 0;
    while (!ready.empty()) {
        TaskId u = ready.back();
        ready.pop_back();
        ++processed;
        for (TaskId v : g.succs_[u]) {
            g.labels_[v] = std::max(g.labels_[v], g.labels_[u] + 1);
            if (--indeg[v] == 0) ready.push_back(v);
        }
    }
    if (processed != t) {
        throw CyclicDependencyError("label_dag: task graph contains a cycle");
    }
    g.index_levels();

    std::size_t complete_edges = 0;
    for (std::size_t i = 0; i + 1 < g.level_sizes_.size(); ++i) {
        complete_edges += g.level_sizes_[i] * g.level_sizes_[i + 1];
    }
    g.complete_leveled_ = complete_edges == sorted.size() &&
                          std::all_of(sorted.begin(), sorted.end(), [&](const TaskEdge& e) {
                              return g.labels_[e.second] == g.labels_[e.first] + 1;
                          });
    return g;
}

void TaskGraph::index_levels() {
    std::size_t levels = 0;
    for (auto l : labels_) levels = std::max(levels, l + 1);
    level_sizes_.assign(levels, 0);
    by_level_.assign(levels, {});
    for (TaskId v = 0; v < labels_.size(); ++v) {
        ++level_sizes_[labels_[v]];
        by_level_[labels_[v]].push_back(v);
    }
}

std::vector<Fraction> TaskGraph::level_fractions() const {
    std::vector<Fraction> out;
    const auto t = static_cast<std::int64_t>(task_count());
    for (auto n : level_sizes_) out.emplace_back(static_cast<std::int64_t>(n), t);
    return out;
}

std::span<const TaskId> TaskGraph::tasks_at_level(std::size_t level) const {
    return by_level_.at(level);
}

std::vector<TaskId> TaskGraph::predecessors(TaskId task) const {
    if (!implicit_) return preds_.at(task);
    std::size_t l = labels_.at(task);
    if (l == 0) return {};
    return by_level_[l - 1];
}

std::vector<TaskId> TaskGraph::successors(TaskId task) const {
    if (!implicit_) return succs_.at(task);
    std::size_t l = labels_.at(task);
    if (l + 1 >= by_level_.size()) return {};
    return by_level_[l + 1];
}

std::size_t TaskGraph::edge_count() const {
    if (!implicit_) {
        std::size_t n = 0;
        for (const auto& s : succs_) n += s.size();
        return n;
    }
    std::size_t n = 0;
    for (std::size_t i = 0; i + 1 < level_sizes_.size(); ++i) n += level_sizes_[i] * level_sizes_[i + 1];
    return n;
}

std::vector<TaskEdge> TaskGraph::edges() const {
    std::vector<TaskEdge> out;
    out.reserve(edge_count());
    for (TaskId u = 0; u < task_count(); ++u) {
        for (TaskId v : successors(u)) out.emplace_back(u, v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool TaskGraph::dependencies_met(TaskId task, const TaskSet& known) const {
    if (!implicit_) {
        return std::all_of(preds_.at(task).begin(), preds_[task].end(),
                           [&](TaskId u) { return known.test(u); });
    }
    std::size_t l = labels_.at(task);
    if (l == 0) return true;
    const auto& prev = by_level_[l - 1];
    return std::all_of(prev.begin(), prev.end(), [&](TaskId u) { return known.test(u); });
}

bool TaskGraph::is_dependency_closed(const TaskSet& known) const {
    if (known.size() != task_count()) return false;
    if (implicit_) {
        // a known task at level l needs all of level l - 1
        std::vector<std::size_t> known_per_level(level_count(), 0);
        for (auto i = known.find_first(); i != TaskSet::npos; i = known.find_next(i)) {
            ++known_per_level[labels_[i]];
        }
        for (std::size_t l = 1; l < level_count(); ++l) {
            if (known_per_level[l] > 0 && known_per_level[l - 1] != level_sizes_[l - 1]) return false;
        }
        return true;
    }
    for (auto i = known.find_first(); i != TaskSet::npos; i = known.find_next(i)) {
        if (!dependencies_met(i, known)) return false;
    }
    return true;
}

TaskSet eligible_tasks(const TaskGraph& graph, const TaskSet& known_complete) {
    if (known_complete.size() != graph.task_count()) {
        throw std::invalid_argument("eligible_tasks: task set size does not match the graph");
    }
    if (!graph.is_dependency_closed(known_complete)) {
        throw PreconditionError("eligible_tasks: known-complete set is not dependency-closed");
    }
    TaskSet out(graph.task_count());
    for (TaskId v = 0; v < graph.task_count(); ++v) {
        if (!known_complete.test(v) && graph.dependencies_met(v, known_complete)) out.set(v);
    }
    return out;
}

TaskSet minimal_label_incomplete(const TaskGraph& graph, const TaskSet& known_complete) {
    if (known_complete.size() != graph.task_count()) {
        throw std::invalid_argument("minimal_label_incomplete: task set size does not match the graph");
    }
    TaskSet out(graph.task_count());
    for (std::size_t level = 0; level < graph.level_count(); ++level) {
        for (TaskId v : graph.tasks_at_level(level)) {
            if (!known_complete.test(v)) out.set(v);
        }
        if (out.any()) return out;
    }
    throw EmptyChoiceError("minimal_label_incomplete: every task is complete");
}

} // namespace partsched
