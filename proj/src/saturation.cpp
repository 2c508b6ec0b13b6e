#include "partsched/saturation.hpp"

#include <algorithm>

#include "partsched/errors.hpp"
#include "partsched/poset.hpp"

namespace partsched {

SaturationReport classify_saturation(const CompDag& dag, const TaskGraph* tasks) {
    const std::size_t t = dag.task_count();
    Reachability order(dag);
    SaturationReport report;
    report.predecessor_work.resize(dag.vertex_count());
    std::vector<std::size_t> thresholds;
    if (tasks != nullptr) {
        thresholds = tasks->level_sizes(); // alpha_i * t == |level i|
        report.level_unsaturated.resize(thresholds.size());
    }
    for (std::size_t i = 0; i < dag.vertex_count(); ++i) {
        const auto& above = order.ancestors(i);
        std::size_t work = 0;
        for (auto j = above.find_first(); j != VertexBits::npos; j = above.find_next(j)) {
            work += dag.vertex(j).h;
        }
        report.predecessor_work[i] = work;
        const VertexId id = dag.vertex(i).id;
        if (work <= t) {
            report.saturated.push_back(id);
            for (std::size_t level = 0; level < thresholds.size(); ++level) {
                if (work >= thresholds[level]) report.level_unsaturated[level].push_back(id);
            }
        } else {
            report.unsaturated.push_back(id);
        }
    }
    if (!report.level_unsaturated.empty()) report.l1_unsaturated = report.level_unsaturated.front();
    return report;
}

CompDag normalize_split(const CompDag& dag) {
    auto verdict = validate(dag);
    for (const auto& v : verdict.violations) {
        if (v.kind != ViolationKind::quota_range) {
            throw ValidationError("normalize_split: invalid pattern: " + verdict.summary());
        }
    }
    const std::size_t t = dag.task_count();
    Reachability order(dag);

    struct Split {
        std::size_t head_quota;
        VertexId tail_id;
    };
    std::vector<std::optional<Split>> splits(dag.vertex_count());
    VertexId next_id = dag.vertex_count() == 0 ? 0 : dag.max_id() + 1;
    for (std::size_t i = 0; i < dag.vertex_count(); ++i) {
        const auto& above = order.ancestors(i);
        std::size_t prior = 0;
        for (auto j = above.find_first(); j != VertexBits::npos; j = above.find_next(j)) {
            if (j != i) prior += dag.vertex(j).h;
        }
        const std::size_t h = dag.vertex(i).h;
        // unsaturated (prior + h > t) with prior < t
        if (prior < t && prior + h > t) splits[i] = Split{t - prior, next_id++};
    }

    CompDag out(dag.processor_count(), t);
    for (std::size_t i = 0; i < dag.vertex_count(); ++i) {
        const auto& v = dag.vertex(i);
        if (splits[i]) {
            out.add_vertex(v.id, splits[i]->head_quota, v.group, v.name);
        } else {
            out.add_vertex(v.id, v.h, v.group, v.name);
        }
    }
    for (std::size_t i = 0; i < dag.vertex_count(); ++i) {
        if (!splits[i]) continue;
        const auto& v = dag.vertex(i);
        out.add_vertex(splits[i]->tail_id, v.h - splits[i]->head_quota, v.group,
                       v.name.empty() ? std::string{} : v.name + "_u");
        out.add_edge(v.id, splits[i]->tail_id, v.group);
    }
    for (const auto& e : dag.edges()) {
        auto from = dag.index_of(e.from);
        VertexId source = splits[from] ? splits[from]->tail_id : e.from;
        out.add_edge(source, e.to, e.phi);
    }
    return out;
}

} // namespace partsched
