#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "partsched/comp_dag.hpp"
#include "partsched/scheduling.hpp"
#include "partsched/task_graph.hpp"

namespace partsched {

/// What one group did between two reconfigurations.
struct VertexTrace {
    VertexId vertex = 0;
    std::vector<TaskId> executed; // in execution order
    TaskSet knowledge_in;
    TaskSet knowledge_out;

    friend bool operator==(const VertexTrace&, const VertexTrace&) = default;
};

struct WorkReport {
    std::size_t total_work = 0;
    /// One trace per vertex, indexed like the pattern's vertices.
    std::vector<VertexTrace> traces;
    bool terminal_complete = false;

    friend bool operator==(const WorkReport&, const WorkReport&) = default;
};

/// Executes a policy over a pattern.
///
/// Vertices are visited in topological order. A group starts with the union
/// of what its predecessor groups knew and executes tasks one at a time until
/// it has spent its quota or knows every task complete. Work counts
/// executions per group vertex. The result is a pure function of the inputs
/// and the seed.
///
/// Within a vertex the candidate pool is maintained incrementally; each pick
/// is uniform over the same candidate set choose_next would use, so runs are
/// equal in distribution to repeated choose_next calls (though they consume
/// the random stream differently).
WorkReport run(const CompDag& dag, const TaskGraph& graph, const SchedulerPolicy& policy, std::uint64_t seed);

struct TrialRecord {
    std::size_t trial = 0;
    std::uint64_t seed = 0;
    std::size_t total_work = 0;
    bool terminal_complete = false;
    /// Value of MonteCarloOptions::probe for this trial, if one was given.
    double probe = 0.0;
};

struct MonteCarloOptions {
    /// 0 selects std::thread::hardware_concurrency().
    unsigned threads = 0;
    /// Optional per-trial statistic extracted from each report. Must be
    /// safe to call concurrently.
    std::function<double(const WorkReport&)> probe;
};

struct MonteCarloSummary {
    std::size_t trials = 0;
    std::uint64_t master_seed = 0;
    double mean_work = 0.0;
    double sample_std = 0.0;
    std::size_t min_work = 0;
    std::size_t max_work = 0;
    /// Mean executions per vertex index.
    std::vector<double> vertex_mean_work;
    std::vector<TrialRecord> records;

    double standard_error() const;
};

/// Independent runs with per-trial seeds derived from the master seed, so the
/// summary is reproducible regardless of the thread count.
MonteCarloSummary monte_carlo(const CompDag& dag, const TaskGraph& graph, const SchedulerPolicy& policy,
                              std::size_t trials, std::uint64_t seed, const MonteCarloOptions& options = {});

} // namespace partsched
