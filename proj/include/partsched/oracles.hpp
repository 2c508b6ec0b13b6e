#pragma once

#include <cstddef>

#include <boost/multiprecision/cpp_int.hpp>

#include "partsched/comp_dag.hpp"
#include "partsched/scheduling.hpp"
#include "partsched/task_graph.hpp"

namespace partsched {

using ExactRational = boost::multiprecision::cpp_rational;

/// Search limits for the exhaustive oracles. Instances beyond them raise
/// ResourceLimitError instead of running unbounded.
struct OracleLimits {
    /// opt_exact refuses patterns whose total quota exceeds this.
    std::size_t max_total_quota = 24;
    /// Cap on distinct (position, live knowledge) states held at once.
    std::size_t max_states = 2'000'000;
};

/// Exact offline optimum: the minimum total work over every deterministic
/// choice of which eligible tasks each group executes, with knowledge
/// flowing along the pattern's edges. Each group executes
/// min(h(v), t - |knowledge on arrival|) tasks; only the choice of tasks is free.
/// Requires t <= 64.
std::size_t opt_exact(const CompDag& dag, const TaskGraph& graph, const OracleLimits& limits = {});

/// Exact expected work of a policy, enumerating every random choice with its
/// probability. Requires t <= 64.
ExactRational expected_work_exact(const CompDag& dag, const TaskGraph& graph, const SchedulerPolicy& policy,
                                  const OracleLimits& limits = {});

} // namespace partsched
