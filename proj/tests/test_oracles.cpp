#include <doctest.h>

#include <cmath>

#include "partsched/errors.hpp"
#include "partsched/oracles.hpp"
#include "partsched/patterns.hpp"
#include "partsched/scheduling.hpp"
#include "partsched/simulator.hpp"
#include "support/brute_force.hpp"

using namespace partsched;
namespace bf = partsched::testing;

namespace {

const SchedulerPolicy mrs{PolicyKind::modified_rs};
const SchedulerPolicy rs{PolicyKind::eligible_rs};
const SchedulerPolicy det{PolicyKind::lowest_label_det};

} // namespace

TEST_CASE("opt_exact on hand-solved instances") {
    CHECK(opt_exact(gen_single_group(3, 6), TaskGraph::build_leveled({6})) == 6);
    CHECK(opt_exact(bf::tiny_merge_pattern(), TaskGraph::build_leveled({2})) == 2);
    CHECK(opt_exact(gen_isolated(2, 5), TaskGraph::build_leveled({5})) == 10);
    // a dependency forces both singletons onto task 0
    CHECK(opt_exact(bf::tiny_merge_pattern(), TaskGraph::build_leveled({1, 1})) == 3);
}

TEST_CASE("opt_exact refuses large instances") {
    OracleLimits limits;
    limits.max_total_quota = 5;
    CHECK_THROWS_AS(opt_exact(gen_isolated(2, 4), TaskGraph::build_leveled({4}), limits), ResourceLimitError);
}

TEST_CASE("expected_work_exact on hand-solved instances") {
    auto tiny = bf::tiny_merge_pattern();
    auto flat = TaskGraph::build_leveled({2});
    // the singletons collide with probability 1/2 and the merge then redoes one task
    CHECK(expected_work_exact(tiny, flat, mrs) == ExactRational(5, 2));
    CHECK(expected_work_exact(tiny, flat, rs) == ExactRational(5, 2));
    CHECK(expected_work_exact(tiny, flat, det) == 3);
    CHECK(expected_work_exact(gen_single_group(2, 1), TaskGraph::build_leveled({1}), mrs) == 1);
}

TEST_CASE("deterministic expectation equals a single run") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        RandomPatternSpec spec;
        spec.p = 3;
        spec.t = 4;
        spec.depth = 1 + seed % 3;
        spec.max_quota = 2;
        auto dag = gen_random(spec, seed);
        auto graph = TaskGraph::build_leveled({2, 2});
        auto exact = expected_work_exact(dag, graph, det);
        CHECK(exact == ExactRational(run(dag, graph, det, seed).total_work));
    }
}

TEST_CASE("oracle ordering on small random patterns") {
    int checked = 0;
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        RandomPatternSpec spec;
        spec.p = 2 + seed % 3;
        spec.t = 3 + seed % 3;
        spec.depth = 1 + seed % 3;
        spec.max_quota = 2;
        auto dag = gen_random(spec, seed);
        std::vector<std::size_t> sizes{1, spec.t - 1};
        if (seed % 2) sizes = {spec.t};
        auto graph = TaskGraph::build_leveled(sizes);
        std::size_t opt = 0;
        try {
            opt = opt_exact(dag, graph);
        } catch (const ResourceLimitError&) {
            continue;
        }
        ++checked;
        CHECK(opt >= opt_lower_bound(dag, graph).lower_bound);
        CHECK(opt <= dag.total_quota());
        for (const auto& policy : {mrs, rs, det}) {
            CHECK(expected_work_exact(dag, graph, policy) >= ExactRational(opt));
        }
    }
    CHECK(checked > 30);
}

TEST_CASE("Monte Carlo agrees with the exact expectation") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        RandomPatternSpec spec;
        spec.p = 3;
        spec.t = 4;
        spec.depth = 3;
        spec.max_quota = 3;
        auto dag = gen_random(spec, 100 + seed);
        auto graph = TaskGraph::build_leveled({2, 2});
        const double exact = expected_work_exact(dag, graph, mrs).convert_to<double>();
        auto summary = monte_carlo(dag, graph, mrs, 4000, seed);
        const double se = std::max(summary.standard_error(), 1e-9);
        CHECK(std::abs(summary.mean_work - exact) <= 4.0 * se + 1e-9);
    }
}
