#include "partsched/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "partsched/errors.hpp"
#include "partsched/random.hpp"

namespace partsched {

namespace {

// Candidate pool for one group vertex. `known` is updated as tasks execute.
class GroupSelector {
public:
    GroupSelector(const TaskGraph& graph, PolicyKind kind, TaskSet& known, RandomStream& rng)
        : graph_(graph), kind_(kind), known_(known), rng_(rng) {
        // on complete leveled graphs the eligible set is exactly the lowest open level
        by_level_ = kind != PolicyKind::eligible_rs || graph.is_complete_leveled();
        if (!by_level_) seed_eligible();
    }

    TaskId next() {
        if (pool_.empty() && by_level_) refill_level();
        if (pool_.empty()) {
            throw SchedulerDeadlockError("run: incomplete tasks remain but the policy has no candidate");
        }
        TaskId task;
        if (kind_ == PolicyKind::lowest_label_det) {
            task = pool_.back(); // pool is kept in decreasing id order
            pool_.pop_back();
        } else {
            std::size_t i = rng_.uniform_index(pool_.size());
            task = pool_[i];
            pool_[i] = pool_.back();
            pool_.pop_back();
        }
        known_.set(task);
        if (!by_level_) release_successors(task);
        return task;
    }

private:
    void refill_level() {
        while (level_ < graph_.level_count()) {
            for (TaskId task : graph_.tasks_at_level(level_)) {
                if (!known_.test(task)) pool_.push_back(task);
            }
            ++level_;
            if (!pool_.empty()) break;
        }
        if (kind_ == PolicyKind::lowest_label_det) std::reverse(pool_.begin(), pool_.end());
    }

    void seed_eligible() {
        missing_.assign(graph_.task_count(), 0);
        for (TaskId task = 0; task < graph_.task_count(); ++task) {
            if (known_.test(task)) continue;
            for (TaskId u : graph_.predecessors(task)) {
                if (!known_.test(u)) ++missing_[task];
            }
            if (missing_[task] == 0) pool_.push_back(task);
        }
    }

    void release_successors(TaskId task) {
        for (TaskId v : graph_.successors(task)) {
            if (!known_.test(v) && --missing_[v] == 0) pool_.push_back(v);
        }
    }

    const TaskGraph& graph_;
    PolicyKind kind_;
    TaskSet& known_;
    RandomStream& rng_;
    bool by_level_ = true;
    std::size_t level_ = 0;
    std::vector<TaskId> pool_;
    std::vector<std::size_t> missing_;
};

void check_inputs(const CompDag& dag, const TaskGraph& graph) {
    if (graph.task_count() != dag.task_count()) {
        throw std::invalid_argument("run: task graph has " + std::to_string(graph.task_count()) +
                                    " tasks but the pattern expects " + std::to_string(dag.task_count()));
    }
    auto verdict = validate(dag);
    if (!verdict.ok()) throw ValidationError("run: invalid pattern: " + verdict.summary());
}

WorkReport run_checked(const CompDag& dag, const TaskGraph& graph, const std::vector<std::size_t>& order,
                       const SchedulerPolicy& policy, std::uint64_t seed) {
    const std::size_t t = graph.task_count();
    RandomStream rng(seed);
    WorkReport report;
    report.traces.resize(dag.vertex_count());
    for (auto v : order) {
        auto& trace = report.traces[v];
        trace.vertex = dag.vertex(v).id;
        TaskSet known(t);
        for (auto u : dag.predecessors(v)) known |= report.traces[u].knowledge_out;
        trace.knowledge_in = known;

        const std::size_t budget = std::min(dag.vertex(v).h, t - known.count());
        if (budget > 0) {
            GroupSelector selector(graph, policy.kind, known, rng);
            trace.executed.reserve(budget);
            for (std::size_t i = 0; i < budget; ++i) trace.executed.push_back(selector.next());
        }
        report.total_work += trace.executed.size();
        trace.knowledge_out = std::move(known);
    }
    report.terminal_complete = true;
    for (std::size_t v = 0; v < dag.vertex_count(); ++v) {
        if (dag.out_edges(v).empty() && report.traces[v].knowledge_out.count() != t) {
            report.terminal_complete = false;
        }
    }
    return report;
}

} // namespace

WorkReport run(const CompDag& dag, const TaskGraph& graph, const SchedulerPolicy& policy, std::uint64_t seed) {
    check_inputs(dag, graph);
    return run_checked(dag, graph, dag.require_topological_order(), policy, seed);
}

double MonteCarloSummary::standard_error() const {
    return trials == 0 ? 0.0 : sample_std / std::sqrt(static_cast<double>(trials));
}

MonteCarloSummary monte_carlo(const CompDag& dag, const TaskGraph& graph, const SchedulerPolicy& policy,
                              std::size_t trials, std::uint64_t seed, const MonteCarloOptions& options) {
    if (trials == 0) throw std::invalid_argument("monte_carlo: at least one trial is required");
    check_inputs(dag, graph);
    const auto order = dag.require_topological_order();

    unsigned threads = options.threads != 0 ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, trials));

    MonteCarloSummary summary;
    summary.trials = trials;
    summary.master_seed = seed;
    summary.records.resize(trials);
    // integer per-vertex sums keep the aggregate independent of the thread split
    std::vector<std::vector<std::uint64_t>> vertex_sums(threads, std::vector<std::uint64_t>(dag.vertex_count()));

    auto worker = [&](unsigned id) {
        for (std::size_t trial = id; trial < trials; trial += threads) {
            const std::uint64_t trial_seed = RandomStream::derive_seed(seed, trial);
            WorkReport report = run_checked(dag, graph, order, policy, trial_seed);
            auto& rec = summary.records[trial];
            rec.trial = trial;
            rec.seed = trial_seed;
            rec.total_work = report.total_work;
            rec.terminal_complete = report.terminal_complete;
            if (options.probe) rec.probe = options.probe(report);
            for (std::size_t v = 0; v < report.traces.size(); ++v) {
                vertex_sums[id][v] += report.traces[v].executed.size();
            }
        }
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned id = 0; id < threads; ++id) pool.emplace_back(worker, id);
    }

    double sum = 0.0;
    summary.min_work = summary.records.front().total_work;
    summary.max_work = summary.min_work;
    for (const auto& rec : summary.records) {
        sum += static_cast<double>(rec.total_work);
        summary.min_work = std::min(summary.min_work, rec.total_work);
        summary.max_work = std::max(summary.max_work, rec.total_work);
    }
    summary.mean_work = sum / static_cast<double>(trials);
    if (trials > 1) {
        double sq = 0.0;
        for (const auto& rec : summary.records) {
            const double d = static_cast<double>(rec.total_work) - summary.mean_work;
            sq += d * d;
        }
        summary.sample_std = std::sqrt(sq / static_cast<double>(trials - 1));
    }
    summary.vertex_mean_work.assign(dag.vertex_count(), 0.0);
    for (std::size_t v = 0; v < dag.vertex_count(); ++v) {
        std::uint64_t total = 0;
        for (const auto& part : vertex_sums) total += part[v];
        summary.vertex_mean_work[v] = static_cast<double>(total) / static_cast<double>(trials);
    }
    return summary;
}

} // namespace partsched
