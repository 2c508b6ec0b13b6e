#include "partsched/oracles.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "partsched/errors.hpp"

namespace partsched {

namespace {

using Mask = std::uint64_t;
using State = std::vector<Mask>;

enum class Choice { minimal_label, eligible, lowest_minimal_label };

// Bitmask view of a pattern and task graph shared by both oracles.
class Enumerator {
public:
    Enumerator(const CompDag& dag, const TaskGraph& graph, const OracleLimits& limits)
        : dag_(dag), limits_(limits), t_(graph.task_count()) {
        if (t_ > 64) throw ResourceLimitError("exact oracle supports at most 64 tasks");
        if (graph.task_count() != dag.task_count()) {
            throw std::invalid_argument("task graph and pattern disagree on t");
        }
        auto verdict = validate(dag);
        if (!verdict.ok()) throw ValidationError("exact oracle needs a valid pattern: " + verdict.summary());

        all_ = t_ == 64 ? ~Mask{0} : (Mask{1} << t_) - 1;
        preds_.resize(t_);
        for (auto [u, v] : graph.edges()) preds_[v] |= Mask{1} << u;
        for (std::size_t l = 0; l < graph.level_count(); ++l) {
            Mask m = 0;
            for (auto task : graph.tasks_at_level(l)) m |= Mask{1} << task;
            levels_.push_back(m);
        }

        order_ = dag.require_topological_order();
        std::vector<std::size_t> position(dag.vertex_count());
        for (std::size_t k = 0; k < order_.size(); ++k) position[order_[k]] = k;
        last_use_.assign(dag.vertex_count(), 0);
        for (std::size_t i = 0; i < dag.vertex_count(); ++i) {
            for (auto s : dag.successors(i)) last_use_[i] = std::max(last_use_[i], position[s]);
        }
        live_.resize(order_.size() + 1);
        for (std::size_t k = 0; k < order_.size(); ++k) {
            std::vector<std::size_t> next;
            for (auto v : live_[k]) {
                if (last_use_[v] > k) next.push_back(v);
            }
            if (!dag.successors(order_[k]).empty()) next.push_back(order_[k]);
            live_[k + 1] = std::move(next);
        }
    }

    std::size_t steps() const { return order_.size(); }

    Mask knowledge_in(std::size_t k, const State& state) const {
        Mask in = 0;
        const auto v = order_[k];
        for (std::size_t j = 0; j < live_[k].size(); ++j) {
            for (auto e : dag_.in_edges(v)) {
                if (dag_.index_of(dag_.edges()[e].from) == live_[k][j]) in |= state[j];
            }
        }
        return in;
    }

    std::size_t executions(std::size_t k, Mask in) const {
        const std::size_t known = static_cast<std::size_t>(std::popcount(in));
        return std::min(dag_.vertex(order_[k]).h, t_ - known);
    }

    State advance(std::size_t k, const State& state, Mask out) const {
        State next;
        next.reserve(live_[k + 1].size());
        for (std::size_t j = 0; j < live_[k].size(); ++j) {
            if (last_use_[live_[k][j]] > k) next.push_back(state[j]);
        }
        if (!dag_.successors(order_[k]).empty()) next.push_back(out);
        return next;
    }

    Mask candidates(Mask known, Choice choice) const {
        const Mask incomplete = all_ & ~known;
        if (choice == Choice::eligible) {
            Mask out = 0;
            for (std::size_t task = 0; task < t_; ++task) {
                if ((incomplete >> task & 1) && (preds_[task] & ~known) == 0) out |= Mask{1} << task;
            }
            return out;
        }
        for (Mask level : levels_) {
            Mask open = level & incomplete;
            if (open != 0) return choice == Choice::lowest_minimal_label ? (open & (~open + 1)) : open;
        }
        return 0;
    }

    void check_states(std::size_t count) const {
        if (count > limits_.max_states) {
            throw ResourceLimitError("exact oracle exceeded " + std::to_string(limits_.max_states) + " states");
        }
    }

private:
    const CompDag& dag_;
    OracleLimits limits_;
    std::size_t t_;
    Mask all_ = 0;
    std::vector<Mask> preds_;
    std::vector<Mask> levels_;
    std::vector<std::size_t> order_;
    std::vector<std::size_t> last_use_;
    std::vector<std::vector<std::size_t>> live_;
};

Choice choice_for(PolicyKind kind) {
    switch (kind) {
    case PolicyKind::modified_rs: return Choice::minimal_label;
    case PolicyKind::eligible_rs: return Choice::eligible;
    case PolicyKind::lowest_label_det: return Choice::lowest_minimal_label;
    }
    return Choice::minimal_label;
}

class OptSearch {
public:
    explicit OptSearch(const Enumerator& en) : en_(en), memo_(en.steps() + 1) {}

    std::size_t best(std::size_t k, const State& state) {
        if (k == en_.steps()) return 0;
        auto& table = memo_[k];
        if (auto it = table.find(state); it != table.end()) return it->second;

        const Mask in = en_.knowledge_in(k, state);
        const std::size_t m = en_.executions(k, in);
        // every knowledge set reachable by m eligible executions
        std::set<Mask> frontier{in};
        for (std::size_t step = 0; step < m; ++step) {
            std::set<Mask> next;
            for (Mask known : frontier) {
                Mask cand = en_.candidates(known, Choice::eligible);
                for (Mask c = cand; c != 0; c &= c - 1) next.insert(known | (c & (~c + 1)));
            }
            frontier = std::move(next);
            en_.check_states(frontier.size());
        }
        std::size_t result = SIZE_MAX;
        for (Mask out : frontier) result = std::min(result, best(k + 1, en_.advance(k, state, out)));
        result += m;
        table.emplace(state, result);
        ++stored_;
        en_.check_states(stored_);
        return result;
    }

private:
    const Enumerator& en_;
    std::vector<std::map<State, std::size_t>> memo_;
    std::size_t stored_ = 0;
};

} // namespace

std::size_t opt_exact(const CompDag& dag, const TaskGraph& graph, const OracleLimits& limits) {
    if (dag.total_quota() > limits.max_total_quota) {
        const auto bound = opt_lower_bound(dag, graph);
        throw ResourceLimitError("opt_exact: total quota " + std::to_string(dag.total_quota()) +
                                 " exceeds the search cap " + std::to_string(limits.max_total_quota) +
                                 "; use the lower bound " + std::to_string(bound.lower_bound) + " instead");
    }
    Enumerator en(dag, graph, limits);
    OptSearch search(en);
    return search.best(0, State{});
}

ExactRational expected_work_exact(const CompDag& dag, const TaskGraph& graph, const SchedulerPolicy& policy,
                                  const OracleLimits& limits) {
    Enumerator en(dag, graph, limits);
    const Choice choice = choice_for(policy.kind);
    ExactRational expected = 0;
    std::map<State, ExactRational> states{{State{}, ExactRational(1)}};
    for (std::size_t k = 0; k < en.steps(); ++k) {
        std::map<State, ExactRational> next;
        for (const auto& [state, prob] : states) {
            const Mask in = en.knowledge_in(k, state);
            const std::size_t m = en.executions(k, in);
            expected += prob * m;
            std::map<Mask, ExactRational> outcome{{in, ExactRational(1)}};
            for (std::size_t step = 0; step < m; ++step) {
                std::map<Mask, ExactRational> after;
                for (const auto& [known, q] : outcome) {
                    Mask cand = en.candidates(known, choice);
                    if (cand == 0) throw SchedulerDeadlockError("expected_work_exact: no selectable task");
                    ExactRational share = q / std::popcount(cand);
                    for (Mask c = cand; c != 0; c &= c - 1) after[known | (c & (~c + 1))] += share;
                }
                outcome = std::move(after);
                en.check_states(outcome.size());
            }
            for (const auto& [out, q] : outcome) next[en.advance(k, state, out)] += prob * q;
        }
        states = std::move(next);
        en.check_states(states.size());
    }
    return expected;
}

} // namespace partsched
