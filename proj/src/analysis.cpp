#include "partsched/analysis.hpp"

#include <cmath>
#include <stdexcept>

#include "partsched/errors.hpp"
#include "partsched/patterns.hpp"
#include "partsched/poset.hpp"
#include "partsched/simulator.hpp"

namespace partsched {

namespace {

void check_fractions(const std::vector<Fraction>& fractions) {
    if (fractions.empty()) throw std::invalid_argument("at least one level fraction is required");
    for (const auto& f : fractions) {
        if (f <= 0 || f > 1) throw std::invalid_argument("level fractions must lie in (0, 1]");
    }
}

void check_scale(double cw, double c) {
    if (cw < 0) throw std::invalid_argument("computation width must be non-negative");
    if (!(c > 0)) throw std::invalid_argument("c must be positive");
}

} // namespace

std::vector<double> a_sequence(const std::vector<Fraction>& fractions, double c) {
    check_fractions(fractions);
    const double first = to_double(fractions.front());
    std::vector<double> a{1.0};
    for (std::size_t i = 0; i + 1 < fractions.size(); ++i) {
        a.push_back(to_double(fractions[i]) / first * std::pow(c, a.back()) + a.back());
    }
    return a;
}

double bound_two_level(double cw, Fraction alpha, double c) {
    if (alpha <= 0 || alpha > 1) throw std::invalid_argument("alpha must lie in (0, 1]");
    check_scale(cw, c);
    const double a = to_double(alpha);
    const double exponent = (1.0 - a) / a * c + 1.0;
    return 1.0 + cw * ((1.0 - a) + a * std::exp(-exponent));
}

double bound_k_level(double cw, const std::vector<Fraction>& fractions, double c) {
    check_scale(cw, c);
    const auto a = a_sequence(fractions, c);
    const double first = to_double(fractions.front());
    const double last = to_double(fractions.back());
    const double exponent = last / first * std::pow(c, a.back()) + a.back();
    return 1.0 + cw * ((1.0 - first) + first * std::exp(-exponent));
}

double lower_bound_two_level(double cw, Fraction alpha) {
    return bound_two_level(cw, alpha, std::numbers::e);
}

double lower_bound_k_level(double cw, const std::vector<Fraction>& fractions) {
    return bound_k_level(cw, fractions, std::numbers::e);
}

BoundComparison compare_bounds(double cw, Fraction alpha, double c) {
    BoundComparison out;
    out.two_level = bound_two_level(cw, alpha, c);
    std::vector<Fraction> fractions{alpha};
    if (alpha < 1) fractions.push_back(1 - alpha);
    out.k_level = bound_k_level(cw, fractions, c);
    out.difference = out.k_level - out.two_level;
    return out;
}

const char* to_string(Denominator d) {
    return d == Denominator::exact_opt ? "exact_opt" : "lower_bound";
}

RatioRecord empirical_ratio(const CompDag& dag, const TaskGraph& graph, const SchedulerPolicy& policy,
                            std::size_t trials, std::uint64_t seed, const OracleLimits& limits,
                            std::string pattern_id) {
    RatioRecord rec;
    rec.pattern_id = std::move(pattern_id);
    rec.policy = policy.kind;
    rec.trials = trials;
    rec.seed = seed;
    const auto summary = monte_carlo(dag, graph, policy, trials, seed);
    rec.mean_work = summary.mean_work;
    rec.standard_error = summary.standard_error();

    try {
        if (graph.task_count() > 64) throw ResourceLimitError("too many tasks for the exact oracle");
        rec.denominator = opt_exact(dag, graph, limits);
        rec.denominator_kind = Denominator::exact_opt;
    } catch (const ResourceLimitError&) {
        rec.denominator = opt_lower_bound(dag, graph).lower_bound;
        rec.denominator_kind = Denominator::lower_bound;
    }
    rec.ratio = rec.mean_work / static_cast<double>(rec.denominator);

    rec.computation_width = computation_width(dag);
    const auto fractions = graph.level_fractions();
    const double cw = static_cast<double>(rec.computation_width);
    rec.theoretical_bound = fractions.size() <= 2 ? bound_two_level(cw, fractions.front(), c_limit)
                                                  : bound_k_level(cw, fractions, c_limit);
    return rec;
}

ConcentrationReport concentration_check(std::size_t w, std::size_t t, Fraction alpha, std::size_t trials,
                                        std::uint64_t seed) {
    if (w < 2) throw std::invalid_argument("concentration_check: w = 1 has no redundancy to measure");
    if (trials < 100) throw std::invalid_argument("concentration_check: at least 100 trials are required");

    const CompDag dag = gen_two_level_lb(w, t, alpha);
    std::vector<std::size_t> sizes{static_cast<std::size_t>((alpha * static_cast<std::int64_t>(t)).numerator())};
    if (sizes.front() < t) sizes.push_back(t - sizes.front());
    const TaskGraph graph = TaskGraph::build_leveled(sizes);
    const std::size_t merge = dag.index_of_name("S");
    const std::size_t level_one = sizes.front();

    MonteCarloOptions options;
    options.probe = [&](const WorkReport& report) {
        std::size_t known = 0;
        const auto& in = report.traces[merge].knowledge_in;
        for (TaskId task : graph.tasks_at_level(0)) known += in.test(task) ? 1 : 0;
        return static_cast<double>(level_one - known);
    };
    const auto summary = monte_carlo(dag, graph, SchedulerPolicy{PolicyKind::modified_rs}, trials, seed, options);

    ConcentrationReport rep;
    rep.w = w;
    rep.t = t;
    rep.alpha = alpha;
    rep.trials = trials;
    rep.seed = seed;
    double sum = 0.0;
    for (const auto& r : summary.records) {
        rep.left_at_merge.push_back(static_cast<std::size_t>(r.probe));
        sum += r.probe;
    }
    const double alpha_t = static_cast<double>(level_one);
    rep.mean_left = sum / static_cast<double>(trials);
    rep.mean_fraction_of_t = rep.mean_left / static_cast<double>(t);
    rep.mean_fraction_of_level = rep.mean_left / alpha_t;
    rep.predicted_left = alpha_t * std::pow(1.0 - 1.0 / static_cast<double>(w), static_cast<double>(w));
    rep.deviation_from_prediction = rep.mean_left - rep.predicted_left;
    rep.band = 4.0 * std::log(static_cast<double>(t)) * std::sqrt(alpha_t);
    std::size_t outside = 0;
    for (auto left : rep.left_at_merge) {
        if (std::abs(static_cast<double>(left) - rep.mean_left) >= rep.band) ++outside;
    }
    rep.fraction_outside_band = static_cast<double>(outside) / static_cast<double>(trials);
    rep.empirical_c = rep.mean_fraction_of_level > 0 ? 1.0 / rep.mean_fraction_of_level : 0.0;
    return rep;
}

} // namespace partsched
