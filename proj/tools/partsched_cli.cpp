// partsched: generate computation patterns, simulate schedulers over them and
// evaluate competitive-ratio bounds.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "partsched/analysis.hpp"
#include "partsched/io.hpp"
#include "partsched/patterns.hpp"
#include "partsched/poset.hpp"
#include "partsched/scheduling.hpp"
#include "partsched/simulator.hpp"

using namespace partsched;
using nlohmann::json;

namespace {

std::vector<Fraction> fractions_for(const std::vector<double>& values, std::size_t t) {
    std::vector<Fraction> out;
    for (double v : values) out.push_back(fraction_of_tasks(v, t));
    return out;
}

// Fractions given without a task count: exact up to a denominator of 10^9.
Fraction loose_fraction(double value) {
    constexpr std::int64_t scale = 1'000'000'000;
    return Fraction(static_cast<std::int64_t>(std::llround(value * scale)), scale);
}

json fraction_json(const Fraction& f) {
    return json{{"num", f.numerator()}, {"den", f.denominator()}, {"value", to_double(f)}};
}

PolicyKind policy_or_throw(const std::string& name) {
    auto kind = parse_policy(name);
    if (!kind) throw CLI::ValidationError("--policy", "expected one of mrs, rs, det");
    return *kind;
}

TaskGraph tasks_or_default(const std::string& path, const CompDag& dag) {
    if (!path.empty()) return load_task_graph(path);
    const std::size_t t = dag.task_count();
    return TaskGraph::build_leveled({t});
}

void emit(const json& doc, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << doc.dump(2) << '\n';
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << doc.dump(2) << '\n';
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cooperative task execution under a partitionable network"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "Write a computation pattern");
    std::string kind = "two-level";
    std::size_t w = 2, t = 4, p = 4, depth = 3, max_quota = 4;
    double alpha = 1.0, merge_prob = 0.5, split_prob = 0.5;
    std::vector<double> fractions;
    std::uint64_t gen_seed = 1;
    std::string gen_out, gen_tasks_out;
    gen->add_option("--kind", kind, "two-level | k-level | isolated | single | random")
        ->check(CLI::IsMember({"two-level", "k-level", "isolated", "single", "random"}));
    gen->add_option("--w", w, "Branch count of the lower-bound patterns");
    gen->add_option("--t", t, "Task count");
    gen->add_option("--alpha", alpha, "Fraction of tasks in the first level (two-level)");
    gen->add_option("--fractions", fractions, "Level fractions (k-level)")->delimiter(',');
    gen->add_option("--p", p, "Processor count (isolated, single, random)");
    gen->add_option("--depth", depth, "Group layers (random)");
    gen->add_option("--merge-prob", merge_prob, "Merge probability (random)");
    gen->add_option("--split-prob", split_prob, "Split probability (random)");
    gen->add_option("--max-quota", max_quota, "Largest non-terminal quota (random)");
    gen->add_option("--seed", gen_seed, "Seed (random)");
    gen->add_option("--out", gen_out, "Pattern file to write")->required();
    gen->add_option("--tasks-out", gen_tasks_out, "Also write the matching task graph file");

    // simulate
    auto* sim = app.add_subcommand("simulate", "Monte Carlo runs of a policy over a pattern");
    std::string pattern_path, tasks_path, policy = "mrs", sim_out;
    std::uint64_t seed = 1;
    std::size_t trials = 1;
    unsigned threads = 0;
    sim->add_option("--pattern", pattern_path, "Pattern file")->required()->check(CLI::ExistingFile);
    sim->add_option("--tasks", tasks_path, "Task graph file (default: t independent tasks)")
        ->check(CLI::ExistingFile);
    sim->add_option("--policy", policy, "mrs | rs | det");
    sim->add_option("--seed", seed, "Master seed");
    sim->add_option("--trials", trials, "Number of runs")->check(CLI::PositiveNumber);
    sim->add_option("--threads", threads, "Worker threads (0 = all cores)");
    sim->add_option("--out", sim_out, "CSV file (default: stdout)");

    // bounds
    auto* bounds = app.add_subcommand("bounds", "Evaluate the closed-form competitive ratios");
    std::string bound_kind = "two-level";
    double cw = 1.0, c = c_limit;
    double bound_alpha = 1.0;
    std::vector<double> bound_fractions;
    bounds->add_option("--kind", bound_kind, "two-level | k-level")->check(CLI::IsMember({"two-level", "k-level"}));
    bounds->add_option("--cw", cw, "Computation width")->check(CLI::NonNegativeNumber);
    bounds->add_option("--alpha", bound_alpha, "First-level fraction (two-level)");
    bounds->add_option("--fractions", bound_fractions, "Level fractions (k-level)")->delimiter(',');
    bounds->add_option("--c", c, "Finite-scale constant");

    // ratio
    auto* ratio = app.add_subcommand("ratio", "Empirical competitive ratio of a policy on a pattern");
    ratio->add_option("--pattern", pattern_path, "Pattern file")->required()->check(CLI::ExistingFile);
    ratio->add_option("--tasks", tasks_path, "Task graph file")->check(CLI::ExistingFile);
    ratio->add_option("--policy", policy, "mrs | rs | det");
    ratio->add_option("--trials", trials, "Number of runs")->check(CLI::PositiveNumber);
    ratio->add_option("--seed", seed, "Master seed");

    // validate / width
    auto* val = app.add_subcommand("validate", "Check a pattern file");
    val->add_option("--pattern", pattern_path, "Pattern file")->required()->check(CLI::ExistingFile);
    auto* width = app.add_subcommand("width", "Poset width and computation width of a pattern");
    width->add_option("--pattern", pattern_path, "Pattern file")->required()->check(CLI::ExistingFile);

    // concentration
    auto* conc = app.add_subcommand("concentration", "Tasks left at the first merge of the two-level pattern");
    conc->add_option("--w", w, "Branch count")->required();
    conc->add_option("--t", t, "Task count")->required();
    conc->add_option("--alpha", alpha, "First-level fraction");
    conc->add_option("--trials", trials, "Number of runs");
    conc->add_option("--seed", seed, "Master seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            CompDag dag;
            std::vector<std::size_t> levels{t};
            if (kind == "two-level") {
                const Fraction a = fraction_of_tasks(alpha, t);
                dag = gen_two_level_lb(w, t, a);
                levels = a < 1 ? level_sizes_for(t, {a, 1 - a}) : std::vector<std::size_t>{t};
            } else if (kind == "k-level") {
                const auto fr = fractions_for(fractions, t);
                dag = gen_k_level_lb(w, t, fr);
                levels = level_sizes_for(t, fr);
            } else if (kind == "isolated") {
                dag = gen_isolated(p, t);
            } else if (kind == "single") {
                dag = gen_single_group(p, t);
            } else {
                RandomPatternSpec spec;
                spec.p = p;
                spec.t = t;
                spec.depth = depth;
                spec.merge_probability = merge_prob;
                spec.split_probability = split_prob;
                spec.max_quota = max_quota;
                dag = gen_random(spec, gen_seed);
            }
            save_pattern(dag, gen_out);
            if (!gen_tasks_out.empty()) save_task_graph(TaskGraph::build_leveled(levels), gen_tasks_out);
            return 0;
        }

        if (sim->parsed()) {
            const CompDag dag = load_pattern(pattern_path);
            const TaskGraph graph = tasks_or_default(tasks_path, dag);
            MonteCarloOptions options;
            options.threads = threads;
            const auto summary =
                monte_carlo(dag, graph, SchedulerPolicy{policy_or_throw(policy)}, trials, seed, options);
            if (sim_out.empty()) {
                write_trials_csv(std::cout, summary);
            } else {
                std::ofstream out(sim_out);
                if (!out) throw std::runtime_error("cannot write " + sim_out);
                write_trials_csv(out, summary);
            }
            std::cerr << "trials=" << summary.trials << " mean_work=" << summary.mean_work
                      << " std=" << summary.sample_std << " min=" << summary.min_work << " max=" << summary.max_work
                      << '\n';
            return 0;
        }

        if (bounds->parsed()) {
            json doc;
            doc["kind"] = bound_kind;
            doc["cw"] = cw;
            doc["c"] = c;
            if (bound_kind == "two-level") {
                const Fraction a = loose_fraction(bound_alpha);
                const auto cmp = compare_bounds(cw, a, c);
                doc["alpha"] = fraction_json(a);
                doc["upper_bound"] = cmp.two_level;
                doc["upper_bound_c_k_level_statement"] = bound_two_level(cw, a, c_k_level_statement);
                doc["lower_bound"] = lower_bound_two_level(cw, a);
                doc["k_level_form_same_inputs"] = cmp.k_level;
                doc["k_level_minus_two_level"] = cmp.difference;
            } else {
                std::vector<Fraction> fr;
                for (double f : bound_fractions) fr.push_back(loose_fraction(f));
                doc["fractions"] = json::array();
                for (const auto& f : fr) doc["fractions"].push_back(fraction_json(f));
                doc["a_sequence"] = a_sequence(fr, c);
                doc["upper_bound"] = bound_k_level(cw, fr, c);
                doc["upper_bound_c_k_level_statement"] = bound_k_level(cw, fr, c_k_level_statement);
                doc["lower_bound"] = lower_bound_k_level(cw, fr);
            }
            emit(doc, {});
            return 0;
        }

        if (ratio->parsed()) {
            const CompDag dag = load_pattern(pattern_path);
            const TaskGraph graph = tasks_or_default(tasks_path, dag);
            const auto rec =
                empirical_ratio(dag, graph, SchedulerPolicy{policy_or_throw(policy)}, trials, seed, {}, pattern_path);
            json doc = {{"pattern", rec.pattern_id},
                        {"tasks", tasks_path},
                        {"policy", std::string(policy_name(rec.policy))},
                        {"trials", rec.trials},
                        {"seed", rec.seed},
                        {"mean_work", rec.mean_work},
                        {"standard_error", rec.standard_error},
                        {"denominator_kind", to_string(rec.denominator_kind)},
                        {"denominator", rec.denominator},
                        {"ratio", rec.ratio},
                        {"computation_width", rec.computation_width},
                        {"theoretical_bound", rec.theoretical_bound}};
            emit(doc, {});
            return 0;
        }

        if (val->parsed()) {
            const auto verdict = validate(load_pattern(pattern_path));
            std::cout << verdict.summary() << (verdict.ok() ? "\n" : "");
            return verdict.ok() ? 0 : 1;
        }

        if (width->parsed()) {
            const CompDag dag = load_pattern(pattern_path);
            emit(json{{"vertices", dag.vertex_count()},
                      {"poset_width", poset_width(dag)},
                      {"computation_width", computation_width(dag)}},
                 {});
            return 0;
        }

        if (conc->parsed()) {
            const Fraction a = fraction_of_tasks(alpha, t);
            const auto rep = concentration_check(w, t, a, trials, seed);
            emit(json{{"w", rep.w},
                      {"t", rep.t},
                      {"alpha", fraction_json(rep.alpha)},
                      {"trials", rep.trials},
                      {"seed", rep.seed},
                      {"mean_left", rep.mean_left},
                      {"mean_fraction_of_t", rep.mean_fraction_of_t},
                      {"mean_fraction_of_level", rep.mean_fraction_of_level},
                      {"predicted_left", rep.predicted_left},
                      {"deviation_from_prediction", rep.deviation_from_prediction},
                      {"band", rep.band},
                      {"fraction_outside_band", rep.fraction_outside_band},
                      {"empirical_c", rep.empirical_c}},
                 {});
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
