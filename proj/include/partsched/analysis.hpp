#pragma once

#include <cstddef>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "partsched/comp_dag.hpp"
#include "partsched/fraction.hpp"
#include "partsched/oracles.hpp"
#include "partsched/scheduling.hpp"
#include "partsched/task_graph.hpp"

namespace partsched {

/// Finite-scale constant c for the upper bounds. The two-level bound takes
/// c = 1 / (1/e + o(1)), which tends to e; the k-level bound is stated with
/// c = 1 / (1/e + 1). Both readings are exposed since they differ numerically.
inline constexpr double c_limit = std::numbers::e;
inline constexpr double c_k_level_statement = 1.0 / (1.0 / std::numbers::e + 1.0);

/// a_1 = 1, a_{i+1} = (alpha_i / alpha_1) * c^{a_i} + a_i, for i < k.
std::vector<double> a_sequence(const std::vector<Fraction>& fractions, double c);

/// 1 + cw * ((1 - alpha) + alpha * exp(-(((1 - alpha) / alpha) * c + 1)))
double bound_two_level(double cw, Fraction alpha, double c);

/// 1 + cw * ((1 - alpha_1) + alpha_1 * exp(-((alpha_k / alpha_1) * c^{a_k} + a_k)))
double bound_k_level(double cw, const std::vector<Fraction>& fractions, double c);

/// The lower-bound constructions' ratios: the same closed forms with c = e
/// and the (1 - o(1)) factors taken as 1.
double lower_bound_two_level(double cw, Fraction alpha);
double lower_bound_k_level(double cw, const std::vector<Fraction>& fractions);

/// Both closed forms on the same inputs. They agree at k = 1 only if
/// the two-level form is read with alpha = 1; otherwise the gap is reported.
struct BoundComparison {
    double two_level = 0.0;
    double k_level = 0.0;
    double difference = 0.0; // k_level - two_level
};
BoundComparison compare_bounds(double cw, Fraction alpha, double c);

enum class Denominator { exact_opt, lower_bound };
const char* to_string(Denominator d);

struct RatioRecord {
    std::string pattern_id;
    PolicyKind policy = PolicyKind::modified_rs;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    double mean_work = 0.0;
    double standard_error = 0.0;
    Denominator denominator_kind = Denominator::lower_bound;
    std::size_t denominator = 0;
    double ratio = 0.0;
    std::size_t computation_width = 0;
    /// Closed-form upper bound at c = e for the task graph's level structure.
    double theoretical_bound = 0.0;
};

/// Mean Monte Carlo work over the offline optimum when the exact oracle
/// accepts the instance, otherwise over opt_lower_bound.
RatioRecord empirical_ratio(const CompDag& dag, const TaskGraph& graph, const SchedulerPolicy& policy,
                            std::size_t trials, std::uint64_t seed, const OracleLimits& limits = {},
                            std::string pattern_id = {});

struct ConcentrationReport {
    std::size_t w = 0;
    std::size_t t = 0;
    Fraction alpha;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    /// Level-1 tasks still incomplete when group S forms, one entry per trial.
    std::vector<std::size_t> left_at_merge;
    double mean_left = 0.0;
    double mean_fraction_of_t = 0.0;
    double mean_fraction_of_level = 0.0; // mean_left / (alpha t)
    double predicted_left = 0.0;         // alpha t (1 - 1/w)^w
    double deviation_from_prediction = 0.0;
    double band = 0.0;                   // 4 ln(t) sqrt(alpha t)
    double fraction_outside_band = 0.0;
    /// 1 / mean(left / (alpha t)): the plug-in c for this scale.
    double empirical_c = 0.0;
};

/// Runs modified_rs on gen_two_level_lb(w, t, alpha) and measures how many
/// level-1 tasks remain when the first merge forms. Requires w >= 2 and
/// trials >= 100.
ConcentrationReport concentration_check(std::size_t w, std::size_t t, Fraction alpha, std::size_t trials,
                                        std::uint64_t seed);

} // namespace partsched
