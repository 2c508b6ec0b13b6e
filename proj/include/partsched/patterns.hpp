#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "partsched/comp_dag.hpp"
#include "partsched/fraction.hpp"
#include "partsched/task_graph.hpp"

namespace partsched {

enum class PatternKind { single_group, isolated, two_level_lb, k_level_lb, random };

/// Knobs for gen_random.
struct RandomPatternSpec {
    std::size_t p = 4;
    std::size_t t = 8;
    /// Number of group layers; 1 yields only initial groups.
    std::size_t depth = 3;
    /// Chance that two adjacent pieces of the shuffled partition fuse at a reconfiguration.
    double merge_probability = 0.5;
    /// Chance that a group breaks apart at a reconfiguration.
    double split_probability = 0.5;
    /// Quotas of non-terminal groups are drawn uniformly from [0, min(max_quota, t)].
    std::size_t max_quota = 4;
};

/// One group holding every processor, quota t.
CompDag gen_single_group(std::size_t p, std::size_t t);

/// p singleton groups that never communicate, quota t each.
CompDag gen_isolated(std::size_t p, std::size_t t);

/// Two-round lower-bound pattern over w singleton processors:
///   w singletons (quota alpha t / w) -> merge "S" (quota 0)
///   -> w singletons (quota (1 - alpha) t / w) -> merge "U" (quota 0)
///   -> w singletons (quota t).
/// Vertices are named "r1.i", "S", "r2.i", "U", "tail.i" (i from 1).
/// Throws std::invalid_argument unless alpha in (0, 1] and both quotas are integral.
CompDag gen_two_level_lb(std::size_t w, std::size_t t, Fraction alpha);

/// k rounds of (w singletons with quota alpha_i t / w -> merge "S<i>" with
/// quota 0), then a final split into w singletons with quota t.
/// Vertices are named "r<i>.<j>", "S<i>", "tail.<j>".
CompDag gen_k_level_lb(std::size_t w, std::size_t t, const std::vector<Fraction>& fractions);

/// Layered random merge/split pattern; every sink is padded so each maximal
/// path carries at least t quota. Deterministic in (spec, seed).
CompDag gen_random(const RandomPatternSpec& spec, std::uint64_t seed);

/// Level sizes alpha_i * t for the given fractions; throws unless each is a
/// positive integer and the fractions sum to 1.
std::vector<std::size_t> level_sizes_for(std::size_t t, const std::vector<Fraction>& fractions);

/// Converts a decimal fraction such as 0.5 to an exact rational with
/// denominator t, requiring alpha * t to be integral within 1e-9.
Fraction fraction_of_tasks(double alpha, std::size_t t);

} // namespace partsched
