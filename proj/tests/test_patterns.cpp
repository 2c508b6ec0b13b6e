#include <doctest.h>

#include "partsched/io.hpp"
#include "partsched/patterns.hpp"
#include "partsched/poset.hpp"
#include "support/brute_force.hpp"

using namespace partsched;
namespace bf = partsched::testing;

TEST_CASE("simple generators") {
    auto single = gen_single_group(4, 7);
    CHECK(single.vertex_count() == 1);
    CHECK(single.vertex(0).h == 7);
    CHECK(single.vertex(0).group == ProcessorSet::all(4));
    CHECK(validate(single).ok());

    auto isolated = gen_isolated(5, 3);
    CHECK(isolated.vertex_count() == 5);
    CHECK(isolated.edge_count() == 0);
    CHECK(validate(isolated).ok());
    CHECK(computation_width(isolated) == 1);
    CHECK(poset_width(isolated) == 5);

    // one processor: isolated and single coincide
    CHECK(pattern_to_json(gen_isolated(1, 4))["vertices"][0]["group"] ==
          pattern_to_json(gen_single_group(1, 4))["vertices"][0]["group"]);
    CHECK(gen_isolated(1, 4).vertex(0).h == gen_single_group(1, 4).vertex(0).h);
}

TEST_CASE("two-level lower-bound pattern") {
    for (std::size_t w : {1u, 2u, 5u}) {
        auto dag = gen_two_level_lb(w, 4 * w, Fraction(1, 4));
        CHECK(dag.vertex_count() == 3 * w + 2);
        CHECK(dag.edge_count() == 4 * w);
        CHECK_MESSAGE(validate(dag).ok(), validate(dag).summary());
        CHECK(dag.vertex(dag.index_of_name("r1.1")).h == 1);
        CHECK(dag.vertex(dag.index_of_name("r2.1")).h == 3);
        CHECK(dag.vertex(dag.index_of_name("tail.1")).h == 4 * w);
        CHECK(dag.vertex(dag.index_of_name("S")).group == ProcessorSet::all(w));
        for (auto sum : bf::maximal_path_sums(dag)) CHECK(sum == 4 * w + 4);
    }
    SUBCASE("alpha = 1 leaves empty second-round quotas") {
        auto dag = gen_two_level_lb(3, 9, Fraction(1));
        CHECK(validate(dag).ok());
        CHECK(dag.vertex(dag.index_of_name("r2.2")).h == 0);
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(gen_two_level_lb(3, 10, Fraction(1, 2)), std::invalid_argument);
        CHECK_THROWS_AS(gen_two_level_lb(2, 8, Fraction(0)), std::invalid_argument);
        CHECK_THROWS_AS(gen_two_level_lb(2, 8, Fraction(3, 2)), std::invalid_argument);
        CHECK_THROWS_AS(gen_two_level_lb(0, 8, Fraction(1, 2)), std::invalid_argument);
    }
}

TEST_CASE("k-level lower-bound pattern") {
    SUBCASE("k = 2 has the two-level shape") {
        auto k2 = gen_k_level_lb(3, 9, {Fraction(1, 3), Fraction(2, 3)});
        auto two = gen_two_level_lb(3, 9, Fraction(1, 3));
        CHECK(k2.vertex_count() == two.vertex_count());
        CHECK(k2.edge_count() == two.edge_count());
        CHECK(bf::maximal_path_sums(k2) == bf::maximal_path_sums(two));
        CHECK(computation_width(k2) == computation_width(two));
        CHECK(validate(k2).ok());
        std::vector<std::size_t> hk, ht;
        for (auto i : k2.require_topological_order()) hk.push_back(k2.vertex(i).h);
        for (auto i : two.require_topological_order()) ht.push_back(two.vertex(i).h);
        CHECK(hk == ht);
    }
    SUBCASE("k = 1") {
        auto dag = gen_k_level_lb(4, 8, {Fraction(1)});
        CHECK(dag.vertex_count() == 2 * 4 + 1);
        CHECK(validate(dag).ok());
        CHECK(dag.vertex(dag.index_of_name("r1.1")).h == 2);
    }
    SUBCASE("k = 3") {
        auto dag = gen_k_level_lb(2, 8, {Fraction(1, 4), Fraction(1, 4), Fraction(1, 2)});
        CHECK(dag.vertex_count() == 3 * 3 + 2);
        CHECK(validate(dag).ok());
        CHECK(computation_width(dag) == 2);
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(gen_k_level_lb(2, 8, {Fraction(1, 4), Fraction(1, 4)}), std::invalid_argument);
        CHECK_THROWS_AS(gen_k_level_lb(2, 8, {}), std::invalid_argument);
        CHECK_THROWS_AS(gen_k_level_lb(3, 8, {Fraction(1)}), std::invalid_argument);
    }
}

TEST_CASE("random patterns") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        RandomPatternSpec spec;
        spec.p = 1 + seed % 7;
        spec.t = 1 + seed % 9;
        spec.depth = 1 + seed % 5;
        spec.merge_probability = (seed % 4) / 3.0;
        spec.split_probability = (seed % 3) / 2.0;
        spec.max_quota = 1 + seed % 5;
        auto dag = gen_random(spec, seed);
        auto verdict = validate(dag);
        REQUIRE_MESSAGE(verdict.ok(), verdict.summary());
        CHECK(pattern_to_json(dag) == pattern_to_json(gen_random(spec, seed)));
    }
    SUBCASE("depth 1 gives initial groups with quota t") {
        RandomPatternSpec spec;
        spec.p = 6;
        spec.t = 5;
        spec.depth = 1;
        auto dag = gen_random(spec, 3);
        CHECK(dag.edge_count() == 0);
        for (const auto& v : dag.vertices()) CHECK(v.h == 5);
    }
    SUBCASE("different seeds differ") {
        RandomPatternSpec spec;
        spec.p = 8;
        spec.depth = 4;
        CHECK(pattern_to_json(gen_random(spec, 1)) != pattern_to_json(gen_random(spec, 2)));
    }
}

TEST_CASE("level sizes from fractions") {
    CHECK(level_sizes_for(10, {Fraction(3, 10), Fraction(7, 10)}) == std::vector<std::size_t>{3, 7});
    CHECK_THROWS_AS(level_sizes_for(10, {Fraction(1, 4), Fraction(3, 4)}), std::invalid_argument);
    CHECK_THROWS_AS(level_sizes_for(10, {Fraction(1, 2)}), std::invalid_argument);
    CHECK(fraction_of_tasks(0.25, 100) == Fraction(1, 4));
    CHECK_THROWS_AS(fraction_of_tasks(0.333, 100), std::invalid_argument);
}
