#include <doctest.h>

#include <random>

#include "partsched/patterns.hpp"
#include "partsched/poset.hpp"
#include "support/brute_force.hpp"

using namespace partsched;
namespace bf = partsched::testing;

TEST_CASE("maximum bipartite matching") {
    CHECK(maximum_bipartite_matching({}, 0) == 0);
    CHECK(maximum_bipartite_matching({{0}, {0}}, 1) == 1);
    // needs one augmenting path through a matched vertex
    CHECK(maximum_bipartite_matching({{0, 1}, {0}}, 2) == 2);
    CHECK(maximum_bipartite_matching({{0, 1, 2}, {0}, {1}, {2}}, 3) == 3);
}

TEST_CASE("poset width of small shapes") {
    std::mt19937_64 rng(1);
    SUBCASE("a single path is a total order") {
        for (std::size_t n : {1u, 2u, 7u}) {
            auto dag = bf::random_order_dag(n, 0.0, rng);
            for (std::size_t i = 0; i + 1 < n; ++i) {
                dag.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(i + 1), ProcessorSet::all(1));
            }
            CHECK(poset_width(dag) == 1);
        }
    }
    SUBCASE("isolated vertices") {
        CHECK(poset_width(bf::random_order_dag(6, 0.0, rng)) == 6);
    }
    SUBCASE("diamond") {
        auto dag = bf::random_order_dag(4, 0.0, rng);
        auto all = ProcessorSet::all(1);
        dag.add_edge(0, 1, all);
        dag.add_edge(0, 2, all);
        dag.add_edge(1, 3, all);
        dag.add_edge(2, 3, all);
        CHECK(bf::brute_force_width(dag) == 2);
        CHECK(poset_width(dag) == 2);
    }
}

TEST_CASE("matching-based width equals exhaustive antichain search") {
    std::mt19937_64 rng(2024);
    for (int round = 0; round < 300; ++round) {
        const std::size_t n = 1 + rng() % 12;
        const double density = std::uniform_real_distribution<double>(0.0, 0.6)(rng);
        auto dag = bf::random_order_dag(n, density, rng);
        REQUIRE(poset_width(dag) == bf::brute_force_width(dag));
    }
}

TEST_CASE("computation width") {
    std::mt19937_64 rng(3);
    SUBCASE("chain") {
        auto dag = bf::random_order_dag(5, 0.0, rng);
        for (VertexId i = 0; i < 4; ++i) dag.add_edge(i, i + 1, ProcessorSet::all(1));
        CHECK(computation_width(dag) == 1);
    }
    SUBCASE("fixture") {
        auto fixture = bf::example_fixture();
        CHECK(bf::brute_force_computation_width(fixture) == 3);
        CHECK(computation_width(fixture) == 3);
        CHECK(poset_width(fixture) == bf::brute_force_width(fixture));
    }
    SUBCASE("two-level lower-bound pattern has width w") {
        for (std::size_t w = 1; w <= 4; ++w) {
            auto dag = gen_two_level_lb(w, 4 * w, Fraction(1, 2));
            CHECK(bf::brute_force_computation_width(dag) == w);
            CHECK(computation_width(dag) == w);
        }
    }
    SUBCASE("random small DAGs agree with the brute-force maximum over successor graphs") {
        for (int round = 0; round < 100; ++round) {
            auto dag = bf::random_order_dag(1 + rng() % 10, 0.3, rng);
            REQUIRE(computation_width(dag) == bf::brute_force_computation_width(dag));
        }
    }
}

TEST_CASE("reachability rows") {
    auto fixture = bf::example_fixture();
    Reachability order(fixture);
    auto reach = bf::reachability_matrix(fixture.vertex_count(), bf::index_edges(fixture));
    for (std::size_t u = 0; u < fixture.vertex_count(); ++u)
        for (std::size_t v = 0; v < fixture.vertex_count(); ++v) {
            CHECK(order.reaches(u, v) == reach[u][v]);
            CHECK(order.ancestors(v).test(u) == reach[u][v]);
        }
}
