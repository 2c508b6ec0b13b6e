#include <doctest.h>

#include "partsched/comp_dag.hpp"
#include "partsched/errors.hpp"
#include "support/brute_force.hpp"

using namespace partsched;
using partsched::testing::example_fixture;
using partsched::testing::names_of;

namespace {

CompDag chain_abc(std::size_t t) {
    CompDag dag(2, t);
    dag.add_vertex(1, 1, ProcessorSet::all(2), "a");
    dag.add_vertex(2, 1, ProcessorSet::all(2), "b");
    dag.add_vertex(3, t, ProcessorSet::all(2), "c");
    dag.add_edge(1, 2, ProcessorSet::all(2));
    dag.add_edge(2, 3, ProcessorSet::all(2));
    return dag;
}

} // namespace

TEST_CASE("validate accepts well-formed patterns") {
    CompDag single(4, 10);
    single.add_vertex(1, 10, ProcessorSet::all(4));
    CHECK(validate(single).ok());

    auto fixture = example_fixture();
    CHECK(fixture.vertex_count() == 14);
    CHECK(fixture.processor_count() == 15);
    auto verdict = validate(fixture);
    CHECK_MESSAGE(verdict.ok(), verdict.summary());
}

TEST_CASE("validate reports each violated clause") {
    SUBCASE("overlapping initial groups") {
        CompDag dag(3, 2);
        dag.add_vertex(1, 2, ProcessorSet::of(3, {1, 2}));
        dag.add_vertex(2, 2, ProcessorSet::of(3, {2, 3}));
        auto verdict = validate(dag);
        CHECK(verdict.has(ViolationKind::initial_condition));
    }
    SUBCASE("initial groups miss a processor") {
        CompDag dag(3, 2);
        dag.add_vertex(1, 2, ProcessorSet::of(3, {1, 2}));
        CHECK(validate(dag).has(ViolationKind::initial_condition));
    }
    SUBCASE("inflow flows overlap even though their union matches") {
        CompDag dag(2, 2);
        dag.add_vertex(1, 1, ProcessorSet::of(2, {1}));
        dag.add_vertex(2, 1, ProcessorSet::of(2, {2}));
        dag.add_vertex(3, 2, ProcessorSet::all(2));
        dag.add_edge(1, 3, ProcessorSet::all(2));
        dag.add_edge(2, 3, ProcessorSet::of(2, {2}));
        auto verdict = validate(dag);
        CHECK(verdict.has(ViolationKind::inflow_conservation));
        CHECK(verdict.has(ViolationKind::outflow_conservation)); // vertex 1 sends {1,2} but holds {1}
    }
    SUBCASE("outflow does not cover the group") {
        CompDag dag(2, 2);
        dag.add_vertex(1, 1, ProcessorSet::all(2));
        dag.add_vertex(2, 2, ProcessorSet::of(2, {1}));
        dag.add_edge(1, 2, ProcessorSet::of(2, {1}));
        CHECK(validate(dag).has(ViolationKind::outflow_conservation));
    }
    SUBCASE("light maximal path") {
        CompDag dag(1, 5);
        dag.add_vertex(1, 2, ProcessorSet::all(1));
        dag.add_vertex(2, 2, ProcessorSet::all(1));
        dag.add_edge(1, 2, ProcessorSet::all(1));
        auto verdict = validate(dag);
        CHECK(verdict.has(ViolationKind::path_weight));
        CHECK(verdict.violations.size() == 1);
    }
    SUBCASE("cycle") {
        CompDag dag(1, 1);
        dag.add_vertex(1, 1, ProcessorSet::all(1));
        dag.add_vertex(2, 1, ProcessorSet::all(1));
        dag.add_edge(1, 2, ProcessorSet::all(1));
        dag.add_edge(2, 1, ProcessorSet::all(1));
        CHECK(validate(dag).has(ViolationKind::cycle));
    }
    SUBCASE("empty group, empty flow and quota above t") {
        CompDag dag(2, 3);
        dag.add_vertex(1, 4, ProcessorSet::all(2));
        dag.add_vertex(2, 3, ProcessorSet(2));
        dag.add_edge(1, 2, ProcessorSet(2));
        auto verdict = validate(dag);
        CHECK(verdict.has(ViolationKind::quota_range));
        CHECK(verdict.has(ViolationKind::empty_group));
        CHECK(verdict.has(ViolationKind::empty_flow));
    }
}

TEST_CASE("construction rejects dangling references") {
    CompDag dag(1, 1);
    dag.add_vertex(1, 1, ProcessorSet::all(1));
    CHECK_THROWS_AS(dag.add_vertex(1, 1, ProcessorSet::all(1)), std::invalid_argument);
    CHECK_THROWS_AS(dag.add_edge(1, 9, ProcessorSet::all(1)), std::invalid_argument);
    CHECK_THROWS_AS(ProcessorSet::of(3, {4}), std::out_of_range);
}

TEST_CASE("predecessor and successor graphs") {
    auto chain = chain_abc(4);
    auto pred = predecessor_graph(chain, 2);
    CHECK(names_of(pred) == std::vector<std::string>{"a", "b"});
    CHECK(pred.edge_count() == 1);
    CHECK(names_of(predecessor_graph(chain, 1)) == std::vector<std::string>{"a"});
    CHECK(names_of(successor_graph(chain, 2)) == std::vector<std::string>{"b", "c"});
    CHECK(names_of(successor_graph(chain, 3)) == std::vector<std::string>{"c"});
    CHECK_THROWS_AS(predecessor_graph(chain, 42), std::invalid_argument);

    auto fixture = example_fixture();
    CHECK(names_of(predecessor_graph(fixture, 9)) == std::vector<std::string>{"g1", "g2", "g3", "g7", "g9"});
    CHECK(names_of(successor_graph(fixture, 5)) ==
          std::vector<std::string>{"g10", "g11", "g12", "g13", "g14", "g5", "g8"});
}

TEST_CASE("subgraphs agree with brute-force path enumeration on the fixture") {
    auto fixture = example_fixture();
    auto reach = partsched::testing::reachability_matrix(fixture.vertex_count(),
                                                         partsched::testing::index_edges(fixture));
    for (std::size_t v = 0; v < fixture.vertex_count(); ++v) {
        std::vector<std::string> above, below;
        for (std::size_t u = 0; u < fixture.vertex_count(); ++u) {
            if (reach[u][v]) above.push_back(fixture.vertex(u).name);
            if (reach[v][u]) below.push_back(fixture.vertex(u).name);
        }
        std::sort(above.begin(), above.end());
        std::sort(below.begin(), below.end());
        const VertexId id = fixture.vertex(v).id;
        CHECK(names_of(predecessor_graph(fixture, id)) == above);
        CHECK(names_of(successor_graph(fixture, id)) == below);
    }
}

TEST_CASE("topological order") {
    auto chain = chain_abc(2);
    CHECK(chain.require_topological_order() == std::vector<std::size_t>{0, 1, 2});
    CompDag cyclic(1, 1);
    cyclic.add_vertex(1, 1, ProcessorSet::all(1));
    cyclic.add_edge(1, 1, ProcessorSet::all(1));
    CHECK_FALSE(cyclic.topological_order().has_value());
    CHECK_THROWS_AS(cyclic.require_topological_order(), CyclicDependencyError);
}
