#include <catch2/catch_amalgamated.hpp>

#include "hyperbanana/constructions.hpp"
#include "hyperbanana/graph.hpp"
#include "hyperbanana/maxwell.hpp"

using namespace hb;

TEST_CASE("condition 1 arithmetic") {
    const auto [h53, l53] = hyperbanana(5, 3);
    const Condition1Report pass = check_condition1(h53, 5);
    CHECK(pass.pass);
    CHECK(pass.expected == 50);
    CHECK(pass.actual == 50);

    const auto [h43, l43] = hyperbanana(4, 3);
    const Condition1Report over = check_condition1(h43, 4);
    CHECK_FALSE(over.pass);
    CHECK(over.expected == 34);
    CHECK(over.actual == 36);

    const auto [e42, le42] = even_hyperbanana(4, 2);
    CHECK(check_condition1(e42, 4).pass);

    CHECK_THROWS_AS(check_condition1(complete_graph(3), 5), std::invalid_argument);
}

TEST_CASE("condition 2 passes for the double banana") {
    const auto [graph, labels] = hyperbanana(3, 2);
    const Condition2Report report = check_condition2(graph, 3);
    CHECK(report.ran);
    CHECK(report.pass);
    CHECK(report.witness.empty());
    CHECK(report.subsets_checked == 219);  // subsets of size >= 3 out of 2^8
}

TEST_CASE("condition 2 fails for K_5 in dimension 3 with a verified witness") {
    const Graph k5 = complete_graph(5);
    const Condition2Report report = check_condition2(k5, 3);
    CHECK(report.ran);
    CHECK_FALSE(report.pass);
    CHECK(report.witness == VertexSubset{0, 1, 2, 3, 4});
    CHECK(report.witness_edge_count == 10);
    CHECK(induced_edge_count(k5, report.witness) == report.witness_edge_count);
    CHECK(report.witness_edge_count >
          3L * static_cast<long>(report.witness.size()) - trivial_motion_dim(3));
}

TEST_CASE("condition 2 is independent of parallelism") {
    const auto [passing, lp] = even_hyperbanana(4, 2);
    const Graph failing = complete_graph(6);  // plenty of violating subsets in d=3

    for (int workers : {1, 2, 5}) {
        MaxwellOptions opt;
        opt.parallelism = workers;
        const Condition2Report ok = check_condition2(passing, 4, opt);
        CHECK(ok.pass);
        CHECK(ok.subsets_checked == 848);  // subsets of size >= 4 out of 2^10

        const Condition2Report bad = check_condition2(failing, 3, opt);
        CHECK_FALSE(bad.pass);
        CHECK(bad.witness == VertexSubset{0, 1, 2, 3, 4});  // first violation in canonical order
        CHECK(bad.subsets_checked == check_condition2(failing, 3).subsets_checked);
    }
}

TEST_CASE("condition 2 enforces the enumeration cap") {
    const auto [graph, labels] = hyperbanana(9, 5);  // 23 vertices
    MaxwellOptions small_cap;
    small_cap.subset_cap = 20;
    CHECK_THROWS_AS(check_condition2(graph, 9, small_cap), std::invalid_argument);
}

TEST_CASE("check_maxwell composes both conditions") {
    const auto [h74, l74] = hyperbanana(7, 4);
    const MaxwellReport ok = check_maxwell(h74, 7);
    CHECK(ok.pass);
    CHECK(ok.condition1.pass);
    CHECK(ok.condition2.ran);
    CHECK(ok.condition2.pass);
    CHECK(ok.elapsed_seconds >= 0.0);

    const auto [e63, le63] = even_hyperbanana(6, 3);
    CHECK(check_maxwell(e63, 6).pass);

    const auto [h63, lh63] = hyperbanana(6, 3);
    const MaxwellReport under = check_maxwell(h63, 6);
    CHECK_FALSE(under.pass);
    CHECK_FALSE(under.condition1.pass);
    CHECK(under.condition1.actual == 66);
    CHECK(under.condition1.expected == 69);
    CHECK_FALSE(under.condition2.ran);

    MaxwellOptions force;
    force.force_condition2 = true;
    const MaxwellReport forced = check_maxwell(h63, 6, force);
    CHECK(forced.condition2.ran);
    CHECK(forced.condition2.pass);  // the subset bound itself holds; only the total count is short
    CHECK_FALSE(forced.pass);
}

TEST_CASE("banana bunches are Maxwell graphs") {
    for (auto [d, b] : {std::pair{3, 2}, {4, 3}, {5, 3}, {7, 4}}) {
        const MaxwellReport report = check_maxwell(banana_bunch(d, b).graph, d);
        CHECK(report.pass);
    }
}

TEST_CASE("violations never lie inside a single bunch") {
    // H_{4,3} has two surplus edges, but every proper subset still meets the
    // bound: the lone violating subset is the full vertex set, which spans
    // both bunches.
    const auto [graph, labels] = hyperbanana(4, 3);
    MaxwellOptions force;
    force.force_condition2 = true;
    const MaxwellReport report = check_maxwell(graph, 4, force);
    CHECK_FALSE(report.condition1.pass);
    CHECK(report.condition2.ran);
    CHECK_FALSE(report.condition2.pass);
    CHECK(report.condition2.witness == VertexSubset{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10});
    CHECK(report.condition2.witness_edge_count == 36);
}

TEST_CASE("witness failure modes re-verify against the subset bound") {
    // A K_7 inside a larger sparse graph: the witness must be the K_7 core in d=3.
    Graph g = complete_graph(7);
    g = henneberg0(g, 3, std::vector<int>{0, 1, 2});
    g = henneberg0(g, 3, std::vector<int>{4, 5, 6});
    const Condition2Report report = check_condition2(g, 3);
    CHECK_FALSE(report.pass);
    REQUIRE_FALSE(report.witness.empty());
    CHECK(induced_edge_count(g, report.witness) == report.witness_edge_count);
    CHECK(report.witness_edge_count >
          3L * static_cast<long>(report.witness.size()) - trivial_motion_dim(3));
}
