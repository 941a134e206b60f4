#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "hyperbanana/constructions.hpp"
#include "hyperbanana/graph.hpp"
#include "hyperbanana/rigidity.hpp"

using namespace hb;

namespace {

Graph random_graph(std::mt19937_64& rng, int n, int percent) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (uniform_below(rng, 100) < static_cast<std::uint64_t>(percent)) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

}  // namespace

TEST_CASE("random_embedding is deterministic and collision-free") {
    const auto [graph, labels] = hyperbanana(3, 2);
    const Embedding a = random_embedding(graph, 3, 42);
    const Embedding b = random_embedding(graph, 3, 42);
    std::set<std::vector<std::int64_t>> points;
    for (int v = 0; v < graph.vertex_count(); ++v) {
        for (int k = 0; k < 3; ++k) CHECK(a.coord(v, k) == b.coord(v, k));
        points.insert({a.coord(v, 0), a.coord(v, 1), a.coord(v, 2)});
        for (int k = 0; k < 3; ++k) {
            CHECK(a.coord(v, k) >= -kDefaultCoordRange);
            CHECK(a.coord(v, k) <= kDefaultCoordRange);
        }
    }
    CHECK(points.size() == static_cast<size_t>(graph.vertex_count()));

    const Embedding c = random_embedding(graph, 3, 43);
    bool any_differ = false;
    for (int v = 0; v < graph.vertex_count(); ++v)
        for (int k = 0; k < 3; ++k) any_differ |= a.coord(v, k) != c.coord(v, k);
    CHECK(any_differ);
}

TEST_CASE("random_embedding edge cases") {
    const Graph pair(2, {{0, 1}});
    const Embedding line = random_embedding(pair, 1, 7, 100);
    CHECK(line.coord(0, 0) != line.coord(1, 0));

    CHECK_THROWS_AS(random_embedding(complete_graph(5), 2, 1, 4), std::invalid_argument);
    CHECK_THROWS_AS(random_embedding(pair, 0, 1), std::invalid_argument);
}

TEST_CASE("rigidity_matrix single edge pattern") {
    const Graph g(2, {{0, 1}});
    Embedding emb(2, 2);
    emb.coord(0, 0) = 0;
    emb.coord(0, 1) = 0;
    emb.coord(1, 0) = 1;
    emb.coord(1, 1) = 0;
    const IntMatrix m = rigidity_matrix(g, emb);
    REQUIRE(m.rows() == 1);
    REQUIRE(m.cols() == 4);
    CHECK(m(0, 0) == -1);
    CHECK(m(0, 1) == 0);
    CHECK(m(0, 2) == 1);
    CHECK(m(0, 3) == 0);
}

TEST_CASE("rigidity_matrix of a generic triangle has rank 3") {
    const Graph tri = complete_graph(3);
    const Embedding emb = random_embedding(tri, 2, 5);
    const IntMatrix m = rigidity_matrix(tri, emb);
    CHECK(m.rows() == 3);
    CHECK(m.cols() == 6);
    CHECK(rank_exact(m) == 3);
}

TEST_CASE("rigidity_matrix dimensions for the double banana") {
    const auto [graph, labels] = hyperbanana(3, 2);
    const IntMatrix m = rigidity_matrix(graph, random_embedding(graph, 3, 1));
    CHECK(m.rows() == 18);
    CHECK(m.cols() == 24);
    CHECK_THROWS_AS(rigidity_matrix(graph, Embedding(3, 5)), std::invalid_argument);
}

TEST_CASE("generic_rank on known families") {
    CHECK(generic_rank(complete_graph(3), 2).rank == 3);

    const auto [dbl, l32] = hyperbanana(3, 2);
    CHECK(generic_rank(dbl, 3).rank == 17);

    const auto [h53, l53] = hyperbanana(5, 3);
    CHECK(generic_rank(h53, 5).rank == 47);
}

TEST_CASE("generic_rank evidence log replays from seeds") {
    const auto [graph, labels] = hyperbanana(3, 2);
    RankOptions opt;
    opt.mode = RankMode::both;
    const GenericRankResult result = generic_rank(graph, 3, opt);
    REQUIRE(result.trials.size() == 4);  // 3 mod-p trials plus one exact run
    for (const auto& trial : result.trials) {
        CHECK(trial.rank == 17);
        if (trial.exact) {
            CHECK(trial.prime == 0);
        } else {
            CHECK(is_prime_u64(trial.prime));
            const Embedding emb = random_embedding(graph, 3, trial.embedding_seed);
            CHECK(rank_mod_p(rigidity_matrix(graph, emb), trial.prime) == trial.rank);
        }
    }
}

TEST_CASE("classify known verdicts") {
    const RigidityVerdict bunch = classify(banana_bunch(3, 2).graph, 3);
    CHECK(bunch.classification == Classification::minimally_rigid);
    CHECK(bunch.rank == bunch.m);
    CHECK(bunch.nullity == trivial_motion_dim(3));

    // H_{4,3} carries the same C(b,2)=3 banana-pair dependencies as every
    // hyperbanana, so its two surplus edges still leave one degree of freedom:
    // rank 36-3=33, nullity 44-33=11, a hinge about the banana-vertex plane.
    const RigidityVerdict h43 = classify(hyperbanana(4, 3).graph, 4);
    CHECK(h43.classification == Classification::flexible_dependent);
    CHECK(h43.rank == 33);
    CHECK(h43.dof == 1);
    CHECK_FALSE(h43.independent);

    const RigidityVerdict h63 = classify(hyperbanana(6, 3).graph, 6);
    CHECK((h63.classification == Classification::flexible_dependent ||
           h63.classification == Classification::flexible_independent));
    CHECK(h63.dof >= 1);

    const RigidityVerdict dbl = classify(hyperbanana(3, 2).graph, 3);
    CHECK(dbl.classification == Classification::flexible_dependent);
    CHECK(dbl.dof == 1);
    CHECK(dbl.nullity == 7);
}

TEST_CASE("classify refuses fewer than d vertices") {
    CHECK_THROWS_AS(classify(complete_graph(3), 4), std::invalid_argument);
}

TEST_CASE("classify certification flag") {
    const auto [graph, labels] = hyperbanana(3, 2);
    ClassifyOptions opt;
    opt.proven_rank = 17;
    CHECK(classify(graph, 3, opt).certified);
    opt.proven_rank = 16;
    CHECK_FALSE(classify(graph, 3, opt).certified);
    CHECK_FALSE(classify(graph, 3).certified);
}

TEST_CASE("implied edges of the double banana form the hinge") {
    const auto [graph, labels] = hyperbanana(3, 2);
    const std::vector<Edge> implied = implied_edges(graph, 3);
    REQUIRE(implied.size() == 1);
    CHECK(implied[0] == Edge{labels.u[0], labels.u[1]});
}

TEST_CASE("implied edges among U-pairs of H_{5,3}") {
    const auto [graph, labels] = hyperbanana(5, 3);
    std::vector<Edge> candidates;
    for (std::size_t i = 0; i < labels.u.size(); ++i)
        for (std::size_t j = i + 1; j < labels.u.size(); ++j)
            candidates.emplace_back(labels.u[i], labels.u[j]);
    const std::vector<Edge> implied = implied_edges(graph, 5, candidates);
    CHECK(implied == candidates);
}

TEST_CASE("a rigid graph implies every non-edge") {
    const Graph g = remove_edge(complete_graph(4), 2, 3);
    const std::vector<Edge> implied = implied_edges(g, 2);
    REQUIRE(implied.size() == 1);
    CHECK(implied[0] == Edge{2, 3});
}

TEST_CASE("implied_edges rejects candidates that are edges") {
    const Graph tri = complete_graph(3);
    const std::vector<Edge> bad{{0, 1}};
    CHECK_THROWS_AS(implied_edges(tri, 2, bad), std::invalid_argument);
}

TEST_CASE("row-space dependence of banana bunches") {
    CHECK(check_row_space_dependence(3, 2));
    CHECK(check_row_space_dependence(4, 2));
    CHECK(check_row_space_dependence(5, 3));
    CHECK_THROWS_AS(check_row_space_dependence(3, 1), std::invalid_argument);
}

TEST_CASE("trivial-motion bound holds for random graphs") {
    std::mt19937_64 rng(909);
    RankOptions opt;
    opt.trials = 1;
    for (int iter = 0; iter < 100; ++iter) {
        const int d = 1 + static_cast<int>(uniform_below(rng, 4));
        const int n = d + static_cast<int>(uniform_below(rng, 7));
        const Graph g = random_graph(rng, n, 40);
        opt.seed = rng();
        const GenericRankResult result = generic_rank(g, d, opt);
        const long nullity = static_cast<long>(d) * n - result.rank;
        CHECK(nullity >= trivial_motion_dim(d));
    }
}

TEST_CASE("generic rank is invariant under relabeling") {
    std::mt19937_64 rng(111);
    const auto [graph, labels] = hyperbanana(3, 2);
    std::vector<int> perm(static_cast<size_t>(graph.vertex_count()));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Graph permuted = relabeled(graph, perm);
    CHECK(generic_rank(permuted, 3).rank == generic_rank(graph, 3).rank);
}

TEST_CASE("exact rank is invariant under translation and scaling") {
    const auto [graph, labels] = hyperbanana(3, 2);
    const Embedding emb = random_embedding(graph, 3, 97);
    const long base = rank_exact(rigidity_matrix(graph, emb));

    Embedding translated(3, graph.vertex_count());
    Embedding scaled(3, graph.vertex_count());
    for (int v = 0; v < graph.vertex_count(); ++v)
        for (int k = 0; k < 3; ++k) {
            translated.coord(v, k) = emb.coord(v, k) + 1000003;
            scaled.coord(v, k) = emb.coord(v, k) * -7;
        }
    CHECK(rank_exact(rigidity_matrix(graph, translated)) == base);
    CHECK(rank_exact(rigidity_matrix(graph, scaled)) == base);
}

TEST_CASE("rank bounds and edge-addition growth") {
    std::mt19937_64 rng(222);
    for (int iter = 0; iter < 15; ++iter) {
        const int d = 2 + static_cast<int>(uniform_below(rng, 2));
        const int n = d + 2 + static_cast<int>(uniform_below(rng, 4));
        const Graph g = random_graph(rng, n, 50);
        RankOptions opt;
        opt.trials = 1;
        opt.seed = 1000 + static_cast<std::uint64_t>(iter);
        const long rank = generic_rank(g, d, opt).rank;
        CHECK(rank <= std::min<long>(g.edge_count(), static_cast<long>(d) * n));

        const auto non_edges = g.non_edges();
        if (non_edges.empty()) continue;
        const auto [u, v] = non_edges[uniform_below(rng, non_edges.size())];
        const long grown = generic_rank(add_edge(g, u, v), d, opt).rank;
        CHECK(grown >= rank);
        CHECK(grown <= rank + 1);
    }
}

TEST_CASE("henneberg extension adds d to the rank of a minimally rigid graph") {
    const Graph k3 = complete_graph(3);
    const std::vector<int> all{0, 1, 2};
    CHECK(generic_rank(henneberg0(k3, 3, all), 3).rank == generic_rank(k3, 3).rank + 3);

    const BananaBunch bunch = banana_bunch(5, 2);
    const std::vector<int> base{0, 1, 2, 3, 4};
    const Graph extended = henneberg0(bunch.graph, 5, base);
    CHECK(extended == banana_bunch(5, 3).graph);
    CHECK(generic_rank(extended, 5).rank == generic_rank(bunch.graph, 5).rank + 5);
}
