#include <bcminla/exact.hpp>
#include <bcminla/families.hpp>

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace bcminla;

namespace {

SolveOptions exhaustive() {
    SolveOptions options;
    options.mode = SolveMode::exhaustive;
    return options;
}

Graph random_graph(std::size_t n, unsigned percent, SplitMix64& rng) {
    std::vector<Edge> edges;
    for (vertex_id u = 0; u < n; ++u) {
        for (vertex_id v = u + 1; v < n; ++v) {
            if (rng.below(100) < percent) edges.push_back({u, v});
        }
    }
    return Graph(n, edges);
}

Graph relabel(const Graph& g, const std::vector<vertex_id>& label) {
    std::vector<Edge> edges;
    for (const auto& e : g.edges()) edges.push_back({label[e.u], label[e.v]});
    return Graph(g.vertex_count(), edges);
}

}  // namespace

TEST(Exhaustive, Examples) {
    EXPECT_EQ(minla_exact(hypercube(2).graph, exhaustive()).cost, 6u);
    EXPECT_EQ(minla_exact(hypercube(3).graph, exhaustive()).cost, 28u);
    EXPECT_EQ(minla_exact(hypercube(1).graph, exhaustive()).cost, 1u);
}

TEST(Exhaustive, WitnessAchievesTheCost) {
    auto g = random_bc(3, 5).graph;
    auto result = minla_exact(g, exhaustive());
    EXPECT_TRUE(result.proven_optimal);
    EXPECT_EQ(arrangement_cost(g, result.arrangement), result.cost);
    EXPECT_EQ(result.nodes, 40320u);
}

TEST(Exhaustive, RejectsNineVertices) {
    EXPECT_THROW(minla_exact(Graph(9, {}), exhaustive()), limit_error);
}

TEST(BranchAndBound, AgreesWithExhaustiveAndPermutationOracle) {
    SplitMix64 rng(404);
    for (int trial = 0; trial < 40; ++trial) {
        auto g = random_graph(2 + rng.below(7), 20 + static_cast<unsigned>(rng.below(60)), rng);
        auto bnb = minla_exact(g);
        EXPECT_TRUE(bnb.proven_optimal);
        EXPECT_EQ(bnb.cost, minla_exact(g, exhaustive()).cost);
        EXPECT_EQ(bnb.cost, oracle::minla_by_permutations(g));
        EXPECT_EQ(arrangement_cost(g, bnb.arrangement), bnb.cost);
    }
}

TEST(BranchAndBound, FindsTheOptimumFromABadStart) {
    auto q3 = hypercube(3).graph;
    SolveOptions options;
    options.initial = LinearArrangement::from_order(std::vector<vertex_id>{0, 3, 5, 6, 1, 2, 4, 7});
    auto result = minla_exact(q3, options);
    EXPECT_EQ(result.cost, 28u);
    EXPECT_TRUE(result.proven_optimal);
}

TEST(BranchAndBound, RelabeledFourCube) {
    SplitMix64 rng(12);
    auto g = relabel(hypercube(4).graph, random_permutation(16, rng));
    auto result = minla_exact(g);
    EXPECT_EQ(result.cost, 120u);
    EXPECT_TRUE(result.proven_optimal);
    EXPECT_EQ(arrangement_cost(g, result.arrangement), 120u);
}

TEST(BranchAndBound, BudgetExhaustionIsReported) {
    SplitMix64 rng(13);
    auto g = relabel(hypercube(4).graph, random_permutation(16, rng));
    SolveOptions options;
    options.node_budget = 10;
    auto result = minla_exact(g, options);
    EXPECT_FALSE(result.proven_optimal);
    EXPECT_LE(result.nodes, 10u);
    EXPECT_EQ(arrangement_cost(g, result.arrangement), result.cost);
    EXPECT_GE(result.cost, 120u);
}

TEST(BranchAndBound, Limits) {
    EXPECT_THROW(minla_exact(Graph(17, {})), limit_error);
    SolveOptions options;
    options.initial = LinearArrangement::identity(3);
    EXPECT_THROW(minla_exact(hypercube(2).graph, options), std::invalid_argument);
}

TEST(BranchAndBound, TinyGraphs) {
    EXPECT_EQ(minla_exact(Graph(0, {})).cost, 0u);
    EXPECT_EQ(minla_exact(Graph(1, {})).cost, 0u);
    EXPECT_EQ(minla_exact(Graph(3, {})).cost, 0u);
    EXPECT_EQ(minla_exact(Graph(3, {{0, 1}, {1, 2}, {0, 2}})).cost, 4u);
}
