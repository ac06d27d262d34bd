#include <bcminla/families.hpp>

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace bcminla;

TEST(SplitMix64, MatchesReferenceOutput) {
    SplitMix64 rng(0);
    EXPECT_EQ(rng.next(), 0xE220A8397B1DCDAFULL);
    EXPECT_EQ(rng.next(), 0x6E789E6AA1B965F4ULL);
    EXPECT_EQ(rng.next(), 0x06C45D188009454FULL);
}

TEST(SplitMix64, PermutationsArePermutations) {
    SplitMix64 rng(3);
    for (std::size_t size : {1u, 2u, 7u, 64u, 1000u}) {
        auto p = random_permutation(size, rng);
        EXPECT_TRUE(is_permutation_of_range(p));
    }
}

TEST(Hypercube, DimensionOneIsK2) {
    auto g = hypercube(1);
    EXPECT_EQ(g.graph.vertex_count(), 2u);
    EXPECT_EQ(g.graph.edge_count(), 1u);
    EXPECT_TRUE(g.tree.is_leaf());
}

TEST(Hypercube, MatchesBitFlipOracleUpToTwelve) {
    for (int n = 1; n <= 12; ++n) {
        EXPECT_EQ(oracle::edge_set(hypercube(n).graph), oracle::bit_flip_cube(n)) << "n=" << n;
    }
}

TEST(Hypercube, FourCube) {
    auto q4 = hypercube(4);
    EXPECT_EQ(q4.graph.edge_count(), 32u);
    EXPECT_TRUE(validate(q4).ok());
    auto adj = q4.graph.neighbors(0);
    EXPECT_EQ(std::vector<vertex_id>(adj.begin(), adj.end()), (std::vector<vertex_id>{1, 2, 4, 8}));
}

TEST(Hypercube, RejectsOutOfRange) {
    EXPECT_THROW(hypercube(0), std::invalid_argument);
    EXPECT_THROW(hypercube(26), limit_error);
}

TEST(LocallyTwisted, DimensionTwoIsC4) {
    auto g = locally_twisted(2);
    EXPECT_EQ(oracle::edge_set(g.graph), oracle::bit_flip_cube(2));
}

TEST(LocallyTwisted, DimensionThreeTwist) {
    auto g = locally_twisted(3);
    auto phi = g.tree.phi();
    EXPECT_EQ(std::vector<vertex_id>(phi.begin(), phi.end()), (std::vector<vertex_id>{0, 3, 2, 1}));
    EXPECT_TRUE(g.graph.has_edge(1, 7));
    EXPECT_FALSE(g.graph.has_edge(1, 5));
    EXPECT_TRUE(validate(g).ok());
}

TEST(LocallyTwisted, DimensionFourIsValid) {
    auto g = locally_twisted(4);
    EXPECT_TRUE(validate(g).ok());
    EXPECT_NE(oracle::edge_set(g.graph), oracle::bit_flip_cube(4));
}

TEST(Mobius, DimensionTwoMatchings) {
    auto zero = mobius(2, 0), one = mobius(2, 1);
    auto phi0 = zero.tree.phi(), phi1 = one.tree.phi();
    EXPECT_EQ(std::vector<vertex_id>(phi0.begin(), phi0.end()), (std::vector<vertex_id>{0, 1}));
    EXPECT_EQ(std::vector<vertex_id>(phi1.begin(), phi1.end()), (std::vector<vertex_id>{1, 0}));
    EXPECT_EQ(zero.graph.edge_count(), 4u);
    EXPECT_EQ(one.graph.edge_count(), 4u);
}

TEST(Mobius, DimensionFourBothVariants) {
    for (int variant : {0, 1}) {
        auto g = mobius(4, variant);
        EXPECT_EQ(g.graph.edge_count(), 32u);
        EXPECT_TRUE(validate(g).ok());
    }
    EXPECT_NE(mobius(4, 0).graph, mobius(4, 1).graph);
    EXPECT_THROW(mobius(3, 2), std::invalid_argument);
}

TEST(Mobius, SubtreesAreZeroAndOneCubes) {
    auto tree = mobius_tree(5, 1);
    EXPECT_EQ(tree.left(), mobius_tree(4, 0));
    EXPECT_EQ(tree.right(), mobius_tree(4, 1));
}

TEST(RandomBc, DeterministicPerSeed) {
    EXPECT_EQ(random_bc(3, 11).graph, random_bc(3, 11).graph);
    EXPECT_EQ(random_bc_tree(8, 11), random_bc_tree(8, 11));
    EXPECT_NE(random_bc_tree(8, 11), random_bc_tree(8, 12));
}

TEST(RandomBc, PinnedFixture) {
    // Seed 42, dimension 3: both K2 pairs joined by the identity, root
    // bijection (1, 3, 0, 2). Recomputed outside this library.
    auto g = random_bc(3, 42);
    auto phi = g.tree.phi();
    EXPECT_EQ(std::vector<vertex_id>(phi.begin(), phi.end()), (std::vector<vertex_id>{1, 3, 0, 2}));
    std::set<std::pair<vertex_id, vertex_id>> expected{{0, 1}, {0, 2}, {0, 5}, {1, 3},
                                                       {1, 7}, {2, 3}, {2, 4}, {3, 6},
                                                       {4, 5}, {4, 6}, {5, 7}, {6, 7}};
    EXPECT_EQ(oracle::edge_set(g.graph), expected);
}

TEST(RandomBc, ValidForManySeedsUpToTen) {
    for (int n = 1; n <= 10; ++n) {
        for (std::uint64_t seed : {0ULL, 1ULL, 0xFFFFFFFFFFFFFFFFULL}) {
            ASSERT_TRUE(validate(random_bc(n, seed)).ok()) << "n=" << n << " seed=" << seed;
        }
    }
}

TEST(RandomBc, DimensionOneIsK2ForAnySeed) {
    for (std::uint64_t seed : {0ULL, 5ULL, 123456789ULL}) {
        EXPECT_EQ(random_bc(1, seed).graph, hypercube(1).graph);
    }
}

TEST(FamilySpec, ParsesKindsAndReservesNamedVariants) {
    EXPECT_EQ(parse_family_kind("locally-twisted"), FamilyKind::locally_twisted);
    EXPECT_EQ(parse_family_kind("mobius-1"), FamilyKind::mobius_1);
    EXPECT_THROW(parse_family_kind("crossed"), std::invalid_argument);
    EXPECT_THROW(parse_family_kind("z-cube"), std::invalid_argument);
    EXPECT_THROW(parse_family_kind("torus"), std::invalid_argument);
}

TEST(FamilySpec, SeedPresentIffRandom) {
    EXPECT_THROW(make_family({FamilyKind::random, 3, {}}), std::invalid_argument);
    EXPECT_THROW(make_family({FamilyKind::hypercube, 3, 7}), std::invalid_argument);
    EXPECT_EQ(make_family({FamilyKind::random, 4, 7}).graph, random_bc(4, 7).graph);
    EXPECT_EQ(make_family({FamilyKind::mobius_1, 4, {}}).graph, mobius(4, 1).graph);
}
