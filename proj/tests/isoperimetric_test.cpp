#include <bcminla/families.hpp>
#include <bcminla/isoperimetric.hpp>

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace bcminla;

TEST(BinaryDecomposition, Examples) {
    EXPECT_EQ(binary_decomposition(5).exponents, (std::vector<int>{2, 0}));
    EXPECT_EQ(binary_decomposition(7).exponents, (std::vector<int>{2, 1, 0}));
    EXPECT_EQ(binary_decomposition(8).exponents, (std::vector<int>{3}));
    EXPECT_EQ(binary_decomposition(8).r(), 1u);
    EXPECT_THROW(binary_decomposition(0), std::invalid_argument);
}

TEST(BinaryDecomposition, ReproducesSourceAndDescends) {
    SplitMix64 rng(17);
    for (int i = 0; i < 1000; ++i) {
        std::uint64_t m = rng.next() | 1;
        auto d = binary_decomposition(m);
        std::uint64_t sum = 0;
        for (std::size_t j = 0; j < d.r(); ++j) {
            sum += std::uint64_t{1} << d.exponents[j];
            if (j) {
                EXPECT_GT(d.exponents[j - 1], d.exponents[j]);
            }
        }
        EXPECT_EQ(sum, m);
    }
}

TEST(MaxInducedEdges, Examples) {
    EXPECT_EQ(max_induced_edges(1), 0u);
    // Exhaustive maxima over 4- and 6-subsets of the 3-cube.
    EXPECT_EQ(max_induced_edges(4), 4u);
    EXPECT_EQ(max_induced_edges(6), 7u);
    for (int k = 1; k < 63; ++k) {
        EXPECT_EQ(max_induced_edges(pow2(k)), wide_uint(k) * pow2(k - 1)) << "k=" << k;
    }
    EXPECT_THROW(max_induced_edges(0), std::invalid_argument);
}

TEST(MaxInducedEdges, MatchesEnumerationOnTheFourCube) {
    auto q4 = hypercube(4).graph;
    for (std::size_t m = 1; m <= 16; ++m) {
        EXPECT_EQ(max_induced_edges(m), oracle::max_induced(q4, m)) << "m=" << m;
    }
}

TEST(MaxInducedEdges, MonotoneAndFull) {
    for (int n = 1; n <= 16; ++n) {
        for (std::uint64_t m = 1; m < pow2(n); ++m) {
            ASSERT_GE(max_induced_edges(m + 1), max_induced_edges(m));
        }
        EXPECT_EQ(max_induced_edges(pow2(n)), wide_uint(n) * pow2(n - 1));
    }
}

TEST(EdgeBoundary, Examples) {
    EXPECT_EQ(edge_boundary(3, 1), 3u);
    EXPECT_EQ(edge_boundary(3, 3), 5u);
    EXPECT_EQ(edge_boundary(3, 7), 3u);
    for (int n = 1; n <= 63; ++n) EXPECT_EQ(edge_boundary(n, pow2(n)), 0u);
}

TEST(EdgeBoundary, ThreeCubeRow) {
    std::vector<wide_uint> expected{3, 4, 5, 4, 5, 4, 3};
    for (std::uint64_t m = 1; m <= 7; ++m) EXPECT_EQ(edge_boundary(3, m), expected[m - 1]);
}

TEST(EdgeBoundary, RejectsOutOfRange) {
    EXPECT_THROW(edge_boundary(3, 0), std::invalid_argument);
    EXPECT_THROW(edge_boundary(3, 9), std::invalid_argument);
    EXPECT_THROW(edge_boundary(0, 1), std::invalid_argument);
    EXPECT_THROW(edge_boundary(64, 1), std::invalid_argument);
}

TEST(EdgeBoundary, BothFormsAndComplementSymmetryUpToSixteen) {
    for (int n = 1; n <= 16; ++n) {
        const auto size = pow2(n);
        for (std::uint64_t m = 1; m < size; ++m) {
            auto theta = static_cast<wide_uint>(n) * m - 2 * max_induced_edges(m);
            ASSERT_EQ(theta, edge_boundary_expanded(n, m)) << n << "," << m;
            ASSERT_EQ(edge_boundary(n, m), edge_boundary(n, size - m)) << n << "," << m;
        }
    }
}

TEST(EdgeBoundary, DimensionSixtyThreeIsExact) {
    // Values from an arbitrary-precision evaluation of the same formulas.
    const std::uint64_t m = pow2(63) - 1;
    EXPECT_EQ(to_string(max_induced_edges(m)), "290536219160925437889");
    EXPECT_EQ(edge_boundary(63, m), 63u);
    EXPECT_EQ(to_string(max_induced_edges(pow2(63))), "290536219160925437952");
}

TEST(SumEdgeBoundary, Examples) {
    EXPECT_EQ(sum_edge_boundary(1), 1u);
    EXPECT_EQ(sum_edge_boundary(3), 28u);
    EXPECT_EQ(sum_edge_boundary(4), 120u);
    EXPECT_EQ(sum_edge_boundary(10), 523776u);
    EXPECT_EQ(sum_edge_boundary(20), 549755289600u);
    EXPECT_EQ(to_string(sum_edge_boundary(63)), "42535295865117307928310139910543638528");
    EXPECT_THROW(sum_edge_boundary(64), std::invalid_argument);
}

TEST(SumEdgeBoundary, DirectSummationMatchesClosedFormUpToTwenty) {
    for (int n = 1; n <= 20; ++n) {
        wide_uint direct = 0;
        for (std::uint64_t m = 1; m < pow2(n); ++m) direct += edge_boundary(n, m);
        EXPECT_EQ(direct, minla_closed_form(n)) << "n=" << n;
        EXPECT_EQ(sum_edge_boundary_direct(n), minla_closed_form(n));
    }
}

TEST(IsoperimetricTable, RowsForDimensionThree) {
    auto rows = isoperimetric_table(3);
    ASSERT_EQ(rows.size(), 7u);
    EXPECT_EQ(rows.back(), (IsoperimetricRow{7, 9, 3}));
    EXPECT_THROW(isoperimetric_table(26), limit_error);
}

TEST(BruteForce, Examples) {
    auto q3 = hypercube(3).graph;
    auto c4 = hypercube(2).graph;
    EXPECT_EQ(brute_force_max_induced(q3, 3).induced_edge_count, 2u);
    EXPECT_EQ(brute_force_max_induced(q3, 1).induced_edge_count, 0u);
    EXPECT_EQ(brute_force_max_induced(c4, 2).induced_edge_count, 1u);
    EXPECT_EQ(brute_force_min_boundary(c4, 2).boundary_edge_count, 2u);
    EXPECT_EQ(brute_force_min_boundary(q3, 4).boundary_edge_count, 4u);
    EXPECT_THROW(brute_force_min_boundary(q3, 0), std::invalid_argument);
    EXPECT_THROW(brute_force_min_boundary(q3, 9), std::invalid_argument);
}

TEST(BruteForce, RejectsLargeGraphs) {
    EXPECT_THROW(subset_extremes(Graph(25, {})), limit_error);
}

TEST(BruteForce, WitnessesAreConsistent) {
    auto g = random_bc(4, 77).graph;
    auto extremes = subset_extremes(g);
    for (std::size_t m = 0; m <= g.vertex_count(); ++m) {
        for (const auto* w : {&extremes.max_induced[m], &extremes.min_boundary[m]}) {
            ASSERT_EQ(w->vertices.size(), m);
            std::vector<bool> in(g.vertex_count(), false);
            for (auto v : w->vertices) in[v] = true;
            EXPECT_EQ(w->induced_edge_count, oracle::count_induced(g, in));
            EXPECT_EQ(w->boundary_edge_count, oracle::count_boundary(g, in));
        }
    }
}

TEST(BruteForce, AgreesWithCombinationEnumerationOnIrregularGraphs) {
    SplitMix64 rng(2024);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 3 + rng.below(8);
        std::vector<Edge> edges;
        for (vertex_id u = 0; u < n; ++u) {
            for (vertex_id v = u + 1; v < n; ++v) {
                if (rng.below(100) < 40) edges.push_back({u, v});
            }
        }
        Graph g(n, edges);
        auto extremes = subset_extremes(g);
        for (std::size_t m = 1; m <= n; ++m) {
            EXPECT_EQ(extremes.max_induced[m].induced_edge_count, oracle::max_induced(g, m));
            EXPECT_EQ(extremes.min_boundary[m].boundary_edge_count, oracle::min_boundary(g, m));
        }
    }
}

TEST(BruteForce, RegularGraphDegreeSumIdentity) {
    for (auto bc : {hypercube(4), locally_twisted(4), mobius(3, 1)}) {
        auto extremes = subset_extremes(bc.graph);
        for (std::size_t m = 1; m <= bc.graph.vertex_count(); ++m) {
            EXPECT_EQ(extremes.min_boundary[m].boundary_edge_count,
                      bc.dimension * m - 2 * extremes.max_induced[m].induced_edge_count);
        }
    }
}

TEST(BruteForce, ClosedFormsHoldForEveryFamilyUpToFour) {
    for (int n = 1; n <= 4; ++n) {
        std::vector<BcGraph> graphs{hypercube(n), locally_twisted(n), mobius(n, 0), mobius(n, 1)};
        for (std::uint64_t seed = 0; seed < 5; ++seed) graphs.push_back(random_bc(n, seed));
        for (const auto& bc : graphs) {
            auto extremes = subset_extremes(bc.graph);
            for (std::uint64_t m = 1; m <= pow2(n); ++m) {
                EXPECT_EQ(extremes.max_induced[m].induced_edge_count, max_induced_edges(m));
                EXPECT_EQ(extremes.min_boundary[m].boundary_edge_count, edge_boundary(n, m));
            }
        }
    }
}
