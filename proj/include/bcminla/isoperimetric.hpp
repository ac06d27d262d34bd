#pragma once

#include <bcminla/graph.hpp>

#include <bit>
#include <limits>
#include <vector>

namespace bcminla {

/// Exponents of m's base-2 expansion, strictly decreasing: m = sum 2^l_i.
struct BinaryDecomposition {
    std::vector<int> exponents;

    std::size_t r() const { return exponents.size(); }
};

inline BinaryDecomposition binary_decomposition(std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("binary_decomposition: m must be >= 1");
    BinaryDecomposition d;
    for (int l = 63; l >= 0; --l) {
        if ((m >> l) & 1) d.exponents.push_back(l);
    }
    return d;
}

/**
 * Largest number of edges induced by m vertices of any BC graph:
 *
 *   I(m) = sum_i (l_i 2^(l_i - 1) + i 2^(l_i)),  m = 2^l_0 + ... + 2^l_(r-1)
 *
 * with l_0 > l_1 > ... and the first term 0 when l_i = 0. Independent of
 * which member of the family is asked about.
 */
inline wide_uint max_induced_edges(std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("max_induced_edges: m must be >= 1");
    wide_uint total = 0;
    unsigned i = 0;
    for (int l = 63; l >= 0; --l) {
        if (!((m >> l) & 1)) continue;
        wide_uint block = wide_uint{1} << l;
        if (l > 0) total += static_cast<wide_uint>(l) * (block >> 1);
        total += static_cast<wide_uint>(i) * block;
        ++i;
    }
    return total;
}

namespace detail {

inline void check_cardinality(int n, std::uint64_t m, const char* what) {
    if (n < 1 || n > kMaxClosedFormDimension) {
        throw std::invalid_argument(std::string(what) + ": dimension " + std::to_string(n) +
                                    " outside 1.." + std::to_string(kMaxClosedFormDimension));
    }
    if (m < 1 || m > pow2(n)) {
        throw std::invalid_argument(std::string(what) + ": m = " + std::to_string(m) +
                                    " outside 1..2^" + std::to_string(n));
    }
}

}  // namespace detail

/// theta(m) as sum_i (n - l_i - 2i) 2^(l_i). Individual terms may be negative.
inline wide_uint edge_boundary_expanded(int n, std::uint64_t m) {
    detail::check_cardinality(n, m, "edge_boundary_expanded");
    wide_int total = 0;
    int i = 0;
    for (int l = 63; l >= 0; --l) {
        if (!((m >> l) & 1)) continue;
        total += static_cast<wide_int>(n - l - 2 * i) * (wide_int{1} << l);
        ++i;
    }
    return static_cast<wide_uint>(total);
}

/// Smallest edge boundary of an m-subset of an n-dimensional BC graph,
/// n m - 2 I(m). Cross-checked against the expanded form.
inline wide_uint edge_boundary(int n, std::uint64_t m) {
    detail::check_cardinality(n, m, "edge_boundary");
    wide_uint theta = static_cast<wide_uint>(n) * m - 2 * max_induced_edges(m);
    if (theta != edge_boundary_expanded(n, m)) {
        throw std::logic_error("edge_boundary: closed forms disagree at m = " +
                               std::to_string(m));
    }
    return theta;
}

/// 2^(n-1) (2^n - 1).
inline wide_uint minla_closed_form(int n) {
    if (n < 1 || n > kMaxClosedFormDimension) {
        throw std::invalid_argument("minla_closed_form: dimension outside 1..63");
    }
    return (wide_uint{1} << (n - 1)) * ((wide_uint{1} << n) - 1);
}

/// Largest dimension at which sum_edge_boundary also sums term by term.
inline constexpr int kDirectSumMaxDimension = 25;

inline wide_uint sum_edge_boundary_direct(int n) {
    check_dimension(n, kDirectSumMaxDimension, "sum_edge_boundary_direct");
    wide_uint total = 0;
    for (std::uint64_t m = 1; m < pow2(n); ++m) {
        total += static_cast<wide_uint>(n) * m - 2 * max_induced_edges(m);
    }
    return total;
}

/// Sum of theta(m) for m = 1 .. 2^n - 1. Uses the closed form, and for
/// n <= kDirectSumMaxDimension also sums directly and insists they agree.
inline wide_uint sum_edge_boundary(int n) {
    wide_uint closed = minla_closed_form(n);
    if (n <= kDirectSumMaxDimension && sum_edge_boundary_direct(n) != closed) {
        throw std::logic_error("sum_edge_boundary: direct sum disagrees with closed form at n = " +
                               std::to_string(n));
    }
    return closed;
}

struct IsoperimetricRow {
    std::uint64_t m = 0;
    wide_uint induced = 0;
    wide_uint boundary = 0;

    friend bool operator==(const IsoperimetricRow&, const IsoperimetricRow&) = default;
};

inline IsoperimetricRow isoperimetric_row(int n, std::uint64_t m) {
    return {m, max_induced_edges(m), edge_boundary(n, m)};
}

/// Rows m = 1 .. 2^n - 1, one per cut of an arrangement.
inline std::vector<IsoperimetricRow> isoperimetric_table(
    int n, int max_dimension = kDefaultMaxDimension) {
    check_dimension(n, max_dimension, "isoperimetric_table");
    std::vector<IsoperimetricRow> rows;
    rows.reserve(pow2(n) - 1);
    for (std::uint64_t m = 1; m < pow2(n); ++m) rows.push_back(isoperimetric_row(n, m));
    return rows;
}

// ---------------------------------------------------------------------------
// Exhaustive oracles on concrete graphs.

inline constexpr std::size_t kMaxEnumerationVertices = 24;

struct SubsetWitness {
    std::vector<vertex_id> vertices;
    std::uint64_t induced_edge_count = 0;
    std::uint64_t boundary_edge_count = 0;
};

/// Best witnesses per cardinality m = 0 .. N.
struct SubsetExtremes {
    std::vector<SubsetWitness> max_induced;
    std::vector<SubsetWitness> min_boundary;
};

/**
 * One pass over all 2^N vertex subsets in increasing binary order. Counts for
 * S derive from S minus its lowest vertex, so each subset costs O(1) popcounts.
 * Ties keep the first subset seen.
 */
inline SubsetExtremes subset_extremes(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n > kMaxEnumerationVertices) {
        throw limit_error("subset enumeration limited to " +
                          std::to_string(kMaxEnumerationVertices) + " vertices, graph has " +
                          std::to_string(n));
    }
    std::vector<std::uint32_t> adjacency_mask(n, 0);
    for (const auto& e : g.edges()) {
        adjacency_mask[e.u] |= std::uint32_t{1} << e.v;
        adjacency_mask[e.v] |= std::uint32_t{1} << e.u;
    }

    const std::uint32_t subsets = std::uint32_t{1} << n;
    std::vector<std::uint16_t> induced(subsets, 0);
    std::vector<std::uint16_t> boundary(subsets, 0);
    constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> best_induced(n + 1, 0), best_boundary(n + 1, 0);
    std::vector<std::uint32_t> best_induced_set(n + 1, kUnset), best_boundary_set(n + 1, kUnset);
    best_induced_set[0] = best_boundary_set[0] = 0;

    for (std::uint32_t s = 1; s < subsets; ++s) {
        const auto v = static_cast<unsigned>(std::countr_zero(s));
        const std::uint32_t rest = s & (s - 1);
        const auto inner = static_cast<unsigned>(std::popcount(adjacency_mask[v] & rest));
        induced[s] = static_cast<std::uint16_t>(induced[rest] + inner);
        boundary[s] = static_cast<std::uint16_t>(boundary[rest] + g.degree(v) - 2 * inner);

        const auto k = static_cast<std::size_t>(std::popcount(s));
        if (best_induced_set[k] == kUnset || induced[s] > best_induced[k]) {
            best_induced[k] = induced[s];
            best_induced_set[k] = s;
        }
        if (best_boundary_set[k] == kUnset || boundary[s] < best_boundary[k]) {
            best_boundary[k] = boundary[s];
            best_boundary_set[k] = s;
        }
    }

    auto witness = [&](std::uint32_t s) {
        SubsetWitness w;
        for (vertex_id v = 0; v < n; ++v) {
            if ((s >> v) & 1) w.vertices.push_back(v);
        }
        w.induced_edge_count = induced[s];
        w.boundary_edge_count = boundary[s];
        return w;
    };
    SubsetExtremes out;
    for (std::size_t k = 0; k <= n; ++k) {
        out.max_induced.push_back(witness(best_induced_set[k]));
        out.min_boundary.push_back(witness(best_boundary_set[k]));
    }
    return out;
}

namespace detail {

inline void check_subset_size(const Graph& g, std::uint64_t m) {
    if (m < 1 || m > g.vertex_count()) {
        throw std::invalid_argument("subset size " + std::to_string(m) + " outside 1.." +
                                    std::to_string(g.vertex_count()));
    }
}

}  // namespace detail

/// An m-subset with the most induced edges.
inline SubsetWitness brute_force_max_induced(const Graph& g, std::uint64_t m) {
    detail::check_subset_size(g, m);
    return std::move(subset_extremes(g).max_induced[m]);
}

/// An m-subset with the fewest boundary edges.
inline SubsetWitness brute_force_min_boundary(const Graph& g, std::uint64_t m) {
    detail::check_subset_size(g, m);
    return std::move(subset_extremes(g).min_boundary[m]);
}

}  // namespace bcminla
