#pragma once

#include <bcminla/bc_graph.hpp>
#include <bcminla/isoperimetric.hpp>

#include <numeric>
#include <optional>
#include <span>
#include <vector>

namespace bcminla {

/**
 * Bijection f from vertex ids 0..N-1 to positions 1..N. Entry v holds f(v).
 * Positions are 1-based everywhere, including file I/O.
 */
class LinearArrangement {
public:
    LinearArrangement() = default;

    explicit LinearArrangement(std::vector<vertex_id> positions)
        : positions_(std::move(positions)) {
        std::vector<bool> seen(positions_.size() + 1, false);
        for (std::size_t v = 0; v < positions_.size(); ++v) {
            auto p = positions_[v];
            if (p < 1 || p > positions_.size() || seen[p]) {
                throw std::invalid_argument("arrangement: position " + std::to_string(p) +
                                            " of vertex " + std::to_string(v) +
                                            " is out of range or repeated");
            }
            seen[p] = true;
        }
    }

    static LinearArrangement identity(std::size_t n) {
        std::vector<vertex_id> positions(n);
        std::iota(positions.begin(), positions.end(), vertex_id{1});
        return LinearArrangement(std::move(positions));
    }

    /// order[i] is the vertex placed at position i + 1.
    static LinearArrangement from_order(std::span<const vertex_id> order) {
        std::vector<vertex_id> positions(order.size(), 0);
        for (std::size_t i = 0; i < order.size(); ++i) {
            if (order[i] >= order.size()) {
                throw std::invalid_argument("arrangement: vertex " + std::to_string(order[i]) +
                                            " out of range");
            }
            positions[order[i]] = static_cast<vertex_id>(i + 1);
        }
        return LinearArrangement(std::move(positions));
    }

    std::size_t size() const { return positions_.size(); }
    vertex_id position(vertex_id v) const { return positions_[v]; }
    std::span<const vertex_id> positions() const { return positions_; }

    std::vector<vertex_id> order() const {
        std::vector<vertex_id> order(positions_.size());
        for (std::size_t v = 0; v < positions_.size(); ++v) {
            order[positions_[v] - 1] = static_cast<vertex_id>(v);
        }
        return order;
    }

    /// f -> N + 1 - f.
    LinearArrangement reversed() const {
        LinearArrangement r;
        r.positions_.reserve(positions_.size());
        const auto n = static_cast<vertex_id>(positions_.size());
        for (auto p : positions_) r.positions_.push_back(n + 1 - p);
        return r;
    }

    friend bool operator==(const LinearArrangement&, const LinearArrangement&) = default;

private:
    std::vector<vertex_id> positions_;
};

namespace detail {

inline void check_arrangement(const Graph& g, const LinearArrangement& f) {
    if (f.size() != g.vertex_count()) {
        throw std::invalid_argument("arrangement covers " + std::to_string(f.size()) +
                                    " vertices, graph has " + std::to_string(g.vertex_count()));
    }
}

}  // namespace detail

/// Sum over edges of |f(u) - f(v)|: the wirelength of g laid along a path.
inline wide_uint arrangement_cost(const Graph& g, const LinearArrangement& f) {
    detail::check_arrangement(g, f);
    wide_uint total = 0;
    for (const auto& e : g.edges()) {
        auto a = f.position(e.u), b = f.position(e.v);
        total += a > b ? a - b : b - a;
    }
    return total;
}

/// cuts[i - 1] = c_i, the number of edges straddling the gap between
/// positions i and i + 1, for i = 1 .. N - 1.
struct CutProfile {
    std::vector<std::uint64_t> cuts;

    wide_uint total() const {
        wide_uint sum = 0;
        for (auto c : cuts) sum += c;
        return sum;
    }

    friend bool operator==(const CutProfile&, const CutProfile&) = default;
};

inline CutProfile cut_profile(const Graph& g, const LinearArrangement& f) {
    detail::check_arrangement(g, f);
    const std::size_t n = g.vertex_count();
    if (n == 0) return {};
    // +1 where an edge starts straddling, -1 where it stops.
    std::vector<std::int64_t> delta(n + 1, 0);
    for (const auto& e : g.edges()) {
        auto a = f.position(e.u), b = f.position(e.v);
        if (a > b) std::swap(a, b);
        ++delta[a];
        --delta[b];
    }
    CutProfile profile;
    profile.cuts.reserve(n - 1);
    std::int64_t running = 0;
    for (std::size_t i = 1; i < n; ++i) {
        running += delta[i];
        profile.cuts.push_back(static_cast<std::uint64_t>(running));
    }
    return profile;
}

namespace detail {

inline void fill_bc_positions(const ConstructionTree& tree, vertex_id first_id,
                              vertex_id first_position, std::vector<vertex_id>& positions) {
    if (tree.is_leaf()) {
        positions[first_id] = first_position + 1;
        positions[first_id + 1] = first_position + 2;
        return;
    }
    const auto half = static_cast<vertex_id>(pow2(tree.dimension() - 1));
    fill_bc_positions(tree.left(), first_id, first_position, positions);
    fill_bc_positions(tree.right(), first_id + half, first_position + half, positions);
}

}  // namespace detail

/**
 * The BC structure arrangement: the left component's arrangement followed by
 * the right component's shifted by 2^(n-1), recursively down to K2 -> (1, 2).
 * With the top-bit id convention this is f(v) = v + 1 whatever the bijections.
 */
inline LinearArrangement bc_arrangement(const ConstructionTree& tree,
                                        int max_dimension = kDefaultMaxDimension) {
    check_dimension(tree.dimension(), max_dimension, "bc_arrangement");
    std::vector<vertex_id> positions(pow2(tree.dimension()), 0);
    detail::fill_bc_positions(tree, 0, 0, positions);
    return LinearArrangement(std::move(positions));
}

/// Sum of theta(i): no arrangement of an n-dimensional BC graph costs less.
inline wide_uint lower_bound_closed(int n) { return sum_edge_boundary(n); }

/// Sum over i = 1 .. N-1 of the exhaustive minimum boundary of an i-subset.
/// A lower bound for any graph small enough to enumerate.
inline wide_uint lower_bound_generic(const Graph& g) {
    if (g.vertex_count() < 2) return 0;
    auto extremes = subset_extremes(g);
    wide_uint total = 0;
    for (std::size_t i = 1; i < g.vertex_count(); ++i) {
        total += extremes.min_boundary[i].boundary_edge_count;
    }
    return total;
}

/// Cost of the matching v -- phi(v) + 2^(n-1) under the BC arrangement.
inline wide_uint cross_matching_cost(int n, std::span<const vertex_id> phi) {
    check_dimension(n, kMaxClosedFormDimension, "cross_matching_cost");
    if (phi.size() != pow2(n - 1) || !is_permutation_of_range(phi)) {
        throw std::invalid_argument("cross_matching_cost: phi is not a permutation of 2^(n-1) ids");
    }
    const wide_uint half = phi.size();
    wide_uint total = 0;
    for (std::size_t v = 0; v < phi.size(); ++v) {
        wide_uint left_position = v + 1;
        wide_uint right_position = phi[v] + half + 1;
        total += right_position - left_position;
    }
    return total;
}

struct LayoutReport {
    wide_uint cost = 0;
    wide_uint lower_bound = 0;
    std::optional<wide_uint> closed_form;
    CutProfile cut_profile;
    bool optimal = false;
};

/// Evaluates f on g against a caller-supplied lower bound.
inline LayoutReport evaluate_layout(const Graph& g, const LinearArrangement& f,
                                    wide_uint lower_bound,
                                    std::optional<wide_uint> closed_form = std::nullopt) {
    LayoutReport report;
    report.cost = arrangement_cost(g, f);
    report.cut_profile = cut_profile(g, f);
    report.lower_bound = lower_bound;
    report.closed_form = closed_form;
    if (report.cost < lower_bound) {
        throw std::logic_error("arrangement cost " + to_string(report.cost) +
                               " is below the lower bound " + to_string(lower_bound));
    }
    report.optimal = report.cost == lower_bound;
    return report;
}

/**
 * Certifies the BC arrangement of bc without search: its cost is evaluated
 * directly and compared to the isoperimetric lower bound. Equality proves
 * optimality. Precondition: validate(bc).ok().
 */
inline LayoutReport certify(const BcGraph& bc, int max_dimension = kDefaultMaxDimension) {
    check_dimension(bc.dimension, max_dimension, "certify");
    if (bc.graph.vertex_count() != pow2(bc.dimension) ||
        bc.tree.dimension() != bc.dimension) {
        throw std::invalid_argument("certify: graph or witness does not match dimension");
    }
    return evaluate_layout(bc.graph, bc_arrangement(bc.tree, max_dimension),
                           lower_bound_closed(bc.dimension), minla_closed_form(bc.dimension));
}

}  // namespace bcminla
