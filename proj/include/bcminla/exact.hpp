#pragma once

#include <bcminla/isoperimetric.hpp>
#include <bcminla/layout.hpp>

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>
#include <optional>
#include <vector>

namespace bcminla {

enum class SolveMode { exhaustive, branch_and_bound };

inline constexpr std::size_t kMaxExhaustiveVertices = 8;
inline constexpr std::size_t kMaxBranchAndBoundVertices = 16;

struct SolveOptions {
    SolveMode mode = SolveMode::branch_and_bound;
    /// Search nodes before giving up; 0 means unlimited.
    std::uint64_t node_budget = 0;
    /// Wall-clock limit; zero means unlimited.
    std::chrono::milliseconds time_limit{0};
    /// Starting incumbent for branch-and-bound. Defaults to the identity,
    /// which is the BC arrangement for any graph built with a witness.
    std::optional<LinearArrangement> initial;
};

struct ExactResult {
    wide_uint cost = 0;
    LinearArrangement arrangement;
    /// False when the budget ran out; arrangement is then the best found.
    bool proven_optimal = false;
    std::uint64_t nodes = 0;
};

namespace detail {

inline ExactResult solve_exhaustive(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<vertex_id> order(n);
    std::iota(order.begin(), order.end(), vertex_id{0});
    std::vector<vertex_id> position(n);

    ExactResult best;
    bool have_best = false;
    do {
        for (std::size_t i = 0; i < n; ++i) position[order[i]] = static_cast<vertex_id>(i);
        std::uint64_t cost = 0;
        for (const auto& e : g.edges()) {
            auto a = position[e.u], b = position[e.v];
            cost += a > b ? a - b : b - a;
        }
        ++best.nodes;
        if (!have_best || cost < best.cost) {
            best.cost = cost;
            best.arrangement = LinearArrangement::from_order(order);
            have_best = true;
        }
    } while (std::next_permutation(order.begin(), order.end()));
    best.proven_optimal = true;
    return best;
}

/**
 * Depth-first placement of vertices into positions 1, 2, ... in ascending id
 * order. With k vertices placed, the cuts c_1..c_k are fixed, and their sum
 * equals the full spans of edges inside the prefix plus (k + 1 - p) for each
 * edge leaving the prefix from position p. Each later cut c_i is at least the
 * graph's minimum i-subset boundary, so
 *
 *   bound = c_1 + ... + c_k + theta(k + 1) + ... + theta(N - 1).
 *
 * Reversal symmetry: only arrangements whose last vertex id exceeds the first
 * are completed.
 */
class BranchAndBound {
public:
    BranchAndBound(const Graph& g, const SolveOptions& options)
        : n_(g.vertex_count()), options_(options), adjacency_(n_, 0), degree_(n_, 0),
          order_(n_, 0) {
        for (const auto& e : g.edges()) {
            adjacency_[e.u] |= std::uint32_t{1} << e.v;
            adjacency_[e.v] |= std::uint32_t{1} << e.u;
        }
        for (vertex_id v = 0; v < n_; ++v) degree_[v] = static_cast<unsigned>(g.degree(v));

        auto extremes = subset_extremes(g);
        tail_.assign(n_ + 1, 0);
        for (std::size_t k = n_; k-- > 0;) {
            tail_[k] = tail_[k + 1] + (k + 1 < n_ ? extremes.min_boundary[k + 1].boundary_edge_count
                                                  : 0);
        }

        best_ = options.initial ? *options.initial : LinearArrangement::identity(n_);
        detail::check_arrangement(g, best_);
        best_cost_ = static_cast<std::uint64_t>(arrangement_cost(g, best_));
    }

    ExactResult run() {
        start_ = std::chrono::steady_clock::now();
        search(0, 0, 0);
        return {best_cost_, best_, !exhausted_, nodes_};
    }

private:
    bool out_of_budget() {
        if (options_.node_budget != 0 && nodes_ >= options_.node_budget) return true;
        if (options_.time_limit.count() > 0 && (nodes_ & 0xFFF) == 0 &&
            std::chrono::steady_clock::now() - start_ > options_.time_limit) {
            return true;
        }
        return false;
    }

    void search(std::size_t placed_count, std::uint32_t placed, std::uint64_t prefix_cost) {
        if (exhausted_) return;
        if (out_of_budget()) {
            exhausted_ = true;
            return;
        }
        ++nodes_;
        if (placed_count == n_) {
            if (prefix_cost < best_cost_) {
                best_cost_ = prefix_cost;
                best_ = LinearArrangement::from_order(order_);
            }
            return;
        }
        if (placed_count > 0) {
            if (prefix_cost + tail_[placed_count] >= best_cost_) return;
            const std::uint32_t unplaced = ~placed & full_mask();
            // Highest unplaced id must be able to exceed the first vertex.
            if (static_cast<int>(std::bit_width(unplaced)) - 1 < static_cast<int>(order_[0])) return;
        }
        // c_k for the current prefix.
        const std::uint64_t cut = current_cut_;
        for (vertex_id v = 0; v < n_; ++v) {
            if ((placed >> v) & 1) continue;
            const auto inner = static_cast<unsigned>(std::popcount(adjacency_[v] & placed));
            const std::uint64_t next_cut = cut + degree_[v] - 2 * inner;
            order_[placed_count] = v;
            current_cut_ = next_cut;
            search(placed_count + 1, placed | (std::uint32_t{1} << v), prefix_cost + next_cut);
            current_cut_ = cut;
            if (exhausted_) return;
        }
    }

    std::uint32_t full_mask() const {
        return n_ == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n_) - 1;
    }

    std::size_t n_;
    SolveOptions options_;
    std::vector<std::uint32_t> adjacency_;
    std::vector<unsigned> degree_;
    std::vector<std::uint64_t> tail_;
    std::vector<vertex_id> order_;
    LinearArrangement best_;
    std::uint64_t best_cost_ = 0;
    std::uint64_t current_cut_ = 0;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
    std::chrono::steady_clock::time_point start_;
};

}  // namespace detail

/// Exact MinLA of a small graph with a witnessing arrangement.
inline ExactResult minla_exact(const Graph& g, const SolveOptions& options = {}) {
    const std::size_t n = g.vertex_count();
    const std::size_t limit = options.mode == SolveMode::exhaustive ? kMaxExhaustiveVertices
                                                                     : kMaxBranchAndBoundVertices;
    if (n > limit) {
        throw limit_error(std::string(options.mode == SolveMode::exhaustive ? "exhaustive"
                                                                            : "branch-and-bound") +
                          " search limited to " + std::to_string(limit) + " vertices, graph has " +
                          std::to_string(n));
    }
    if (n == 0) return {0, LinearArrangement{}, true, 0};
    if (options.mode == SolveMode::exhaustive) return detail::solve_exhaustive(g);
    return detail::BranchAndBound(g, options).run();
}

}  // namespace bcminla
