#pragma once

#include <bcminla/construction_tree.hpp>
#include <bcminla/graph.hpp>

#include <string>
#include <vector>

namespace bcminla {

/**
 * An n-dimensional bijective-connection graph together with its witness.
 *
 * Vertex ids follow the recursive top-bit convention: inside a node of
 * dimension d, left-subtree vertex v keeps id v and right-subtree vertex w
 * becomes w + 2^(d-1). Under this convention the all-identity tree is the
 * hypercube with single-bit-flip adjacency.
 *
 * Fields are public so that inconsistent values can be represented and
 * reported by validate(); every library constructor emits valid ones.
 */
struct BcGraph {
    int dimension = 1;
    Graph graph;
    ConstructionTree tree = ConstructionTree::leaf();
};

namespace detail {

inline void emit_edges(const ConstructionTree& tree, vertex_id base, std::vector<Edge>& out) {
    if (tree.is_leaf()) {
        out.push_back({base, base + 1});
        return;
    }
    auto half = static_cast<vertex_id>(pow2(tree.dimension() - 1));
    emit_edges(tree.left(), base, out);
    emit_edges(tree.right(), base + half, out);
    auto phi = tree.phi();
    for (vertex_id v = 0; v < half; ++v) out.push_back({base + v, base + half + phi[v]});
}

}  // namespace detail

/// Graph on 2^n ids described by tree, using the top-bit id convention.
inline Graph materialize(const ConstructionTree& tree,
                         int max_dimension = kDefaultMaxDimension) {
    int n = tree.dimension();
    check_dimension(n, max_dimension, "materialize");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * pow2(n - 1));
    detail::emit_edges(tree, 0, edges);
    return Graph(pow2(n), std::move(edges));
}

inline BcGraph make_bc_graph(ConstructionTree tree, int max_dimension = kDefaultMaxDimension) {
    Graph g = materialize(tree, max_dimension);
    return BcGraph{tree.dimension(), std::move(g), std::move(tree)};
}

/// g1 (+) g2: keeps g1's ids, shifts g2's by 2^(n-1) and adds the matching
/// v -- phi(v) + 2^(n-1).
inline BcGraph compose(const BcGraph& g1, const BcGraph& g2, std::vector<vertex_id> phi) {
    if (g1.dimension != g2.dimension) {
        throw std::invalid_argument("compose: dimension mismatch (" +
                                    std::to_string(g1.dimension) + " vs " +
                                    std::to_string(g2.dimension) + ")");
    }
    auto half = static_cast<vertex_id>(pow2(g1.dimension));
    if (g1.graph.vertex_count() != half || g2.graph.vertex_count() != half) {
        throw std::invalid_argument("compose: operand vertex count does not match its dimension");
    }
    std::vector<Edge> edges;
    edges.reserve(g1.graph.edge_count() + g2.graph.edge_count() + half);
    edges.insert(edges.end(), g1.graph.edges().begin(), g1.graph.edges().end());
    for (const auto& e : g2.graph.edges()) edges.push_back({e.u + half, e.v + half});
    // join() validates phi before we touch it.
    auto tree = ConstructionTree::join(g1.tree, g2.tree, std::move(phi));
    auto matching = tree.phi();
    for (vertex_id v = 0; v < half; ++v) edges.push_back({v, half + matching[v]});
    return BcGraph{g1.dimension + 1, Graph(2 * std::size_t{half}, std::move(edges)),
                   std::move(tree)};
}

struct ValidationReport {
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

/// Checks every BcGraph invariant and lists each violation found.
inline ValidationReport validate(const BcGraph& bc, int max_dimension = kDefaultMaxDimension) {
    ValidationReport report;
    auto& out = report.violations;
    const int n = bc.dimension;
    if (n < 1) {
        out.push_back("dimension " + std::to_string(n) + " is not positive");
        return report;
    }
    if (n > max_dimension) {
        out.push_back("dimension " + std::to_string(n) + " exceeds limit " +
                      std::to_string(max_dimension));
        return report;
    }
    const auto& g = bc.graph;
    if (g.vertex_count() != pow2(n)) {
        out.push_back("vertex count " + std::to_string(g.vertex_count()) + ", expected " +
                      std::to_string(pow2(n)));
    }
    std::size_t expected_edges = static_cast<std::size_t>(n) * pow2(n - 1);
    if (g.edge_count() != expected_edges) {
        out.push_back("edge count " + std::to_string(g.edge_count()) + ", expected " +
                      std::to_string(expected_edges));
    }
    constexpr std::size_t kMaxListed = 16;
    std::size_t irregular = 0;
    for (vertex_id v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == static_cast<std::size_t>(n)) continue;
        if (++irregular <= kMaxListed) {
            out.push_back("vertex " + std::to_string(v) + " has degree " +
                          std::to_string(g.degree(v)) + ", expected " + std::to_string(n));
        }
    }
    if (irregular > kMaxListed) {
        out.push_back(std::to_string(irregular - kMaxListed) + " further vertices of wrong degree");
    }
    for (vertex_id v = 0; v < g.vertex_count(); ++v) {
        for (auto w : g.neighbors(v)) {
            if (!g.has_edge(w, v)) {
                out.push_back("adjacency not symmetric at " + std::to_string(v) + "," +
                              std::to_string(w));
            }
        }
    }
    if (bc.tree.dimension() != n) {
        out.push_back("witness dimension " + std::to_string(bc.tree.dimension()) +
                      " differs from graph dimension " + std::to_string(n));
    } else if (materialize(bc.tree, max_dimension) != g) {
        out.push_back("witness mismatch: materialized tree differs from graph");
    }
    return report;
}

}  // namespace bcminla
