#pragma once

#include <bcminla/common.hpp>

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace bcminla {

/// Undirected edge stored with u < v.
struct Edge {
    vertex_id u = 0;
    vertex_id v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/**
 * Immutable simple undirected graph on ids 0..N-1.
 *
 * Edges are kept sorted lexicographically; adjacency is a CSR view derived
 * from them, so u in adj(v) iff v in adj(u) holds by construction.
 */
class Graph {
public:
    Graph() = default;

    /// Normalizes each pair to u < v and sorts. Rejects self-loops, duplicate
    /// edges and out-of-range ids.
    Graph(std::size_t vertex_count, std::vector<Edge> edges) : vertex_count_(vertex_count) {
        for (auto& e : edges) {
            if (e.u == e.v) {
                throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
            }
            if (e.u > e.v) std::swap(e.u, e.v);
            if (e.v >= vertex_count) {
                throw std::invalid_argument("edge (" + std::to_string(e.u) + "," +
                                            std::to_string(e.v) + ") out of range for " +
                                            std::to_string(vertex_count) + " vertices");
            }
        }
        std::sort(edges.begin(), edges.end());
        auto dup = std::adjacent_find(edges.begin(), edges.end());
        if (dup != edges.end()) {
            throw std::invalid_argument("duplicate edge (" + std::to_string(dup->u) + "," +
                                        std::to_string(dup->v) + ")");
        }
        edges_ = std::move(edges);
        build_adjacency();
    }

    std::size_t vertex_count() const { return vertex_count_; }
    std::size_t edge_count() const { return edges_.size(); }
    std::span<const Edge> edges() const { return edges_; }

    std::span<const vertex_id> neighbors(vertex_id v) const {
        return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
    }
    std::size_t degree(vertex_id v) const { return offsets_[v + 1] - offsets_[v]; }

    bool has_edge(vertex_id a, vertex_id b) const {
        auto adj = neighbors(a);
        return std::binary_search(adj.begin(), adj.end(), b);
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
    }

private:
    void build_adjacency() {
        offsets_.assign(vertex_count_ + 1, 0);
        for (const auto& e : edges_) {
            ++offsets_[e.u + 1];
            ++offsets_[e.v + 1];
        }
        for (std::size_t i = 0; i < vertex_count_; ++i) offsets_[i + 1] += offsets_[i];
        adjacency_.resize(2 * edges_.size());
        std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
        // Lower neighbors first, then higher; sorted edge order keeps both
        // runs ascending, so each list comes out sorted.
        for (const auto& e : edges_) adjacency_[fill[e.v]++] = e.u;
        for (const auto& e : edges_) adjacency_[fill[e.u]++] = e.v;
    }

    std::size_t vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_{0};
    std::vector<vertex_id> adjacency_;
};

}  // namespace bcminla
