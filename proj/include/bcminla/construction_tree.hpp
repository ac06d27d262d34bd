#pragma once

#include <bcminla/common.hpp>

#include <memory>
#include <span>
#include <string>
#include <vector>

namespace bcminla {

/// True iff values is a permutation of 0..values.size()-1.
inline bool is_permutation_of_range(std::span<const vertex_id> values) {
    std::vector<bool> seen(values.size(), false);
    for (auto x : values) {
        if (x >= values.size() || seen[x]) return false;
        seen[x] = true;
    }
    return true;
}

/**
 * Witness of how a BC graph was built: either a leaf (K2) or two subtrees of
 * equal dimension joined by a bijection phi from left-local to right-local ids.
 *
 * Immutable and cheap to copy; subtrees are shared, so the all-identity tree
 * of dimension n holds only n nodes.
 */
class ConstructionTree {
public:
    static ConstructionTree leaf() { return ConstructionTree{}; }

    /// Joins two subtrees of equal dimension; phi must permute 0..2^d - 1
    /// where d is their dimension.
    static ConstructionTree join(ConstructionTree left, ConstructionTree right,
                                 std::vector<vertex_id> phi);

    bool is_leaf() const { return node_ == nullptr; }
    int dimension() const;

    // Precondition for the accessors below: !is_leaf().
    const ConstructionTree& left() const;
    const ConstructionTree& right() const;
    std::span<const vertex_id> phi() const;

    friend bool operator==(const ConstructionTree& a, const ConstructionTree& b);

private:
    struct Node;

    ConstructionTree() = default;
    explicit ConstructionTree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

struct ConstructionTree::Node {
    int dimension;
    ConstructionTree left;
    ConstructionTree right;
    std::vector<vertex_id> phi;
};

inline int ConstructionTree::dimension() const { return node_ ? node_->dimension : 1; }
inline const ConstructionTree& ConstructionTree::left() const { return node_->left; }
inline const ConstructionTree& ConstructionTree::right() const { return node_->right; }
inline std::span<const vertex_id> ConstructionTree::phi() const { return node_->phi; }

inline ConstructionTree ConstructionTree::join(ConstructionTree left, ConstructionTree right,
                                               std::vector<vertex_id> phi) {
    if (left.dimension() != right.dimension()) {
        throw std::invalid_argument("join: subtree dimensions differ (" +
                                    std::to_string(left.dimension()) + " vs " +
                                    std::to_string(right.dimension()) + ")");
    }
    if (left.dimension() >= 63) throw limit_error("join: dimension too large");
    if (phi.size() != pow2(left.dimension())) {
        throw std::invalid_argument("join: bijection has " + std::to_string(phi.size()) +
                                    " entries, expected " +
                                    std::to_string(pow2(left.dimension())));
    }
    if (!is_permutation_of_range(phi)) {
        throw std::invalid_argument("join: phi is not a permutation");
    }
    int dim = left.dimension() + 1;
    return ConstructionTree{std::make_shared<const Node>(
        Node{dim, std::move(left), std::move(right), std::move(phi)})};
}

inline bool operator==(const ConstructionTree& a, const ConstructionTree& b) {
    if (a.node_ == b.node_) return true;
    if (a.is_leaf() || b.is_leaf()) return false;
    return a.node_->dimension == b.node_->dimension && a.node_->phi == b.node_->phi &&
           a.node_->left == b.node_->left && a.node_->right == b.node_->right;
}

}  // namespace bcminla
