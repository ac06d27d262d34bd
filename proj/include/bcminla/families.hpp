#pragma once

#include <bcminla/bc_graph.hpp>

#include <array>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bcminla {

/**
 * SplitMix64 (Steele, Lea, Flood 2014). Pinned so that random_bc fixtures are
 * bit-identical on every platform; std:: distributions are not.
 */
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound) by rejection; bound > 0.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

private:
    std::uint64_t state_;
};

/// Fisher-Yates with a descending index: for i = size-1 .. 1 swap a[i] with
/// a[j], j uniform in [0, i].
inline std::vector<vertex_id> random_permutation(std::size_t size, SplitMix64& rng) {
    std::vector<vertex_id> perm(size);
    std::iota(perm.begin(), perm.end(), vertex_id{0});
    for (std::size_t i = size; i-- > 1;) {
        std::swap(perm[i], perm[rng.below(i + 1)]);
    }
    return perm;
}

namespace detail {

inline std::vector<vertex_id> identity_permutation(std::size_t size) {
    std::vector<vertex_id> perm(size);
    std::iota(perm.begin(), perm.end(), vertex_id{0});
    return perm;
}

// Left subtree first, then right, then this node's bijection.
inline ConstructionTree random_tree(int n, SplitMix64& rng) {
    if (n == 1) return ConstructionTree::leaf();
    auto left = random_tree(n - 1, rng);
    auto right = random_tree(n - 1, rng);
    auto phi = random_permutation(pow2(n - 1), rng);
    return ConstructionTree::join(std::move(left), std::move(right), std::move(phi));
}

}  // namespace detail

inline ConstructionTree hypercube_tree(int n, int max_dimension = kDefaultMaxDimension) {
    check_dimension(n, max_dimension, "hypercube");
    auto tree = ConstructionTree::leaf();
    for (int d = 2; d <= n; ++d) {
        tree = ConstructionTree::join(tree, tree, detail::identity_permutation(pow2(d - 1)));
    }
    return tree;
}

inline ConstructionTree locally_twisted_tree(int n, int max_dimension = kDefaultMaxDimension) {
    check_dimension(n, max_dimension, "locally_twisted");
    auto tree = ConstructionTree::leaf();
    for (int d = 2; d <= n; ++d) {
        auto phi = detail::identity_permutation(pow2(d - 1));
        // The twist rule degenerates at d = 2, where LTQ2 is C4.
        if (d >= 3) {
            const vertex_id flip = vertex_id{1} << (d - 2);
            for (auto& x : phi) {
                if (x & 1) x ^= flip;
            }
        }
        tree = ConstructionTree::join(tree, tree, std::move(phi));
    }
    return tree;
}

/// variant 0 joins with the identity, variant 1 with the (d-1)-bit complement;
/// the left half is always a 0-cube and the right half a 1-cube.
inline ConstructionTree mobius_tree(int n, int variant,
                                    int max_dimension = kDefaultMaxDimension) {
    check_dimension(n, max_dimension, "mobius");
    if (variant != 0 && variant != 1) {
        throw std::invalid_argument("mobius: variant must be 0 or 1");
    }
    std::array<ConstructionTree, 2> cube{ConstructionTree::leaf(), ConstructionTree::leaf()};
    for (int d = 2; d <= n; ++d) {
        const auto half = static_cast<vertex_id>(pow2(d - 1));
        auto complement = detail::identity_permutation(half);
        for (auto& x : complement) x = (half - 1) - x;
        cube = {ConstructionTree::join(cube[0], cube[1], detail::identity_permutation(half)),
                ConstructionTree::join(cube[0], cube[1], std::move(complement))};
    }
    return cube[variant];
}

inline ConstructionTree random_bc_tree(int n, std::uint64_t seed,
                                       int max_dimension = kDefaultMaxDimension) {
    check_dimension(n, max_dimension, "random_bc");
    SplitMix64 rng(seed);
    return detail::random_tree(n, rng);
}

inline BcGraph hypercube(int n, int max_dimension = kDefaultMaxDimension) {
    return make_bc_graph(hypercube_tree(n, max_dimension), max_dimension);
}

inline BcGraph locally_twisted(int n, int max_dimension = kDefaultMaxDimension) {
    return make_bc_graph(locally_twisted_tree(n, max_dimension), max_dimension);
}

inline BcGraph mobius(int n, int variant, int max_dimension = kDefaultMaxDimension) {
    return make_bc_graph(mobius_tree(n, variant, max_dimension), max_dimension);
}

inline BcGraph random_bc(int n, std::uint64_t seed, int max_dimension = kDefaultMaxDimension) {
    return make_bc_graph(random_bc_tree(n, seed, max_dimension), max_dimension);
}

enum class FamilyKind { hypercube, locally_twisted, mobius_0, mobius_1, random };

inline std::string_view to_string(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::hypercube: return "hypercube";
        case FamilyKind::locally_twisted: return "locally-twisted";
        case FamilyKind::mobius_0: return "mobius-0";
        case FamilyKind::mobius_1: return "mobius-1";
        case FamilyKind::random: return "random";
    }
    return "?";
}

inline FamilyKind parse_family_kind(std::string_view name) {
    for (auto kind : {FamilyKind::hypercube, FamilyKind::locally_twisted, FamilyKind::mobius_0,
                      FamilyKind::mobius_1, FamilyKind::random}) {
        if (name == to_string(kind)) return kind;
    }
    // Named BC subfamilies whose matching rules are not built in yet.
    for (std::string_view reserved : {"crossed", "twisted", "spined", "z-cube"}) {
        if (name == reserved) {
            throw std::invalid_argument("family '" + std::string(name) +
                                        "' is reserved but has no constructor");
        }
    }
    throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

struct FamilySpec {
    FamilyKind kind = FamilyKind::hypercube;
    int dimension = 1;
    std::optional<std::uint64_t> seed;

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

inline void check_family_spec(const FamilySpec& spec) {
    if ((spec.kind == FamilyKind::random) != spec.seed.has_value()) {
        throw std::invalid_argument(spec.kind == FamilyKind::random
                                        ? "family 'random' requires a seed"
                                        : "seed is only meaningful for family 'random'");
    }
}

inline ConstructionTree family_tree(const FamilySpec& spec,
                                    int max_dimension = kDefaultMaxDimension) {
    check_family_spec(spec);
    const int n = spec.dimension;
    switch (spec.kind) {
        case FamilyKind::hypercube: return hypercube_tree(n, max_dimension);
        case FamilyKind::locally_twisted: return locally_twisted_tree(n, max_dimension);
        case FamilyKind::mobius_0: return mobius_tree(n, 0, max_dimension);
        case FamilyKind::mobius_1: return mobius_tree(n, 1, max_dimension);
        case FamilyKind::random: return random_bc_tree(n, *spec.seed, max_dimension);
    }
    throw std::invalid_argument("bad family kind");
}

inline BcGraph make_family(const FamilySpec& spec, int max_dimension = kDefaultMaxDimension) {
    return make_bc_graph(family_tree(spec, max_dimension), max_dimension);
}

}  // namespace bcminla
