#pragma once

#include <bcminla/exact.hpp>
#include <bcminla/families.hpp>
#include <bcminla/io.hpp>
#include <bcminla/isoperimetric.hpp>
#include <bcminla/layout.hpp>

#include <functional>
#include <sstream>
#include <string>
#include <vector>

namespace bcminla::verify {

struct Options {
    std::uint64_t seed = 1;
    int max_certify_dimension = 20;
    int max_tightness_dimension = 14;
    int max_identity_dimension = 16;
};

struct SuiteResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

namespace detail {

/// Canonical families plus `random_count` seeded random members.
inline std::vector<FamilySpec> families(int n, std::uint64_t seed, int random_count) {
    std::vector<FamilySpec> specs{{FamilyKind::hypercube, n, {}},
                                  {FamilyKind::locally_twisted, n, {}},
                                  {FamilyKind::mobius_0, n, {}},
                                  {FamilyKind::mobius_1, n, {}}};
    for (int i = 0; i < random_count; ++i) {
        specs.push_back({FamilyKind::random, n, seed + static_cast<std::uint64_t>(i)});
    }
    return specs;
}

inline std::string describe(const FamilySpec& spec) {
    std::string s = std::string(to_string(spec.kind)) + " n=" + std::to_string(spec.dimension);
    if (spec.seed) s += " seed=" + std::to_string(*spec.seed);
    return s;
}

/// Collects the first failure; later checks are skipped once one fails.
class Checker {
public:
    void check(bool condition, const std::function<std::string()>& message) {
        ++checks_;
        if (!condition && failure_.empty()) failure_ = message();
    }
    bool failed() const { return !failure_.empty(); }

    SuiteResult result(std::string name) const {
        return {std::move(name), failure_.empty(),
                failure_.empty() ? std::to_string(checks_) + " checks" : failure_};
    }

private:
    std::size_t checks_ = 0;
    std::string failure_;
};

}  // namespace detail

inline SuiteResult exhaustive_minla(const Options& opt) {
    detail::Checker c;
    for (int n = 1; n <= 3 && !c.failed(); ++n) {
        for (const auto& spec : detail::families(n, opt.seed, 5)) {
            auto bc = make_family(spec);
            SolveOptions exhaustive;
            exhaustive.mode = SolveMode::exhaustive;
            auto result = minla_exact(bc.graph, exhaustive);
            c.check(result.cost == minla_closed_form(n), [&] {
                return detail::describe(spec) + ": exhaustive MinLA " + to_string(result.cost);
            });
        }
    }
    return c.result("exhaustive-minla");
}

inline SuiteResult certification(const Options& opt) {
    detail::Checker c;
    for (int n = 1; n <= opt.max_certify_dimension && !c.failed(); ++n) {
        for (const auto& spec : {FamilySpec{FamilyKind::hypercube, n, {}},
                                 FamilySpec{FamilyKind::locally_twisted, n, {}},
                                 FamilySpec{FamilyKind::mobius_1, n, {}},
                                 FamilySpec{FamilyKind::random, n, opt.seed}}) {
            auto report = certify(make_family(spec));
            c.check(report.optimal && report.cost == minla_closed_form(n), [&] {
                return detail::describe(spec) + ": cost " + to_string(report.cost) + " bound " +
                       to_string(report.lower_bound);
            });
        }
    }
    return c.result("certification");
}

inline SuiteResult isoperimetric_oracle(const Options& opt) {
    detail::Checker c;
    for (int n = 1; n <= 4; ++n) {
        for (const auto& spec : detail::families(n, opt.seed, 5)) {
            auto extremes = subset_extremes(make_family(spec).graph);
            for (std::uint64_t m = 1; m <= pow2(n); ++m) {
                c.check(extremes.max_induced[m].induced_edge_count == max_induced_edges(m) &&
                            extremes.min_boundary[m].boundary_edge_count == edge_boundary(n, m),
                        [&] { return detail::describe(spec) + ": m=" + std::to_string(m); });
            }
        }
    }
    return c.result("isoperimetric-oracle");
}

inline SuiteResult cut_tightness(const Options& opt) {
    detail::Checker c;
    for (int n = 1; n <= opt.max_tightness_dimension && !c.failed(); ++n) {
        for (const auto& spec : {FamilySpec{FamilyKind::hypercube, n, {}},
                                 FamilySpec{FamilyKind::mobius_0, n, {}},
                                 FamilySpec{FamilyKind::random, n, opt.seed}}) {
            auto bc = make_family(spec);
            auto profile = cut_profile(bc.graph, bc_arrangement(bc.tree));
            for (std::uint64_t m = 1; m < pow2(n); ++m) {
                c.check(profile.cuts[m - 1] == edge_boundary(n, m),
                        [&] { return detail::describe(spec) + ": cut " + std::to_string(m); });
            }
        }
    }
    return c.result("cut-tightness");
}

inline SuiteResult lower_bound_soundness(const Options& opt) {
    detail::Checker c;
    SplitMix64 rng(opt.seed);
    for (int n : {3, 4}) {
        const wide_uint closed = lower_bound_closed(n);
        for (int i = 0; i < 200; ++i) {
            auto bc = random_bc(n, rng.next());
            const wide_uint generic = lower_bound_generic(bc.graph);
            auto order = random_permutation(pow2(n), rng);
            auto cost = arrangement_cost(bc.graph, LinearArrangement::from_order(order));
            c.check(cost >= closed && cost >= generic, [&] {
                return "n=" + std::to_string(n) + ": random arrangement cost " + to_string(cost);
            });
            c.check(generic == closed, [&] { return "generic bound differs from closed form"; });
        }
    }
    return c.result("lower-bound-soundness");
}

inline SuiteResult cross_matching(const Options& opt) {
    detail::Checker c;
    SplitMix64 rng(opt.seed);
    for (int n = 2; n <= 10; ++n) {
        for (int i = 0; i < 20; ++i) {
            auto phi = random_permutation(pow2(n - 1), rng);
            auto cost = cross_matching_cost(n, phi);
            c.check(cost == wide_uint{1} << (2 * n - 2), [&] {
                return "n=" + std::to_string(n) + ": cross cost " + to_string(cost);
            });
        }
    }
    return c.result("cross-matching");
}

inline SuiteResult identities(const Options& opt) {
    detail::Checker c;
    for (int n = 1; n <= opt.max_identity_dimension && !c.failed(); ++n) {
        const std::uint64_t size = pow2(n);
        for (std::uint64_t m = 1; m < size; ++m) {
            c.check(edge_boundary(n, m) == edge_boundary(n, size - m), [&] {
                return "complement symmetry n=" + std::to_string(n) + " m=" + std::to_string(m);
            });
            c.check(edge_boundary(n, m) == edge_boundary_expanded(n, m), [&] {
                return "expansion n=" + std::to_string(n) + " m=" + std::to_string(m);
            });
        }
        auto bc = random_bc(n, opt.seed + static_cast<std::uint64_t>(n));
        SplitMix64 rng(opt.seed ^ static_cast<std::uint64_t>(n));
        auto f = LinearArrangement::from_order(random_permutation(size, rng));
        auto cost = arrangement_cost(bc.graph, f);
        c.check(cut_profile(bc.graph, f).total() == cost,
                [&] { return "cut sum n=" + std::to_string(n); });
        c.check(arrangement_cost(bc.graph, f.reversed()) == cost,
                [&] { return "reversal n=" + std::to_string(n); });
    }
    return c.result("identities");
}

inline SuiteResult round_trips(const Options& opt) {
    detail::Checker c;
    for (const auto& spec : detail::families(4, opt.seed, 1)) {
        auto bc = make_family(spec);
        std::stringstream json_text;
        io::write_graph_json(json_text, bc);
        auto doc = io::read_graph(json_text);
        c.check(doc.graph == bc.graph && doc.tree && *doc.tree == bc.tree,
                [&] { return detail::describe(spec) + ": JSON round trip"; });

        std::stringstream edge_text;
        io::write_edge_list(edge_text, bc.graph);
        c.check(io::read_graph(edge_text).graph == bc.graph,
                [&] { return detail::describe(spec) + ": edge list round trip"; });

        std::stringstream arrangement_text;
        auto f = bc_arrangement(bc.tree);
        io::write_arrangement(arrangement_text, f);
        c.check(io::read_arrangement(arrangement_text) == f,
                [&] { return detail::describe(spec) + ": arrangement round trip"; });
    }
    std::stringstream csv;
    io::write_table_csv_header(csv);
    const auto row = isoperimetric_row(63, pow2(63) - 1);
    io::write_table_csv_row(csv, row);
    auto rows = io::read_table_csv(csv);
    c.check(rows.size() == 1 && rows[0] == row, [] { return "dimension-63 table row"; });
    return c.result("round-trips");
}

inline std::vector<SuiteResult> run_all(const Options& opt = {}) {
    return {exhaustive_minla(opt),      certification(opt),  isoperimetric_oracle(opt),
            cut_tightness(opt),         lower_bound_soundness(opt), cross_matching(opt),
            identities(opt),            round_trips(opt)};
}

}  // namespace bcminla::verify
