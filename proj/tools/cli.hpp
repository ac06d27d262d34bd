#pragma once

#include <bcminla/bcminla.hpp>
#include <bcminla/verify.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace bcminla::cli {

enum ExitStatus : int { kOk = 0, kVerificationFailed = 1, kUsage = 2, kLimit = 3 };

namespace detail {

struct FamilyFlags {
    std::string family;
    int dimension = 0;
    std::optional<std::uint64_t> seed;
    CLI::Option* family_option = nullptr;

    void add_to(CLI::App* cmd, bool required) {
        family_option = cmd->add_option(
            "--family", family, "hypercube | locally-twisted | mobius-0 | mobius-1 | random");
        auto* n = cmd->add_option("-n,--dimension", dimension, "dimension n >= 1");
        auto* s = cmd->add_option("--seed", seed, "seed, only with --family random");
        if (required) {
            family_option->required();
            n->required();
        } else {
            n->needs(family_option);
            family_option->needs(n);
        }
        s->needs(family_option);
    }

    bool given() const { return family_option->count() > 0; }

    FamilySpec spec() const {
        FamilySpec spec{parse_family_kind(family), dimension, seed};
        check_family_spec(spec);
        return spec;
    }
};

/// A file when a path was given, else the command's stdout.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) {
        if (path.empty()) {
            stream_ = &fallback;
            return;
        }
        file_ = std::make_unique<std::ofstream>(path);
        if (!*file_) throw std::invalid_argument("cannot open '" + path + "' for writing");
        stream_ = file_.get();
    }
    std::ostream& get() { return *stream_; }

private:
    std::unique_ptr<std::ofstream> file_;
    std::ostream* stream_ = nullptr;
};

inline std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    return in;
}

inline io::GraphDocument load_graph(const std::string& path, int max_dimension) {
    auto in = open_input(path);
    return io::read_graph(in, max_dimension);
}

inline void write_report(std::ostream& out, const LayoutReport& report, const std::string& format) {
    if (format == "table") {
        io::write_report_table(out, report);
    } else {
        io::write_report_json(out, report);
    }
}

}  // namespace detail

/**
 * Runs one command. Exit status: 0 success, 1 verification failure, 2 usage
 * or malformed input, 3 resource limit. Reports go to out, diagnostics to err.
 */
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bijective-connection graphs: isoperimetric profiles and minimum linear "
                 "arrangements",
                 "bcminla"};
    app.require_subcommand(1);
    int max_dimension = kDefaultMaxDimension;
    app.add_option("--max-dimension", max_dimension, "largest dimension to materialize")
        ->check(CLI::Range(1, 30));

    // build
    auto* build = app.add_subcommand("build", "write a BC graph as JSON or edge list");
    detail::FamilyFlags build_family;
    build_family.add_to(build, true);
    std::string build_format = "json", build_output;
    build->add_option("--format", build_format)->check(CLI::IsMember({"json", "edgelist"}));
    build->add_option("-o,--output", build_output);

    // table
    auto* table = app.add_subcommand("table", "write the m,I,theta CSV for dimension n");
    int table_n = 0;
    std::vector<std::uint64_t> table_rows;
    std::string table_output;
    table->add_option("-n,--dimension", table_n)->required()->check(CLI::Range(1, 63));
    table->add_option("--m", table_rows, "emit only these rows (no size limit)");
    table->add_option("-o,--output", table_output);

    // arrange
    auto* arrange = app.add_subcommand("arrange", "write the BC arrangement of a graph with a tree");
    std::string arrange_input, arrange_output;
    arrange->add_option("-i,--input", arrange_input)->required();
    arrange->add_option("-o,--output", arrange_output);

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate an arrangement of a graph");
    std::string eval_input, eval_arrangement, eval_format = "json";
    eval->add_option("-i,--input", eval_input)->required();
    eval->add_option("-a,--arrangement", eval_arrangement)->required();
    eval->add_option("--format", eval_format)->check(CLI::IsMember({"json", "table"}));

    // certify
    auto* cert = app.add_subcommand("certify", "certify the BC arrangement optimal");
    detail::FamilyFlags cert_family;
    cert_family.add_to(cert, false);
    std::string cert_input, cert_format = "json";
    auto* cert_in = cert->add_option("-i,--input", cert_input);
    cert_in->excludes(cert_family.family_option);
    cert->add_option("--format", cert_format)->check(CLI::IsMember({"json", "table"}));

    // solve
    auto* solve = app.add_subcommand("solve", "exact MinLA by search");
    detail::FamilyFlags solve_family;
    solve_family.add_to(solve, false);
    std::string solve_input, solve_mode = "bnb", solve_output;
    std::uint64_t solve_budget = 0;
    double solve_seconds = 0;
    auto* solve_in = solve->add_option("-i,--input", solve_input);
    solve_in->excludes(solve_family.family_option);
    solve->add_option("--mode", solve_mode)->check(CLI::IsMember({"exhaustive", "bnb"}));
    solve->add_option("--budget", solve_budget, "search node budget, 0 = unlimited");
    solve->add_option("--time-limit", solve_seconds, "seconds, 0 = unlimited")
        ->check(CLI::NonNegativeNumber);
    solve->add_option("-o,--output", solve_output, "write the optimal arrangement here");

    // verify
    auto* verify = app.add_subcommand("verify", "run the bundled property suites");
    verify::Options verify_options;
    verify->add_option("--seed", verify_options.seed);
    verify->add_option("--max-n", verify_options.max_certify_dimension,
                       "largest dimension for the certification suite")
        ->check(CLI::Range(1, 25));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    auto need_graph_source = [&](const detail::FamilyFlags& family, const std::string& input) {
        if (!family.given() && input.empty()) {
            throw std::invalid_argument("give either --family/-n or -i");
        }
    };
    auto load_bc = [&](const detail::FamilyFlags& family, const std::string& input) {
        if (family.given()) return make_family(family.spec(), max_dimension);
        return detail::load_graph(input, max_dimension).bc_graph();
    };

    try {
        if (build->parsed()) {
            auto bc = make_family(build_family.spec(), max_dimension);
            detail::Sink sink(build_output, out);
            if (build_format == "edgelist") {
                io::write_edge_list(sink.get(), bc.graph);
            } else {
                io::write_graph_json(sink.get(), bc);
            }
            return kOk;
        }

        if (table->parsed()) {
            if (table_rows.empty()) check_dimension(table_n, max_dimension, "table");
            // Reject bad rows before writing anything.
            for (auto m : table_rows) isoperimetric_row(table_n, m);
            detail::Sink sink(table_output, out);
            io::write_table_csv_header(sink.get());
            if (!table_rows.empty()) {
                for (auto m : table_rows) {
                    io::write_table_csv_row(sink.get(), isoperimetric_row(table_n, m));
                }
            } else {
                for (std::uint64_t m = 1; m < pow2(table_n); ++m) {
                    io::write_table_csv_row(sink.get(), isoperimetric_row(table_n, m));
                }
            }
            return kOk;
        }

        if (arrange->parsed()) {
            auto doc = detail::load_graph(arrange_input, max_dimension);
            if (!doc.tree) {
                throw std::invalid_argument("arrange: '" + arrange_input +
                                            "' has no construction tree");
            }
            detail::Sink sink(arrange_output, out);
            io::write_arrangement(sink.get(), bc_arrangement(*doc.tree, max_dimension));
            return kOk;
        }

        if (eval->parsed()) {
            auto doc = detail::load_graph(eval_input, max_dimension);
            auto in = detail::open_input(eval_arrangement);
            auto f = io::read_arrangement(in);
            LayoutReport report;
            if (doc.tree) {
                auto check = validate(doc.bc_graph(), max_dimension);
                if (!check.ok()) {
                    for (const auto& v : check.violations) err << "invalid BC graph: " << v << '\n';
                    return kUsage;
                }
                report = evaluate_layout(doc.graph, f, lower_bound_closed(doc.dimension),
                                         minla_closed_form(doc.dimension));
            } else {
                // No witness: fall back to the exhaustive bound for this graph.
                report = evaluate_layout(doc.graph, f, lower_bound_generic(doc.graph));
            }
            detail::write_report(out, report, eval_format);
            return kOk;
        }

        if (cert->parsed()) {
            need_graph_source(cert_family, cert_input);
            auto bc = load_bc(cert_family, cert_input);
            if (!cert_family.given()) {
                auto check = validate(bc, max_dimension);
                if (!check.ok()) {
                    for (const auto& v : check.violations) err << "invalid BC graph: " << v << '\n';
                    return kVerificationFailed;
                }
            }
            auto report = certify(bc, max_dimension);
            detail::write_report(out, report, cert_format);
            return report.optimal ? kOk : kVerificationFailed;
        }

        if (solve->parsed()) {
            need_graph_source(solve_family, solve_input);
            SolveOptions options;
            options.mode = solve_mode == "exhaustive" ? SolveMode::exhaustive
                                                      : SolveMode::branch_and_bound;
            options.node_budget = solve_budget;
            options.time_limit =
                std::chrono::milliseconds(static_cast<std::int64_t>(solve_seconds * 1000));
            Graph graph;
            if (solve_family.given()) {
                auto bc = make_family(solve_family.spec(), max_dimension);
                options.initial = bc_arrangement(bc.tree);
                graph = std::move(bc.graph);
            } else {
                auto doc = detail::load_graph(solve_input, max_dimension);
                if (doc.tree) options.initial = bc_arrangement(*doc.tree);
                graph = std::move(doc.graph);
            }
            auto result = minla_exact(graph, options);
            out << "cost " << to_string(result.cost) << '\n'
                << "proven_optimal " << (result.proven_optimal ? "yes" : "no") << '\n'
                << "nodes " << result.nodes << '\n';
            if (!solve_output.empty()) {
                detail::Sink sink(solve_output, out);
                io::write_arrangement(sink.get(), result.arrangement);
            }
            if (!result.proven_optimal) {
                err << "search budget exhausted; reporting best arrangement found\n";
                return kLimit;
            }
            return kOk;
        }

        if (verify->parsed()) {
            bool all = true;
            for (const auto& suite : verify::run_all(verify_options)) {
                out << (suite.passed ? "PASS " : "FAIL ") << suite.name << " (" << suite.detail
                    << ")\n";
                all = all && suite.passed;
            }
            return all ? kOk : kVerificationFailed;
        }
    } catch (const limit_error& e) {
        err << "error: " << e.what() << '\n';
        return kLimit;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::bad_alloc&) {
        err << "error: out of memory\n";
        return kLimit;
    } catch (const std::logic_error& e) {
        err << "internal check failed: " << e.what() << '\n';
        return kVerificationFailed;
    }
    return kUsage;
}

}  // namespace bcminla::cli
