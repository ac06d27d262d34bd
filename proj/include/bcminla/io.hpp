#pragma once

#include <bcminla/bc_graph.hpp>
#include <bcminla/families.hpp>
#include <bcminla/isoperimetric.hpp>
#include <bcminla/layout.hpp>

#include <json.hpp>

#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

namespace bcminla::io {

using nlohmann::json;

/// Contents of a graph JSON document. tree is present only if the file
/// carried a construction witness.
struct GraphDocument {
    int dimension = 1;
    Graph graph;
    std::optional<ConstructionTree> tree;

    /// The witness as a BcGraph; throws if the document has none.
    BcGraph bc_graph() const {
        if (!tree) throw std::invalid_argument("graph document has no construction tree");
        return BcGraph{dimension, graph, *tree};
    }
};

// ---------------------------------------------------------------------------
// Graph JSON:
//   {"dimension": n, "edges": [[u,v], ...], "tree": {...}}
// edges have u < v and are sorted; tree is {"leaf":true} or
// {"left": ..., "right": ..., "phi": [...]}. Written by hand so that
// million-edge graphs stream without building a DOM.

inline void write_tree_json(std::ostream& out, const ConstructionTree& tree) {
    if (tree.is_leaf()) {
        out << "{\"leaf\":true}";
        return;
    }
    out << "{\"left\":";
    write_tree_json(out, tree.left());
    out << ",\"right\":";
    write_tree_json(out, tree.right());
    out << ",\"phi\":[";
    auto phi = tree.phi();
    for (std::size_t i = 0; i < phi.size(); ++i) {
        if (i) out << ',';
        out << phi[i];
    }
    out << "]}";
}

inline void write_graph_json(std::ostream& out, int dimension, const Graph& g,
                             const ConstructionTree* tree = nullptr) {
    out << "{\n  \"dimension\": " << dimension << ",\n  \"edges\": [";
    bool first = true;
    for (const auto& e : g.edges()) {
        out << (first ? "" : ",") << '[' << e.u << ',' << e.v << ']';
        first = false;
    }
    out << ']';
    if (tree) {
        out << ",\n  \"tree\": ";
        write_tree_json(out, *tree);
    }
    out << "\n}\n";
}

inline void write_graph_json(std::ostream& out, const BcGraph& bc) {
    write_graph_json(out, bc.dimension, bc.graph, &bc.tree);
}

inline ConstructionTree tree_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("tree node is not an object");
    if (j.contains("leaf")) {
        if (!j.at("leaf").is_boolean() || !j.at("leaf").get<bool>() || j.size() != 1) {
            throw std::invalid_argument("leaf node must be exactly {\"leaf\":true}");
        }
        return ConstructionTree::leaf();
    }
    if (!j.contains("left") || !j.contains("right") || !j.contains("phi")) {
        throw std::invalid_argument("tree node needs left, right and phi");
    }
    const auto& phi_json = j.at("phi");
    if (!phi_json.is_array()) throw std::invalid_argument("phi must be an array");
    std::vector<vertex_id> phi;
    phi.reserve(phi_json.size());
    for (const auto& x : phi_json) {
        if (!x.is_number_unsigned()) throw std::invalid_argument("phi entries must be unsigned");
        phi.push_back(x.get<vertex_id>());
    }
    return ConstructionTree::join(tree_from_json(j.at("left")), tree_from_json(j.at("right")),
                                  std::move(phi));
}

inline GraphDocument read_graph_json(std::istream& in, int max_dimension = kDefaultMaxDimension) {
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("graph JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("dimension") || !j.contains("edges")) {
        throw std::invalid_argument("graph JSON needs \"dimension\" and \"edges\"");
    }
    if (!j.at("dimension").is_number_integer()) {
        throw std::invalid_argument("graph JSON: dimension must be an integer");
    }
    GraphDocument doc;
    doc.dimension = j.at("dimension").get<int>();
    check_dimension(doc.dimension, max_dimension, "graph JSON");
    const auto& edges_json = j.at("edges");
    if (!edges_json.is_array()) throw std::invalid_argument("graph JSON: edges must be an array");
    std::vector<Edge> edges;
    edges.reserve(edges_json.size());
    for (const auto& pair : edges_json) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_unsigned() ||
            !pair[1].is_number_unsigned()) {
            throw std::invalid_argument("graph JSON: each edge must be [u, v]");
        }
        edges.push_back({pair[0].get<vertex_id>(), pair[1].get<vertex_id>()});
    }
    doc.graph = Graph(pow2(doc.dimension), std::move(edges));
    if (j.contains("tree")) {
        doc.tree = tree_from_json(j.at("tree"));
        if (doc.tree->dimension() != doc.dimension) {
            throw std::invalid_argument("graph JSON: tree dimension " +
                                        std::to_string(doc.tree->dimension()) +
                                        " differs from dimension " +
                                        std::to_string(doc.dimension));
        }
    }
    return doc;
}

// ---------------------------------------------------------------------------
// Edge list: "N M", then M lines "u v".

inline void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

inline Graph read_edge_list(std::istream& in) {
    std::uint64_t n = 0, m = 0;
    if (!(in >> n >> m)) throw std::invalid_argument("edge list: missing \"N M\" header");
    if (n > pow2(32)) throw limit_error("edge list: too many vertices");
    std::vector<Edge> edges;
    edges.reserve(m);
    for (std::uint64_t i = 0; i < m; ++i) {
        std::uint64_t u = 0, v = 0;
        if (!(in >> u >> v)) {
            throw std::invalid_argument("edge list: expected " + std::to_string(m) +
                                        " edges, read " + std::to_string(i));
        }
        if (u >= n || v >= n) throw std::invalid_argument("edge list: vertex id out of range");
        edges.push_back({static_cast<vertex_id>(u), static_cast<vertex_id>(v)});
    }
    std::string trailing;
    if (in >> trailing) throw std::invalid_argument("edge list: trailing data after edges");
    return Graph(n, std::move(edges));
}

/// Reads either format, choosing JSON when the first non-blank character is '{'.
/// Edge-list graphs must have 2^n vertices to get a dimension.
inline GraphDocument read_graph(std::istream& in, int max_dimension = kDefaultMaxDimension) {
    in >> std::ws;
    if (in.peek() == '{') return read_graph_json(in, max_dimension);
    GraphDocument doc;
    doc.graph = read_edge_list(in);
    const auto n = doc.graph.vertex_count();
    if (n < 2 || !std::has_single_bit(n)) {
        throw std::invalid_argument("edge list: vertex count " + std::to_string(n) +
                                    " is not a power of two >= 2");
    }
    doc.dimension = std::countr_zero(n);
    check_dimension(doc.dimension, max_dimension, "edge list");
    return doc;
}

// ---------------------------------------------------------------------------
// Arrangement file: one line per vertex, "vertex_id position", 1-based.

inline void write_arrangement(std::ostream& out, const LinearArrangement& f) {
    for (std::size_t v = 0; v < f.size(); ++v) {
        out << v << ' ' << f.position(static_cast<vertex_id>(v)) << '\n';
    }
}

inline LinearArrangement read_arrangement(std::istream& in) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> rows;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream fields(line);
        std::uint64_t v = 0, p = 0;
        std::string extra;
        if (!(fields >> v)) {
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            throw std::invalid_argument("arrangement: bad line '" + line + "'");
        }
        if (!(fields >> p) || (fields >> extra)) {
            throw std::invalid_argument("arrangement: bad line '" + line + "'");
        }
        rows.emplace_back(v, p);
    }
    std::vector<vertex_id> positions(rows.size(), 0);
    std::vector<bool> seen(rows.size(), false);
    for (auto [v, p] : rows) {
        if (v >= rows.size() || seen[v]) {
            throw std::invalid_argument("arrangement: vertex " + std::to_string(v) +
                                        " out of range or listed twice");
        }
        if (p > rows.size()) {
            throw std::invalid_argument("arrangement: position " + std::to_string(p) +
                                        " out of range");
        }
        seen[v] = true;
        positions[v] = static_cast<vertex_id>(p);
    }
    return LinearArrangement(std::move(positions));
}

// ---------------------------------------------------------------------------
// Layout report. Integers are written as exact decimals of any size.

inline void write_report_json(std::ostream& out, const LayoutReport& r) {
    out << "{\n  \"cost\": " << to_string(r.cost)
        << ",\n  \"lower_bound\": " << to_string(r.lower_bound)
        << ",\n  \"closed_form\": " << (r.closed_form ? to_string(*r.closed_form) : "null")
        << ",\n  \"optimal\": " << (r.optimal ? "true" : "false") << ",\n  \"cuts\": [";
    for (std::size_t i = 0; i < r.cut_profile.cuts.size(); ++i) {
        out << (i ? "," : "") << r.cut_profile.cuts[i];
    }
    out << "]\n}\n";
}

inline void write_report_table(std::ostream& out, const LayoutReport& r) {
    out << "cost          " << to_string(r.cost) << '\n'
        << "lower_bound   " << to_string(r.lower_bound) << '\n'
        << "closed_form   " << (r.closed_form ? to_string(*r.closed_form) : "-") << '\n'
        << "optimal       " << (r.optimal ? "yes" : "no") << '\n'
        << "cut  crossing\n";
    for (std::size_t i = 0; i < r.cut_profile.cuts.size(); ++i) {
        out << i + 1 << "  " << r.cut_profile.cuts[i] << '\n';
    }
}

// ---------------------------------------------------------------------------
// Isoperimetric table CSV: header "m,I,theta", exact integers.

inline void write_table_csv_header(std::ostream& out) { out << "m,I,theta\n"; }

inline void write_table_csv_row(std::ostream& out, const IsoperimetricRow& row) {
    out << row.m << ',' << to_string(row.induced) << ',' << to_string(row.boundary) << '\n';
}

inline std::vector<IsoperimetricRow> read_table_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != "m,I,theta") {
        throw std::invalid_argument("table CSV: missing header m,I,theta");
    }
    std::vector<IsoperimetricRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto c1 = line.find(',');
        auto c2 = line.find(',', c1 == std::string::npos ? c1 : c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos ||
            line.find(',', c2 + 1) != std::string::npos) {
            throw std::invalid_argument("table CSV: bad row '" + line + "'");
        }
        wide_uint m = parse_wide(std::string_view(line).substr(0, c1));
        if (m > ~std::uint64_t{0}) throw std::invalid_argument("table CSV: m out of range");
        rows.push_back({static_cast<std::uint64_t>(m),
                        parse_wide(std::string_view(line).substr(c1 + 1, c2 - c1 - 1)),
                        parse_wide(std::string_view(line).substr(c2 + 1))});
    }
    return rows;
}

// ---------------------------------------------------------------------------
// FamilySpec JSON: {"family": "...", "n": 5, "seed": 42}; seed only for random.

inline json family_spec_to_json(const FamilySpec& spec) {
    json j{{"family", std::string(to_string(spec.kind))}, {"n", spec.dimension}};
    if (spec.seed) j["seed"] = *spec.seed;
    return j;
}

inline FamilySpec family_spec_from_json(const json& j) {
    if (!j.is_object() || !j.contains("family") || !j.contains("n")) {
        throw std::invalid_argument("family spec needs \"family\" and \"n\"");
    }
    FamilySpec spec;
    spec.kind = parse_family_kind(j.at("family").get<std::string>());
    spec.dimension = j.at("n").get<int>();
    if (j.contains("seed")) spec.seed = j.at("seed").get<std::uint64_t>();
    check_family_spec(spec);
    return spec;
}

}  // namespace bcminla::io
