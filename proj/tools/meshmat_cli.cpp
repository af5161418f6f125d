// Command-line front end: parses graph/complex files, dispatches to the
// library, and prints either human-readable text or schema-stable JSON.
// Exit codes: 0 success, 1 a checked identity failed, 2 input/usage error.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "meshmat/meshmat.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace meshmat;

json to_json(const Int& v) {
    static const Int lo = Int(std::numeric_limits<std::int64_t>::min());
    static const Int hi = Int(std::numeric_limits<std::int64_t>::max());
    if (v >= lo && v <= hi) return v.convert_to<std::int64_t>();
    return meshmat::to_string(v);
}

json to_json(const Rat& v) { return meshmat::to_string(v); }

json to_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json to_json(const RatMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

// Polynomials serialize as ascending coefficient arrays.
json to_json(const IntPolynomial& p) {
    json coeffs = json::array();
    for (const Int& c : p.coefficients()) coeffs.push_back(to_json(c));
    return coeffs;
}

json to_json(const RatPolynomial& p) {
    json coeffs = json::array();
    for (const Rat& c : p.coefficients()) coeffs.push_back(to_json(c));
    return coeffs;
}

json to_json(const std::vector<Int>& v) {
    json a = json::array();
    for (const Int& x : v) a.push_back(to_json(x));
    return a;
}

json to_json(const std::vector<Rat>& v) {
    json a = json::array();
    for (const Rat& x : v) a.push_back(to_json(x));
    return a;
}

json to_json(const std::vector<int>& v) { return json(v); }

json to_json(const EdgeSet& s) { return json(std::vector<int>(s.begin(), s.end())); }

json optional_to_json(const std::optional<double>& v) {
    return v ? json(*v) : json(nullptr);
}

std::vector<int> parse_id_list(const std::string& text) {
    std::vector<int> ids;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            std::size_t used = 0;
            ids.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw ParseError("bad id '" + item + "' in list");
        }
    }
    return ids;
}

std::vector<std::vector<int>> parse_partition(const std::string& text) {
    std::vector<std::vector<int>> parts;
    std::stringstream ss(text);
    std::string group;
    while (std::getline(ss, group, ';')) parts.push_back(parse_id_list(group));
    return parts;
}

json graph_echo(const std::string& path, const Multigraph& g) {
    json edges = json::array();
    for (const Edge& e : g.edges()) edges.push_back(json::array({e.id, e.tail, e.head}));
    return json{{"file", path}, {"vertices", g.vertex_count()}, {"edges", std::move(edges)}};
}

MeshContext make_context(const Multigraph& g, const std::string& tree_option) {
    if (tree_option.empty()) return MeshContext(g);
    const std::vector<int> ids = parse_id_list(tree_option);
    return MeshContext(g, EdgeSet(ids.begin(), ids.end()));
}

struct Output {
    bool as_json = false;
    json body;
    std::ostringstream text;
    int exit_code = 0;
    std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

    void emit() const {
        if (as_json) {
            std::cout << body.dump(2) << "\n";
        } else {
            std::cout << text.str();
            const auto elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
                std::chrono::steady_clock::now() - started);
            std::cout << "elapsed: " << elapsed.count() / 1000.0 << " ms\n";
        }
    }
};

std::string label_string(const DirectedTreeEdge& d) {
    return std::to_string(d.edge_id) + (d.forward ? "+" : "-");
}

void run_mesh(Output& out, const std::string& path, const std::string& tree_option) {
    const Multigraph g = load_graph(path);
    const MeshContext ctx = make_context(g, tree_option);
    const IntMatrix mesh = mesh_matrix(ctx);
    const IntMatrix reduced = reduced_mesh_matrix(ctx);
    const IntMatrix laplacian = mesh_laplacian(ctx);
    const Int det = determinant(mesh);

    out.body = json{{"command", "mesh"},
                    {"input", graph_echo(path, g)},
                    {"tree", to_json(ctx.tree())},
                    {"cotree", to_json(ctx.cotree_order())},
                    {"chord_path_matrix", to_json(chord_path_matrix(ctx))},
                    {"mesh", to_json(mesh)},
                    {"reduced", to_json(reduced)},
                    {"laplacian", to_json(laplacian)},
                    {"determinant", to_json(det)}};
    out.text << "tree edges:";
    for (int id : ctx.tree_order()) out.text << " " << id;
    out.text << "\ncotree edges:";
    for (int id : ctx.cotree_order()) out.text << " " << id;
    out.text << "\nmesh matrix:\n" << mesh.to_string() << "\n";
    out.text << "mesh Laplacian:\n" << laplacian.to_string() << "\n";
    out.text << "determinant (spanning trees): " << det << "\n";
}

void run_charpoly(Output& out, const std::string& path, const std::string& tree_option) {
    const Multigraph g = load_graph(path);
    const MeshContext ctx = make_context(g, tree_option);
    const IntPolynomial mesh_cp = char_poly(mesh_matrix(ctx));
    const IntPolynomial reduced_cp = char_poly(reduced_mesh_matrix(ctx));

    out.body = json{{"command", "charpoly"},
                    {"input", graph_echo(path, g)},
                    {"tree", to_json(ctx.tree())},
                    {"mesh_charpoly", to_json(mesh_cp)},
                    {"reduced_charpoly", to_json(reduced_cp)}};
    out.text << "charpoly(mesh):    " << mesh_cp.to_string() << "\n";
    out.text << "charpoly(reduced): " << reduced_cp.to_string() << "\n";
}

void run_stpoly(Output& out, const std::string& path, const std::string& subgraph_option) {
    const Multigraph g = load_graph(path);
    const std::vector<int> ids = parse_id_list(subgraph_option);
    const EdgeSet h(ids.begin(), ids.end());
    const IntPolynomial p = st_polynomial_by_deletion_contraction(g, h);

    out.body = json{{"command", "stpoly"},
                    {"input", graph_echo(path, g)},
                    {"subgraph", to_json(h)},
                    {"coefficients", to_json(p)}};
    out.text << "ST polynomial: " << p.to_string() << "\n";
}

void run_count_trees(Output& out, const std::string& path) {
    const Multigraph g = load_graph(path);
    const Int count = Int(g.enumerate_spanning_trees().size());
    out.body = json{{"command", "count-trees"},
                    {"input", graph_echo(path, g)},
                    {"count", to_json(count)}};
    out.text << "spanning trees: " << count << "\n";
}

void run_kirchhoff(Output& out, const std::string& path) {
    const Multigraph g = load_graph(path);
    const IntMatrix lap = kirchhoff_laplacian(g);
    const IntPolynomial cp = char_poly(lap);
    out.body = json{{"command", "kirchhoff"},
                    {"input", graph_echo(path, g)},
                    {"laplacian", to_json(lap)},
                    {"charpoly", to_json(cp)}};
    out.text << "Kirchhoff Laplacian:\n" << lap.to_string() << "\n";
    out.text << "charpoly: " << cp.to_string() << "\n";
}

void run_allminors(Output& out, const std::string& path) {
    const Multigraph g = load_graph(path);
    const AllMinorsReport report = all_minors_report(g);
    out.body = json{{"command", "allminors"},
                    {"input", graph_echo(path, g)},
                    {"rooted_forest_counts", to_json(report.rooted_forest_counts)},
                    {"cone_tree_counts", to_json(report.cone_tree_counts)},
                    {"charpoly_coefficients", to_json(report.charpoly_coefficients)},
                    {"all_equal", report.all_equal}};
    out.text << "rooted forest counts:";
    for (const Int& b : report.rooted_forest_counts) out.text << " " << b;
    out.text << "\nall three routes equal: " << (report.all_equal ? "yes" : "no") << "\n";
    if (!report.all_equal) out.exit_code = 1;
}

void run_torsion(Output& out, const std::string& path, const std::string& tree_option) {
    const Multigraph g = load_graph(path);
    const MeshContext ctx = make_context(g, tree_option);
    const LatticeReport report = lattice_order_report(ctx);
    out.body = json{{"command", "torsion"},
                    {"input", graph_echo(path, g)},
                    {"tree", to_json(ctx.tree())},
                    {"order", to_json(report.order)},
                    {"block_determinant", to_json(report.block_determinant)},
                    {"invariant_factors", to_json(report.invariant_factors)},
                    {"routes_agree", report.routes_agree}};
    out.text << "lattice quotient order: " << report.order << "\n";
    out.text << "invariant factors:";
    for (const Int& d : report.invariant_factors) out.text << " " << d;
    out.text << "\n";
}

void run_flux(Output& out, const std::string& path, const std::string& tree_option,
              const std::string& partition_option) {
    const Multigraph g = load_graph(path);
    const MeshContext ctx = make_context(g, tree_option);
    const FluxGraph w = build_flux_graph(ctx);
    const FluxReport report = flux_report(ctx, w);

    json w_vertices = json::array();
    for (const DirectedTreeEdge& d : w.vertex_labels) w_vertices.push_back(label_string(d));
    json w_edges = json::array();
    for (const Edge& e : w.graph.edges())
        w_edges.push_back(json::array({e.tail, e.head}));

    out.body = json{{"command", "flux"},
                    {"input", graph_echo(path, g)},
                    {"tree", to_json(ctx.tree())},
                    {"loop_chords", to_json(report.loop_chords)},
                    {"adjacent_chords", to_json(report.adjacent_chords)},
                    {"long_path_chords", to_json(report.long_path_chords)},
                    {"w_vertices", std::move(w_vertices)},
                    {"w_edges", std::move(w_edges)},
                    {"w_components", to_json(w.component)},
                    {"Lambda", optional_to_json(report.flux_eigenvalue)},
                    {"lambda", optional_to_json(report.w_graph_eigenvalue)},
                    {"restricted_quotient", optional_to_json(report.restricted_quotient)},
                    {"Lambda_defined", report.flux_defined},
                    {"lambda_defined", report.w_defined},
                    {"inequality_holds", report.inequality_holds},
                    {"vacuous", report.vacuous},
                    {"tolerance", report.tolerance_used}};

    out.text << "chord types: " << report.loop_chords.size() << " loops, "
             << report.adjacent_chords.size() << " adjacent, "
             << report.long_path_chords.size() << " long-path\n";
    out.text << "flux graph: " << w.graph.vertex_count() << " vertices, "
             << w.graph.edge_count() << " edges, " << w.component_count << " components\n";
    auto show = [&](const char* name, const std::optional<double>& v) {
        out.text << name << ": ";
        if (v)
            out.text << *v << "\n";
        else
            out.text << "undefined\n";
    };
    show("Lambda (mesh Laplacian)", report.flux_eigenvalue);
    show("lambda (flux graph)", report.w_graph_eigenvalue);
    show("restricted quotient", report.restricted_quotient);
    out.text << "inequality Lambda <= lambda: "
             << (report.vacuous ? "vacuous" : (report.inequality_holds ? "holds" : "fails"))
             << "\n";

    if (!partition_option.empty()) {
        const double estimate = cheeger_estimate(w, parse_partition(partition_option));
        out.body["cheeger_estimate"] = estimate;
        out.body["half_lambda"] = report.w_graph_eigenvalue
                                      ? json(*report.w_graph_eigenvalue / 2.0)
                                      : json(nullptr);
        out.text << "cheeger estimate: " << estimate << "\n";
    }
}

void run_cw(Output& out, const std::string& path, const std::string& forest_option,
            const std::string& check) {
    const CWComplex x = load_complex(path);
    if (!x.valid()) throw ParseError("complex fails the boundary composition check");

    CellSubset forest;
    if (forest_option.empty()) {
        const auto forests = x.enumerate_spanning_forests();
        if (forests.empty()) throw ParseError("complex has no spanning forest");
        forest = forests.front();
    } else {
        forest = CellSubset(parse_id_list(forest_option));
        std::sort(forest.begin(), forest.end());
    }

    out.body = json{{"command", "cw"},
                    {"file", path},
                    {"dimension", x.dimension()},
                    {"forest", to_json(forest)},
                    {"check", check}};
    bool ok = true;
    if (check == "star") {
        out.body["mesh"] = to_json(geometric_mesh(x, forest).mesh);
        const ForestDeterminantReport report = forest_determinant_report(x, forest);
        out.body["determinant"] = to_json(report.determinant);
        out.body["forest_sum"] = to_json(report.forest_sum);
        out.body["holds"] = report.holds;
        ok = report.holds;
        out.text << "det(geometric mesh) = " << meshmat::to_string(report.determinant)
                 << ", forest sum = " << meshmat::to_string(report.forest_sum) << " -> "
                 << (ok ? "equal" : "DIFFER") << "\n";
    } else if (check == "higher") {
        const ForestCharpolyReport report = forest_charpoly_report(x, forest);
        out.body["mesh_charpoly"] = to_json(report.mesh_charpoly);
        out.body["reduced_charpoly"] = to_json(report.reduced_charpoly);
        out.body["shift_holds"] = report.shift_holds;
        out.body["reduced_coefficients"] = to_json(report.reduced_coefficients);
        out.body["forest_sums"] = to_json(report.forest_sums);
        out.body["reduced_coefficients_agree"] = report.reduced_coefficients_agree;
        out.body["mesh_coefficients"] = to_json(report.mesh_coefficients);
        out.body["subset_double_sums"] = to_json(report.subset_double_sums);
        out.body["mesh_coefficients_agree"] = report.mesh_coefficients_agree;
        ok = report.all_ok();
        out.text << "shift identity: " << (report.shift_holds ? "holds" : "FAILS") << "\n"
                 << "reduced coefficients vs forest sums: "
                 << (report.reduced_coefficients_agree ? "equal" : "DIFFER") << "\n"
                 << "mesh coefficients vs double sums: "
                 << (report.mesh_coefficients_agree ? "equal" : "DIFFER") << "\n";
    } else if (check == "integral") {
        const IntegralBasisReport report = integral_basis_report(x, forest);
        out.body["integral_determinant"] = to_json(report.integral_determinant);
        out.body["forest_sum"] = to_json(report.forest_sum);
        out.body["determinant_holds"] = report.determinant_holds;
        out.body["geometric_determinant"] = to_json(report.geometric_determinant);
        out.body["ratio"] = to_json(report.ratio);
        out.body["expected_ratio"] = to_json(report.expected_ratio);
        out.body["ratio_holds"] = report.ratio_holds;
        ok = report.all_ok();
        out.text << "integral Gram determinant = " << report.integral_determinant
                 << ", forest sum = " << meshmat::to_string(report.forest_sum) << " -> "
                 << (report.determinant_holds ? "equal" : "DIFFER") << "\n"
                 << "integral/geometric ratio = " << meshmat::to_string(report.ratio)
                 << ", expected " << meshmat::to_string(report.expected_ratio) << " -> "
                 << (report.ratio_holds ? "equal" : "DIFFER") << "\n";
    } else {
        throw ParseError("unknown check '" + check + "'");
    }
    out.body["ok"] = ok;
    if (!ok) out.exit_code = 1;
}

void run_verify(Output& out, const std::string& path, const std::string& tree_option) {
    const Multigraph g = load_graph(path);
    const MeshContext ctx = make_context(g, tree_option);
    const MeshIdentityReport report = mesh_identity_report(ctx, true);

    out.body = json{{"command", "verify"},
                    {"input", graph_echo(path, g)},
                    {"tree", to_json(ctx.tree())},
                    {"charpoly_identity", report.polynomials_agree},
                    {"determinant_identity", report.determinants_agree},
                    {"minor_expansion", report.minor_expansion_agrees},
                    {"det", to_json(report.mesh_determinant)},
                    {"tree_count", to_json(report.tree_count)},
                    {"mesh_charpoly", to_json(report.mesh_charpoly)},
                    {"st_polynomial", to_json(report.st_by_dc)},
                    {"ok", report.all_ok()}};
    out.text << "charpoly(Mesh)(X) == ST(G,T)(X-1): "
             << (report.polynomials_agree ? "yes" : "NO") << "\n";
    out.text << "det(Mesh) == sum of counts == tree count: "
             << (report.determinants_agree ? "yes" : "NO") << " (det = "
             << report.mesh_determinant << ")\n";
    out.text << "minor expansion of coefficients: "
             << (report.minor_expansion_agrees ? "yes" : "NO") << "\n";
    if (!report.all_ok()) out.exit_code = 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact mesh-matrix computations for graphs and CW complexes"};
    app.require_subcommand(1);

    std::string path, tree_option, subgraph_option, partition_option, forest_option, check;
    bool as_json = false;

    auto add_common = [&](CLI::App* cmd, const char* file_help) {
        cmd->add_option("file", path, file_help)->required();
        cmd->add_flag("--json", as_json, "emit JSON on stdout");
    };

    CLI::App* mesh_cmd = app.add_subcommand("mesh", "mesh matrix, reduced matrix, Laplacian");
    add_common(mesh_cmd, "graph file");
    mesh_cmd->add_option("--tree", tree_option, "comma-separated spanning tree edge ids");

    CLI::App* charpoly_cmd = app.add_subcommand("charpoly", "characteristic polynomials");
    add_common(charpoly_cmd, "graph file");
    charpoly_cmd->add_option("--tree", tree_option, "comma-separated spanning tree edge ids");

    CLI::App* stpoly_cmd = app.add_subcommand("stpoly", "spanning-tree counting polynomial");
    add_common(stpoly_cmd, "graph file");
    stpoly_cmd->add_option("--subgraph", subgraph_option, "comma-separated edge ids of H")
        ->required();

    CLI::App* count_cmd = app.add_subcommand("count-trees", "count spanning trees");
    add_common(count_cmd, "graph file");

    CLI::App* kirchhoff_cmd = app.add_subcommand("kirchhoff", "Kirchhoff Laplacian and charpoly");
    add_common(kirchhoff_cmd, "graph file");

    CLI::App* allminors_cmd =
        app.add_subcommand("allminors", "all-minors forest/cone/charpoly correspondence");
    add_common(allminors_cmd, "graph file");

    CLI::App* torsion_cmd = app.add_subcommand("torsion", "lattice quotient order two ways");
    add_common(torsion_cmd, "graph file");
    torsion_cmd->add_option("--tree", tree_option, "comma-separated spanning tree edge ids");

    CLI::App* flux_cmd = app.add_subcommand("flux", "flux eigenvalue report");
    add_common(flux_cmd, "graph file");
    flux_cmd->add_option("--tree", tree_option, "comma-separated spanning tree edge ids");
    flux_cmd->add_option("--partition", partition_option,
                         "per-component subsets C[k] of flux-graph vertices, e.g. '0;2,3'");

    CLI::App* cw_cmd = app.add_subcommand("cw", "CW complex forest-sum checks");
    add_common(cw_cmd, "complex file");
    cw_cmd->add_option("--forest", forest_option, "comma-separated top-cell indices");
    cw_cmd->add_option("--check", check, "one of: star, higher, integral")
        ->default_val("star")
        ->check(CLI::IsMember({"star", "higher", "integral"}));

    CLI::App* verify_cmd = app.add_subcommand("verify", "all mesh charpoly identities");
    add_common(verify_cmd, "graph file");
    verify_cmd->add_option("--tree", tree_option, "comma-separated spanning tree edge ids");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    Output out;
    out.as_json = as_json;
    try {
        if (*mesh_cmd) run_mesh(out, path, tree_option);
        else if (*charpoly_cmd) run_charpoly(out, path, tree_option);
        else if (*stpoly_cmd) run_stpoly(out, path, subgraph_option);
        else if (*count_cmd) run_count_trees(out, path);
        else if (*kirchhoff_cmd) run_kirchhoff(out, path);
        else if (*allminors_cmd) run_allminors(out, path);
        else if (*torsion_cmd) run_torsion(out, path, tree_option);
        else if (*flux_cmd) run_flux(out, path, tree_option, partition_option);
        else if (*cw_cmd) run_cw(out, path, forest_option, check);
        else if (*verify_cmd) run_verify(out, path, tree_option);
    } catch (const meshmat::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    out.emit();
    return out.exit_code;
}
