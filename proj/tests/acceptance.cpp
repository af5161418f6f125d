// Acceptance suite: every release-gating property, one pass/fail line each.
// All tolerances and time limits are fixed here, not configurable.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "meshmat/meshmat.hpp"

using namespace meshmat;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(const std::string& name, bool ok, double seconds, const std::string& detail = "") {
    std::printf("%-12s %s  (%.2fs)%s%s\n", name.c_str(), ok ? "PASS" : "FAIL", seconds,
                detail.empty() ? "" : "  ", detail.c_str());
    if (!ok) ++failures;
}

void run(const std::string& name, double time_limit_seconds,
         const std::function<bool(std::string&)>& body) {
    std::string detail;
    const auto start = Clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (time_limit_seconds > 0 && seconds >= time_limit_seconds) {
        ok = false;
        detail += " [exceeded " + std::to_string(time_limit_seconds) + "s]";
    }
    report(name, ok, seconds, detail);
}

bool relative_close(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

// Criterion 1 oracle: Deg - Adj assembled by degree counting with the first
// row and column struck, evaluated fraction-free.
Int reduced_laplacian_tree_count(const Multigraph& g) {
    const int n = g.vertex_count();
    IntMatrix reduced(n - 1, n - 1);
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) {
            Int value(0);
            for (const Edge& e : g.edges()) {
                if (e.is_loop()) continue;
                if (i == j && (e.tail == i || e.head == i)) value += 1;
                if (i != j && ((e.tail == i && e.head == j) || (e.tail == j && e.head == i)))
                    value -= 1;
            }
            reduced(i - 1, j - 1) = value;
        }
    return determinant(reduced);
}

bool criterion_tree_determinant(std::string& detail) {
    bool ok = true;
    const std::array<std::pair<Multigraph, Int>, 3> complete_cases = {
        std::make_pair(testutil::complete_graph(3), Int(3)),
        std::make_pair(testutil::complete_graph(4), Int(16)),
        std::make_pair(testutil::complete_graph(5), Int(125)),
    };
    for (const auto& [g, expected] : complete_cases) {
        const Int det = determinant(mesh_matrix(MeshContext(g)));
        const Int count = Int(g.enumerate_spanning_trees().size());
        ok = ok && det == expected && count == expected;
    }
    const Multigraph petersen = testutil::petersen_graph();
    const Int oracle = reduced_laplacian_tree_count(petersen);
    const Int det = determinant(mesh_matrix(MeshContext(petersen)));
    const Int count = Int(petersen.enumerate_spanning_trees().size());
    ok = ok && oracle == 2000 && det == oracle && count == oracle;
    detail = "K3=3 K4=16 K5=125 Petersen=" + oracle.str();
    return ok;
}

bool criterion_identity_sweep(std::string& detail) {
    bool ok = true;
    long graphs = 0, contexts = 0;
    testutil::for_each_connected_multigraph(4, 6, [&](const Multigraph& g) {
        ++graphs;
        const IntPolynomial by_enum = st_polynomial_by_enumeration(g, g.spanning_tree());
        for (const EdgeSet& tree : g.enumerate_spanning_trees()) {
            ++contexts;
            const MeshContext ctx(g, tree);
            const IntPolynomial shifted = char_poly(mesh_matrix(ctx)).substitute_shift(Int(1));
            const IntPolynomial dc = st_polynomial_by_deletion_contraction(g, tree);
            const IntPolynomial en = st_polynomial_by_enumeration(g, tree);
            ok = ok && shifted == dc && dc == en;
        }
    });
    detail = std::to_string(graphs) + " graphs, " + std::to_string(contexts) + " trees";
    return ok;
}

bool criterion_minor_expansion(std::string& detail) {
    std::mt19937 rng(101);
    bool ok = true;
    int done = 0;
    while (done < 25) {
        const Multigraph g = testutil::random_connected_multigraph(rng, 4, 7);
        const MeshContext ctx(g);
        if (ctx.cotree_size() > 5) continue;
        ++done;
        const MeshIdentityReport report = mesh_identity_report(ctx, true);
        ok = ok && report.minor_expansion_agrees;
    }
    detail = "25 random graphs, chords <= 5";
    return ok;
}

bool criterion_cone(std::string& detail) {
    std::mt19937 rng(103);
    bool ok = true;
    for (int round = 0; round < 25; ++round) {
        const Multigraph h = testutil::random_connected_multigraph(rng, 6, 9);
        ok = ok && cone_identity_report(h).all_ok();
    }
    const ConeIdentityReport k3 = cone_identity_report(testutil::complete_graph(3));
    ok = ok && k3.laplacian_charpoly == IntPolynomial({Int(0), Int(9), Int(-6), Int(1)});
    detail = "25 random graphs + K3 charpoly";
    return ok;
}

bool criterion_all_minors(std::string& detail) {
    bool ok = true;
    long graphs = 0;
    testutil::for_each_connected_multigraph(4, 6, [&](const Multigraph& h) {
        ++graphs;
        ok = ok && all_minors_report(h).all_equal;
    });
    const AllMinorsReport k3 = all_minors_report(testutil::complete_graph(3));
    ok = ok && k3.rooted_forest_counts ==
                   std::vector<Int>{Int(1), Int(6), Int(9), Int(0)};
    detail = std::to_string(graphs) + " graphs";
    return ok;
}

bool criterion_torsion(std::string& detail) {
    bool ok = true;
    long graphs = 0;
    testutil::for_each_connected_multigraph(4, 6, [&](const Multigraph& g) {
        ++graphs;
        const MeshContext ctx(g);
        const LatticeReport report = lattice_order_report(ctx);
        ok = ok && report.routes_agree && report.order == determinant(mesh_matrix(ctx)) &&
             report.order == Int(g.enumerate_spanning_trees().size());
    });
    detail = std::to_string(graphs) + " graphs, both routes";
    return ok;
}

bool criterion_flux(std::string& detail) {
    bool ok = true;

    const MeshContext c4(testutil::cycle_graph(4), EdgeSet{0, 1, 2});
    const FluxReport c4_report = flux_report(c4);
    ok = ok && c4_report.flux_defined && std::abs(*c4_report.flux_eigenvalue - 3.0) <= 1e-9;
    ok = ok && c4_report.w_defined && std::abs(*c4_report.w_graph_eigenvalue - 2.0) <= 1e-9;
    ok = ok && !c4_report.inequality_holds;

    std::mt19937 rng(107);
    int partition_checks = 0;
    for (int round = 0; round < 25; ++round) {
        const Multigraph g = testutil::random_graph_with_long_chords(rng, 8, 12);
        const MeshContext ctx(g);
        const FluxGraph w = build_flux_graph(ctx);
        const FluxReport report = flux_report(ctx, w);

        if (report.flux_defined) {
            double expected = 0;
            for (double ev : testutil::eigen_eigenvalues(mesh_laplacian(ctx)))
                if (ev > report.tolerance_used) {
                    expected = ev;
                    break;
                }
            ok = ok && relative_close(*report.flux_eigenvalue, expected, 1e-9);
        }
        if (report.w_defined) {
            const IntMatrix w_lap = kirchhoff_laplacian(w.graph);
            double expected = 0;
            for (double ev : testutil::eigen_eigenvalues(w_lap))
                if (ev > default_eigen_tolerance(w_lap)) {
                    expected = ev;
                    break;
                }
            ok = ok && relative_close(*report.w_graph_eigenvalue, expected, 1e-9);
        }

        if (!report.w_defined || w.graph.vertex_count() > 10) continue;
        // Exhaustive per-component proper subsets.
        std::vector<std::vector<std::vector<int>>> partitions{{}};
        for (int k = 0; k < w.component_count; ++k) {
            const std::vector<int> members = w.component_vertices(k);
            std::vector<std::vector<int>> choices;
            for (std::size_t mask = 1; mask + 1 < (std::size_t(1) << members.size()); ++mask) {
                std::vector<int> subset;
                for (std::size_t i = 0; i < members.size(); ++i)
                    if (mask & (std::size_t(1) << i)) subset.push_back(members[i]);
                choices.push_back(std::move(subset));
            }
            std::vector<std::vector<std::vector<int>>> extended;
            for (const auto& partial : partitions)
                for (const auto& choice : choices) {
                    auto next = partial;
                    next.push_back(choice);
                    extended.push_back(std::move(next));
                }
            partitions = std::move(extended);
        }
        for (const auto& parts : partitions) {
            ++partition_checks;
            ok = ok && *report.w_graph_eigenvalue / 2.0 <= cheeger_estimate(w, parts) + 1e-9;
        }
    }
    detail = "C4 exact + 25 random graphs, " + std::to_string(partition_checks) +
             " partitions";
    return ok;
}

bool criterion_cw(std::string& detail) {
    bool ok = true;

    const CWComplex deg23(2, {IntMatrix(1, 1), IntMatrix{{Int(2), Int(3)}}});
    const GeometricMesh gm = geometric_mesh(deg23, {0});
    ok = ok && gm.mesh.rows() == 1 && gm.mesh(0, 0) == Rat(13, 4);
    const IntegralBasisReport integral = integral_basis_report(deg23, {0});
    ok = ok && integral.integral_determinant == 13 && integral.ratio == Rat(4) &&
         integral.all_ok();
    ok = ok && torsion_order(deg23, {0}) == 2 && torsion_order(deg23, {1}) == 3 &&
         torsion_order(deg23) == 1;

    const CWComplex rp2(2, {IntMatrix(1, 1), IntMatrix{{Int(2)}}});
    ok = ok && torsion_order(rp2, {0}) == 2;

    std::mt19937 rng(109);
    for (int round = 0; round < 25; ++round) {
        const CWComplex x = testutil::random_two_complex(rng, 5);
        const CellSubset v0 = x.enumerate_spanning_forests().front();
        ok = ok && forest_determinant_report(x, v0).holds;
        ok = ok && forest_charpoly_report(x, v0).all_ok();
        ok = ok && integral_basis_report(x, v0).all_ok();
    }

    // Graphs as 1-complexes reproduce the graph modules bit for bit.
    for (const Multigraph& g : {testutil::complete_graph(3), testutil::complete_graph(4)}) {
        const MeshContext ctx(g);
        const CWComplex as_complex = complex_from_graph(g);
        const CellSubset forest(ctx.tree().begin(), ctx.tree().end());
        const GeometricMesh graph_mesh = geometric_mesh(as_complex, forest);
        const IntMatrix mesh = mesh_matrix(ctx);
        for (std::size_t i = 0; i < mesh.rows(); ++i)
            for (std::size_t j = 0; j < mesh.cols(); ++j)
                ok = ok && graph_mesh.mesh(i, j) == Rat(mesh(i, j));
        ok = ok && forest_determinant_report(as_complex, forest).determinant ==
                       Rat(determinant(mesh));
        ok = ok && integral_basis_report(as_complex, forest).ratio == Rat(1);

        const auto forests = as_complex.enumerate_spanning_forests();
        const auto trees = g.enumerate_spanning_trees();
        ok = ok && forests.size() == trees.size();
    }
    detail = "named examples + 25 random 2-complexes";
    return ok;
}

bool criterion_determinism(std::string& detail) {
#ifdef MESHMAT_CLI_PATH
    auto capture = [](const std::string& args) {
        const std::string command = std::string(MESHMAT_CLI_PATH) + " " + args + " 2>/dev/null";
        std::string output;
        std::array<char, 4096> buffer;
        FILE* pipe = popen(command.c_str(), "r");
        if (!pipe) return std::string("<popen failed>");
        std::size_t got;
        while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
            output.append(buffer.data(), got);
        pclose(pipe);
        return output;
    };
    const std::string fixture_dir = MESHMAT_FIXTURE_DIR;
    const std::string commands[] = {
        "verify " + fixture_dir + "/k4.graph --json",
        "flux " + fixture_dir + "/c4.graph --json",
        "cw " + fixture_dir + "/deg23.complex --check higher --json",
        "mesh " + fixture_dir + "/petersen.graph --json",
    };
    bool ok = true;
    for (const std::string& command : commands) {
        const std::string first = capture(command);
        const std::string second = capture(command);
        ok = ok && !first.empty() && first == second;
    }
    detail = "4 commands run twice";
    return ok;
#else
    detail = "CLI path not configured";
    return false;
#endif
}

}  // namespace

int main() {
    run("det-count", 10.0, criterion_tree_determinant);
    run("identity", 60.0, criterion_identity_sweep);
    run("minors", 0.0, criterion_minor_expansion);
    run("cone", 0.0, criterion_cone);
    run("allminors", 0.0, criterion_all_minors);
    run("torsion", 0.0, criterion_torsion);
    run("flux", 0.0, criterion_flux);
    run("cw", 120.0, criterion_cw);
    run("determinism", 0.0, criterion_determinism);

    if (failures == 0) {
        std::printf("all acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d criteria failed\n", failures);
    return 1;
}
