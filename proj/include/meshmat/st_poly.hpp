#pragma once

#include <cstddef>
#include <vector>

#include "meshmat/charpoly.hpp"
#include "meshmat/combinations.hpp"
#include "meshmat/exact_linalg.hpp"
#include "meshmat/mesh_algebra.hpp"
#include "meshmat/mesh_context.hpp"
#include "meshmat/multigraph.hpp"
#include "meshmat/polynomial.hpp"

namespace meshmat {

// Counts (c_0, ..., c_N) of spanning trees using exactly j edges outside the
// subgraph h, where N is the number of edges outside h.  All zero when the
// graph is disconnected.
inline std::vector<Int> spanning_tree_counts(const Multigraph& g, const EdgeSet& h) {
    for (int id : h)
        if (!g.has_edge(id)) throw UnknownEdge(id);
    const std::size_t n_outside = g.edge_count() - h.size();
    std::vector<Int> counts(n_outside + 1, Int(0));
    for (const EdgeSet& tree : g.enumerate_spanning_trees()) {
        std::size_t outside = 0;
        for (int id : tree)
            if (!h.count(id)) ++outside;
        ++counts[outside];
    }
    return counts;
}

// Assembles sum_j (-1)^j c_j X^(N-j) from the counts.
inline IntPolynomial st_polynomial_from_counts(const std::vector<Int>& counts) {
    const std::size_t n = counts.size() - 1;
    std::vector<Int> coeffs(n + 1, Int(0));
    for (std::size_t j = 0; j <= n; ++j) coeffs[n - j] = (j % 2 == 0) ? counts[j] : -counts[j];
    return IntPolynomial(std::move(coeffs));
}

inline IntPolynomial st_polynomial_by_enumeration(const Multigraph& g, const EdgeSet& h) {
    return st_polynomial_from_counts(spanning_tree_counts(g, h));
}

namespace detail {

inline IntPolynomial st_dc_recurse(const Multigraph& g, const EdgeSet& h) {
    if (!g.is_connected()) return IntPolynomial();
    if (g.edge_count() == 0)
        return g.vertex_count() == 1 ? IntPolynomial::constant(Int(1)) : IntPolynomial();

    // Shrink h first, lowest id each time; then chords, lowest id first.
    int pick;
    if (!h.empty()) {
        pick = *h.begin();
    } else {
        pick = g.edges().front().id;
        for (const Edge& e : g.edges()) pick = std::min(pick, e.id);
    }
    const bool in_h = h.count(pick) != 0;
    const bool loop = g.edge(pick).is_loop();

    if (in_h) {
        // Deleting or contracting an edge of h acts on the pair: the edge
        // leaves h as well, keeping the count of edges outside h unchanged.
        EdgeSet h_rest = h;
        h_rest.erase(pick);
        if (loop) return st_dc_recurse(g.delete_edge(pick), h_rest);
        return st_dc_recurse(g.delete_edge(pick), h_rest) +
               st_dc_recurse(g.contract_edge(pick), h_rest);
    }
    // A chord contributes a factor X when deleted (one fewer edge outside h)
    // and enters with weight -1 when contracted.
    if (loop) return st_dc_recurse(g.delete_edge(pick), h).shifted_up(1);
    return st_dc_recurse(g.delete_edge(pick), h).shifted_up(1) -
           st_dc_recurse(g.contract_edge(pick), h);
}

}  // namespace detail

// The same polynomial by deletion/contraction; agrees with the enumeration
// route on every input.
inline IntPolynomial st_polynomial_by_deletion_contraction(const Multigraph& g, const EdgeSet& h) {
    for (int id : h)
        if (!g.has_edge(id)) throw UnknownEdge(id);
    return detail::st_dc_recurse(g, h);
}

// Coefficients b_j of the mesh characteristic polynomial written as
// X^N + sum (-1)^j b_j X^(N-j), evaluated literally as sums over j-subsets of
// chords of the mesh determinant of the subgraph spanned by the tree plus
// those chords.
inline std::vector<Int> minor_expansion_coefficients(const MeshContext& ctx) {
    const std::vector<int>& chords = ctx.cotree_order();
    const std::size_t n = chords.size();
    std::vector<Int> coeffs(n + 1, Int(0));
    coeffs[0] = 1;
    for (std::size_t j = 1; j <= n; ++j) {
        Int total(0);
        for_each_combination(n, j, [&](const std::vector<std::size_t>& combo) {
            std::vector<Edge> kept;
            for (const Edge& e : ctx.graph().edges()) {
                bool keep = ctx.is_tree_edge(e.id);
                for (std::size_t pos : combo) keep = keep || e.id == chords[pos];
                if (keep) kept.push_back(e);
            }
            const MeshContext sub_ctx(Multigraph(ctx.graph().vertex_count(), kept), ctx.tree());
            total += determinant(mesh_matrix(sub_ctx));
        });
        coeffs[j] = total;
    }
    return coeffs;
}

struct MeshIdentityReport {
    IntPolynomial mesh_charpoly;      // det(X Id - Mesh)
    IntPolynomial shifted_charpoly;   // det((X+1) Id - Mesh)
    IntPolynomial st_by_dc;
    IntPolynomial st_by_enumeration;
    bool polynomials_agree = false;

    Int mesh_determinant;
    Int count_sum;
    Int tree_count;
    bool determinants_agree = false;

    bool minor_expansion_checked = false;
    bool minor_expansion_agrees = false;
    std::vector<Int> minor_coefficients;
    std::vector<Int> charpoly_minor_coefficients;

    bool all_ok() const {
        return polynomials_agree && determinants_agree &&
               (!minor_expansion_checked || minor_expansion_agrees);
    }
};

// Cross-checks the spectral identity charpoly(Mesh)(X) = ST(G, T0)(X - 1),
// the determinant/tree-count equality, and optionally the diagonal-minor
// expansion of the charpoly coefficients.
inline MeshIdentityReport mesh_identity_report(const MeshContext& ctx,
                                               bool with_minor_expansion = false) {
    MeshIdentityReport report;
    const IntMatrix mesh = mesh_matrix(ctx);
    report.mesh_charpoly = char_poly(mesh);
    report.shifted_charpoly = report.mesh_charpoly.substitute_shift(Int(1));
    report.st_by_dc = st_polynomial_by_deletion_contraction(ctx.graph(), ctx.tree());
    report.st_by_enumeration = st_polynomial_by_enumeration(ctx.graph(), ctx.tree());
    report.polynomials_agree = report.shifted_charpoly == report.st_by_dc &&
                               report.st_by_dc == report.st_by_enumeration;

    report.mesh_determinant = determinant(mesh);
    Int total(0);
    for (const Int& c : spanning_tree_counts(ctx.graph(), ctx.tree())) total += c;
    report.count_sum = total;
    report.tree_count = Int(ctx.graph().enumerate_spanning_trees().size());
    report.determinants_agree =
        report.mesh_determinant == report.count_sum && report.count_sum == report.tree_count;

    if (with_minor_expansion) {
        report.minor_expansion_checked = true;
        report.minor_coefficients = minor_expansion_coefficients(ctx);
        const std::size_t n = ctx.cotree_size();
        report.charpoly_minor_coefficients.resize(n + 1);
        for (std::size_t j = 0; j <= n; ++j) {
            Int c = report.mesh_charpoly.coefficient(n - j);
            report.charpoly_minor_coefficients[j] = (j % 2 == 0) ? c : Int(-c);
        }
        report.minor_expansion_agrees =
            report.minor_coefficients == report.charpoly_minor_coefficients;
    }
    return report;
}

}  // namespace meshmat
