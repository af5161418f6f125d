#pragma once

#include <cstddef>
#include <vector>

#include "meshmat/chain.hpp"
#include "meshmat/exact_linalg.hpp"
#include "meshmat/mesh_algebra.hpp"
#include "meshmat/mesh_context.hpp"
#include "meshmat/smith.hpp"

namespace meshmat {

// Integral basis of the projected coboundary lattice: one chain per tree
// edge, b[f_k] = f_k - sum_j Y(k, j) e_j.  Each b[f_k] is orthogonal to every
// fundamental cycle.
inline std::vector<OneChain> coboundary_basis(const MeshContext& ctx) {
    const IntMatrix y = chord_path_matrix(ctx);
    std::vector<OneChain> basis;
    basis.reserve(ctx.tree_size());
    for (std::size_t k = 0; k < ctx.tree_size(); ++k) {
        OneChain b = OneChain::unit(ctx.graph(), ctx.tree_order()[k]);
        for (std::size_t j = 0; j < ctx.cotree_size(); ++j)
            b.add(ctx.cotree_order()[j], -y(k, j));
        basis.push_back(std::move(b));
    }
    return basis;
}

struct LatticeReport {
    Int order;                        // | C_1 / (cycles + projected coboundaries) |
    Int block_determinant;            // det [[Id, -Y^t], [Y, Id]]
    Int factor_product;               // product of invariant factors of the basis matrix
    std::vector<Int> invariant_factors;
    bool routes_agree = false;
};

// Order of the quotient of the integer 1-chains by the span of the
// fundamental cycles and the projected coboundaries, computed two ways: the
// block determinant and the Smith form of the matrix whose columns are the
// basis chains in the edge basis (chords first, then tree edges).
inline LatticeReport lattice_order_report(const MeshContext& ctx) {
    const std::size_t n = ctx.cotree_size();
    const std::size_t t = ctx.tree_size();
    const std::size_t m = n + t;

    const IntMatrix y = chord_path_matrix(ctx);
    IntMatrix block(m, m);
    for (std::size_t i = 0; i < n; ++i) block(i, i) = 1;
    for (std::size_t k = 0; k < t; ++k) block(n + k, n + k) = 1;
    for (std::size_t k = 0; k < t; ++k)
        for (std::size_t j = 0; j < n; ++j) {
            block(j, n + k) = -y(k, j);  // -Y^t
            block(n + k, j) = y(k, j);   // Y
        }

    auto edge_coordinate = [&](int edge_id) {
        return ctx.is_tree_edge(edge_id) ? n + ctx.tree_index(edge_id)
                                         : ctx.cotree_index(edge_id);
    };
    IntMatrix basis(m, m);
    for (std::size_t j = 0; j < n; ++j) {
        const OneChain cycle = ctx.fundamental_cycle(ctx.cotree_order()[j]);
        for (const auto& [id, v] : cycle.terms()) basis(edge_coordinate(id), j) = v;
    }
    const std::vector<OneChain> cobasis = coboundary_basis(ctx);
    for (std::size_t k = 0; k < t; ++k)
        for (const auto& [id, v] : cobasis[k].terms()) basis(edge_coordinate(id), n + k) = v;

    LatticeReport report;
    report.block_determinant = determinant(block);
    const SmithForm snf = smith_normal_form(basis);
    report.invariant_factors = snf.diagonal;
    report.factor_product = snf.rank == m ? snf.nonzero_product() : Int(0);
    report.routes_agree = report.block_determinant == report.factor_product;
    if (!report.routes_agree) throw Error("lattice order routes disagree");
    report.order = report.block_determinant;
    return report;
}

inline Int lattice_index(const MeshContext& ctx) { return lattice_order_report(ctx).order; }

}  // namespace meshmat
