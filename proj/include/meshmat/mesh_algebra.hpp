#pragma once

#include <cstddef>
#include <vector>

#include "meshmat/chain.hpp"
#include "meshmat/matrix.hpp"
#include "meshmat/mesh_context.hpp"

namespace meshmat {

// Matrix of the tree-path closure map: entry (k, j) is the coefficient of
// tree edge f_k in the closure chain of chord e_j.  Entries are -1, 0 or +1.
inline IntMatrix chord_path_matrix(const MeshContext& ctx) {
    IntMatrix y(ctx.tree_size(), ctx.cotree_size());
    for (std::size_t j = 0; j < ctx.cotree_size(); ++j) {
        const OneChain path = ctx.chord_tree_path(ctx.cotree_order()[j]);
        for (const auto& [id, v] : path.terms()) y(ctx.tree_index(id), j) = v;
    }
    return y;
}

// Gram matrix of the fundamental cycles under the cellular inner product.
// Also assembled as Id + Y^t Y; the two constructions must agree entrywise.
inline IntMatrix mesh_matrix(const MeshContext& ctx) {
    const std::size_t n = ctx.cotree_size();
    std::vector<OneChain> cycles;
    cycles.reserve(n);
    for (int id : ctx.cotree_order()) cycles.push_back(ctx.fundamental_cycle(id));
    IntMatrix gram(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            gram(i, j) = inner_product(cycles[i], cycles[j]);
            gram(j, i) = gram(i, j);
        }
    const IntMatrix y = chord_path_matrix(ctx);
    if (gram != IntMatrix::identity(n) + y.transpose() * y)
        throw Error("mesh matrix constructions disagree");
    return gram;
}

// Mesh matrix minus the identity, i.e. Y^t Y.
inline IntMatrix reduced_mesh_matrix(const MeshContext& ctx) {
    return mesh_matrix(ctx) - IntMatrix::identity(ctx.cotree_size());
}

// Y Y^t, indexed by tree edges.
inline IntMatrix mesh_laplacian(const MeshContext& ctx) {
    const IntMatrix y = chord_path_matrix(ctx);
    return y * y.transpose();
}

// The mesh Laplacian assembled by support counting instead of the matrix
// product: the diagonal entry (k, k) counts the chords whose closure chain
// uses f_k, and the off-diagonal entry (k, l) is a fixed sign times the
// number of chords whose closure uses both f_k and f_l.  The sign is the
// product of the two closure coefficients, which is the same for every chord
// through the pair; that independence is asserted here.
inline IntMatrix mesh_laplacian_direct(const MeshContext& ctx) {
    const std::size_t t = ctx.tree_size();
    const IntMatrix y = chord_path_matrix(ctx);
    IntMatrix lap(t, t);
    for (std::size_t k = 0; k < t; ++k) {
        for (std::size_t l = k; l < t; ++l) {
            Int count(0);
            Int sign(0);
            for (std::size_t j = 0; j < ctx.cotree_size(); ++j) {
                if (y(k, j) == 0 || y(l, j) == 0) continue;
                const Int product = y(k, j) * y(l, j);
                if (count == 0)
                    sign = product;
                else if (product != sign)
                    throw Error("closure sign is not chord independent");
                ++count;
            }
            lap(k, l) = sign * count;
            lap(l, k) = lap(k, l);
        }
    }
    return lap;
}

}  // namespace meshmat
