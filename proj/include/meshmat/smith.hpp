#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "meshmat/bigint.hpp"
#include "meshmat/matrix.hpp"

namespace meshmat {

struct SmithForm {
    std::vector<Int> diagonal;  // non-negative invariant factors, each dividing the next;
                                // zeros trail, one entry per diagonal position
    std::size_t rank = 0;
    std::optional<IntMatrix> left;   // unimodular L with L * input * R = diag
    std::optional<IntMatrix> right;  // unimodular R

    Int nonzero_product() const {
        Int p(1);
        for (const Int& d : diagonal)
            if (d != 0) p *= d;
        return p;
    }
};

// Smith normal form by repeated reduction around the smallest-magnitude
// nonzero pivot.  Before a pivot is finalized it is made to divide every
// entry of the remaining block, so the divisibility chain holds by
// construction.
inline SmithForm smith_normal_form(IntMatrix a, bool with_transforms = false) {
    const std::size_t rows = a.rows(), cols = a.cols();
    IntMatrix left = IntMatrix::identity(rows);
    IntMatrix right = IntMatrix::identity(cols);

    auto swap_rows = [&](std::size_t r1, std::size_t r2) {
        if (r1 == r2) return;
        for (std::size_t j = 0; j < cols; ++j) std::swap(a(r1, j), a(r2, j));
        for (std::size_t j = 0; j < rows; ++j) std::swap(left(r1, j), left(r2, j));
    };
    auto swap_cols = [&](std::size_t c1, std::size_t c2) {
        if (c1 == c2) return;
        for (std::size_t i = 0; i < rows; ++i) std::swap(a(i, c1), a(i, c2));
        for (std::size_t i = 0; i < cols; ++i) std::swap(right(i, c1), right(i, c2));
    };
    auto add_row = [&](std::size_t dst, std::size_t src, const Int& factor) {
        for (std::size_t j = 0; j < cols; ++j) a(dst, j) += factor * a(src, j);
        for (std::size_t j = 0; j < rows; ++j) left(dst, j) += factor * left(src, j);
    };
    auto add_col = [&](std::size_t dst, std::size_t src, const Int& factor) {
        for (std::size_t i = 0; i < rows; ++i) a(i, dst) += factor * a(i, src);
        for (std::size_t i = 0; i < cols; ++i) right(i, dst) += factor * right(i, src);
    };
    auto negate_row = [&](std::size_t r) {
        for (std::size_t j = 0; j < cols; ++j) a(r, j) = -a(r, j);
        for (std::size_t j = 0; j < rows; ++j) left(r, j) = -left(r, j);
    };

    const std::size_t steps = std::min(rows, cols);
    std::size_t t = 0;
    for (; t < steps; ++t) {
        for (;;) {
            // Smallest-magnitude nonzero entry of the trailing block.
            std::size_t pi = rows, pj = cols;
            Int best(0);
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j) {
                    if (a(i, j) == 0) continue;
                    const Int mag = abs_int(a(i, j));
                    if (pi == rows || mag < best) {
                        best = mag;
                        pi = i;
                        pj = j;
                    }
                }
            if (pi == rows) goto finished;  // trailing block is zero
            swap_rows(t, pi);
            swap_cols(t, pj);

            bool exact = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a(i, t) == 0) continue;
                add_row(i, t, -Int(a(i, t) / a(t, t)));
                if (a(i, t) != 0) exact = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a(t, j) == 0) continue;
                add_col(j, t, -Int(a(t, j) / a(t, t)));
                if (a(t, j) != 0) exact = false;
            }
            if (!exact) continue;  // remainders are smaller; re-pick the pivot

            // Fold in one offending row when the pivot does not yet divide
            // the whole trailing block.
            bool divides_all = true;
            for (std::size_t i = t + 1; i < rows && divides_all; ++i)
                for (std::size_t j = t + 1; j < cols && divides_all; ++j)
                    if (a(i, j) % a(t, t) != 0) {
                        add_row(t, i, Int(1));
                        divides_all = false;
                    }
            if (divides_all) break;
        }
        if (a(t, t) < 0) negate_row(t);
    }
finished:

    SmithForm result;
    for (std::size_t i = 0; i < steps; ++i) {
        result.diagonal.push_back(a(i, i));
        if (a(i, i) != 0) ++result.rank;
    }
    if (with_transforms) {
        result.left = std::move(left);
        result.right = std::move(right);
    }
    return result;
}

// Integral basis of the kernel lattice of an integer matrix, one column per
// basis vector.  Comes from the column transform of the Smith form, so the
// basis is saturated: every integer kernel vector is an integer combination.
inline IntMatrix integer_kernel_basis(const IntMatrix& a) {
    const SmithForm snf = smith_normal_form(a, true);
    std::vector<std::size_t> kernel_cols;
    for (std::size_t j = snf.rank; j < a.cols(); ++j) kernel_cols.push_back(j);
    return snf.right->select_cols(kernel_cols);
}

}  // namespace meshmat
