#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "meshmat/bigint.hpp"
#include "meshmat/errors.hpp"
#include "meshmat/matrix.hpp"

namespace meshmat {

// Fraction-free (Bareiss) determinant.  Every division in the elimination is
// exact over the integers; the same recurrence is valid verbatim over the
// rationals, so one routine serves both scalar types.
template <typename T>
T determinant(Matrix<T> m) {
    if (!m.is_square()) throw NonSquare();
    const std::size_t n = m.rows();
    if (n == 0) return T(1);

    T prev_pivot(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == T(0)) {
            std::size_t swap_row = k;
            for (std::size_t i = k + 1; i < n; ++i)
                if (m(i, k) != T(0)) {
                    swap_row = i;
                    break;
                }
            if (swap_row == k) return T(0);
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap_row, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev_pivot;
            m(i, k) = T(0);
        }
        prev_pivot = m(k, k);
    }
    return sign > 0 ? m(n - 1, n - 1) : T(-m(n - 1, n - 1));
}

// Rank over the rationals by plain Gaussian elimination.
inline std::size_t rank(RatMatrix m) {
    std::size_t rank_count = 0;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
        std::size_t found = m.rows();
        for (std::size_t i = pivot_row; i < m.rows(); ++i)
            if (m(i, col) != 0) {
                found = i;
                break;
            }
        if (found == m.rows()) continue;
        if (found != pivot_row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot_row, j), m(found, j));
        const Rat pivot = m(pivot_row, col);
        for (std::size_t i = pivot_row + 1; i < m.rows(); ++i) {
            if (m(i, col) == 0) continue;
            const Rat factor = m(i, col) / pivot;
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= factor * m(pivot_row, j);
        }
        ++pivot_row;
        ++rank_count;
    }
    return rank_count;
}

inline std::size_t rank(const IntMatrix& m) { return rank(to_rational_matrix(m)); }

// Solves A x = b over the rationals.  Returns nullopt when inconsistent; when
// A has a nontrivial kernel the solution with free variables set to zero is
// returned.
inline std::optional<std::vector<Rat>> solve(RatMatrix a, std::vector<Rat> b) {
    if (a.rows() != b.size()) throw Error("solve: dimension mismatch");
    const std::size_t rows = a.rows(), cols = a.cols();
    std::vector<std::size_t> pivot_col_of_row;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        std::size_t found = rows;
        for (std::size_t i = pivot_row; i < rows; ++i)
            if (a(i, col) != 0) {
                found = i;
                break;
            }
        if (found == rows) continue;
        if (found != pivot_row) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(a(pivot_row, j), a(found, j));
            std::swap(b[pivot_row], b[found]);
        }
        const Rat pivot = a(pivot_row, col);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == pivot_row || a(i, col) == 0) continue;
            const Rat factor = a(i, col) / pivot;
            for (std::size_t j = col; j < cols; ++j) a(i, j) -= factor * a(pivot_row, j);
            b[i] -= factor * b[pivot_row];
        }
        pivot_col_of_row.push_back(col);
        ++pivot_row;
    }
    for (std::size_t i = pivot_row; i < rows; ++i)
        if (b[i] != 0) return std::nullopt;

    std::vector<Rat> x(cols, Rat(0));
    for (std::size_t i = 0; i < pivot_col_of_row.size(); ++i)
        x[pivot_col_of_row[i]] = b[i] / a(i, pivot_col_of_row[i]);
    return x;
}

inline std::optional<std::vector<Rat>> solve(const IntMatrix& a, const std::vector<Int>& b) {
    std::vector<Rat> br(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) br[i] = Rat(b[i]);
    return solve(to_rational_matrix(a), std::move(br));
}

}  // namespace meshmat
