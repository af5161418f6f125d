#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <vector>

#include "meshmat/bigint.hpp"
#include "meshmat/errors.hpp"
#include "meshmat/matrix.hpp"

namespace meshmat {

// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, ascending.
inline std::vector<double> jacobi_eigenvalues(Matrix<double> a) {
    if (!a.is_square()) throw NonSquare();
    const std::size_t n = a.rows();
    if (n == 0) return {};

    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) scale = std::max(scale, std::abs(a(i, j)));
    const double stop = (scale == 0.0 ? 1.0 : scale) * 1e-14;

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off = std::max(off, std::abs(a(p, q)));
        if (off <= stop) break;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::abs(a(p, q)) <= stop * 1e-2) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
            }
    }
    std::vector<double> eigenvalues(n);
    for (std::size_t i = 0; i < n; ++i) eigenvalues[i] = a(i, i);
    std::sort(eigenvalues.begin(), eigenvalues.end());
    return eigenvalues;
}

inline double default_eigen_tolerance(const IntMatrix& m) {
    Int max_entry(0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) max_entry = std::max(max_entry, abs_int(m(i, j)));
    return 1e-9 * (1.0 + to_double(max_entry));
}

// Smallest eigenvalue of the float image exceeding tol; nullopt when none
// does.  The input must be exactly symmetric.
inline std::optional<double> min_positive_eigenvalue(const IntMatrix& m,
                                                     std::optional<double> tol = std::nullopt) {
    if (!m.is_square()) throw NonSquare();
    if (!m.is_symmetric()) throw NonSymmetric();
    const double threshold = tol.value_or(default_eigen_tolerance(m));
    for (double ev : jacobi_eigenvalues(to_double_matrix(m)))
        if (ev > threshold) return ev;
    return std::nullopt;
}

}  // namespace meshmat
