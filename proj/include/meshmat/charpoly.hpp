#pragma once

#include <cstddef>
#include <vector>

#include "meshmat/bigint.hpp"
#include "meshmat/exact_linalg.hpp"
#include "meshmat/matrix.hpp"
#include "meshmat/polynomial.hpp"

namespace meshmat {

namespace detail {

// det(X Id - m) by fraction-free evaluation at X = 0..n and exact Lagrange
// interpolation.  The result is monic of degree n.
template <typename T>
RatPolynomial char_poly_by_interpolation(const Matrix<T>& m) {
    if (!m.is_square()) throw NonSquare();
    const std::size_t n = m.rows();
    std::vector<Rat> values(n + 1);
    for (std::size_t x = 0; x <= n; ++x) {
        Matrix<T> shifted = m;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                shifted(i, j) = (i == j) ? T(int(x)) - m(i, j) : T(-m(i, j));
        values[x] = Rat(determinant(shifted));
    }
    RatPolynomial p;
    for (std::size_t i = 0; i <= n; ++i) {
        RatPolynomial basis = RatPolynomial::constant(Rat(1));
        Rat denom(1);
        for (std::size_t j = 0; j <= n; ++j) {
            if (j == i) continue;
            basis = basis * RatPolynomial(std::vector<Rat>{Rat(-Int(j)), Rat(1)});
            denom *= Rat(Int(i) - Int(j));
        }
        p = p + basis * (values[i] / denom);
    }
    if (p.degree() != static_cast<int>(n) || p.coefficient(n) != 1)
        throw Error("characteristic polynomial interpolation failed");
    return p;
}

}  // namespace detail

inline IntPolynomial char_poly(const IntMatrix& m) {
    const RatPolynomial p = detail::char_poly_by_interpolation(m);
    std::vector<Int> coeffs(p.coefficients().size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const Rat& c = p.coefficients()[i];
        if (!is_integral(c)) throw Error("characteristic polynomial is not integral");
        coeffs[i] = to_integer(c);
    }
    return IntPolynomial(std::move(coeffs));
}

inline RatPolynomial char_poly(const RatMatrix& m) {
    return detail::char_poly_by_interpolation(m);
}

}  // namespace meshmat
