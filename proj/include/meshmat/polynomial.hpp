#pragma once

#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "meshmat/bigint.hpp"

namespace meshmat {

// Polynomial in one variable with exact coefficients, stored ascending:
// coefficient(k) multiplies X^k.  The zero polynomial has no coefficients.
template <typename T>
class Polynomial {
public:
    Polynomial() = default;

    explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Polynomial constant(T value) { return Polynomial(std::vector<T>{std::move(value)}); }

    static Polynomial variable() { return Polynomial(std::vector<T>{T(0), T(1)}); }

    bool is_zero() const { return coeffs_.empty(); }

    // Degree of the zero polynomial is reported as -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    T coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : T(0); }

    const std::vector<T>& coefficients() const { return coeffs_; }

    bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial operator+(const Polynomial& o) const {
        std::vector<T> c(std::max(coeffs_.size(), o.coeffs_.size()), T(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
        return Polynomial(std::move(c));
    }

    Polynomial operator-(const Polynomial& o) const {
        std::vector<T> c(std::max(coeffs_.size(), o.coeffs_.size()), T(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] -= o.coeffs_[i];
        return Polynomial(std::move(c));
    }

    Polynomial operator-() const {
        std::vector<T> c(coeffs_);
        for (T& v : c) v = -v;
        return Polynomial(std::move(c));
    }

    Polynomial operator*(const Polynomial& o) const {
        if (is_zero() || o.is_zero()) return Polynomial();
        std::vector<T> c(coeffs_.size() + o.coeffs_.size() - 1, T(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
        return Polynomial(std::move(c));
    }

    Polynomial operator*(const T& s) const {
        std::vector<T> c(coeffs_);
        for (T& v : c) v *= s;
        return Polynomial(std::move(c));
    }

    // Multiplication by X^k.
    Polynomial shifted_up(std::size_t k) const {
        if (is_zero()) return Polynomial();
        std::vector<T> c(coeffs_.size() + k, T(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i + k] = coeffs_[i];
        return Polynomial(std::move(c));
    }

    T evaluate(const T& x) const {
        T acc(0);
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
        return acc;
    }

    // p(X + c), expanded by Horner over polynomial arithmetic.
    Polynomial substitute_shift(const T& c) const {
        Polynomial result;
        const Polynomial x_plus_c(std::vector<T>{c, T(1)});
        for (std::size_t i = coeffs_.size(); i-- > 0;)
            result = result * x_plus_c + constant(coeffs_[i]);
        return result;
    }

    std::string to_string(const std::string& var = "X") const {
        if (is_zero()) return "0";
        std::ostringstream out;
        bool first = true;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            const T& c = coeffs_[i];
            if (c == T(0)) continue;
            if (!first) out << (c < T(0) ? " - " : " + ");
            else if (c < T(0)) out << "-";
            first = false;
            T mag = c < T(0) ? T(-c) : c;
            const bool show_coeff = (mag != T(1)) || i == 0;
            if (show_coeff) out << meshmat::to_string(mag);
            if (i > 0) {
                if (show_coeff) out << "*";
                out << var;
                if (i > 1) out << "^" << i;
            }
        }
        return out.str();
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == T(0)) coeffs_.pop_back();
    }

    std::vector<T> coeffs_;
};

using IntPolynomial = Polynomial<Int>;
using RatPolynomial = Polynomial<Rat>;

inline RatPolynomial to_rational_polynomial(const IntPolynomial& p) {
    std::vector<Rat> c(p.coefficients().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = Rat(p.coefficients()[i]);
    return RatPolynomial(std::move(c));
}

}  // namespace meshmat
