#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <vector>

#include "meshmat/combinations.hpp"
#include "meshmat/errors.hpp"
#include "meshmat/exact_linalg.hpp"
#include "meshmat/matrix.hpp"
#include "meshmat/smith.hpp"

namespace meshmat {

using CellSubset = std::vector<int>;  // ascending indices into the top cells

// Finite CW complex given purely as its graded integer boundary matrices:
// boundary(k) maps k-chains to (k-1)-chains, for k = 1..dimension.  Every
// quantity computed here depends only on these matrices.
class CWComplex {
public:
    CWComplex(int dimension, std::vector<IntMatrix> boundaries)
        : d_(dimension), boundaries_(std::move(boundaries)) {
        if (d_ < 1 || boundaries_.size() != static_cast<std::size_t>(d_))
            throw InvalidComplex("need one boundary matrix per dimension 1..d");
        for (int k = 1; k < d_; ++k)
            if (boundaries_[k].rows() != boundaries_[k - 1].cols())
                throw InvalidComplex("boundary matrix shapes do not chain");
    }

    int dimension() const { return d_; }

    std::size_t cell_count(int k) const {
        if (k < 0 || k > d_) throw InvalidComplex("cell dimension out of range");
        return k == 0 ? boundaries_[0].rows() : boundaries_[k - 1].cols();
    }

    const IntMatrix& boundary(int k) const {
        if (k < 1 || k > d_) throw InvalidComplex("boundary dimension out of range");
        return boundaries_[k - 1];
    }

    // Exact check that consecutive boundaries compose to zero.
    bool valid() const {
        for (int k = 2; k <= d_; ++k)
            if (!(boundary(k - 1) * boundary(k)).is_zero()) return false;
        return true;
    }

    void require_valid() const {
        if (!valid()) throw InvalidComplex("boundary composition is nonzero");
    }

    std::size_t top_rank() const { return rank(boundary(d_)); }

    // A subset of top cells whose boundary columns are independent and span
    // the full boundary column space.
    bool is_spanning_forest(const CellSubset& v) const {
        require_valid();
        std::vector<std::size_t> cols(v.begin(), v.end());
        for (int c : v)
            if (c < 0 || c >= static_cast<int>(cell_count(d_))) return false;
        const IntMatrix selected = boundary(d_).select_cols(cols);
        return v.size() == top_rank() && rank(selected) == v.size();
    }

    // All spanning forests, ascending lexicographic.  Exponential by nature;
    // refuses more than 20 top cells.
    std::vector<CellSubset> enumerate_spanning_forests() const {
        require_valid();
        const std::size_t n = cell_count(d_);
        if (n > 20) throw TooLarge("spanning forest enumeration capped at 20 top cells");
        const std::size_t r = top_rank();
        std::vector<CellSubset> forests;
        for_each_combination(n, r, [&](const std::vector<std::size_t>& combo) {
            CellSubset v(combo.begin(), combo.end());
            if (is_spanning_forest(v)) forests.push_back(std::move(v));
        });
        return forests;
    }

    CellSubset all_top_cells() const {
        CellSubset v(cell_count(d_));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<int>(i);
        return v;
    }

private:
    int d_;
    std::vector<IntMatrix> boundaries_;
};

// Order of the torsion subgroup of H_(d-1) of the subcomplex keeping the full
// (d-1)-skeleton and only the top cells in v: express the selected boundary
// columns in an integral basis of the (d-1)-cycle lattice and take the
// product of the nonzero invariant factors.
inline Int torsion_order(const CWComplex& x, const CellSubset& v) {
    x.require_valid();
    const int d = x.dimension();
    for (int c : v)
        if (c < 0 || c >= static_cast<int>(x.cell_count(d)))
            throw InvalidComplex("top cell index out of range");

    std::vector<std::size_t> cols(v.begin(), v.end());
    const IntMatrix selected = x.boundary(d).select_cols(cols);

    IntMatrix in_kernel_basis;
    if (d == 1) {
        in_kernel_basis = selected;  // every 0-chain is a cycle
    } else {
        const IntMatrix kernel = integer_kernel_basis(x.boundary(d - 1));
        const RatMatrix kernel_rat = to_rational_matrix(kernel);
        in_kernel_basis = IntMatrix(kernel.cols(), selected.cols());
        for (std::size_t j = 0; j < selected.cols(); ++j) {
            std::vector<Rat> rhs(selected.rows());
            for (std::size_t i = 0; i < selected.rows(); ++i) rhs[i] = Rat(selected(i, j));
            const auto solution = solve(kernel_rat, std::move(rhs));
            if (!solution) throw InvalidComplex("boundary image escapes the cycle lattice");
            for (std::size_t i = 0; i < kernel.cols(); ++i) {
                if (!is_integral((*solution)[i]))
                    throw InvalidComplex("cycle-lattice coordinates are not integral");
                in_kernel_basis(i, j) = to_integer((*solution)[i]);
            }
        }
    }
    return smith_normal_form(in_kernel_basis).nonzero_product();
}

inline Int torsion_order(const CWComplex& x) { return torsion_order(x, x.all_top_cells()); }

}  // namespace meshmat
