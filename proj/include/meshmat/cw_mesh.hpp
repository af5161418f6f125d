#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <vector>

#include "meshmat/charpoly.hpp"
#include "meshmat/combinations.hpp"
#include "meshmat/cw_complex.hpp"
#include "meshmat/exact_linalg.hpp"
#include "meshmat/kirchhoff.hpp"
#include "meshmat/polynomial.hpp"

namespace meshmat {

// A graph is a 1-complex through its incidence matrix; its spanning forests
// are the spanning trees and every mesh quantity matches the graph modules.
inline CWComplex complex_from_graph(const Multigraph& g) {
    return CWComplex(1, {incidence_matrix(g)});
}

// Mesh data of a complex relative to a spanning forest v0.  For each top cell
// e outside v0 the closure D(e) is the unique forest chain with the same
// boundary; the cycle basis is z(e) = e - D(e) and its Gram matrix splits as
// Id plus the Gram matrix of the closures.  Closures are genuinely rational
// in dimension two and up.
struct GeometricMesh {
    CellSubset forest_cells;
    CellSubset cotree_cells;
    RatMatrix closures;  // |v0| x N, column j = D(e_j) in forest coordinates
    RatMatrix mesh;      // N x N, Id + reduced
    RatMatrix reduced;
};

inline GeometricMesh geometric_mesh(const CWComplex& x, const CellSubset& v0) {
    x.require_valid();
    if (!x.is_spanning_forest(v0)) throw NotSpanningForest();

    GeometricMesh result;
    result.forest_cells = v0;
    for (int c = 0; c < static_cast<int>(x.cell_count(x.dimension())); ++c)
        if (std::find(v0.begin(), v0.end(), c) == v0.end()) result.cotree_cells.push_back(c);

    const std::vector<std::size_t> forest_cols(v0.begin(), v0.end());
    const RatMatrix forest_boundary =
        to_rational_matrix(x.boundary(x.dimension()).select_cols(forest_cols));

    const std::size_t n = result.cotree_cells.size();
    result.closures = RatMatrix(v0.size(), n);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Rat> rhs(x.boundary(x.dimension()).rows());
        for (std::size_t i = 0; i < rhs.size(); ++i)
            rhs[i] = Rat(x.boundary(x.dimension())(i, result.cotree_cells[j]));
        const auto solution = solve(forest_boundary, std::move(rhs));
        if (!solution) throw NotSpanningForest();
        for (std::size_t i = 0; i < v0.size(); ++i) result.closures(i, j) = (*solution)[i];
    }

    result.reduced = result.closures.transpose() * result.closures;
    result.mesh = result.reduced + RatMatrix::identity(n);
    return result;
}

namespace detail {

// Torsion orders are reused heavily by the forest sums; cache per subset.
class TorsionCache {
public:
    explicit TorsionCache(const CWComplex& x) : x_(&x) {}

    const Int& operator()(const CellSubset& v) {
        auto it = cache_.find(v);
        if (it == cache_.end()) it = cache_.emplace(v, torsion_order(*x_, v)).first;
        return it->second;
    }

private:
    const CWComplex* x_;
    std::map<CellSubset, Int> cache_;
};

inline Rat square(const Rat& q) { return q * q; }

// Spanning forests of the subcomplex keeping only the given top cells.
inline std::vector<CellSubset> forests_within(const CWComplex& x, const CellSubset& cells) {
    const std::vector<std::size_t> cols(cells.begin(), cells.end());
    const IntMatrix restricted = x.boundary(x.dimension()).select_cols(cols);
    const std::size_t r = rank(restricted);
    std::vector<CellSubset> forests;
    for_each_combination(cells.size(), r, [&](const std::vector<std::size_t>& combo) {
        std::vector<std::size_t> sub_cols(combo.begin(), combo.end());
        if (rank(restricted.select_cols(sub_cols)) != r) return;
        CellSubset v;
        for (std::size_t pos : combo) v.push_back(cells[pos]);
        forests.push_back(std::move(v));
    });
    return forests;
}

}  // namespace detail

struct ForestDeterminantReport {
    Rat determinant;   // of the geometric mesh
    Rat forest_sum;    // sum over spanning forests of squared torsion ratios
    bool holds = false;
};

// det Mesh = sum over spanning forests V of (t(X_V) / t(X_V0))^2, exactly.
inline ForestDeterminantReport forest_determinant_report(const CWComplex& x,
                                                         const CellSubset& v0) {
    ForestDeterminantReport report;
    report.determinant = determinant(geometric_mesh(x, v0).mesh);
    detail::TorsionCache torsion(x);
    const Rat base(torsion(v0));
    report.forest_sum = 0;
    for (const CellSubset& v : x.enumerate_spanning_forests())
        report.forest_sum += detail::square(Rat(torsion(v)) / base);
    report.holds = report.determinant == report.forest_sum;
    return report;
}

struct ForestCharpolyReport {
    RatPolynomial mesh_charpoly;
    RatPolynomial reduced_charpoly;
    bool shift_holds = false;  // charpoly(Mesh)(U+1) == charpoly(reduced)(U)

    std::vector<Rat> reduced_coefficients;       // c_j from the reduced charpoly
    std::vector<Rat> forest_sums;                // forests of X graded by cotree cells used
    bool reduced_coefficients_agree = false;

    std::vector<Rat> mesh_coefficients;          // sigma_j from the mesh charpoly
    std::vector<Rat> subset_double_sums;         // brute-force double sum over cotree subsets
    bool mesh_coefficients_agree = false;

    bool all_ok() const {
        return shift_holds && reduced_coefficients_agree && mesh_coefficients_agree;
    }
};

// Charpoly coefficients of the geometric mesh as torsion-weighted forest
// sums, both in the reduced single-sum form and the unreduced double-sum
// form, evaluated by brute force.
inline ForestCharpolyReport forest_charpoly_report(const CWComplex& x, const CellSubset& v0) {
    ForestCharpolyReport report;
    const GeometricMesh gm = geometric_mesh(x, v0);
    const std::size_t n = gm.cotree_cells.size();

    report.mesh_charpoly = char_poly(gm.mesh);
    report.reduced_charpoly = char_poly(gm.reduced);
    report.shift_holds =
        report.mesh_charpoly.substitute_shift(Rat(1)) == report.reduced_charpoly;

    detail::TorsionCache torsion(x);
    const Rat base_sq = detail::square(Rat(torsion(v0)));

    report.reduced_coefficients.assign(n + 1, Rat(0));
    report.forest_sums.assign(n + 1, Rat(0));
    for (std::size_t j = 0; j <= n; ++j) {
        const Rat coeff = report.reduced_charpoly.coefficient(n - j);
        report.reduced_coefficients[j] = (j % 2 == 0) ? coeff : Rat(-coeff);
    }
    for (const CellSubset& u : x.enumerate_spanning_forests()) {
        std::size_t outside = 0;
        for (int c : u)
            if (std::find(v0.begin(), v0.end(), c) == v0.end()) ++outside;
        report.forest_sums[outside] += detail::square(Rat(torsion(u))) / base_sq;
    }
    report.reduced_coefficients_agree = report.reduced_coefficients == report.forest_sums;

    report.mesh_coefficients.assign(n + 1, Rat(0));
    report.subset_double_sums.assign(n + 1, Rat(0));
    for (std::size_t j = 0; j <= n; ++j) {
        const Rat coeff = report.mesh_charpoly.coefficient(n - j);
        report.mesh_coefficients[j] = (j % 2 == 0) ? coeff : Rat(-coeff);
        Rat total(0);
        for_each_combination(n, j, [&](const std::vector<std::size_t>& combo) {
            CellSubset cells = v0;
            for (std::size_t pos : combo) cells.push_back(gm.cotree_cells[pos]);
            std::sort(cells.begin(), cells.end());
            for (const CellSubset& v : detail::forests_within(x, cells))
                total += detail::square(Rat(torsion(v))) / base_sq;
        });
        report.subset_double_sums[j] = total;
    }
    report.mesh_coefficients_agree = report.mesh_coefficients == report.subset_double_sums;
    return report;
}

struct IntegralBasisReport {
    IntMatrix kernel_basis;   // integral basis of the top cycle lattice
    Int integral_determinant; // Gram determinant of that basis
    Rat forest_sum;           // sum of (t(X_V) / t(X))^2 over forests
    bool determinant_holds = false;

    Rat geometric_determinant;
    Rat ratio;                // integral det / geometric det
    Rat expected_ratio;       // (t(X_V0) / t(X))^2
    bool ratio_holds = false;

    bool all_ok() const { return determinant_holds && ratio_holds; }
};

// The integral-cycle-basis Gram determinant carries the same forest sum with
// torsion ratios taken against the full complex, and differs from the
// geometric determinant by the squared torsion ratio of the forest.
inline IntegralBasisReport integral_basis_report(const CWComplex& x, const CellSubset& v0) {
    x.require_valid();
    if (!x.is_spanning_forest(v0)) throw NotSpanningForest();

    IntegralBasisReport report;
    report.kernel_basis = integer_kernel_basis(x.boundary(x.dimension()));
    report.integral_determinant =
        determinant(report.kernel_basis.transpose() * report.kernel_basis);

    detail::TorsionCache torsion(x);
    const Rat full(torsion(x.all_top_cells()));
    report.forest_sum = 0;
    for (const CellSubset& v : x.enumerate_spanning_forests())
        report.forest_sum += detail::square(Rat(torsion(v)) / full);
    report.determinant_holds = Rat(report.integral_determinant) == report.forest_sum;

    report.geometric_determinant = determinant(geometric_mesh(x, v0).mesh);
    report.ratio = Rat(report.integral_determinant) / report.geometric_determinant;
    report.expected_ratio = detail::square(Rat(torsion(v0)) / full);
    report.ratio_holds = report.ratio == report.expected_ratio;
    return report;
}

}  // namespace meshmat
