#pragma once

// Shared fixtures and independent oracles for the test suites.  Everything
// here must stay independent of the library code paths it is used to check:
// the determinant oracle is cofactor expansion, eigenvalues come from Eigen,
// and tree counts come from closed-form formulas where available.

#include <random>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "meshmat/meshmat.hpp"

namespace testutil {

using meshmat::Int;
using meshmat::IntMatrix;
using meshmat::Multigraph;
using meshmat::Rat;
using meshmat::RatMatrix;

inline Multigraph complete_graph(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    return Multigraph::from_pairs(n, pairs);
}

inline Multigraph path_graph(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
    return Multigraph::from_pairs(n, pairs);
}

inline Multigraph cycle_graph(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
    pairs.emplace_back(n - 1, 0);
    return Multigraph::from_pairs(n, pairs);
}

// Outer 5-cycle (ids 0-4), spokes (5-9), inner pentagram (10-14).
inline Multigraph petersen_graph() {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < 5; ++i) pairs.emplace_back(i, (i + 1) % 5);
    for (int i = 0; i < 5; ++i) pairs.emplace_back(i, i + 5);
    for (int i = 0; i < 5; ++i) pairs.emplace_back(5 + i, 5 + (i + 2) % 5);
    return Multigraph::from_pairs(10, pairs);
}

// Cofactor-expansion determinant, the independent oracle for Bareiss.
template <typename T>
T naive_determinant(const meshmat::Matrix<T>& m) {
    const std::size_t n = m.rows();
    if (n == 0) return T(1);
    if (n == 1) return m(0, 0);
    T acc(0);
    for (std::size_t k = 0; k < n; ++k) {
        if (m(0, k) == T(0)) continue;
        std::vector<std::size_t> rows, cols;
        for (std::size_t i = 1; i < n; ++i) rows.push_back(i);
        for (std::size_t j = 0; j < n; ++j)
            if (j != k) cols.push_back(j);
        const T minor = naive_determinant(m.select(rows, cols));
        acc += (k % 2 == 0 ? m(0, k) : T(-m(0, k))) * minor;
    }
    return acc;
}

// Ascending eigenvalues from Eigen's dense symmetric solver.
inline std::vector<double> eigen_eigenvalues(const IntMatrix& m) {
    Eigen::MatrixXd a(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) a(i, j) = meshmat::to_double(m(i, j));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
    std::vector<double> values(solver.eigenvalues().data(),
                               solver.eigenvalues().data() + m.rows());
    return values;
}

// Visits every multigraph on `vertices` labeled vertices with at most
// `max_edges` edges, loops and parallel edges included.  Edge ids follow the
// ascending slot order (i <= j), oriented low -> high.
template <typename Fn>
void for_each_multigraph(int vertices, int max_edges, Fn&& fn) {
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < vertices; ++i)
        for (int j = i; j < vertices; ++j) slots.emplace_back(i, j);
    std::vector<std::pair<int, int>> edges;
    auto recurse = [&](auto&& self, std::size_t slot, int remaining) -> void {
        if (slot == slots.size()) {
            fn(Multigraph::from_pairs(vertices, edges));
            return;
        }
        self(self, slot + 1, remaining);
        int pushed = 0;
        for (int c = 1; c <= remaining; ++c) {
            edges.push_back(slots[slot]);
            ++pushed;
            self(self, slot + 1, remaining - c);
        }
        while (pushed-- > 0) edges.pop_back();
    };
    recurse(recurse, 0, max_edges);
}

// Visits every connected multigraph with vertex count in [1, max_vertices]
// and at most max_edges edges.
template <typename Fn>
void for_each_connected_multigraph(int max_vertices, int max_edges, Fn&& fn) {
    for (int n = 1; n <= max_vertices; ++n)
        for_each_multigraph(n, max_edges, [&](const Multigraph& g) {
            if (g.is_connected()) fn(g);
        });
}

// Seeded random connected multigraph; loops and parallels possible.
inline Multigraph random_connected_multigraph(std::mt19937& rng, int max_vertices,
                                              int max_edges) {
    std::uniform_int_distribution<int> vertex_dist(1, max_vertices);
    for (;;) {
        const int n = vertex_dist(rng);
        const int min_edges = std::max(0, n - 1);
        if (min_edges > max_edges) continue;
        std::uniform_int_distribution<int> edge_dist(min_edges, max_edges);
        const int m = edge_dist(rng);
        std::uniform_int_distribution<int> pick(0, n - 1);
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < m; ++i) pairs.emplace_back(pick(rng), pick(rng));
        const Multigraph g = Multigraph::from_pairs(n, pairs);
        if (g.is_connected()) return g;
    }
}

// Random valid 2-complex: a random degree-1 boundary, then a degree-2
// boundary built inside its kernel lattice so the composition is exactly 0.
// Resamples until the top boundary has positive rank and a nonempty cotree,
// so the mesh matrices and forest sums carry content.
inline meshmat::CWComplex random_two_complex(std::mt19937& rng, int max_n2) {
    std::uniform_int_distribution<int> n0_dist(1, 2), n1_dist(2, 5), n2_dist(2, max_n2);
    std::uniform_int_distribution<int> entry(-2, 2);
    for (;;) {
        const int n0 = n0_dist(rng), n1 = n1_dist(rng), n2 = n2_dist(rng);
        IntMatrix d1(n0, n1);
        for (int i = 0; i < n0; ++i)
            for (int j = 0; j < n1; ++j) d1(i, j) = entry(rng);
        const IntMatrix kernel = meshmat::integer_kernel_basis(d1);
        if (kernel.cols() == 0) continue;
        IntMatrix coeffs(kernel.cols(), n2);
        for (std::size_t i = 0; i < coeffs.rows(); ++i)
            for (int j = 0; j < n2; ++j) coeffs(i, j) = entry(rng);
        const IntMatrix d2 = kernel * coeffs;
        meshmat::CWComplex x(2, {d1, d2});
        const std::size_t r = x.top_rank();
        if (r == 0 || r == x.cell_count(2)) continue;
        if (!x.valid()) continue;
        return x;
    }
}

// Random connected multigraph whose default tree leaves at least one chord
// with a closing path of length two or more.
inline Multigraph random_graph_with_long_chords(std::mt19937& rng, int max_vertices,
                                                int max_edges) {
    for (;;) {
        const Multigraph g = random_connected_multigraph(rng, max_vertices, max_edges);
        if (g.vertex_count() < 3) continue;
        const meshmat::MeshContext ctx(g);
        for (int id : ctx.cotree_order()) {
            const meshmat::Edge& e = g.edge(id);
            if (e.is_loop()) continue;
            if (ctx.tree_path_steps(e.head, e.tail).size() >= 2) return g;
        }
    }
}

// Random unimodular matrix from a short walk of elementary row operations.
inline IntMatrix random_unimodular(std::mt19937& rng, std::size_t n) {
    IntMatrix u = IntMatrix::identity(n);
    if (n < 2) return u;
    std::uniform_int_distribution<int> idx(0, static_cast<int>(n) - 1);
    std::uniform_int_distribution<int> coeff(-2, 2);
    for (int step = 0; step < 12; ++step) {
        const int a = idx(rng), b = idx(rng);
        if (a == b) continue;
        const Int c(coeff(rng));
        for (std::size_t j = 0; j < n; ++j) u(a, j) += c * u(b, j);
    }
    return u;
}

}  // namespace testutil
