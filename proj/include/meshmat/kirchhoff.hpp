#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "meshmat/charpoly.hpp"
#include "meshmat/combinations.hpp"
#include "meshmat/mesh_algebra.hpp"
#include "meshmat/mesh_context.hpp"
#include "meshmat/multigraph.hpp"
#include "meshmat/st_poly.hpp"

namespace meshmat {

struct Cone {
    Multigraph cone_graph;                 // h plus an apex joined to every vertex
    EdgeSet cone_tree;                     // the apex edges; a spanning tree of cone_graph
    std::map<int, int> vertex_to_cone_edge;
    int apex;
};

// Adds an apex vertex with one edge p -> apex per vertex p of h.  Original
// edge ids survive; cone edges are appended after the largest existing id in
// vertex order, so the cone-tree order coincides with the vertex order.
inline Cone cone(const Multigraph& h) {
    int next_id = 0;
    for (const Edge& e : h.edges()) next_id = std::max(next_id, e.id + 1);
    const int apex = h.vertex_count();
    std::vector<Edge> edges = h.edges();
    Cone result;
    for (int p = 0; p < h.vertex_count(); ++p) {
        edges.push_back({next_id, p, apex});
        result.cone_tree.insert(next_id);
        result.vertex_to_cone_edge[p] = next_id;
        ++next_id;
    }
    result.cone_graph = Multigraph(h.vertex_count() + 1, std::move(edges));
    result.apex = apex;
    return result;
}

// Vertex-by-edge incidence matrix: head +1, tail -1, loops a zero column.
inline IntMatrix incidence_matrix(const Multigraph& g) {
    IntMatrix d(g.vertex_count(), g.edge_count());
    std::size_t col = 0;
    for (const Edge& e : g.edges()) {
        if (!e.is_loop()) {
            d(e.head, col) = 1;
            d(e.tail, col) = -1;
        }
        ++col;
    }
    return d;
}

// Graph Laplacian Deg - Adj, computed as the incidence product so that loops
// contribute nothing.
inline IntMatrix kirchhoff_laplacian(const Multigraph& h) {
    const IntMatrix d = incidence_matrix(h);
    return d * d.transpose();
}

struct ConeIdentityReport {
    IntMatrix mesh_laplacian_of_cone;
    IntMatrix kirchhoff;
    bool laplacians_equal = false;

    IntPolynomial reduced_mesh_charpoly;   // of Y^t Y for the cone pair
    IntPolynomial laplacian_charpoly;      // of Deg - Adj
    bool charpoly_relation_holds = false;  // equal after padding by powers of the variable

    bool all_ok() const { return laplacians_equal && charpoly_relation_holds; }
};

// For the cone pair, the mesh Laplacian indexed by cone edges is exactly the
// Kirchhoff Laplacian of h, and Y^t Y and Y Y^t share their nonzero spectrum:
// U^|tree| charpoly(Y^t Y) = U^|cotree| charpoly(Y Y^t).
inline ConeIdentityReport cone_identity_report(const Multigraph& h) {
    ConeIdentityReport report;
    const Cone c = cone(h);
    const MeshContext ctx(c.cone_graph, c.cone_tree);

    report.mesh_laplacian_of_cone = mesh_laplacian(ctx);
    report.kirchhoff = kirchhoff_laplacian(h);
    report.laplacians_equal = report.mesh_laplacian_of_cone == report.kirchhoff;

    const IntMatrix y = chord_path_matrix(ctx);
    report.reduced_mesh_charpoly = char_poly(y.transpose() * y);
    report.laplacian_charpoly = char_poly(report.kirchhoff);
    const IntPolynomial lhs = report.reduced_mesh_charpoly.shifted_up(ctx.tree_size());
    const IntPolynomial rhs = report.laplacian_charpoly.shifted_up(ctx.cotree_size());
    report.charpoly_relation_holds = lhs == rhs;
    return report;
}

// Sum of mult(F) = prod of component orders over spanning forests of h with
// |V(h)| - j components, i.e. the number of spanning rooted forests with j
// edges.  Forests are enumerated exhaustively as acyclic j-subsets.
inline Int rooted_forest_coefficient(const Multigraph& h, int j) {
    if (j < 0 || j > h.vertex_count()) throw Error("forest edge count out of range");
    std::vector<int> ids;
    for (const Edge& e : h.edges())
        if (!e.is_loop()) ids.push_back(e.id);
    std::sort(ids.begin(), ids.end());
    if (j > static_cast<int>(ids.size())) return Int(0);

    Int total(0);
    for_each_combination(ids.size(), j, [&](const std::vector<std::size_t>& combo) {
        // Union-find over the chosen edges; reject cycles, then take the
        // product of component sizes.
        std::vector<int> parent(h.vertex_count());
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        for (std::size_t pos : combo) {
            const Edge& e = h.edge(ids[pos]);
            const int a = find(e.tail), b = find(e.head);
            if (a == b) return;
            parent[b] = a;
        }
        std::vector<int> size(h.vertex_count(), 0);
        for (int v = 0; v < h.vertex_count(); ++v) ++size[find(v)];
        Int mult(1);
        for (int v = 0; v < h.vertex_count(); ++v)
            if (size[v] > 0) mult *= size[v];
        total += mult;
    });
    return total;
}

struct AllMinorsReport {
    std::vector<Int> rooted_forest_counts;   // index j
    std::vector<Int> cone_tree_counts;       // ST_j of the cone pair
    std::vector<Int> charpoly_coefficients;  // signed coefficients b_j of det(T Id - Laplacian)
    bool all_equal = false;
};

// All-minors matrix tree correspondence: rooted forest counts of h, chord
// counts of spanning trees of the cone, and the Laplacian charpoly
// coefficients all agree for every j.
inline AllMinorsReport all_minors_report(const Multigraph& h) {
    AllMinorsReport report;
    const int n = h.vertex_count();
    const Cone c = cone(h);

    // The three sequences index j by edges outside the respective base; they
    // are compared over a common range, zero beyond their natural degree.
    const int len = std::max(n, h.edge_count()) + 1;

    for (int j = 0; j < len; ++j)
        report.rooted_forest_counts.push_back(j <= n ? rooted_forest_coefficient(h, j) : Int(0));

    report.cone_tree_counts = spanning_tree_counts(c.cone_graph, c.cone_tree);
    report.cone_tree_counts.resize(len, Int(0));

    const IntPolynomial p = char_poly(kirchhoff_laplacian(h));
    for (int j = 0; j < len; ++j) {
        const Int coeff = j <= n ? p.coefficient(n - j) : Int(0);
        report.charpoly_coefficients.push_back(j % 2 == 0 ? coeff : Int(-coeff));
    }

    report.all_equal = report.rooted_forest_counts == report.cone_tree_counts &&
                       report.cone_tree_counts == report.charpoly_coefficients;
    return report;
}

}  // namespace meshmat
