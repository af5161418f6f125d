#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <tuple>
#include <vector>

#include "meshmat/kirchhoff.hpp"
#include "meshmat/mesh_algebra.hpp"
#include "meshmat/mesh_context.hpp"
#include "meshmat/symmetric_eigen.hpp"

namespace meshmat {

// Chord classification by the length of the closing tree path.
enum class ChordType {
    Loop,      // no tree path
    Adjacent,  // endpoints joined by a single tree edge
    LongPath,  // tree path of length >= 2
};

inline ChordType classify_chord(const MeshContext& ctx, int edge_id) {
    ctx.require_chord(edge_id);
    const Edge& e = ctx.graph().edge(edge_id);
    if (e.is_loop()) return ChordType::Loop;
    return ctx.tree_path_steps(e.head, e.tail).size() == 1 ? ChordType::Adjacent
                                                           : ChordType::LongPath;
}

// A tree edge with a traversal direction; forward means the direction agrees
// with the stored orientation.  As a 1-chain it is +f or -f.
struct DirectedTreeEdge {
    int edge_id;
    bool forward;

    bool operator==(const DirectedTreeEdge& o) const {
        return edge_id == o.edge_id && forward == o.forward;
    }
    bool operator<(const DirectedTreeEdge& o) const {
        return std::tie(edge_id, forward) < std::tie(o.edge_id, o.forward);
    }
};

// For a long-path chord: the first edge of the closing path directed away
// from head(e), and the last edge directed away from tail(e).  Both point
// from a chord endpoint into the tree.
inline std::pair<DirectedTreeEdge, DirectedTreeEdge> inward_edges(const MeshContext& ctx,
                                                                  int edge_id) {
    if (classify_chord(ctx, edge_id) != ChordType::LongPath) throw NotType3(edge_id);
    const Edge& e = ctx.graph().edge(edge_id);
    const auto steps = ctx.tree_path_steps(e.head, e.tail);
    const Edge& first = ctx.graph().edge(steps.front().edge_id);
    const Edge& last = ctx.graph().edge(steps.back().edge_id);
    const DirectedTreeEdge f1{first.id, first.tail == steps.front().from_vertex};
    const DirectedTreeEdge f2{last.id, last.tail == steps.back().to_vertex};
    return {f1, f2};
}

// Derived graph on the inward directed edges of the long-path chords: one
// vertex per distinct directed edge, one edge per long-path chord joining its
// two inward edges.  Repeating pairs stay as parallel edges.
struct FluxGraph {
    Multigraph graph;
    std::vector<DirectedTreeEdge> vertex_labels;  // index = vertex of graph
    std::vector<int> chord_of_edge;               // edge id in graph -> source chord id
    std::vector<int> component;                   // vertex -> component index
    int component_count = 0;

    std::vector<int> component_vertices(int k) const {
        std::vector<int> verts;
        for (std::size_t v = 0; v < component.size(); ++v)
            if (component[v] == k) verts.push_back(static_cast<int>(v));
        return verts;
    }
};

inline FluxGraph build_flux_graph(const MeshContext& ctx) {
    std::vector<std::pair<int, std::pair<DirectedTreeEdge, DirectedTreeEdge>>> long_chords;
    for (int id : ctx.cotree_order())
        if (classify_chord(ctx, id) == ChordType::LongPath)
            long_chords.push_back({id, inward_edges(ctx, id)});

    FluxGraph w;
    std::map<DirectedTreeEdge, int> vertex_of;
    for (const auto& [id, pair] : long_chords)
        for (const DirectedTreeEdge& label : {pair.first, pair.second})
            if (!vertex_of.count(label)) {
                vertex_of.emplace(label, 0);
            }
    int index = 0;
    for (auto& [label, v] : vertex_of) {
        v = index++;
        w.vertex_labels.push_back(label);
    }

    std::vector<Edge> edges;
    int next_edge = 0;
    for (const auto& [id, pair] : long_chords) {
        edges.push_back({next_edge++, vertex_of.at(pair.first), vertex_of.at(pair.second)});
        w.chord_of_edge.push_back(id);
    }
    w.graph = Multigraph(index, std::move(edges));

    // Components labeled in order of their smallest vertex.
    std::vector<int> parent(index);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const Edge& e : w.graph.edges()) parent[find(e.tail)] = find(e.head);
    w.component.assign(index, -1);
    for (int v = 0; v < index; ++v) {
        const int root = find(v);
        if (w.component[root] == -1) w.component[root] = w.component_count++;
        w.component[v] = w.component[root];
    }
    return w;
}

namespace detail {

// Gram-Schmidt push of v against an orthonormal list; returns true when a
// new direction was added.
inline bool orthonormal_accumulate(std::vector<std::vector<double>>& basis,
                                   std::vector<double> v) {
    const double eps = 1e-10;
    for (const auto& b : basis) {
        double dot = 0;
        for (std::size_t i = 0; i < v.size(); ++i) dot += b[i] * v[i];
        for (std::size_t i = 0; i < v.size(); ++i) v[i] -= dot * b[i];
    }
    double norm2 = 0;
    for (double x : v) norm2 += x * x;
    if (norm2 < eps * eps) return false;
    const double inv = 1.0 / std::sqrt(norm2);
    for (double& x : v) x *= inv;
    basis.push_back(std::move(v));
    return true;
}

}  // namespace detail

// Minimum Rayleigh quotient of the mesh Laplacian over the subspace of the
// span of the inward-edge coordinates orthogonal to the per-component
// indicator sums.  nullopt when that subspace is trivial.
inline std::optional<double> restricted_rayleigh_quotient(const MeshContext& ctx,
                                                          const FluxGraph& w) {
    const std::size_t t = ctx.tree_size();
    const std::size_t x_count = w.vertex_labels.size();
    if (x_count == 0 || t == 0) return std::nullopt;

    std::vector<std::vector<double>> x_chains(x_count, std::vector<double>(t, 0.0));
    for (std::size_t i = 0; i < x_count; ++i) {
        const DirectedTreeEdge& label = w.vertex_labels[i];
        x_chains[i][ctx.tree_index(label.edge_id)] = label.forward ? 1.0 : -1.0;
    }

    std::vector<std::vector<double>> span_basis;
    for (const auto& chain : x_chains) detail::orthonormal_accumulate(span_basis, chain);

    std::vector<std::vector<double>> indicator_basis;
    for (int k = 0; k < w.component_count; ++k) {
        std::vector<double> s(t, 0.0);
        for (std::size_t i = 0; i < x_count; ++i)
            if (w.component[i] == k)
                for (std::size_t r = 0; r < t; ++r) s[r] += x_chains[i][r];
        detail::orthonormal_accumulate(indicator_basis, std::move(s));
    }

    std::vector<std::vector<double>> complement;
    for (const auto& q : span_basis) {
        std::vector<double> r = q;
        for (const auto& u : indicator_basis) {
            double dot = 0;
            for (std::size_t i = 0; i < t; ++i) dot += u[i] * r[i];
            for (std::size_t i = 0; i < t; ++i) r[i] -= dot * u[i];
        }
        detail::orthonormal_accumulate(complement, std::move(r));
    }
    if (complement.empty()) return std::nullopt;

    const Matrix<double> lap = to_double_matrix(mesh_laplacian(ctx));
    const std::size_t d = complement.size();
    Matrix<double> projected(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            double acc = 0;
            for (std::size_t r = 0; r < t; ++r) {
                double lap_row = 0;
                for (std::size_t s = 0; s < t; ++s) lap_row += lap(r, s) * complement[j][s];
                acc += complement[i][r] * lap_row;
            }
            projected(i, j) = acc;
        }
    return jacobi_eigenvalues(projected).front();
}

struct FluxReport {
    std::vector<int> loop_chords;
    std::vector<int> adjacent_chords;
    std::vector<int> long_path_chords;

    std::optional<double> flux_eigenvalue;        // smallest positive ev of Y Y^t
    std::optional<double> w_graph_eigenvalue;     // smallest positive ev of the flux-graph Laplacian
    std::optional<double> restricted_quotient;

    bool flux_defined = false;       // Lambda
    bool w_defined = false;          // lambda
    bool inequality_holds = false;   // Lambda <= lambda, only meaningful when both defined
    bool vacuous = true;

    double tolerance_used = 0.0;
};

// Reports the two eigenvalues and the restricted quotient.  The comparison
// is recorded, never asserted: the construction admits graphs where the
// smaller-eigenvalue claim fails (the 4-cycle with its path tree gives
// flux 3 against 2).
inline FluxReport flux_report(const MeshContext& ctx, const FluxGraph& w) {
    FluxReport report;
    for (int id : ctx.cotree_order()) {
        switch (classify_chord(ctx, id)) {
            case ChordType::Loop: report.loop_chords.push_back(id); break;
            case ChordType::Adjacent: report.adjacent_chords.push_back(id); break;
            case ChordType::LongPath: report.long_path_chords.push_back(id); break;
        }
    }

    const IntMatrix lap = mesh_laplacian(ctx);
    report.tolerance_used = default_eigen_tolerance(lap);
    if (!lap.empty()) report.flux_eigenvalue = min_positive_eigenvalue(lap);
    if (w.graph.vertex_count() > 0)
        report.w_graph_eigenvalue = min_positive_eigenvalue(kirchhoff_laplacian(w.graph));
    report.restricted_quotient = restricted_rayleigh_quotient(ctx, w);

    report.flux_defined = report.flux_eigenvalue.has_value();
    report.w_defined = report.w_graph_eigenvalue.has_value();
    report.vacuous = !(report.flux_defined && report.w_defined);
    report.inequality_holds =
        !report.vacuous && *report.flux_eigenvalue <= *report.w_graph_eigenvalue + 1e-9;
    return report;
}

inline FluxReport flux_report(const MeshContext& ctx) {
    return flux_report(ctx, build_flux_graph(ctx));
}

// Minimum over components of (split chords) / min(|C|, |D|) for the given
// proper subsets C[k]; the comparison partner of half the flux-graph
// eigenvalue.
inline double cheeger_estimate(const FluxGraph& w, const std::vector<std::vector<int>>& parts) {
    if (w.component_count == 0) throw ImproperPartition("flux graph is empty");
    if (static_cast<int>(parts.size()) != w.component_count)
        throw ImproperPartition("need one subset per component");

    double best = 0;
    bool first = true;
    for (int k = 0; k < w.component_count; ++k) {
        const std::vector<int> members = w.component_vertices(k);
        std::vector<bool> in_c(w.component.size(), false);
        std::size_t c_size = 0;
        for (int v : parts[k]) {
            if (v < 0 || v >= static_cast<int>(w.component.size()) || w.component[v] != k)
                throw ImproperPartition("subset vertex outside its component");
            if (!in_c[v]) ++c_size;
            in_c[v] = true;
        }
        if (c_size == 0 || c_size >= members.size())
            throw ImproperPartition("subset must be proper and nonempty");

        int split = 0;
        for (const Edge& e : w.graph.edges())
            if (w.component[e.tail] == k && in_c[e.tail] != in_c[e.head]) ++split;
        const double ratio =
            static_cast<double>(split) /
            static_cast<double>(std::min(c_size, members.size() - c_size));
        if (first || ratio < best) best = ratio;
        first = false;
    }
    return best;
}

}  // namespace meshmat
