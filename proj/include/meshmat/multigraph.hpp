#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "meshmat/combinations.hpp"
#include "meshmat/errors.hpp"

namespace meshmat {

using EdgeSet = std::set<int>;

struct Edge {
    int id;
    int tail;
    int head;

    bool is_loop() const { return tail == head; }

    bool operator==(const Edge& o) const {
        return id == o.id && tail == o.tail && head == o.head;
    }
};

// Finite multigraph with stable edge ids.  Loops and parallel edges are
// allowed; every edge carries an orientation tail -> head.  Deletion and
// contraction return new graphs and never renumber surviving edge ids, so
// edge subsets of a minor remain comparable with subsets of its parent.
class Multigraph {
public:
    Multigraph() = default;

    Multigraph(int vertex_count, std::vector<Edge> edges)
        : vertex_count_(vertex_count), edges_(std::move(edges)) {
        if (vertex_count_ < 0) throw Error("negative vertex count");
        for (const Edge& e : edges_) {
            if (e.tail < 0 || e.tail >= vertex_count_ || e.head < 0 || e.head >= vertex_count_)
                throw Error("edge endpoint out of range");
            for (const Edge& other : edges_)
                if (&other != &e && other.id == e.id) throw Error("duplicate edge id");
        }
    }

    // Edges listed as (tail, head) pairs; ids assigned 0,1,2,... in order.
    static Multigraph from_pairs(int vertex_count, const std::vector<std::pair<int, int>>& pairs) {
        std::vector<Edge> edges;
        edges.reserve(pairs.size());
        int next_id = 0;
        for (const auto& [tail, head] : pairs) edges.push_back({next_id++, tail, head});
        return Multigraph(vertex_count, std::move(edges));
    }

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_edge(int edge_id) const {
        for (const Edge& e : edges_)
            if (e.id == edge_id) return true;
        return false;
    }

    const Edge& edge(int edge_id) const {
        for (const Edge& e : edges_)
            if (e.id == edge_id) return e;
        throw UnknownEdge(edge_id);
    }

    EdgeSet edge_ids() const {
        EdgeSet ids;
        for (const Edge& e : edges_) ids.insert(e.id);
        return ids;
    }

    bool is_connected() const {
        if (vertex_count_ <= 1) return true;
        DisjointSets dsu(vertex_count_);
        for (const Edge& e : edges_) dsu.merge(e.tail, e.head);
        return dsu.component_count() == 1;
    }

    // Deterministic spanning tree: grow from vertex 0, repeatedly adding the
    // lowest-id edge with exactly one endpoint already reached.  Equivalently
    // the unique minimum spanning tree with the edge id as weight.
    EdgeSet spanning_tree() const {
        if (!is_connected()) throw NotConnected();
        EdgeSet tree;
        if (vertex_count_ <= 1) return tree;
        std::vector<bool> reached(vertex_count_, false);
        reached[0] = true;
        std::vector<Edge> by_id = edges_;
        std::sort(by_id.begin(), by_id.end(),
                  [](const Edge& a, const Edge& b) { return a.id < b.id; });
        for (int step = 0; step < vertex_count_ - 1; ++step) {
            bool grown = false;
            for (const Edge& e : by_id) {
                if (e.is_loop()) continue;
                if (reached[e.tail] == reached[e.head]) continue;
                tree.insert(e.id);
                reached[e.tail] = reached[e.head] = true;
                grown = true;
                break;
            }
            if (!grown) throw NotConnected();
        }
        return tree;
    }

    Multigraph delete_edge(int edge_id) const {
        if (!has_edge(edge_id)) throw UnknownEdge(edge_id);
        std::vector<Edge> remaining;
        remaining.reserve(edges_.size() - 1);
        for (const Edge& e : edges_)
            if (e.id != edge_id) remaining.push_back(e);
        Multigraph g;
        g.vertex_count_ = vertex_count_;
        g.edges_ = std::move(remaining);
        return g;
    }

    // Merges the endpoints of a non-loop edge.  The higher endpoint index is
    // folded into the lower, and vertices above it shift down by one; all
    // other edge ids and orientations are preserved, so parallel edges and
    // fresh loops can appear.
    Multigraph contract_edge(int edge_id) const {
        const Edge& target = edge(edge_id);
        if (target.is_loop()) throw LoopContraction(edge_id);
        const int lo = std::min(target.tail, target.head);
        const int hi = std::max(target.tail, target.head);
        auto remap = [&](int v) {
            if (v == hi) return lo;
            return v > hi ? v - 1 : v;
        };
        std::vector<Edge> remaining;
        remaining.reserve(edges_.size() - 1);
        for (const Edge& e : edges_) {
            if (e.id == edge_id) continue;
            remaining.push_back({e.id, remap(e.tail), remap(e.head)});
        }
        Multigraph g;
        g.vertex_count_ = vertex_count_ - 1;
        g.edges_ = std::move(remaining);
        return g;
    }

    bool is_spanning_tree(const EdgeSet& subset) const {
        for (int id : subset)
            if (!has_edge(id)) return false;
        if (vertex_count_ == 0) return false;
        if (static_cast<int>(subset.size()) != vertex_count_ - 1) return false;
        DisjointSets dsu(vertex_count_);
        for (int id : subset) {
            const Edge& e = edge(id);
            if (e.is_loop()) return false;
            if (!dsu.merge(e.tail, e.head)) return false;  // cycle
        }
        return dsu.component_count() == 1;
    }

    // All spanning trees in ascending lexicographic edge-id order.  This is
    // the universal counting oracle: subset filtering up to 20 edges, a
    // delete/contract recursion above that (stable ids make the recursion's
    // subsets directly comparable).
    std::vector<EdgeSet> enumerate_spanning_trees() const {
        if (vertex_count_ == 0) return {};
        if (!is_connected()) return {};
        std::vector<EdgeSet> trees;
        if (edge_count() <= 20) {
            std::vector<int> ids;
            for (const Edge& e : edges_)
                if (!e.is_loop()) ids.push_back(e.id);
            std::sort(ids.begin(), ids.end());
            const int k = vertex_count_ - 1;
            if (k == 0) return {EdgeSet{}};
            if (static_cast<int>(ids.size()) < k) return {};
            for_each_combination(ids.size(), k, [&](const std::vector<std::size_t>& combo) {
                EdgeSet candidate;
                for (std::size_t pos : combo) candidate.insert(ids[pos]);
                if (is_spanning_tree(candidate)) trees.push_back(std::move(candidate));
            });
        } else {
            collect_trees_recursive(*this, trees);
            std::sort(trees.begin(), trees.end());
        }
        return trees;
    }

private:
    class DisjointSets {
    public:
        explicit DisjointSets(int n) : parent_(n), components_(n) {
            std::iota(parent_.begin(), parent_.end(), 0);
        }
        int find(int v) {
            while (parent_[v] != v) v = parent_[v] = parent_[parent_[v]];
            return v;
        }
        // Returns false when both endpoints were already joined.
        bool merge(int a, int b) {
            a = find(a);
            b = find(b);
            if (a == b) return false;
            parent_[b] = a;
            --components_;
            return true;
        }
        int component_count() const { return components_; }

    private:
        std::vector<int> parent_;
        int components_;
    };

    static void collect_trees_recursive(const Multigraph& g, std::vector<EdgeSet>& out) {
        if (!g.is_connected()) return;
        if (g.vertex_count_ == 1) {
            out.push_back(EdgeSet{});
            return;
        }
        int pick = -1;
        for (const Edge& e : g.edges_) {
            if (e.is_loop()) continue;
            if (pick == -1 || e.id < pick) pick = e.id;
        }
        if (pick == -1) return;
        std::size_t first_with = out.size();
        collect_trees_recursive(g.contract_edge(pick), out);
        for (std::size_t i = first_with; i < out.size(); ++i) out[i].insert(pick);
        collect_trees_recursive(g.delete_edge(pick), out);
    }

    int vertex_count_ = 0;
    std::vector<Edge> edges_;
};

}  // namespace meshmat
