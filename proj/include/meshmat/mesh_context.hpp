#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "meshmat/chain.hpp"
#include "meshmat/errors.hpp"
#include "meshmat/multigraph.hpp"

namespace meshmat {

// A connected multigraph together with a chosen spanning tree.  Tree edges
// f_1..f_t and chords (cotree edges) e_1..e_N are listed in ascending edge-id
// order; these orders index every matrix built from the context.  The tree is
// rooted at vertex 0 once, so tree paths are parent-pointer walks with no
// search ambiguity.
class MeshContext {
public:
    explicit MeshContext(Multigraph graph) : MeshContext(graph, graph.spanning_tree()) {}

    MeshContext(Multigraph graph, EdgeSet tree)
        : graph_(std::move(graph)), tree_(std::move(tree)) {
        if (!graph_.is_spanning_tree(tree_))
            throw Error("edge subset is not a spanning tree of the graph");
        for (const Edge& e : graph_.edges()) {
            if (tree_.count(e.id))
                tree_order_.push_back(e.id);
            else
                cotree_order_.push_back(e.id);
        }
        std::sort(tree_order_.begin(), tree_order_.end());
        std::sort(cotree_order_.begin(), cotree_order_.end());
        for (std::size_t k = 0; k < tree_order_.size(); ++k) tree_index_[tree_order_[k]] = k;
        for (std::size_t j = 0; j < cotree_order_.size(); ++j) cotree_index_[cotree_order_[j]] = j;
        root_tree();
    }

    const Multigraph& graph() const { return graph_; }
    const EdgeSet& tree() const { return tree_; }
    const std::vector<int>& tree_order() const { return tree_order_; }
    const std::vector<int>& cotree_order() const { return cotree_order_; }

    std::size_t tree_size() const { return tree_order_.size(); }
    std::size_t cotree_size() const { return cotree_order_.size(); }

    bool is_tree_edge(int edge_id) const { return tree_.count(edge_id) != 0; }

    std::size_t tree_index(int edge_id) const { return tree_index_.at(edge_id); }
    std::size_t cotree_index(int edge_id) const { return cotree_index_.at(edge_id); }

    // Signed chain of tree edges along the unique simple path from_v -> to_v
    // inside the tree; +1 where traversal agrees with the stored orientation.
    OneChain tree_path(int from_v, int to_v) const {
        check_vertex(from_v);
        check_vertex(to_v);
        OneChain chain(graph_);
        if (from_v == to_v) return chain;
        int a = from_v, b = to_v;
        // Ascents to the meeting point; the b-side is traversed against the
        // child->parent direction, hence the negative signs.
        while (a != b) {
            if (depth_[a] >= depth_[b]) {
                const Edge& e = graph_.edge(parent_edge_[a]);
                chain.add(e.id, e.tail == a ? 1 : -1);
                a = parent_vertex_[a];
            } else {
                const Edge& e = graph_.edge(parent_edge_[b]);
                chain.add(e.id, e.tail == b ? -1 : 1);
                b = parent_vertex_[b];
            }
        }
        return chain;
    }

    struct PathStep {
        int edge_id;
        int from_vertex;
        int to_vertex;
    };

    // The same path as an ordered list of traversed tree edges.
    std::vector<PathStep> tree_path_steps(int from_v, int to_v) const {
        check_vertex(from_v);
        check_vertex(to_v);
        std::vector<PathStep> up_from, up_to;
        int a = from_v, b = to_v;
        while (a != b) {
            if (depth_[a] >= depth_[b]) {
                up_from.push_back({parent_edge_[a], a, parent_vertex_[a]});
                a = parent_vertex_[a];
            } else {
                up_to.push_back({parent_edge_[b], parent_vertex_[b], b});
                b = parent_vertex_[b];
            }
        }
        up_from.insert(up_from.end(), up_to.rbegin(), up_to.rend());
        return up_from;
    }

    // Tree-path closure of a chord: the signed tree path from head(e) back to
    // tail(e), so its boundary is tail(e) - head(e).  Loops map to zero.
    OneChain chord_tree_path(int edge_id) const {
        require_chord(edge_id);
        const Edge& e = graph_.edge(edge_id);
        if (e.is_loop()) return OneChain(graph_);
        return tree_path(e.head, e.tail);
    }

    // Chord plus its tree-path closure: a cycle with zero boundary.
    OneChain fundamental_cycle(int edge_id) const {
        require_chord(edge_id);
        OneChain z = OneChain::unit(graph_, edge_id);
        return z + chord_tree_path(edge_id);
    }

    void require_chord(int edge_id) const {
        if (!graph_.has_edge(edge_id)) throw UnknownEdge(edge_id);
        if (tree_.count(edge_id)) throw NotCotreeEdge(edge_id);
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= graph_.vertex_count()) throw Error("vertex index out of range");
    }

    void root_tree() {
        const int n = graph_.vertex_count();
        parent_vertex_.assign(n, -1);
        parent_edge_.assign(n, -1);
        depth_.assign(n, 0);
        if (n == 0) return;
        std::vector<std::vector<std::pair<int, int>>> adjacency(n);  // vertex -> (edge id, other)
        for (int id : tree_order_) {
            const Edge& e = graph_.edge(id);
            adjacency[e.tail].push_back({id, e.head});
            adjacency[e.head].push_back({id, e.tail});
        }
        std::vector<bool> seen(n, false);
        std::vector<int> stack{0};
        seen[0] = true;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (const auto& [id, other] : adjacency[v]) {
                if (seen[other]) continue;
                seen[other] = true;
                parent_vertex_[other] = v;
                parent_edge_[other] = id;
                depth_[other] = depth_[v] + 1;
                stack.push_back(other);
            }
        }
    }

    Multigraph graph_;
    EdgeSet tree_;
    std::vector<int> tree_order_;
    std::vector<int> cotree_order_;
    std::map<int, std::size_t> tree_index_;
    std::map<int, std::size_t> cotree_index_;
    std::vector<int> parent_vertex_;
    std::vector<int> parent_edge_;
    std::vector<int> depth_;
};

}  // namespace meshmat
