#pragma once

#include <map>

#include "meshmat/bigint.hpp"
#include "meshmat/errors.hpp"
#include "meshmat/multigraph.hpp"

namespace meshmat {

// Integer 1-chain over the oriented edges of a host multigraph.  Coefficients
// are relative to each edge's stored orientation; zero coefficients are never
// stored.  Chains borrow the host graph, which must outlive them.
class OneChain {
public:
    explicit OneChain(const Multigraph& host) : host_(&host) {}

    static OneChain unit(const Multigraph& host, int edge_id) {
        OneChain c(host);
        c.add(edge_id, 1);
        return c;
    }

    const Multigraph& host() const { return *host_; }

    Int coefficient(int edge_id) const {
        auto it = coeffs_.find(edge_id);
        return it == coeffs_.end() ? Int(0) : it->second;
    }

    void add(int edge_id, const Int& value) {
        if (value == 0) return;
        if (!host_->has_edge(edge_id)) throw UnknownEdge(edge_id);
        auto [it, inserted] = coeffs_.emplace(edge_id, value);
        if (!inserted) {
            it->second += value;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    bool is_zero() const { return coeffs_.empty(); }

    // Support as (edge_id, coefficient), ascending by edge id.
    const std::map<int, Int>& terms() const { return coeffs_; }

    OneChain operator+(const OneChain& o) const {
        require_same_host(o);
        OneChain sum = *this;
        for (const auto& [id, v] : o.coeffs_) sum.add(id, v);
        return sum;
    }

    OneChain operator-(const OneChain& o) const {
        require_same_host(o);
        OneChain diff = *this;
        for (const auto& [id, v] : o.coeffs_) diff.add(id, -v);
        return diff;
    }

    OneChain operator-() const {
        OneChain neg(*host_);
        for (const auto& [id, v] : coeffs_) neg.coeffs_.emplace(id, -v);
        return neg;
    }

    bool operator==(const OneChain& o) const {
        return host_ == o.host_ && coeffs_ == o.coeffs_;
    }
    bool operator!=(const OneChain& o) const { return !(*this == o); }

    void require_same_host(const OneChain& o) const {
        if (host_ != o.host_) throw HostMismatch();
    }

private:
    const Multigraph* host_;
    std::map<int, Int> coeffs_;
};

// Standard cellular inner product: edges are orthonormal.
inline Int inner_product(const OneChain& a, const OneChain& b) {
    a.require_same_host(b);
    Int acc(0);
    for (const auto& [id, v] : a.terms()) acc += v * b.coefficient(id);
    return acc;
}

// Boundary as a 0-chain, vertex -> coefficient.  Loops contribute nothing.
inline std::map<int, Int> boundary(const OneChain& a) {
    std::map<int, Int> b;
    auto bump = [&b](int vertex, const Int& v) {
        auto [it, inserted] = b.emplace(vertex, v);
        if (!inserted) {
            it->second += v;
            if (it->second == 0) b.erase(it);
        }
    };
    for (const auto& [id, v] : a.terms()) {
        const Edge& e = a.host().edge(id);
        if (e.is_loop()) continue;
        bump(e.head, v);
        bump(e.tail, -v);
    }
    return b;
}

}  // namespace meshmat
