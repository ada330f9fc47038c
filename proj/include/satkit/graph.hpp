#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace satkit {

// Vertex subset of a graph on at most 64 vertices, one bit per vertex.
struct VertexSet {
    std::uint64_t bits = 0;

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t b) : bits(b) {}

    static constexpr VertexSet all(int n) {
        return VertexSet(n >= 64 ? ~0ull : ((1ull << n) - 1));
    }
    static constexpr VertexSet single(int v) { return VertexSet(1ull << v); }

    constexpr bool contains(int v) const { return (bits >> v) & 1u; }
    constexpr bool empty() const { return bits == 0; }
    constexpr int count() const { return std::popcount(bits); }
    // number of members strictly below v
    constexpr int rank(int v) const {
        return std::popcount(bits & ((1ull << v) - 1));
    }
    constexpr int min() const { return std::countr_zero(bits); }  // undefined on empty

    constexpr VertexSet with(int v) const { return VertexSet(bits | (1ull << v)); }
    constexpr VertexSet without(int v) const { return VertexSet(bits & ~(1ull << v)); }

    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits & b.bits); }
    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits | b.bits); }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits & ~b.bits); }
    friend constexpr bool operator==(VertexSet a, VertexSet b) { return a.bits == b.bits; }

    struct iterator {
        std::uint64_t rest;
        int operator*() const { return std::countr_zero(rest); }
        iterator& operator++() { rest &= rest - 1; return *this; }
        bool operator!=(const iterator& o) const { return rest != o.rest; }
    };
    iterator begin() const { return {bits}; }
    iterator end() const { return {0}; }

    std::vector<int> to_vector() const;
    std::string to_string() const;  // "{0 2 5}"
};

// Simple undirected graph on 1..64 vertices, adjacency kept as one bit row
// per vertex.  Values are immutable: every mutation returns a fresh graph,
// so search code can branch by plain copy.
class Graph {
public:
    static Graph empty(int n) {
        if (n < 1 || n > 64) throw std::invalid_argument("Graph: order must be in [1,64]");
        Graph g;
        g.n_ = n;
        return g;
    }
    static Graph complete(int n) { return empty(n).complement(); }

    int order() const { return n_; }

    bool has_edge(int u, int v) const {
        check_vertex(u); check_vertex(v);
        return (adj_[u] >> v) & 1u;
    }

    VertexSet neighbors(int v) const {
        check_vertex(v);
        return VertexSet(adj_[v]);
    }
    std::uint64_t row(int v) const { return adj_[v]; }

    int degree(int v) const { return neighbors(v).count(); }
    int min_degree() const;
    int max_degree() const;

    std::size_t edge_count() const {
        std::size_t twice = 0;
        for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
        return twice / 2;
    }

    Graph with_edge(int u, int v) const {
        check_vertex(u); check_vertex(v);
        if (u == v) throw std::invalid_argument("Graph: no self-loops");
        Graph g = *this;
        g.adj_[u] |= 1ull << v;
        g.adj_[v] |= 1ull << u;
        return g;
    }
    Graph without_edge(int u, int v) const {
        check_vertex(u); check_vertex(v);
        Graph g = *this;
        g.adj_[u] &= ~(1ull << v);
        g.adj_[v] &= ~(1ull << u);
        return g;
    }

    Graph complement() const {
        Graph g = *this;
        const std::uint64_t mask = VertexSet::all(n_).bits;
        for (int v = 0; v < n_; ++v)
            g.adj_[v] = (~adj_[v] & mask) & ~(1ull << v);
        return g;
    }

    VertexSet vertices() const { return VertexSet::all(n_); }
    std::vector<std::pair<int, int>> edges() const;  // (u,v), u<v, lexicographic

    // number of edges inside s
    std::size_t edges_within(VertexSet s) const {
        std::size_t twice = 0;
        for (int v : s) twice += std::popcount(adj_[v] & s.bits);
        return twice / 2;
    }

    // relabel: position i of the result takes vertex order[i] of *this
    Graph relabeled(const std::vector<int>& order) const;

    bool operator==(const Graph& o) const {
        if (n_ != o.n_) return false;
        for (int v = 0; v < n_; ++v)
            if (adj_[v] != o.adj_[v]) return false;
        return true;
    }

    std::string to_string() const;  // adjacency list dump, one vertex per line

private:
    Graph() { adj_.fill(0); }
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex index out of range");
    }

    int n_ = 0;
    std::array<std::uint64_t, 64> adj_{};
};

// vertices adjacent to every member of s (s itself is not removed)
VertexSet common_neighbors(const Graph& g, VertexSet s);

Graph disjoint_union(const Graph& a, const Graph& b);
// every vertex of a joined to every vertex of b
Graph join(const Graph& a, const Graph& b);

}  // namespace satkit
