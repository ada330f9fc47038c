#include "satkit/graph.hpp"

#include <sstream>

namespace satkit {

std::vector<int> VertexSet::to_vector() const {
    std::vector<int> out;
    for (int v : *this) out.push_back(v);
    return out;
}

std::string VertexSet::to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int v : *this) {
        if (!first) os << ' ';
        os << v;
        first = false;
    }
    os << '}';
    return os.str();
}

int Graph::min_degree() const {
    int best = 64;
    for (int v = 0; v < n_; ++v) best = std::min(best, degree(v));
    return best;
}

int Graph::max_degree() const {
    int best = 0;
    for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
    return best;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v : VertexSet(adj_[u] & ~((1ull << (u + 1)) - 1)))
            out.emplace_back(u, v);
    return out;
}

Graph Graph::relabeled(const std::vector<int>& order) const {
    if (static_cast<int>(order.size()) != n_)
        throw std::invalid_argument("Graph::relabeled: order must list every vertex once");
    std::vector<int> inverse(n_, -1);
    for (int i = 0; i < n_; ++i) {
        int v = order[i];
        check_vertex(v);
        if (inverse[v] != -1) throw std::invalid_argument("Graph::relabeled: duplicate vertex");
        inverse[v] = i;
    }
    Graph g = empty(n_);
    for (int i = 0; i < n_; ++i)
        for (int v : VertexSet(adj_[order[i]]))
            g.adj_[i] |= 1ull << inverse[v];
    return g;
}

std::string Graph::to_string() const {
    std::ostringstream os;
    for (int v = 0; v < n_; ++v)
        os << v << ": " << neighbors(v).to_string() << '\n';
    return os.str();
}

VertexSet common_neighbors(const Graph& g, VertexSet s) {
    VertexSet acc = g.vertices();
    for (int v : s) acc = acc & g.neighbors(v);
    return acc;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    const int na = a.order(), nb = b.order();
    if (na + nb > 64) throw std::invalid_argument("disjoint_union: combined order exceeds 64");
    Graph g = Graph::empty(na + nb);
    for (auto [u, v] : a.edges()) g = g.with_edge(u, v);
    for (auto [u, v] : b.edges()) g = g.with_edge(na + u, na + v);
    return g;
}

Graph join(const Graph& a, const Graph& b) {
    Graph g = disjoint_union(a, b);
    const int na = a.order();
    for (int u = 0; u < na; ++u)
        for (int v = na; v < g.order(); ++v) g = g.with_edge(u, v);
    return g;
}

}  // namespace satkit
