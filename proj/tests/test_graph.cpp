#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <vector>

#include "oracles.hpp"
#include "satkit/graph.hpp"
#include "satkit/graph6.hpp"

using satkit::Graph;
using satkit::VertexSet;

TEST_CASE("VertexSet covers the basic set algebra") {
    VertexSet s = VertexSet::single(0) | VertexSet::single(2) | VertexSet::single(5);
    CHECK(s.count() == 3);
    CHECK(s.contains(2));
    CHECK(!s.contains(1));
    CHECK(s.min() == 0);
    CHECK(s.rank(5) == 2);
    CHECK(s.with(7).count() == 4);
    CHECK(s.without(2).count() == 2);
    CHECK((s & VertexSet::single(2)) == VertexSet::single(2));
    CHECK((s - VertexSet::single(2)).count() == 2);
    CHECK(VertexSet::all(64).count() == 64);
    CHECK(VertexSet::all(3).bits == 0b111u);
    CHECK(s.to_string() == "{0 2 5}");
    CHECK(s.to_vector() == std::vector<int>{0, 2, 5});

    std::vector<int> seen;
    for (int v : s) seen.push_back(v);
    CHECK(seen == std::vector<int>{0, 2, 5});
    CHECK(VertexSet().empty());
}

TEST_CASE("Graph construction and edge mutation stay consistent") {
    Graph g = Graph::empty(5);
    CHECK(g.order() == 5);
    CHECK(g.edge_count() == 0);
    Graph h = g.with_edge(1, 3);
    CHECK(g.edge_count() == 0);  // with_edge copies
    CHECK(h.edge_count() == 1);
    CHECK(h.has_edge(1, 3));
    CHECK(h.has_edge(3, 1));
    CHECK(h.degree(1) == 1);
    CHECK(h.without_edge(1, 3) == g);
    CHECK(h.without_edge(0, 4) == h);

    CHECK(Graph::complete(5).edge_count() == 10);
    CHECK(Graph::complete(1).edge_count() == 0);
    CHECK_THROWS_AS(Graph::empty(0), std::invalid_argument);
    CHECK_THROWS_AS(Graph::empty(65), std::invalid_argument);
    CHECK_THROWS_AS(g.with_edge(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(g.with_edge(0, 5), std::out_of_range);
}

TEST_CASE("complement is an involution and partitions the pairs") {
    oracle::Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + rng.below(64);
        Graph g = oracle::gnp(n, 0.4, rng.next());
        Graph c = g.complement();
        CHECK(c.complement() == g);
        CHECK(g.edge_count() + c.edge_count() ==
              static_cast<std::size_t>(n) * (n - 1) / 2);
        for (int v = 0; v < n; ++v) CHECK((g.row(v) & c.row(v)) == 0);
    }
}

TEST_CASE("degree sum equals twice the edge count") {
    oracle::Rng rng(12);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + rng.below(63);
        Graph g = oracle::gnp(n, 0.3, rng.next());
        std::size_t sum = 0;
        for (int v = 0; v < n; ++v) sum += g.degree(v);
        CHECK(sum == 2 * g.edge_count());
        CHECK(g.min_degree() <= g.max_degree());
    }
}

TEST_CASE("edges lists each pair once in lexicographic order") {
    Graph g = Graph::empty(4).with_edge(2, 3).with_edge(0, 3).with_edge(0, 1);
    auto e = g.edges();
    REQUIRE(e.size() == 3);
    CHECK(e[0] == std::pair<int, int>{0, 1});
    CHECK(e[1] == std::pair<int, int>{0, 3});
    CHECK(e[2] == std::pair<int, int>{2, 3});
}

TEST_CASE("edges_within and common_neighbors count what they claim") {
    // path 0-1-2-3 plus chord 0-2
    Graph g = Graph::empty(4).with_edge(0, 1).with_edge(1, 2).with_edge(2, 3).with_edge(0, 2);
    CHECK(g.edges_within(VertexSet(0b0111)) == 3);
    CHECK(g.edges_within(VertexSet(0b1001)) == 0);
    CHECK(satkit::common_neighbors(g, VertexSet(0b1001)) == VertexSet::single(2));
    CHECK(satkit::common_neighbors(g, VertexSet()).count() == 4);  // empty set: everyone
}

TEST_CASE("disjoint_union and join have the textbook edge counts") {
    oracle::Rng rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        const int na = 1 + rng.below(10), nb = 1 + rng.below(10);
        Graph a = oracle::gnp(na, 0.5, rng.next());
        Graph b = oracle::gnp(nb, 0.5, rng.next());
        Graph du = satkit::disjoint_union(a, b);
        Graph jn = satkit::join(a, b);
        CHECK(du.order() == na + nb);
        CHECK(du.edge_count() == a.edge_count() + b.edge_count());
        CHECK(jn.edge_count() == a.edge_count() + b.edge_count() +
                                     static_cast<std::size_t>(na) * nb);
        // the second operand lands shifted after the first
        for (int v = 0; v < nb; ++v) CHECK(du.degree(na + v) == b.degree(v));
        for (int v = 0; v < nb; ++v) CHECK(jn.degree(na + v) == b.degree(v) + na);
    }
}

TEST_CASE("relabeled permutes adjacency without changing the invariants") {
    oracle::Rng rng(14);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + rng.below(20);
        Graph g = oracle::gnp(n, 0.5, rng.next());
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        for (int i = n - 1; i > 0; --i) std::swap(order[i], order[rng.below(i + 1)]);
        Graph h = g.relabeled(order);
        CHECK(h.edge_count() == g.edge_count());
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                CHECK(h.has_edge(i, j) == g.has_edge(order[i], order[j]));
    }
}

TEST_CASE("graph6 encodes the small literals") {
    CHECK(satkit::to_graph6(Graph::empty(1)) == "@");
    CHECK(satkit::to_graph6(Graph::empty(2)) == "A?");
    CHECK(satkit::to_graph6(Graph::complete(2)) == "A_");
    CHECK(satkit::to_graph6(Graph::complete(3)) == "Bw");
    CHECK(satkit::to_graph6(Graph::complete(4)) == "C~");
    CHECK(satkit::from_graph6("@") == Graph::empty(1));
    CHECK(satkit::from_graph6("C~") == Graph::complete(4));
}

TEST_CASE("graph6 round-trips across the whole order range") {
    oracle::Rng rng(15);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 1 + rng.below(64);
        Graph g = oracle::gnp(n, 0.1 + 0.8 * (trial % 10) / 10.0, rng.next());
        CHECK(satkit::from_graph6(satkit::to_graph6(g)) == g);
    }
}

TEST_CASE("graph6 long header appears exactly for orders 63 and 64") {
    CHECK(satkit::to_graph6(Graph::empty(62))[0] != '~');
    CHECK(satkit::to_graph6(Graph::empty(63)).substr(0, 4) == "~??~");
    CHECK(satkit::to_graph6(Graph::empty(64)).substr(0, 2) == "~?");
    CHECK(satkit::from_graph6(satkit::to_graph6(Graph::complete(63))) == Graph::complete(63));
    CHECK(satkit::from_graph6(satkit::to_graph6(Graph::complete(64))) == Graph::complete(64));
}

TEST_CASE("graph6 parser rejects malformed input") {
    CHECK_THROWS_AS(satkit::from_graph6(""), std::invalid_argument);
    CHECK_THROWS_AS(satkit::from_graph6("@@@"), std::invalid_argument);   // stray bytes
    CHECK_THROWS_AS(satkit::from_graph6("A"), std::invalid_argument);     // missing group
    CHECK_THROWS_AS(satkit::from_graph6("A?x"), std::invalid_argument);   // extra group
    CHECK_THROWS_AS(satkit::from_graph6("A@"), std::invalid_argument);    // nonzero padding
    CHECK_THROWS_AS(satkit::from_graph6("A\x1f"), std::invalid_argument); // below '?'
    CHECK_THROWS_AS(satkit::from_graph6("A\x7f"), std::invalid_argument); // above '~'
    CHECK_THROWS_AS(satkit::from_graph6(">>graph6<<A?"), std::invalid_argument);
    CHECK_THROWS_AS(satkit::from_graph6("?"), std::invalid_argument);     // order 0
}
