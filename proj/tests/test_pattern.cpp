#include "doctest.h"

#include <vector>

#include "oracles.hpp"
#include "satkit/graph.hpp"
#include "satkit/pattern.hpp"

using satkit::Graph;
using satkit::MultipartitePattern;
using satkit::VertexSet;
using satkit::Witness;

TEST_CASE("patterns normalise their part sizes ascending") {
    CHECK(MultipartitePattern{3, 2}.parts == std::vector<int>{2, 3});
    CHECK(MultipartitePattern::parse("3,1,2").parts == std::vector<int>{1, 2, 3});
    CHECK(MultipartitePattern::parse("3,3").to_string() == "3,3");
    CHECK(MultipartitePattern{3, 3}.r() == 2);
    CHECK(MultipartitePattern{3, 3}.total() == 6);
    CHECK(MultipartitePattern{1, 1, 1, 1}.total() == 4);
    CHECK(MultipartitePattern::parse("4") == MultipartitePattern{4});
}

TEST_CASE("pattern parsing rejects junk") {
    CHECK_THROWS_AS(MultipartitePattern::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(MultipartitePattern::parse("3,"), std::invalid_argument);
    CHECK_THROWS_AS(MultipartitePattern::parse(",3"), std::invalid_argument);
    CHECK_THROWS_AS(MultipartitePattern::parse("3,,3"), std::invalid_argument);
    CHECK_THROWS_AS(MultipartitePattern::parse("3;3"), std::invalid_argument);
    CHECK_THROWS_AS(MultipartitePattern::parse("0,3"), std::invalid_argument);
    CHECK_THROWS_AS(MultipartitePattern::parse("-2,3"), std::invalid_argument);
    CHECK_THROWS_AS(MultipartitePattern::parse("three"), std::invalid_argument);
    CHECK_THROWS_AS(MultipartitePattern(std::vector<int>{}), std::invalid_argument);
    CHECK_THROWS_AS((MultipartitePattern{33, 33}), std::invalid_argument);  // total > 64
}

TEST_CASE("validate_witness accepts exactly the genuine embeddings") {
    // K_{2,3} drawn explicitly on 6 vertices with one spare
    Graph g = Graph::empty(6);
    for (int a : {0, 1})
        for (int b : {2, 3, 4}) g = g.with_edge(a, b);
    MultipartitePattern p{2, 3};

    Witness good;
    good.parts = {VertexSet(0b000011), VertexSet(0b011100)};
    CHECK(satkit::validate_witness(g, p, good));

    Witness wrong_size;
    wrong_size.parts = {VertexSet(0b000001), VertexSet(0b011100)};
    CHECK(!satkit::validate_witness(g, p, wrong_size));

    Witness overlap;
    overlap.parts = {VertexSet(0b000011), VertexSet(0b011010)};
    CHECK(!satkit::validate_witness(g, p, overlap));

    Witness missing_edge;  // vertex 5 is isolated
    missing_edge.parts = {VertexSet(0b000011), VertexSet(0b101100)};
    CHECK(!satkit::validate_witness(g, p, missing_edge));

    Witness wrong_count;
    wrong_count.parts = {good.parts[0]};
    CHECK(!satkit::validate_witness(g, p, wrong_count));
}

TEST_CASE("contains agrees with brute force on every small graph") {
    const std::vector<std::vector<int>> patterns = {{1, 1}, {1, 2}, {2, 2}, {1, 1, 1}, {2, 3}, {1, 1, 2}};
    for (int n = 1; n <= 5; ++n) {
        const int m = n * (n - 1) / 2;
        for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
            Graph g = oracle::graph_from_mask(n, mask);
            for (const auto& sizes : patterns) {
                auto found = satkit::contains(g, MultipartitePattern(std::vector<int>(sizes)));
                CHECK(found.has_value() == oracle::contains_bruteforce(g, sizes));
                if (found)
                    CHECK(satkit::validate_witness(g, MultipartitePattern(std::vector<int>(sizes)),
                                                   *found));
            }
        }
    }
}

TEST_CASE("contains agrees with brute force on sampled mid-size graphs") {
    oracle::Rng rng(31);
    const std::vector<std::vector<int>> patterns = {{2, 2}, {2, 3}, {3, 3}, {1, 2, 3}, {2, 2, 2}};
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 6 + trial % 2;  // 6 and 7
        Graph g = oracle::gnp(n, 0.35 + 0.3 * (trial % 3) / 2.0, rng.next());
        for (const auto& sizes : patterns) {
            MultipartitePattern p(sizes);
            auto found = satkit::contains(g, p);
            CHECK(found.has_value() == oracle::contains_bruteforce(g, sizes));
            if (found) CHECK(satkit::validate_witness(g, p, *found));
        }
    }
}

TEST_CASE("contains finds complete multipartite graphs in themselves") {
    Graph k33 = satkit::join(Graph::empty(3), Graph::empty(3));
    CHECK(satkit::contains(k33, MultipartitePattern{3, 3}));
    CHECK(satkit::contains(k33, MultipartitePattern{2, 3}));
    CHECK(!satkit::contains(k33, MultipartitePattern{1, 1, 1}));  // triangle-free
    CHECK(satkit::contains(Graph::complete(6), MultipartitePattern{3, 3}));
    CHECK(!satkit::contains(Graph::complete(5), MultipartitePattern{3, 3}));
    CHECK(!satkit::contains(Graph::empty(64), MultipartitePattern{1, 1}));
    CHECK(satkit::contains(Graph::complete(2), MultipartitePattern{1, 1}));
}

TEST_CASE("contains_through_edge matches the pinned brute force") {
    oracle::Rng rng(32);
    const std::vector<std::vector<int>> patterns = {{1, 2}, {2, 2}, {2, 3}, {1, 1, 1}};
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 4 + trial % 4;  // 4..7
        Graph g = oracle::gnp(n, 0.5, rng.next());
        for (auto [u, v] : g.edges()) {
            for (const auto& sizes : patterns) {
                MultipartitePattern p(sizes);
                auto found = satkit::contains_through_edge(g, p, u, v);
                CHECK(found.has_value() == oracle::contains_bruteforce_through(g, sizes, u, v));
                if (found) {
                    CHECK(satkit::validate_witness(g, p, *found));
                    int pu = -1, pv = -1;
                    for (int k = 0; k < p.r(); ++k) {
                        if (found->parts[k].contains(u)) pu = k;
                        if (found->parts[k].contains(v)) pv = k;
                    }
                    CHECK(pu >= 0);
                    CHECK(pv >= 0);
                    CHECK(pu != pv);
                }
            }
        }
    }
}

TEST_CASE("contains_through_edge insists on an actual edge") {
    Graph g = Graph::empty(4).with_edge(0, 1);
    CHECK_THROWS_AS(satkit::contains_through_edge(g, MultipartitePattern{1, 1}, 0, 2),
                    std::invalid_argument);
    CHECK(satkit::contains_through_edge(g, MultipartitePattern{1, 1}, 0, 1));
}

TEST_CASE("forbid_check_fast agrees with contains across the board") {
    oracle::Rng rng(33);
    const std::vector<std::pair<int, int>> shapes = {{1, 3}, {2, 2}, {2, 3}, {3, 3}, {4, 4}};
    int graphs = 0;
    for (int trial = 0; trial < 2500; ++trial) {
        const int n = 1 + rng.below(16);
        Graph g = oracle::gnp(n, 0.2 + 0.6 * (trial % 5) / 4.0, rng.next());
        ++graphs;
        for (auto [s, t] : shapes) {
            const bool fast = satkit::forbid_check_fast(g, s, t);
            const bool slow = satkit::contains(g, MultipartitePattern{s, t}).has_value();
            CHECK(fast == slow);
        }
    }
    CHECK(graphs == 2500);
}

TEST_CASE("forbid_check_fast accepts the sides in either order") {
    Graph k23 = satkit::join(Graph::empty(2), Graph::empty(3));
    CHECK(satkit::forbid_check_fast(k23, 2, 3));
    CHECK(satkit::forbid_check_fast(k23, 3, 2));
    CHECK(!satkit::forbid_check_fast(k23, 3, 3));
    CHECK_THROWS_AS(satkit::forbid_check_fast(k23, 0, 3), std::invalid_argument);
}
