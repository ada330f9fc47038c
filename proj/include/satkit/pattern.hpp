#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "satkit/graph.hpp"

namespace satkit {

// Complete multipartite pattern K_{s1,...,sr}, part sizes kept ascending.
struct MultipartitePattern {
    std::vector<int> parts;

    MultipartitePattern() = default;
    MultipartitePattern(std::initializer_list<int> sizes);
    explicit MultipartitePattern(std::vector<int> sizes);
    static MultipartitePattern parse(std::string_view text);  // "3,3"

    int r() const { return static_cast<int>(parts.size()); }
    int total() const;
    std::string to_string() const;

    friend bool operator==(const MultipartitePattern&, const MultipartitePattern&) = default;
};

// One embedded copy: parts[i] holds the vertices playing part i's role.
struct Witness {
    std::vector<VertexSet> parts;
    std::string to_string() const;
};

// Checks that w is a genuine copy of p in g: parts disjoint, sizes match,
// every cross pair adjacent.  Kept independent of the finders on purpose.
bool validate_witness(const Graph& g, const MultipartitePattern& p, const Witness& w);

// First copy of p in g (subgraph sense) in a fixed enumeration order, or
// nullopt.  Parts are filled smallest first so the candidate pool shrinks
// as fast as possible; the last part is never enumerated, only checked.
std::optional<Witness> contains(const Graph& g, const MultipartitePattern& p);

// Same, restricted to copies in which edge uv crosses two distinct parts.
// Requires uv to be an edge of g.
std::optional<Witness> contains_through_edge(const Graph& g, const MultipartitePattern& p,
                                             int u, int v);

// Boolean K_{s,t} subgraph test; must agree with contains(g, {s,t}).
bool forbid_check_fast(const Graph& g, int s, int t);

}  // namespace satkit
