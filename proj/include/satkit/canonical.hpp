#pragma once

#include <cstdint>
#include <vector>

#include "satkit/graph.hpp"

namespace satkit {

// Opaque isomorphism-class label.  Two graphs of the same order compare
// equal iff the canonicalizer proved them isomorphic; `exact` is true on
// the backtracking path (always taken for order <= 16), false when a large
// graph fell back to the refinement invariant, which is then only usable
// as a dedup hint.
struct CanonicalCode {
    std::vector<std::uint8_t> bytes;
    bool exact = true;

    friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
    friend auto operator<=>(const CanonicalCode& a, const CanonicalCode& b) {
        return a.bytes <=> b.bytes;
    }
};

struct CodeHash {
    std::size_t operator()(const CanonicalCode& c) const {
        std::size_t h = 1469598103934665603ull;
        for (auto b : c.bytes) h = (h ^ b) * 1099511628211ull;
        return h;
    }
};

struct CanonicalForm {
    CanonicalCode code;
    std::vector<int> order;  // order[position] = original vertex; identity when !code.exact
};

CanonicalForm canonical_form(const Graph& g);
CanonicalCode canonical_code(const Graph& g);

// Position of the last set bit of an exact code in column-major triangle
// order, returned as the (row, col) pair it encodes.  Requires at least
// one edge.
std::pair<int, int> last_canonical_edge(const CanonicalCode& code, int n);

}  // namespace satkit
