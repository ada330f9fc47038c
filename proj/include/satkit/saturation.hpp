#pragma once

#include <string>
#include <utility>
#include <vector>

#include "satkit/graph.hpp"
#include "satkit/pattern.hpp"

namespace satkit {

struct NonEdgeCertificate {
    int u, v;
    Witness witness;  // copy of the pattern through uv in g + uv
};

// Outcome of the saturation check.  Saturated carries one witness per
// non-edge; the other two kinds carry the counterexample that settled it.
struct SaturationVerdict {
    enum class Kind { Saturated, ContainsPattern, MissingEdgeFails };
    Kind kind = Kind::Saturated;
    Witness pattern_witness;                    // ContainsPattern
    std::pair<int, int> failing_edge{-1, -1};   // MissingEdgeFails
    std::vector<NonEdgeCertificate> certificate;

    bool saturated() const { return kind == Kind::Saturated; }
};

// Full check with certificates.  Non-edges are scanned in lexicographic
// order, so the first failing edge reported is deterministic.
SaturationVerdict check_saturated(const Graph& g, const MultipartitePattern& p);

// Same decision without building certificates; used in search inner loops.
bool is_saturated(const Graph& g, const MultipartitePattern& p);

// One line per non-edge: "u v : a b c | d e f".
std::string certificate_to_string(const SaturationVerdict& v);

struct StructureAudit {
    int a = -1;
    bool passed = true;
    std::vector<std::string> violations;
};

// Audits the neighbourhood structure that every K_{3,3}-saturated graph
// must have around a minimum-degree vertex a:
//   (i)   every non-edge xy admits a K_{2,2} between N(x) and N(y);
//   (ii)  |N(x) ∩ N(a_i) ∩ N(a_j)| <= 2 for every x outside N[a], i < j;
//   (iii) that bound is attained for every x with no neighbour in N(a);
//         vertices with exactly one neighbour in N(a) have a neighbour
//         with at least two; and when G[N(a)] has maximum degree <= 1,
//         every vertex outside N[a] has >= 2 such neighbours (forcing at
//         least three of them overall).
// Throws unless g is K_{3,3}-saturated and d(a) is the minimum degree.
StructureAudit audit_saturated_structure(const Graph& g, int a);

}  // namespace satkit
