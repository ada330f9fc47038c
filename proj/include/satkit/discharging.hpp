#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "satkit/graph.hpp"
#include "satkit/halfint.hpp"
#include "satkit/saturation.hpp"

namespace satkit {

// Vertex classes around a root a of minimum degree: V1 = N[a]; the rest
// split by how many neighbours they have inside N(a) (>=2, exactly 1,
// none), with the finer slices the charge arguments work on.
struct SaturationPartition {
    int a = -1;
    std::vector<int> a_list;  // N(a), ascending; position t holds a_{t+1}
    VertexSet v1, v2, v3, v4;

    // nonempty slices of V2 by |N(x) ∩ N(a)|, count ascending
    std::vector<std::pair<int, VertexSet>> v2_by_count;
    // nonempty slices of V2 by the exact support N(x) ∩ N(a), keyed by the
    // bit mask over a_list positions, key ascending
    std::vector<std::pair<std::uint64_t, VertexSet>> v2_by_support;
    VertexSet v2_two;  // |N(x) ∩ V1| == 2 slice of V2

    VertexSet v4_3;   // >= 3 neighbours in V2 ∪ V3
    VertexSet v4_20;  // <= 2 such neighbours and <= 1 neighbour in V4
    VertexSet v4_21;  // <= 2 such neighbours and >= 2 neighbours in V4
};

// Requires d(a) == δ(G); everything else works on arbitrary graphs.
SaturationPartition build_partition(const Graph& g, int a);

std::vector<int> min_degree_vertices(const Graph& g);
// minimum-degree vertices that additionally minimise e(G[N[a]])
std::vector<int> min_degree_tight_vertices(const Graph& g);

// Charges assigned to vertices outside V1 (asking for a V1 vertex throws).
// f counts lower-class neighbours once, same-class neighbours half, minus 2;
// g is the same minus 3; g' re-runs g with V2 split into v2_two and the
// rest, ordered V1 < V2\v2_two < v2_two < V3 ∪ V4.
HalfInt charge_f(const Graph& g, const SaturationPartition& part, int x);
HalfInt charge_g(const Graph& g, const SaturationPartition& part, int x);
HalfInt charge_g_prime(const Graph& g, const SaturationPartition& part, int x);

struct ChargeLedger {
    std::vector<std::pair<int, HalfInt>> entries;  // (vertex, charge), vertex ascending
    HalfInt total;
    HalfInt sum_over(VertexSet s) const;
};
ChargeLedger ledger_f(const Graph& g, const SaturationPartition& part);
ChargeLedger ledger_g(const Graph& g, const SaturationPartition& part);
ChargeLedger ledger_g_prime(const Graph& g, const SaturationPartition& part);

// e(G) recounted through a charge ledger.  Two:   e = e(V1) + 2(n-|V1|) + Σf
//                                          Three: e = e(V1) + 3(n-|V1|) + Σg
//                                          Prime: e = e(V1) + 3(n-|V1|) + Σg'
// These are double-counting identities and must hold on every graph.
enum class IdentityVariant { Two, Three, Prime };

struct IdentityCheck {
    IdentityVariant variant{};
    std::int64_t edges = 0;      // e(G)
    std::int64_t base = 0;       // e(V1) + c·(n - |V1|)
    HalfInt charge_sum;
    bool holds = false;
};
IdentityCheck edge_identity(const Graph& g, const SaturationPartition& part, IdentityVariant v);

// For every pair x1,x2 inside one exact-support class with support size
// two: if x1 and x2 share at least three common neighbours in v4_20, each
// such z must have g(z) = -1/2, exactly one neighbour c in V4, and
// g(c) >= 1/2.  Requires a K_{3,3}-saturated graph.
struct PairAudit {
    bool passed = true;
    int pairs_checked = 0;
    std::vector<std::string> violations;
};
PairAudit audit_v420_common_neighbors(const Graph& g, const SaturationPartition& part);

struct AnalysisReport {
    int n = 0;
    int root = -1;
    std::size_t edges = 0;
    SaturationPartition partition;
    std::vector<std::pair<std::string, int>> class_sizes;
    ChargeLedger f, g, g_prime;
    std::vector<IdentityCheck> identities;  // Two, Three, Prime
    bool saturated = false;                 // w.r.t. K_{3,3}
    std::optional<StructureAudit> structure;
    std::optional<PairAudit> pairs;
};

// root defaults to the smallest minimum-degree vertex under the e(G[N[a]])
// tie-break; passing a non-minimum-degree vertex throws.
AnalysisReport analyze_graph(const Graph& g, std::optional<int> root = std::nullopt);
std::string report_to_text(const AnalysisReport& r);
std::string report_to_json(const AnalysisReport& r);

}  // namespace satkit
