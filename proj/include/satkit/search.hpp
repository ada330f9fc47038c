#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "satkit/graph.hpp"
#include "satkit/pattern.hpp"

namespace satkit {

inline constexpr std::uint64_t kDefaultSeed = 1729;

struct SearchBudget {
    std::uint64_t max_nodes = 0;  // visited isomorphism classes; 0 = unlimited
    double max_seconds = 0;       // wall clock; 0 = unlimited
};

struct EnumStats {
    std::uint64_t visited = 0;  // classes handed to the visitor
    bool complete = true;       // false when a budget cut the run short
};

struct EnumOptions {
    SearchBudget budget;
    int threads = 1;
    int split_depth = 5;          // edge count at which subtrees are farmed out
    std::string checkpoint_out;   // unfinished subtree roots land here on a cut
    std::string resume_from;      // restart from a checkpoint instead of the root
    // Optional caller-owned bound that workers read at any staleness: classes
    // above it are skipped and not expanded.  The visitor may only lower it,
    // and only to the edge count of a graph it has just certified, so every
    // class at or below the final bound is still enumerated in full.
    const std::atomic<std::int64_t>* shared_cap = nullptr;
};

// Isomorph-free generation of every p-free class on n vertices with at
// most edge_cap edges, by canonical augmentation from the empty graph:
// a child is kept only when removing the last edge of its canonical form
// leads back to the parent it was generated from.  The visitor sees one
// representative per class; with threads > 1 it runs concurrently and
// must be thread-safe.  Completed runs visit a deterministic set (and
// count) of classes regardless of thread count.
EnumStats enumerate_pfree(int n, const MultipartitePattern& p, int edge_cap,
                          const std::function<void(const Graph&)>& visit,
                          const EnumOptions& opt = {});

enum class SatStatus { Exact, UpperBoundOnly, BudgetExceeded };
const char* to_string(SatStatus s);

struct SatResult {
    int n;
    MultipartitePattern pattern;
    SatStatus status;
    std::int64_t value;  // exact or best verified upper bound
    Graph witness;       // saturated graph attaining value (re-verified)
    std::uint64_t explored;
    double elapsed;  // seconds
};

struct SearchOptions {
    SearchBudget budget;
    int threads = 1;
    std::uint64_t seed = kDefaultSeed;
    int greedy_seeds = 64;  // greedy runs used to seed the upper bound
    bool upper_only = false;
    // maximality-test prefilters; each is backed by a soundness unit test
    bool min_degree_rule = true;  // only ever applied in K_{3,3} mode
    bool isolated_rule = false;   // sound when the pattern has min degree >= 2
    std::string checkpoint_out;
    std::string resume_from;
};

// Minimum edge count over p-saturated graphs on n vertices.  The upper
// bound comes from verified construction witnesses and seeded greedy
// completions; everything below it is then enumerated exhaustively with a
// fixed edge cap, so completed runs are Exact and budget-cut runs keep
// the bound with status BudgetExceeded.  Throws when no p-free graph on n
// vertices exists (single-part pattern that already fits).
SatResult exact_sat(int n, const MultipartitePattern& p, const SearchOptions& opt = {});

// Random maximal p-free graph: shuffles the non-edges of the start graph
// with the seeded generator and adds each one that closes no copy of p.
// One pass suffices, so the result is p-saturated.
Graph greedy_saturate(int n, const MultipartitePattern& p, std::uint64_t seed);
Graph greedy_saturate_from(const Graph& start, const MultipartitePattern& p, std::uint64_t seed);

enum class ConfirmStatus { Confirmed, RefutedWithWitness, Inconclusive };
const char* to_string(ConfirmStatus s);

struct ConfirmResult {
    ConfirmStatus status;
    std::int64_t claimed;
    std::optional<Graph> witness_at_claimed;  // verified saturated, e = claimed
    std::optional<Graph> refutation;          // verified saturated, e < claimed
    std::uint64_t explored;
    double elapsed;
    std::string note;
};

// Checks a claimed saturation number: hunts for a witness at the claimed
// value and exhausts the classes below it.  Confirmed needs both; a
// saturated graph below the claim refutes it; anything cut short (or a
// missing witness at the claim) stays Inconclusive with the progress kept.
ConfirmResult confirm_value(int n, const MultipartitePattern& p, std::int64_t claimed,
                            const SearchOptions& opt = {});

// One line per pending subtree root: "<edges> <graph6>".
void write_checkpoint(const std::string& path, const std::vector<Graph>& frontier);
std::vector<Graph> read_checkpoint(const std::string& path);

}  // namespace satkit
