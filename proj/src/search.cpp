#include "satkit/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_set>
#include <utility>

#include "satkit/canonical.hpp"
#include "satkit/constructions.hpp"
#include "satkit/graph6.hpp"
#include "satkit/saturation.hpp"

namespace satkit {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Shared node budget.  admit() charges one class and latches `stop` once
// a limit is hit; the wall clock is only sampled every 64 admissions.
struct BudgetGate {
    std::uint64_t max_nodes = 0;
    bool has_deadline = false;
    Clock::time_point deadline{};
    std::atomic<std::uint64_t> visited{0};
    std::atomic<bool> stop{false};

    void arm(const SearchBudget& b) {
        max_nodes = b.max_nodes;
        if (b.max_seconds > 0) {
            has_deadline = true;
            deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                          std::chrono::duration<double>(b.max_seconds));
        }
    }
    bool admit() {
        if (stop.load(std::memory_order_relaxed)) return false;
        std::uint64_t prev = visited.fetch_add(1, std::memory_order_relaxed);
        if (max_nodes && prev >= max_nodes) {
            visited.fetch_sub(1, std::memory_order_relaxed);
            stop.store(true, std::memory_order_relaxed);
            return false;
        }
        if (has_deadline && (prev & 63u) == 0 && Clock::now() > deadline)
            stop.store(true, std::memory_order_relaxed);
        return true;
    }
    bool cut() const { return stop.load(std::memory_order_relaxed); }
};

// Accepted one-edge extensions of (g, gcode).  A child survives when the
// new edge closes no copy of p, it is new within this expansion, and
// deleting the last edge of its canonical form leads back to g; the last
// test gives every class a unique generation path, so distinct subtrees
// never overlap.  `stop` (optional) abandons the scan mid-loop.
template <class F>
void gen_children(const Graph& g, const CanonicalCode& gcode, const MultipartitePattern& p,
                  const std::atomic<bool>* stop, F&& f) {
    const int n = g.order();
    std::unordered_set<CanonicalCode, CodeHash> seen;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (g.has_edge(u, v)) continue;
            if (stop && stop->load(std::memory_order_relaxed)) return;
            Graph h = g.with_edge(u, v);
            if (contains_through_edge(h, p, u, v)) continue;
            CanonicalForm hf = canonical_form(h);
            if (!seen.insert(hf.code).second) continue;
            auto [ci, cj] = last_canonical_edge(hf.code, n);
            Graph parent = h.without_edge(hf.order[ci], hf.order[cj]);
            if (canonical_code(parent) == gcode) f(std::move(h), std::move(hf.code));
        }
    }
}

struct Enumerator {
    const MultipartitePattern* p;
    int cap;
    const std::function<void(const Graph&)>* visit;
    const std::atomic<std::int64_t>* shared_cap;
    BudgetGate gate;

    std::int64_t limit() const {
        std::int64_t lim = cap;
        if (shared_cap) lim = std::min(lim, shared_cap->load(std::memory_order_relaxed));
        return lim;
    }

    void expand(const Graph& g, const CanonicalCode& gcode) {
        const auto e = static_cast<std::int64_t>(g.edge_count());
        if (e > limit()) return;  // the bound tightened under this subtree
        if (!gate.admit()) return;
        (*visit)(g);
        if (e >= limit() || gate.cut()) return;
        gen_children(g, gcode, *p, &gate.stop,
                     [&](Graph h, CanonicalCode hc) { expand(h, hc); });
    }
};

}  // namespace

EnumStats enumerate_pfree(int n, const MultipartitePattern& p, int edge_cap,
                          const std::function<void(const Graph&)>& visit,
                          const EnumOptions& opt) {
    if (n < 1 || n > 64) throw std::invalid_argument("enumerate_pfree: order out of range");
    if (contains(Graph::empty(n), p))
        throw std::invalid_argument(
            "enumerate_pfree: the pattern is a subgraph of every graph on n vertices");
    if (edge_cap < 0) return EnumStats{0, true};  // empty range, nothing to do
    const auto all_edges = static_cast<std::int64_t>(n) * (n - 1) / 2;
    const int cap = static_cast<int>(std::min<std::int64_t>(edge_cap, all_edges));
    const int threads = std::max(1, opt.threads);

    Enumerator en{&p, cap, &visit, opt.shared_cap, {}};
    en.gate.arm(opt.budget);

    std::vector<std::pair<Graph, CanonicalCode>> frontier;
    std::vector<Graph> pending;  // subtree roots still owed work when cut

    if (!opt.resume_from.empty()) {
        for (const Graph& g : read_checkpoint(opt.resume_from)) {
            if (g.order() != n)
                throw std::invalid_argument("enumerate_pfree: checkpoint order mismatch");
            if (static_cast<int>(g.edge_count()) > cap)
                throw std::invalid_argument("enumerate_pfree: checkpoint graph above edge cap");
            if (contains(g, p))
                throw std::invalid_argument("enumerate_pfree: checkpoint graph contains the pattern");
            frontier.emplace_back(g, canonical_code(g));
        }
    } else {
        // breadth-first out to the split depth; the last level becomes the
        // frontier of independent subtree roots
        const int depth = std::clamp(opt.split_depth, 0, cap);
        std::vector<std::pair<Graph, CanonicalCode>> level;
        {
            Graph root = Graph::empty(n);
            CanonicalCode rc = canonical_code(root);
            level.emplace_back(std::move(root), std::move(rc));
        }
        for (int e = 0; e < depth && !level.empty(); ++e) {
            std::vector<std::pair<Graph, CanonicalCode>> next;
            std::size_t i = 0;
            for (; i < level.size(); ++i) {
                const auto& [g, gc] = level[i];
                if (static_cast<std::int64_t>(g.edge_count()) > en.limit()) continue;
                if (!en.gate.admit()) break;
                visit(g);
                gen_children(g, gc, p, nullptr,
                             [&](Graph h, CanonicalCode hc) {
                                 next.emplace_back(std::move(h), std::move(hc));
                             });
            }
            if (i < level.size()) {  // budget hit mid-level: spill the rest
                for (; i < level.size(); ++i) pending.push_back(level[i].first);
                for (auto& [g, gc] : next) pending.push_back(g);
                level.clear();
                break;
            }
            level = std::move(next);
        }
        frontier = std::move(level);
    }

    if (!frontier.empty()) {
        std::vector<std::atomic<bool>> finished(frontier.size());
        std::atomic<std::size_t> cursor{0};
        auto worker = [&] {
            for (;;) {
                std::size_t i = cursor.fetch_add(1);
                if (i >= frontier.size() || en.gate.cut()) return;
                en.expand(frontier[i].first, frontier[i].second);
                if (!en.gate.cut()) finished[i].store(true);
            }
        };
        if (threads == 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            pool.reserve(threads);
            for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
            for (auto& th : pool) th.join();
        }
        for (std::size_t i = 0; i < frontier.size(); ++i)
            if (!finished[i].load()) pending.push_back(frontier[i].first);
    }

    EnumStats stats;
    stats.visited = en.gate.visited.load();
    stats.complete = !en.gate.cut();
    if (!stats.complete && !opt.checkpoint_out.empty())
        write_checkpoint(opt.checkpoint_out, pending);
    return stats;
}

const char* to_string(SatStatus s) {
    switch (s) {
        case SatStatus::Exact: return "exact";
        case SatStatus::UpperBoundOnly: return "upper_bound_only";
        case SatStatus::BudgetExceeded: return "budget_exceeded";
    }
    return "?";
}

const char* to_string(ConfirmStatus s) {
    switch (s) {
        case ConfirmStatus::Confirmed: return "confirmed";
        case ConfirmStatus::RefutedWithWitness: return "refuted_with_witness";
        case ConfirmStatus::Inconclusive: return "inconclusive";
    }
    return "?";
}

Graph greedy_saturate(int n, const MultipartitePattern& p, std::uint64_t seed) {
    return greedy_saturate_from(Graph::empty(n), p, seed);
}

Graph greedy_saturate_from(const Graph& start, const MultipartitePattern& p, std::uint64_t seed) {
    if (contains(start, p))
        throw std::invalid_argument("greedy_saturate: start graph already contains the pattern");
    const int n = start.order();
    std::vector<std::pair<int, int>> non;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!start.has_edge(u, v)) non.emplace_back(u, v);
    std::mt19937_64 rng(seed);
    for (std::size_t i = non.size(); i > 1; --i)  // Fisher-Yates, stable across platforms
        std::swap(non[i - 1], non[rng() % i]);
    Graph g = start;
    for (auto [u, v] : non) {
        Graph h = g.with_edge(u, v);
        if (!contains_through_edge(h, p, u, v)) g = std::move(h);
    }
    // one pass is enough: an addition rejected earlier only gains more
    // neighbours later, so the copy it would close never goes away
    return g;
}

namespace {

struct Candidate {
    Graph g;
    std::int64_t edges;
    CanonicalCode code;
};

Candidate make_candidate(const Graph& g) {
    return Candidate{g, static_cast<std::int64_t>(g.edge_count()), canonical_code(g)};
}

// candidate order: fewer edges first, canonical bytes break ties, so the
// merged outcome is independent of arrival order (and thread count)
bool better_cand(const Candidate& a, const Candidate& b) {
    if (a.edges != b.edges) return a.edges < b.edges;
    return a.code < b.code;
}

// Verified p-saturated starting bounds: construction witnesses where the
// family applies, then seeded greedy completions.
template <class Offer>
void collect_candidates(int n, const MultipartitePattern& p, const SearchOptions& opt,
                        Offer&& offer) {
    static const MultipartitePattern k33({3, 3});
    if (p == k33) {
        if (n >= 6 && n <= 11) {
            try {
                offer(small_witness(n));  // cache re-verifies itself on load
            } catch (const std::exception&) {
                // missing or bad cache only weakens the bound; greedy still runs
            }
        }
        if (n >= 12) {
            Graph w = gn(n);
            if (is_saturated(w, p)) offer(w);
        }
    }
    int seeds = std::max(1, opt.greedy_seeds);
    for (int i = 0; i < seeds; ++i) {
        Graph g = greedy_saturate(n, p, opt.seed + static_cast<std::uint64_t>(i));
        if (!is_saturated(g, p)) throw std::logic_error("greedy produced an unsaturated graph");
        offer(g);
    }
}

}  // namespace

SatResult exact_sat(int n, const MultipartitePattern& p, const SearchOptions& opt) {
    const auto t0 = Clock::now();
    if (n < 1 || n > 64) throw std::invalid_argument("exact_sat: order out of range");
    if (p.r() == 0) throw std::invalid_argument("exact_sat: empty pattern");
    if (contains(Graph::empty(n), p))
        throw std::invalid_argument(
            "exact_sat: the pattern embeds in every graph on n vertices; saturation is undefined");

    Graph kn = Graph::complete(n);
    if (!contains(kn, p)) {
        // nothing on n vertices contains p, so K_n is the one saturated graph
        auto e = static_cast<std::int64_t>(kn.edge_count());
        return SatResult{n, p, SatStatus::Exact, e, kn, 0, seconds_since(t0)};
    }

    std::optional<Candidate> best;
    collect_candidates(n, p, opt, [&](const Graph& g) {
        Candidate c = make_candidate(g);
        if (!best || better_cand(c, *best)) best = std::move(c);
    });

    if (opt.upper_only)
        return SatResult{n, p, SatStatus::UpperBoundOnly, best->edges, best->g, 0,
                         seconds_since(t0)};

    const std::int64_t cap = best->edges - 1;  // fixed for the whole run
    if (cap < 0)
        return SatResult{n, p, SatStatus::Exact, best->edges, best->g, 0, seconds_since(t0)};

    static const MultipartitePattern k33({3, 3});
    const bool degree_rule = opt.min_degree_rule && p == k33;
    const bool iso_rule = opt.isolated_rule && p.total() - p.parts.back() >= 2;
    std::mutex mu;
    std::optional<Candidate> found;
    std::atomic<std::int64_t> bound{cap};  // workers stop expanding above the best find
    auto visitor = [&](const Graph& g) {
        if (degree_rule && g.min_degree() < 2) return;
        if (iso_rule && g.min_degree() == 0) return;
        if (!is_saturated(g, p)) return;  // p-free by construction: this is the maximality test
        Candidate c = make_candidate(g);
        for (auto cur = bound.load(); c.edges < cur;)
            if (bound.compare_exchange_weak(cur, c.edges)) break;
        std::lock_guard<std::mutex> lk(mu);
        if (!found || better_cand(c, *found)) found = std::move(c);
    };

    EnumOptions eo;
    eo.budget = opt.budget;
    eo.threads = opt.threads;
    eo.checkpoint_out = opt.checkpoint_out;
    eo.resume_from = opt.resume_from;
    eo.shared_cap = &bound;
    EnumStats st = enumerate_pfree(n, p, static_cast<int>(cap), visitor, eo);

    Candidate final_cand = found ? *found : *best;
    SaturationVerdict verdict = check_saturated(final_cand.g, p);
    if (!verdict.saturated()) throw std::logic_error("exact_sat: witness failed final verification");

    SatStatus status = st.complete ? SatStatus::Exact : SatStatus::BudgetExceeded;
    return SatResult{n, p, status, final_cand.edges, final_cand.g, st.visited, seconds_since(t0)};
}

ConfirmResult confirm_value(int n, const MultipartitePattern& p, std::int64_t claimed,
                            const SearchOptions& opt) {
    const auto t0 = Clock::now();
    if (n < 1 || n > 64) throw std::invalid_argument("confirm_value: order out of range");
    if (claimed < 0) throw std::invalid_argument("confirm_value: negative claim");
    if (contains(Graph::empty(n), p))
        throw std::invalid_argument(
            "confirm_value: the pattern embeds in every graph on n vertices; saturation is undefined");

    Graph kn = Graph::complete(n);
    if (!contains(kn, p)) {
        auto e = static_cast<std::int64_t>(kn.edge_count());
        if (claimed == e)
            return ConfirmResult{ConfirmStatus::Confirmed, claimed, kn, std::nullopt, 0,
                                 seconds_since(t0),
                                 "the pattern fits no graph here, so K_n alone is saturated"};
        if (e < claimed)
            return ConfirmResult{ConfirmStatus::RefutedWithWitness, claimed, std::nullopt, kn, 0,
                                 seconds_since(t0), "K_n is the only saturated graph"};
        return ConfirmResult{ConfirmStatus::Inconclusive, claimed, std::nullopt, std::nullopt, 0,
                             seconds_since(t0),
                             "K_n is the only saturated graph and exceeds the claim"};
    }

    std::optional<Candidate> at_claim;
    std::optional<Candidate> below;
    auto offer = [&](const Graph& g) {
        Candidate c = make_candidate(g);
        if (c.edges == claimed) {
            if (!at_claim || better_cand(c, *at_claim)) at_claim = std::move(c);
        } else if (c.edges < claimed) {
            if (!below || better_cand(c, *below)) below = std::move(c);
        }
    };
    collect_candidates(n, p, opt, offer);

    std::uint64_t explored = 0;
    bool complete_below = false;
    if (!below) {
        const auto all_edges = static_cast<std::int64_t>(n) * (n - 1) / 2;
        const int cap = static_cast<int>(std::min(claimed - 1, all_edges));
        static const MultipartitePattern k33({3, 3});
        const bool degree_rule = opt.min_degree_rule && p == k33;
        const bool iso_rule = opt.isolated_rule && p.total() - p.parts.back() >= 2;
        std::mutex mu;
        std::atomic<std::int64_t> bound{cap};
        auto visitor = [&](const Graph& g) {
            if (degree_rule && g.min_degree() < 2) return;
            if (iso_rule && g.min_degree() == 0) return;
            if (!is_saturated(g, p)) return;
            Candidate c = make_candidate(g);
            for (auto cur = bound.load(); c.edges < cur;)
                if (bound.compare_exchange_weak(cur, c.edges)) break;
            std::lock_guard<std::mutex> lk(mu);
            if (!below || better_cand(c, *below)) below = std::move(c);
        };
        EnumOptions eo;
        eo.budget = opt.budget;
        eo.threads = opt.threads;
        eo.checkpoint_out = opt.checkpoint_out;
        eo.resume_from = opt.resume_from;
        eo.shared_cap = &bound;
        EnumStats st = enumerate_pfree(n, p, cap, visitor, eo);
        explored = st.visited;
        complete_below = st.complete;
    }

    auto verified = [&](const Candidate& c) {
        if (!check_saturated(c.g, p).saturated())
            throw std::logic_error("confirm_value: witness failed final verification");
        return c.g;
    };

    if (below)
        return ConfirmResult{ConfirmStatus::RefutedWithWitness, claimed,
                             at_claim ? std::optional<Graph>(verified(*at_claim)) : std::nullopt,
                             verified(*below), explored, seconds_since(t0),
                             "found a saturated graph below the claimed value"};
    if (!complete_below)
        return ConfirmResult{ConfirmStatus::Inconclusive, claimed,
                             at_claim ? std::optional<Graph>(verified(*at_claim)) : std::nullopt,
                             std::nullopt, explored, seconds_since(t0),
                             "search below the claim was cut by budget"};
    if (at_claim)
        return ConfirmResult{ConfirmStatus::Confirmed, claimed, verified(*at_claim), std::nullopt,
                             explored, seconds_since(t0),
                             "below-claim search exhausted; witness at the claim verified"};
    return ConfirmResult{ConfirmStatus::Inconclusive, claimed, std::nullopt, std::nullopt, explored,
                         seconds_since(t0),
                         "below-claim search exhausted but no witness at the claim was found"};
}

void write_checkpoint(const std::string& path, const std::vector<Graph>& frontier) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_checkpoint: cannot open " + path);
    for (const Graph& g : frontier) out << g.edge_count() << ' ' << to_graph6(g) << '\n';
    if (!out) throw std::runtime_error("write_checkpoint: write failed for " + path);
}

std::vector<Graph> read_checkpoint(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("read_checkpoint: cannot open " + path);
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::uint64_t edges = 0;
        std::string code;
        if (!(ls >> edges >> code))
            throw std::runtime_error("read_checkpoint: malformed line: " + line);
        Graph g = from_graph6(code);
        if (g.edge_count() != edges)
            throw std::runtime_error("read_checkpoint: edge count mismatch on line: " + line);
        out.push_back(std::move(g));
    }
    return out;
}

}  // namespace satkit
