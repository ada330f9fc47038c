#include "satkit/pattern.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace satkit {

MultipartitePattern::MultipartitePattern(std::initializer_list<int> sizes)
    : MultipartitePattern(std::vector<int>(sizes)) {}

MultipartitePattern::MultipartitePattern(std::vector<int> sizes) : parts(std::move(sizes)) {
    if (parts.empty()) throw std::invalid_argument("pattern: needs at least one part");
    for (int s : parts)
        if (s < 1) throw std::invalid_argument("pattern: part sizes must be positive");
    std::sort(parts.begin(), parts.end());
    if (total() > 64) throw std::invalid_argument("pattern: total size exceeds 64");
}

MultipartitePattern MultipartitePattern::parse(std::string_view text) {
    std::vector<int> sizes;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string_view tok = text.substr(start, comma == std::string_view::npos
                                                      ? std::string_view::npos
                                                      : comma - start);
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw std::invalid_argument("pattern: expected comma-separated part sizes");
        sizes.push_back(value);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return MultipartitePattern(std::move(sizes));
}

int MultipartitePattern::total() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

std::string MultipartitePattern::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) os << ',';
        os << parts[i];
    }
    return os.str();
}

std::string Witness::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) os << " | ";
        os << parts[i].to_string();
    }
    return os.str();
}

bool validate_witness(const Graph& g, const MultipartitePattern& p, const Witness& w) {
    if (static_cast<int>(w.parts.size()) != p.r()) return false;
    VertexSet seen;
    for (int i = 0; i < p.r(); ++i) {
        VertexSet part = w.parts[i];
        if (part.count() != p.parts[i]) return false;
        if (!(part - g.vertices()).empty()) return false;
        if (!(part & seen).empty()) return false;
        seen = seen | part;
    }
    for (int i = 0; i < p.r(); ++i)
        for (int j = i + 1; j < p.r(); ++j)
            for (int a : w.parts[i])
                if (!(w.parts[j] - g.neighbors(a)).empty()) return false;
    return true;
}

namespace {

// Parts are filled in ascending-size order; each level picks the free
// members of one part from the running common neighbourhood.  pinned[k]
// forces a vertex into part k (used by the through-edge variant).
struct Finder {
    const Graph& g;
    const std::vector<int>& sizes;
    std::vector<int> pinned;       // -1 when the part is unconstrained
    std::vector<int> suffix_need;  // total slots in parts k..r-1
    VertexSet pinned_set;
    std::vector<VertexSet> chosen;

    Finder(const Graph& graph, const MultipartitePattern& p)
        : g(graph), sizes(p.parts), pinned(p.r(), -1), suffix_need(p.r() + 1, 0) {
        for (int k = p.r() - 1; k >= 0; --k) suffix_need[k] = suffix_need[k + 1] + sizes[k];
        chosen.resize(p.r());
    }

    bool search(int k, VertexSet pool) {
        const int r = static_cast<int>(sizes.size());
        if (k == r) return true;

        const int want = sizes[k];
        VertexSet mandatory;
        if (pinned[k] >= 0) {
            if (!pool.contains(pinned[k])) return false;
            mandatory = VertexSet::single(pinned[k]);
        }
        // free picks must avoid vertices pinned to other parts and must be
        // adjacent to every pinned vertex that is still to come
        VertexSet avail = pool - pinned_set;
        for (int k2 = k + 1; k2 < r; ++k2)
            if (pinned[k2] >= 0) avail = avail & g.neighbors(pinned[k2]);
        const int free_want = want - mandatory.count();
        if (avail.count() < free_want) return false;

        if (k == r - 1) {
            VertexSet part = mandatory;
            auto it = avail.begin();
            for (int c = 0; c < free_want; ++c, ++it) part = part.with(*it);
            chosen[k] = part;
            return true;
        }

        std::vector<int> items = avail.to_vector();
        std::vector<int> idx(free_want);
        std::iota(idx.begin(), idx.end(), 0);
        const int m = static_cast<int>(items.size());
        while (true) {
            VertexSet part = mandatory;
            for (int i : idx) part = part.with(items[i]);
            VertexSet next_pool = (pool - part) & common_neighbors(g, part);
            bool feasible = next_pool.count() >= suffix_need[k + 1];
            for (int k2 = k + 1; k2 < r && feasible; ++k2)
                if (pinned[k2] >= 0 && !next_pool.contains(pinned[k2])) feasible = false;
            if (feasible) {
                chosen[k] = part;
                if (search(k + 1, next_pool)) return true;
            }
            // next combination in lexicographic order
            if (free_want == 0) break;
            int i = free_want - 1;
            while (i >= 0 && idx[i] == m - free_want + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < free_want; ++j) idx[j] = idx[j - 1] + 1;
        }
        return false;
    }

    std::optional<Witness> run() {
        if (suffix_need[0] > g.order()) return std::nullopt;
        if (search(0, g.vertices())) {
            Witness w;
            w.parts = chosen;
            return w;
        }
        return std::nullopt;
    }
};

}  // namespace

std::optional<Witness> contains(const Graph& g, const MultipartitePattern& p) {
    return Finder(g, p).run();
}

std::optional<Witness> contains_through_edge(const Graph& g, const MultipartitePattern& p,
                                             int u, int v) {
    if (!g.has_edge(u, v)) throw std::invalid_argument("contains_through_edge: uv must be an edge");
    std::set<std::pair<int, int>> size_pairs_tried;
    for (int i = 0; i < p.r(); ++i) {
        for (int j = 0; j < p.r(); ++j) {
            if (i == j) continue;
            if (!size_pairs_tried.insert({p.parts[i], p.parts[j]}).second) continue;
            Finder f(g, p);
            f.pinned[i] = u;
            f.pinned[j] = v;
            f.pinned_set = VertexSet::single(u) | VertexSet::single(v);
            if (auto w = f.run()) return w;
        }
    }
    return std::nullopt;
}

bool forbid_check_fast(const Graph& g, int s, int t) {
    if (s < 1 || t < 1) throw std::invalid_argument("forbid_check_fast: part sizes must be positive");
    const int a = std::min(s, t), b = std::max(s, t);
    const int n = g.order();
    if (a + b > n) return false;
    if (a == 1) {
        for (int v = 0; v < n; ++v)
            if (g.degree(v) >= b) return true;
        return false;
    }
    if (a == 2) {
        for (int u = 0; u < n; ++u)
            for (int w = u + 1; w < n; ++w)
                if (std::popcount(g.row(u) & g.row(w)) >= b) return true;
        return false;
    }
    if (a == 3) {
        for (int u = 0; u < n; ++u)
            for (int w = u + 1; w < n; ++w) {
                const std::uint64_t uw = g.row(u) & g.row(w);
                if (std::popcount(uw) < b) continue;
                for (int x = w + 1; x < n; ++x)
                    if (std::popcount(uw & g.row(x)) >= b) return true;
            }
        return false;
    }
    return contains(g, MultipartitePattern({a, b})).has_value();
}

}  // namespace satkit
