#include "satkit/canonical.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace satkit {

namespace {

// Iterated colour refinement.  Colours start from the degree (largest
// first, which front-loads ones in the target string) and are re-split by
// the multiset of neighbour colours until the number of classes is stable.
// Class ids depend only on the isomorphism type, never on vertex labels.
int refine_colors(const Graph& g, std::array<int, 64>& color) {
    const int n = g.order();
    std::array<std::uint64_t, 64> key{};
    std::array<int, 64> order{};
    for (int v = 0; v < n; ++v) {
        color[v] = 0;
        key[v] = static_cast<std::uint64_t>(63 - g.degree(v));
        order[v] = v;
    }
    int ncolors = 0;
    for (int round = 0; round < n; ++round) {
        std::sort(order.begin(), order.begin() + n, [&](int a, int b) {
            if (color[a] != color[b]) return color[a] < color[b];
            return key[a] < key[b];
        });
        std::array<int, 64> next{};
        int id = -1;
        for (int i = 0; i < n; ++i) {
            if (i == 0 || color[order[i]] != color[order[i - 1]] || key[order[i]] != key[order[i - 1]])
                ++id;
            next[order[i]] = id;
        }
        for (int v = 0; v < n; ++v) color[v] = next[v];
        if (id + 1 == ncolors) break;
        ncolors = id + 1;
        if (ncolors == n) break;

        std::array<std::uint64_t, 64> cell_mask{};
        for (int v = 0; v < n; ++v) cell_mask[color[v]] |= 1ull << v;
        for (int v = 0; v < n; ++v) {
            std::uint64_t h = 1469598103934665603ull;
            for (int c = 0; c < ncolors; ++c) {
                auto cnt = static_cast<std::uint64_t>(std::popcount(g.row(v) & cell_mask[c]));
                h = (h ^ cnt) * 1099511628211ull;
            }
            key[v] = h;
        }
    }
    return ncolors;
}

struct Canonicalizer {
    const Graph& g;
    int n;
    std::uint64_t node_budget;
    bool exceeded = false;

    std::array<int, 64> pos_cell{};             // position -> cell id
    std::array<std::uint64_t, 64> cell_bits{};  // cell id -> member mask

    std::array<int, 64> cur_lab{}, best_lab{};
    std::array<std::uint64_t, 64> cur_col{}, best_col{}, pending{};
    std::uint64_t placed = 0;
    bool have_best = false;
    std::uint64_t nodes = 0;

    // One orbit partition per depth of the live path, reset when a node's
    // candidate loop starts.  An automorphism found at an equal leaf is
    // merged into the deepest node it stabilises pointwise; candidates in
    // one orbit there lead to the same strings, so only one is explored.
    // The search then unwinds straight back to that node (jump_to): the
    // abandoned frames map under the automorphism into subtrees of an
    // earlier sibling that has already been searched in full.
    std::array<std::array<int, 64>, 65> lvl_uf{};
    int jump_to = -1;
    int lfind(int k, int v) {
        auto& p = lvl_uf[k];
        while (p[v] != v) v = p[v] = p[p[v]];
        return v;
    }
    void lunite(int k, int a, int b) { lvl_uf[k][lfind(k, a)] = lfind(k, b); }

    explicit Canonicalizer(const Graph& graph, std::uint64_t budget)
        : g(graph), n(graph.order()), node_budget(budget) {
        std::array<int, 64> color{};
        int ncolors = refine_colors(g, color);
        for (int v = 0; v < n; ++v) cell_bits[color[v]] |= 1ull << v;
        int pos = 0;
        for (int c = 0; c < ncolors; ++c)
            for (int cnt = std::popcount(cell_bits[c]); cnt > 0; --cnt) pos_cell[pos++] = c;
    }

    // Returns true when the subtree installed a new best string.  The
    // `better` flag means the current prefix already beats the incumbent,
    // so comparisons below are settled; it resets once a descendant
    // install makes the incumbent equal to the current prefix.
    bool dfs(int k, bool better) {
        if (++nodes > node_budget) {
            exceeded = true;
            return false;
        }
        if (k == n) {
            if (!have_best || better) {
                best_col = cur_col;
                best_lab = cur_lab;
                have_best = true;
                return true;
            }
            // equal leaf: best_lab -> cur_lab is an automorphism; π fixing
            // the first l current labels forces best_lab to share them, so
            // the node at depth l lies on the live path and may merge
            std::array<int, 64> perm{};
            for (int i = 0; i < n; ++i) perm[best_lab[i]] = cur_lab[i];
            int l = 0;
            while (l < n && perm[cur_lab[l]] == cur_lab[l]) ++l;
            if (l < n) {
                for (int v = 0; v < n; ++v) lunite(l, v, perm[v]);
                jump_to = l;
            }
            return false;
        }
        for (int v = 0; v < n; ++v) lvl_uf[k][v] = v;
        bool installed_any = false;
        std::uint64_t cands = cell_bits[pos_cell[k]] & ~placed;
        std::array<int, 64> tried{};
        int ntried = 0;
        while (cands != 0 && !exceeded) {
            const int v = std::countr_zero(cands);
            cands &= cands - 1;
            {
                bool dup = false;
                const int rv = lfind(k, v);
                for (int t = 0; t < ntried && !dup; ++t) dup = lfind(k, tried[t]) == rv;
                tried[ntried++] = v;
                if (dup) continue;
            }
            const std::uint64_t col = pending[v];
            bool child_better;
            if (!have_best || better) {
                child_better = true;
            } else if (col < best_col[k]) {
                continue;
            } else {
                child_better = col > best_col[k];
            }

            cur_lab[k] = v;
            cur_col[k] = col;
            placed |= 1ull << v;
            const std::uint64_t pos_bit = 1ull << (63 - k);
            for (int w : VertexSet(g.row(v))) pending[w] |= pos_bit;

            if (dfs(k + 1, have_best && child_better)) {
                installed_any = true;
                better = false;  // incumbent now equals the current prefix
            }

            for (int w : VertexSet(g.row(v))) pending[w] &= ~pos_bit;
            placed &= ~(1ull << v);

            if (jump_to >= 0) {
                if (jump_to != k) break;  // still unwinding toward the merge level
                jump_to = -1;             // arrived: rescan with the enlarged orbits
            }
        }
        return installed_any;
    }
};

CanonicalCode pack_exact_code(int n, const std::array<std::uint64_t, 64>& col) {
    CanonicalCode code;
    code.exact = true;
    code.bytes.assign(2 + (n * (n - 1) / 2 + 7) / 8, 0);
    code.bytes[0] = static_cast<std::uint8_t>(n);
    code.bytes[1] = 1;
    int t = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++t)
            if ((col[j] >> (63 - i)) & 1) code.bytes[2 + t / 8] |= std::uint8_t(0x80) >> (t % 8);
    return code;
}

CanonicalCode hint_code(const Graph& g) {
    const int n = g.order();
    std::array<int, 64> color{};
    const int ncolors = refine_colors(g, color);
    std::array<std::uint64_t, 64> cell_mask{};
    for (int v = 0; v < n; ++v) cell_mask[color[v]] |= 1ull << v;

    CanonicalCode code;
    code.exact = false;
    code.bytes = {static_cast<std::uint8_t>(n), 0, static_cast<std::uint8_t>(ncolors)};
    auto push32 = [&](std::uint64_t x) {
        for (int s = 24; s >= 0; s -= 8) code.bytes.push_back(static_cast<std::uint8_t>(x >> s));
    };
    for (int c = 0; c < ncolors; ++c) push32(static_cast<std::uint64_t>(std::popcount(cell_mask[c])));
    for (int c = 0; c < ncolors; ++c)
        for (int d = c; d < ncolors; ++d) {
            std::uint64_t twice = 0;
            for (int v : VertexSet(cell_mask[c])) twice += std::popcount(g.row(v) & cell_mask[d]);
            push32(c == d ? twice / 2 : twice);
        }
    return code;
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
    const int n = g.order();
    const std::uint64_t budget = n <= 16 ? 30'000'000ull : 400'000ull;
    Canonicalizer canon(g, budget);
    canon.dfs(0, false);
    if (canon.exceeded) {
        if (n <= 16)
            throw std::runtime_error("canonical_form: backtracking budget exhausted");
        CanonicalForm form;
        form.code = hint_code(g);
        form.order.resize(n);
        for (int v = 0; v < n; ++v) form.order[v] = v;
        return form;
    }
    CanonicalForm form;
    form.code = pack_exact_code(n, canon.best_col);
    form.order.assign(canon.best_lab.begin(), canon.best_lab.begin() + n);
    return form;
}

CanonicalCode canonical_code(const Graph& g) { return canonical_form(g).code; }

std::pair<int, int> last_canonical_edge(const CanonicalCode& code, int n) {
    if (!code.exact) throw std::invalid_argument("last_canonical_edge: needs an exact code");
    for (int t = n * (n - 1) / 2 - 1; t >= 0; --t) {
        if (code.bytes[2 + t / 8] & (std::uint8_t(0x80) >> (t % 8))) {
            int j = 1;
            while ((j + 1) * j / 2 <= t) ++j;
            return {t - j * (j - 1) / 2, j};
        }
    }
    throw std::invalid_argument("last_canonical_edge: edgeless code");
}

}  // namespace satkit
