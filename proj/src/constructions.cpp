#include "satkit/constructions.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "satkit/graph6.hpp"
#include "satkit/saturation.hpp"

namespace satkit {

namespace {

Graph cycle(int n) {
    Graph g = Graph::empty(n);
    for (int v = 0; v < n; ++v) g = g.with_edge(v, (v + 1) % n);
    return g;
}

// Mined by the exhaustive search for n <= 9 and by seeded greedy runs for
// n = 10, 11; see data/small_witnesses.txt for the derivation commands.
constexpr const char* kEmbeddedCache = R"(
6 E}lw 12
7 F{^LW 14
8 G}l{IO 16
9 H}l{IOo 18
10 I^vmECgD? 21
11 J^vmECgDDG? 24
)";

struct CacheRecord {
    int n;
    std::string g6;
    long edges;
};

std::vector<CacheRecord> parse_cache(std::istream& in) {
    std::vector<CacheRecord> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        CacheRecord rec;
        if (!(ls >> rec.n >> rec.g6 >> rec.edges))
            throw std::runtime_error("witness cache: malformed record: " + line);
        out.push_back(std::move(rec));
    }
    return out;
}

std::vector<CacheRecord> load_cache() {
    if (const char* path = std::getenv("SATKIT_WITNESS_CACHE")) {
        std::ifstream in(path);
        if (!in) throw std::runtime_error(std::string("witness cache: cannot read ") + path);
        return parse_cache(in);
    }
    std::vector<std::string> candidates;
    if (const char* root = std::getenv("SATKIT_ROOT"))
        candidates.push_back(std::string(root) + "/data/small_witnesses.txt");
    candidates.push_back("data/small_witnesses.txt");
    for (const auto& path : candidates) {
        std::ifstream in(path);
        if (in) return parse_cache(in);
    }
    std::istringstream in{std::string(kEmbeddedCache)};
    return parse_cache(in);
}

}  // namespace

Graph gn(int n) {
    if (n < 12) throw std::invalid_argument("gn: defined for n >= 12");
    if (n > 64) throw std::invalid_argument("gn: order exceeds 64");
    Graph g = Graph::empty(n);
    for (int u : {0, 1})
        for (int v = 2; v <= n - 3; ++v) g = g.with_edge(u, v);
    g = g.with_edge(2, 3).with_edge(3, 4).with_edge(4, 5).with_edge(2, 5);
    for (int v = 6; v < n - 4; ++v) g = g.with_edge(v, v + 1);
    g = g.with_edge(n - 4, 6);
    g = g.with_edge(n - 2, 2).with_edge(n - 2, 4);
    g = g.with_edge(n - 1, 3).with_edge(n - 1, 5);
    return g;
}

Graph ehm(int n, int k) {
    if (k < 1) throw std::invalid_argument("ehm: k must be positive");
    if (n < k + 1) throw std::invalid_argument("ehm: needs n >= k+1");
    if (k == 1) return Graph::empty(n);
    return join(Graph::complete(k - 1), Graph::empty(n - k + 1));
}

Graph edge_join_cycle(int n) {
    if (n < 5) throw std::invalid_argument("edge_join_cycle: needs n >= 5");
    return join(Graph::complete(2), cycle(n - 2));
}

Graph small_witness(int n) {
    if (n < 6 || n > 11)
        throw std::invalid_argument("small_witness: only n in [6,11] is cached");
    for (const auto& rec : load_cache()) {
        if (rec.n != n) continue;
        Graph g = from_graph6(rec.g6);
        if (g.order() != n)
            throw std::runtime_error("witness cache: order mismatch for n=" + std::to_string(n));
        if (static_cast<long>(g.edge_count()) != rec.edges)
            throw std::runtime_error("witness cache: edge count mismatch for n=" +
                                     std::to_string(n));
        if (!is_saturated(g, MultipartitePattern{3, 3}))
            throw std::runtime_error("witness cache: graph for n=" + std::to_string(n) +
                                     " is not K_{3,3}-saturated");
        return g;
    }
    throw std::runtime_error("witness cache: no record for n=" + std::to_string(n));
}

}  // namespace satkit
