#include "satkit/saturation.hpp"

#include <sstream>
#include <stdexcept>

namespace satkit {

SaturationVerdict check_saturated(const Graph& g, const MultipartitePattern& p) {
    SaturationVerdict out;
    if (auto w = contains(g, p)) {
        out.kind = SaturationVerdict::Kind::ContainsPattern;
        out.pattern_witness = *w;
        return out;
    }
    const int n = g.order();
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (g.has_edge(u, v)) continue;
            Graph h = g.with_edge(u, v);
            if (auto w = contains_through_edge(h, p, u, v)) {
                out.certificate.push_back({u, v, *w});
            } else {
                out.kind = SaturationVerdict::Kind::MissingEdgeFails;
                out.failing_edge = {u, v};
                out.certificate.clear();
                return out;
            }
        }
    }
    out.kind = SaturationVerdict::Kind::Saturated;
    return out;
}

bool is_saturated(const Graph& g, const MultipartitePattern& p) {
    if (contains(g, p)) return false;
    const int n = g.order();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (g.has_edge(u, v)) continue;
            if (!contains_through_edge(g.with_edge(u, v), p, u, v)) return false;
        }
    return true;
}

std::string certificate_to_string(const SaturationVerdict& v) {
    std::ostringstream os;
    for (const auto& c : v.certificate) {
        os << c.u << ' ' << c.v << " :";
        for (std::size_t i = 0; i < c.witness.parts.size(); ++i) {
            if (i) os << " |";
            for (int x : c.witness.parts[i]) os << ' ' << x;
        }
        os << '\n';
    }
    return os.str();
}

StructureAudit audit_saturated_structure(const Graph& g, int a) {
    const MultipartitePattern k33{3, 3};
    if (!is_saturated(g, k33))
        throw std::invalid_argument("audit_saturated_structure: graph is not K_{3,3}-saturated");
    if (g.degree(a) != g.min_degree())
        throw std::invalid_argument("audit_saturated_structure: a must have minimum degree");

    StructureAudit audit;
    audit.a = a;
    auto flag = [&](std::string msg) {
        audit.passed = false;
        audit.violations.push_back(std::move(msg));
    };

    const int n = g.order();
    const VertexSet na = g.neighbors(a);
    const VertexSet v1 = na.with(a);
    const std::vector<int> a_list = na.to_vector();

    VertexSet v2, v3, v4;
    for (int x = 0; x < n; ++x) {
        if (v1.contains(x)) continue;
        switch (std::min(2, (g.neighbors(x) & na).count())) {
            case 2: v2 = v2.with(x); break;
            case 1: v3 = v3.with(x); break;
            default: v4 = v4.with(x); break;
        }
    }

    // (i) every non-edge supports a K_{2,2} between the two neighbourhoods
    for (int x = 0; x < n; ++x) {
        for (int y = x + 1; y < n; ++y) {
            if (g.has_edge(x, y)) continue;
            const std::vector<int> nx = g.neighbors(x).to_vector();
            bool found = false;
            for (std::size_t i = 0; i < nx.size() && !found; ++i)
                for (std::size_t j = i + 1; j < nx.size() && !found; ++j) {
                    VertexSet other = g.neighbors(nx[i]) & g.neighbors(nx[j]) & g.neighbors(y);
                    other = other.without(nx[i]).without(nx[j]);
                    found = other.count() >= 2;
                }
            if (!found)
                flag("no K_{2,2} between neighbourhoods of non-edge " + std::to_string(x) + " " +
                     std::to_string(y));
        }
    }

    // (ii) common neighbourhoods over pairs from N(a) stay small
    for (int x = 0; x < n; ++x) {
        if (v1.contains(x)) continue;
        for (std::size_t i = 0; i < a_list.size(); ++i)
            for (std::size_t j = i + 1; j < a_list.size(); ++j) {
                const int c =
                    (g.neighbors(x) & g.neighbors(a_list[i]) & g.neighbors(a_list[j])).count();
                if (c > 2)
                    flag("|N(" + std::to_string(x) + ") ∩ N(" + std::to_string(a_list[i]) +
                         ") ∩ N(" + std::to_string(a_list[j]) + ")| = " + std::to_string(c));
            }
    }

    // (iii) attainment for V4, V2-contact for V3, and the degenerate-N(a) case
    for (int x : v4) {
        bool attained = false;
        for (std::size_t i = 0; i < a_list.size() && !attained; ++i)
            for (std::size_t j = i + 1; j < a_list.size() && !attained; ++j)
                attained =
                    (g.neighbors(x) & g.neighbors(a_list[i]) & g.neighbors(a_list[j])).count() == 2;
        if (!attained)
            flag("vertex " + std::to_string(x) +
                 " has no pair from N(a) with exactly two common neighbours");
    }
    for (int x : v3)
        if ((g.neighbors(x) & v2).empty())
            flag("vertex " + std::to_string(x) + " has no neighbour in V2");

    bool na_degenerate = true;
    for (int u : na)
        if ((g.neighbors(u) & na).count() >= 2) na_degenerate = false;
    if (na_degenerate && !(g.vertices() - v1).empty()) {
        for (int x = 0; x < n; ++x) {
            if (v1.contains(x)) continue;
            if ((g.neighbors(x) & v2).count() < 2)
                flag("vertex " + std::to_string(x) + " has fewer than two neighbours in V2");
        }
        if (v2.count() < 3) flag("|V2| = " + std::to_string(v2.count()) + " < 3");
    }
    return audit;
}

}  // namespace satkit
