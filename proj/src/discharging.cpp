#include "satkit/discharging.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace satkit {

namespace {

enum class MainClass { V2, V3, V4 };

MainClass class_of(const SaturationPartition& part, int x) {
    if (part.v2.contains(x)) return MainClass::V2;
    if (part.v3.contains(x)) return MainClass::V3;
    if (part.v4.contains(x)) return MainClass::V4;
    throw std::invalid_argument("charge: vertex lies in V1");
}

HalfInt charge(const Graph& g, VertexSet lower, VertexSet own, int x, int constant) {
    const VertexSet nx = g.neighbors(x);
    return HalfInt::halves(2 * (nx & lower).count() + (nx & own).count()) -
           HalfInt::whole(constant);
}

ChargeLedger build_ledger(const Graph& g, const SaturationPartition& part,
                          HalfInt (*fn)(const Graph&, const SaturationPartition&, int)) {
    ChargeLedger ledger;
    for (int x : part.v2 | part.v3 | part.v4) {
        HalfInt c = fn(g, part, x);
        ledger.entries.emplace_back(x, c);
        ledger.total += c;
    }
    return ledger;
}

}  // namespace

std::vector<int> min_degree_vertices(const Graph& g) {
    std::vector<int> out;
    const int d = g.min_degree();
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == d) out.push_back(v);
    return out;
}

std::vector<int> min_degree_tight_vertices(const Graph& g) {
    std::vector<int> out;
    std::size_t best = ~std::size_t{0};
    for (int v : min_degree_vertices(g)) {
        const std::size_t e1 = g.edges_within(g.neighbors(v).with(v));
        if (e1 < best) {
            best = e1;
            out.clear();
        }
        if (e1 == best) out.push_back(v);
    }
    return out;
}

SaturationPartition build_partition(const Graph& g, int a) {
    if (a < 0 || a >= g.order())
        throw std::out_of_range("build_partition: root out of range");
    if (g.degree(a) != g.min_degree())
        throw std::invalid_argument("build_partition: root must have minimum degree");

    SaturationPartition part;
    part.a = a;
    const VertexSet na = g.neighbors(a);
    part.a_list = na.to_vector();
    part.v1 = na.with(a);

    std::map<int, VertexSet> by_count;
    std::map<std::uint64_t, VertexSet> by_support;
    for (int x = 0; x < g.order(); ++x) {
        if (part.v1.contains(x)) continue;
        const VertexSet hits = g.neighbors(x) & na;
        const int c = hits.count();
        if (c >= 2) {
            part.v2 = part.v2.with(x);
            by_count[c] = by_count[c].with(x);
            std::uint64_t key = 0;
            for (std::size_t t = 0; t < part.a_list.size(); ++t)
                if (hits.contains(part.a_list[t])) key |= 1ull << t;
            by_support[key] = by_support[key].with(x);
            if (c == 2) part.v2_two = part.v2_two.with(x);
        } else if (c == 1) {
            part.v3 = part.v3.with(x);
        } else {
            part.v4 = part.v4.with(x);
        }
    }
    part.v2_by_count.assign(by_count.begin(), by_count.end());
    part.v2_by_support.assign(by_support.begin(), by_support.end());

    for (int z : part.v4) {
        const VertexSet nz = g.neighbors(z);
        if ((nz & (part.v2 | part.v3)).count() >= 3) {
            part.v4_3 = part.v4_3.with(z);
        } else if ((nz & part.v4).count() <= 1) {
            part.v4_20 = part.v4_20.with(z);
        } else {
            part.v4_21 = part.v4_21.with(z);
        }
    }
    return part;
}

HalfInt charge_f(const Graph& g, const SaturationPartition& part, int x) {
    switch (class_of(part, x)) {
        case MainClass::V2: return charge(g, part.v1, part.v2, x, 2);
        case MainClass::V3: return charge(g, part.v1 | part.v2, part.v3, x, 2);
        default: return charge(g, part.v1 | part.v2 | part.v3, part.v4, x, 2);
    }
}

HalfInt charge_g(const Graph& g, const SaturationPartition& part, int x) {
    switch (class_of(part, x)) {
        case MainClass::V2: return charge(g, part.v1, part.v2, x, 3);
        case MainClass::V3: return charge(g, part.v1 | part.v2, part.v3, x, 3);
        default: return charge(g, part.v1 | part.v2 | part.v3, part.v4, x, 3);
    }
}

HalfInt charge_g_prime(const Graph& g, const SaturationPartition& part, int x) {
    const VertexSet v2_rest = part.v2 - part.v2_two;
    if (class_of(part, x) == MainClass::V2) {
        if (v2_rest.contains(x)) return charge(g, part.v1, v2_rest, x, 3);
        return charge(g, part.v1 | v2_rest, part.v2_two, x, 3);
    }
    return charge(g, part.v1 | part.v2, part.v3 | part.v4, x, 3);
}

HalfInt ChargeLedger::sum_over(VertexSet s) const {
    HalfInt acc;
    for (const auto& [v, c] : entries)
        if (s.contains(v)) acc += c;
    return acc;
}

ChargeLedger ledger_f(const Graph& g, const SaturationPartition& part) {
    return build_ledger(g, part, charge_f);
}
ChargeLedger ledger_g(const Graph& g, const SaturationPartition& part) {
    return build_ledger(g, part, charge_g);
}
ChargeLedger ledger_g_prime(const Graph& g, const SaturationPartition& part) {
    return build_ledger(g, part, charge_g_prime);
}

IdentityCheck edge_identity(const Graph& g, const SaturationPartition& part, IdentityVariant v) {
    IdentityCheck check;
    check.variant = v;
    check.edges = static_cast<std::int64_t>(g.edge_count());
    const int factor = v == IdentityVariant::Two ? 2 : 3;
    check.base = static_cast<std::int64_t>(g.edges_within(part.v1)) +
                 factor * (g.order() - part.v1.count());
    switch (v) {
        case IdentityVariant::Two: check.charge_sum = ledger_f(g, part).total; break;
        case IdentityVariant::Three: check.charge_sum = ledger_g(g, part).total; break;
        case IdentityVariant::Prime: check.charge_sum = ledger_g_prime(g, part).total; break;
    }
    check.holds = HalfInt::whole(check.edges) == HalfInt::whole(check.base) + check.charge_sum;
    return check;
}

PairAudit audit_v420_common_neighbors(const Graph& g, const SaturationPartition& part) {
    if (!is_saturated(g, MultipartitePattern{3, 3}))
        throw std::invalid_argument(
            "audit_v420_common_neighbors: graph is not K_{3,3}-saturated");

    PairAudit audit;
    auto flag = [&](std::string msg) {
        audit.passed = false;
        audit.violations.push_back(std::move(msg));
    };
    for (const auto& [key, members] : part.v2_by_support) {
        if (std::popcount(key) != 2) continue;
        const std::vector<int> xs = members.to_vector();
        for (std::size_t i = 0; i < xs.size(); ++i) {
            for (std::size_t j = i + 1; j < xs.size(); ++j) {
                const VertexSet zs =
                    g.neighbors(xs[i]) & g.neighbors(xs[j]) & part.v4_20;
                if (zs.count() < 3) continue;
                ++audit.pairs_checked;
                for (int z : zs) {
                    if (charge_g(g, part, z) != HalfInt::halves(-1)) {
                        flag("g(" + std::to_string(z) + ") = " +
                             charge_g(g, part, z).to_string() + " != -1/2 (pair " +
                             std::to_string(xs[i]) + "," + std::to_string(xs[j]) + ")");
                        continue;
                    }
                    const VertexSet cs = g.neighbors(z) & part.v4;
                    if (cs.count() != 1) {
                        flag("z=" + std::to_string(z) + " has " +
                             std::to_string(cs.count()) + " V4 neighbours, expected 1");
                        continue;
                    }
                    if (charge_g(g, part, cs.min()) < HalfInt::halves(1))
                        flag("g(" + std::to_string(cs.min()) + ") = " +
                             charge_g(g, part, cs.min()).to_string() + " < 1/2 (c of z=" +
                             std::to_string(z) + ")");
                }
            }
        }
    }
    return audit;
}

AnalysisReport analyze_graph(const Graph& g, std::optional<int> root) {
    AnalysisReport report;
    report.n = g.order();
    report.edges = g.edge_count();
    report.root = root.value_or(min_degree_tight_vertices(g).front());
    report.partition = build_partition(g, report.root);
    const auto& part = report.partition;
    report.class_sizes = {
        {"V1", part.v1.count()},     {"V2", part.v2.count()},
        {"V3", part.v3.count()},     {"V4", part.v4.count()},
        {"V4^3", part.v4_3.count()}, {"V4^20", part.v4_20.count()},
        {"V4^21", part.v4_21.count()},
    };
    report.f = ledger_f(g, part);
    report.g = ledger_g(g, part);
    report.g_prime = ledger_g_prime(g, part);
    for (auto v : {IdentityVariant::Two, IdentityVariant::Three, IdentityVariant::Prime})
        report.identities.push_back(edge_identity(g, part, v));
    report.saturated = is_saturated(g, MultipartitePattern{3, 3});
    if (report.saturated) {
        report.structure = audit_saturated_structure(g, report.root);
        report.pairs = audit_v420_common_neighbors(g, part);
    }
    return report;
}

namespace {

const char* variant_name(IdentityVariant v) {
    switch (v) {
        case IdentityVariant::Two: return "two";
        case IdentityVariant::Three: return "three";
        default: return "prime";
    }
}

}  // namespace

std::string report_to_text(const AnalysisReport& r) {
    std::ostringstream os;
    os << "n=" << r.n << " e=" << r.edges << " root=" << r.root << " N(root)=";
    os << (r.partition.v1.without(r.root)).to_string() << '\n';
    os << "classes:";
    for (const auto& [name, size] : r.class_sizes) os << ' ' << name << '=' << size;
    os << '\n';
    for (const auto& [key, members] : r.partition.v2_by_support) {
        os << "V2 support {";
        bool first = true;
        for (std::size_t t = 0; t < r.partition.a_list.size(); ++t)
            if ((key >> t) & 1) {
                if (!first) os << ' ';
                os << "a" << (t + 1);
                first = false;
            }
        os << "} -> " << members.to_string() << '\n';
    }
    os << "charge sums: f=" << r.f.total.to_string() << " g=" << r.g.total.to_string()
       << " g'=" << r.g_prime.total.to_string() << '\n';
    for (const auto& id : r.identities)
        os << "identity " << variant_name(id.variant) << ": e=" << id.edges << " base=" << id.base
           << " charges=" << id.charge_sum.to_string() << (id.holds ? " ok" : " VIOLATED") << '\n';
    os << "K_{3,3}-saturated: " << (r.saturated ? "yes" : "no") << '\n';
    if (r.structure) {
        os << "structure audit: " << (r.structure->passed ? "pass" : "FAIL") << '\n';
        for (const auto& v : r.structure->violations) os << "  " << v << '\n';
    }
    if (r.pairs) {
        os << "support-pair audit: " << (r.pairs->passed ? "pass" : "FAIL") << " ("
           << r.pairs->pairs_checked << " qualifying pairs)" << '\n';
        for (const auto& v : r.pairs->violations) os << "  " << v << '\n';
    }
    return os.str();
}

std::string report_to_json(const AnalysisReport& r) {
    nlohmann::json j;
    j["n"] = r.n;
    j["edges"] = r.edges;
    j["root"] = r.root;
    for (const auto& [name, size] : r.class_sizes) j["class_sizes"][name] = size;
    auto ledger_json = [](const ChargeLedger& ledger) {
        nlohmann::json out;
        out["total"] = ledger.total.to_double();
        for (const auto& [v, c] : ledger.entries) out["entries"][std::to_string(v)] = c.to_double();
        return out;
    };
    j["ledgers"]["f"] = ledger_json(r.f);
    j["ledgers"]["g"] = ledger_json(r.g);
    j["ledgers"]["g_prime"] = ledger_json(r.g_prime);
    for (const auto& id : r.identities) {
        nlohmann::json o;
        o["edges"] = id.edges;
        o["base"] = id.base;
        o["charge_sum"] = id.charge_sum.to_double();
        o["holds"] = id.holds;
        j["identities"][variant_name(id.variant)] = o;
    }
    j["saturated"] = r.saturated;
    if (r.structure) {
        j["structure_audit"]["passed"] = r.structure->passed;
        j["structure_audit"]["violations"] = r.structure->violations;
    }
    if (r.pairs) {
        j["pair_audit"]["passed"] = r.pairs->passed;
        j["pair_audit"]["checked"] = r.pairs->pairs_checked;
        j["pair_audit"]["violations"] = r.pairs->violations;
    }
    return j.dump(2);
}

}  // namespace satkit
