#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "satkit/constructions.hpp"
#include "satkit/discharging.hpp"
#include "satkit/formulas.hpp"
#include "satkit/graph.hpp"
#include "satkit/graph6.hpp"
#include "satkit/pattern.hpp"
#include "satkit/saturation.hpp"
#include "satkit/search.hpp"

namespace {

using satkit::Graph;
using satkit::MultipartitePattern;

std::vector<std::string> split_colon(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, ':')) out.push_back(cur);
    return out;
}

int parse_int(const std::string& s, const char* what) {
    std::size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(s, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string(what) + ": not a number: " + s);
    }
    if (pos != s.size()) throw std::invalid_argument(std::string(what) + ": not a number: " + s);
    return v;
}

Graph make_construction(const std::string& spec) {
    auto f = split_colon(spec);
    const std::string& kind = f.empty() ? spec : f[0];
    auto want = [&](std::size_t k) {
        if (f.size() != k + 1)
            throw std::invalid_argument("construct: " + kind + " takes " + std::to_string(k) +
                                        " argument(s), e.g. gn:12 or ehm:10:4");
    };
    if (kind == "gn") {
        want(1);
        int n = parse_int(f[1], "gn");
        if (n >= 6 && n < 12)
            throw std::invalid_argument("gn needs n >= 12; for n = " + f[1] +
                                        " use small-witness:" + f[1] + " (sw:" + f[1] + ")");
        return satkit::gn(n);
    }
    if (kind == "ehm") {
        want(2);
        return satkit::ehm(parse_int(f[1], "ehm n"), parse_int(f[2], "ehm k"));
    }
    if (kind == "ejc" || kind == "edge-join-cycle") {
        want(1);
        return satkit::edge_join_cycle(parse_int(f[1], "edge-join-cycle"));
    }
    if (kind == "sw" || kind == "small-witness") {
        want(1);
        return satkit::small_witness(parse_int(f[1], "small-witness"));
    }
    throw std::invalid_argument("construct: unknown family '" + kind +
                                "' (known: gn, ehm, ejc/edge-join-cycle, sw/small-witness)");
}

// one graph from --g6 (string or "-" for stdin), --g6-file, or --construct
struct GraphSource {
    std::string g6, g6_file, construct;

    void add_options(CLI::App* cmd) {
        auto* a = cmd->add_option("--g6", g6, "graph6 string, or - to read one line from stdin");
        auto* b = cmd->add_option("--g6-file", g6_file, "file holding one graph6 line");
        auto* c = cmd->add_option("--construct", construct,
                                  "construction name: gn:N, ehm:N:K, ejc:N, sw:N");
        a->excludes(b)->excludes(c);
        b->excludes(c);
    }
    Graph load() const {
        if (!g6.empty()) {
            if (g6 == "-") {
                std::string line;
                if (!std::getline(std::cin, line))
                    throw std::invalid_argument("no graph6 line on stdin");
                return satkit::from_graph6(line);
            }
            return satkit::from_graph6(g6);
        }
        if (!g6_file.empty()) {
            std::ifstream in(g6_file);
            if (!in) throw std::invalid_argument("cannot open " + g6_file);
            std::string line;
            if (!std::getline(in, line)) throw std::invalid_argument(g6_file + " is empty");
            return satkit::from_graph6(line);
        }
        if (!construct.empty()) return make_construction(construct);
        throw std::invalid_argument("need one of --g6, --g6-file, --construct");
    }
};

double parse_duration(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty duration");
    double mult = 1.0;
    std::string num = s;
    auto ends_with = [&](const char* suf) {
        std::string_view sv(suf);
        return num.size() > sv.size() && num.compare(num.size() - sv.size(), sv.size(), sv) == 0;
    };
    if (ends_with("ms")) {
        mult = 1e-3;
        num.resize(num.size() - 2);
    } else if (ends_with("s")) {
        num.resize(num.size() - 1);
    } else if (ends_with("m")) {
        mult = 60;
        num.resize(num.size() - 1);
    } else if (ends_with("h")) {
        mult = 3600;
        num.resize(num.size() - 1);
    }
    std::size_t pos = 0;
    double v = 0;
    try {
        v = std::stod(num, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad duration: " + s);
    }
    if (pos != num.size() || v < 0) throw std::invalid_argument("bad duration: " + s);
    return v * mult;
}

int run_verify(const GraphSource& src, const std::string& pattern, const std::string& cert_path) {
    Graph g = src.load();
    MultipartitePattern p = MultipartitePattern::parse(pattern);
    satkit::SaturationVerdict v = satkit::check_saturated(g, p);
    switch (v.kind) {
        case satkit::SaturationVerdict::Kind::Saturated:
            std::cout << "saturated, " << g.edge_count() << " edges\n";
            if (!cert_path.empty()) {
                std::ofstream out(cert_path);
                if (!out) throw std::invalid_argument("cannot write " + cert_path);
                out << satkit::certificate_to_string(v);
                std::cerr << "# certificate: " << cert_path << " (" << v.certificate.size()
                          << " non-edges)\n";
            }
            return 0;
        case satkit::SaturationVerdict::Kind::ContainsPattern:
            std::cout << "contains K_{" << p.to_string() << "}: " << v.pattern_witness.to_string()
                      << "\n";
            return 1;
        case satkit::SaturationVerdict::Kind::MissingEdgeFails:
            std::cout << "not saturated: edge (" << v.failing_edge.first << ","
                      << v.failing_edge.second << ") closes no copy of K_{" << p.to_string()
                      << "}\n";
            return 1;
    }
    return 2;
}

nlohmann::json graph_or_null(const std::optional<Graph>& g) {
    if (!g) return nullptr;
    return satkit::to_graph6(*g);
}

int run_sat(int n, const std::string& pattern, const satkit::SearchOptions& so,
            std::optional<std::int64_t> confirm) {
    MultipartitePattern p = MultipartitePattern::parse(pattern);
    if (confirm) {
        satkit::ConfirmResult r = satkit::confirm_value(n, p, *confirm, so);
        nlohmann::json j{{"n", n},
                         {"pattern", p.parts},
                         {"status", satkit::to_string(r.status)},
                         {"claimed", r.claimed},
                         {"witness_at_claimed", graph_or_null(r.witness_at_claimed)},
                         {"refutation", graph_or_null(r.refutation)},
                         {"explored", r.explored},
                         {"elapsed", r.elapsed},
                         {"note", r.note}};
        std::cout << j.dump(2) << "\n";
        std::cerr << "# " << r.note << "; explored " << r.explored << " classes in " << r.elapsed
                  << " s\n";
        switch (r.status) {
            case satkit::ConfirmStatus::Confirmed: return 0;
            case satkit::ConfirmStatus::RefutedWithWitness: return 1;
            case satkit::ConfirmStatus::Inconclusive: return 3;
        }
        return 2;
    }
    satkit::SatResult r = satkit::exact_sat(n, p, so);
    nlohmann::json j{{"n", r.n},
                     {"pattern", r.pattern.parts},
                     {"status", satkit::to_string(r.status)},
                     {"value", r.value},
                     {"witness_g6", satkit::to_graph6(r.witness)},
                     {"explored", r.explored},
                     {"elapsed", r.elapsed}};
    std::cout << j.dump(2) << "\n";
    std::cerr << "# explored " << r.explored << " classes in " << r.elapsed << " s\n";
    return r.status == satkit::SatStatus::BudgetExceeded ? 3 : 0;
}

int run_analyze(const GraphSource& src, std::optional<int> root, bool as_json) {
    Graph g = src.load();
    satkit::AnalysisReport rep = satkit::analyze_graph(g, root);
    if (as_json)
        std::cout << satkit::report_to_json(rep) << "\n";
    else
        std::cout << satkit::report_to_text(rep);
    for (const auto& id : rep.identities)
        if (!id.holds) return 1;
    if (rep.structure && !rep.structure->passed) return 1;
    if (rep.pairs && !rep.pairs->passed) return 1;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"saturation numbers for complete multipartite patterns: verify, search, analyze"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "check a graph for K_{s1,...,sr}-saturation");
    GraphSource verify_src;
    verify_src.add_options(verify);
    std::string verify_pattern = "3,3";
    std::string verify_cert;
    verify->add_option("-p,--pattern", verify_pattern, "part sizes, e.g. 3,3")
        ->capture_default_str();
    verify->add_option("--cert", verify_cert, "write the per-non-edge certificate to this file");

    // sat
    auto* sat = app.add_subcommand("sat", "compute sat(n, pattern) by bounded exhaustive search");
    int sat_n = 0;
    std::string sat_pattern = "3,3";
    std::string sat_max_time;
    std::uint64_t sat_max_nodes = 0;
    int sat_threads = 1;
    std::uint64_t sat_seed = satkit::kDefaultSeed;
    int sat_greedy = 64;
    bool sat_upper_only = false;
    std::string sat_checkpoint, sat_resume;
    std::int64_t sat_confirm = -1;
    sat->add_option("-n", sat_n, "number of vertices")->required();
    sat->add_option("-p,--pattern", sat_pattern, "part sizes")->capture_default_str();
    sat->add_option("--max-time", sat_max_time, "wall-clock budget, e.g. 500ms, 1s, 2m, 1h");
    sat->add_option("--max-nodes", sat_max_nodes, "visited-class budget (0 = unlimited)");
    sat->add_option("--threads", sat_threads, "worker threads")->capture_default_str();
    sat->add_option("--seed", sat_seed, "seed for the greedy upper-bound runs")
        ->capture_default_str();
    sat->add_option("--greedy-seeds", sat_greedy, "number of greedy runs")->capture_default_str();
    sat->add_flag("--upper-only", sat_upper_only, "skip the exhaustive phase");
    sat->add_option("--checkpoint", sat_checkpoint, "write unfinished frontier here when cut");
    sat->add_option("--resume", sat_resume, "resume from a checkpoint file");
    auto* confirm_opt =
        sat->add_option("--confirm", sat_confirm, "check this claimed value instead");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "partition, charges and identity checks");
    GraphSource analyze_src;
    analyze_src.add_options(analyze);
    int analyze_vertex = -1;
    std::string analyze_mdv;
    bool analyze_json = false;
    auto* vopt = analyze->add_option("--vertex", analyze_vertex, "root vertex (minimum degree)");
    analyze
        ->add_option("--min-degree-vertex", analyze_mdv, "root vertex: 'auto' or an explicit index")
        ->excludes(vopt);
    analyze->add_flag("--json", analyze_json, "machine-readable report");

    // table
    auto* table = app.add_subcommand("table", "known values / bounds over a range of n");
    std::string table_pattern = "3,3";
    int table_from = 6, table_to = 15;
    bool table_csv = false;
    table->add_option("-p,--pattern", table_pattern, "part sizes")->capture_default_str();
    table->add_option("--from", table_from, "first n")->capture_default_str();
    table->add_option("--to", table_to, "last n")->capture_default_str();
    table->add_flag("--csv", table_csv, "CSV instead of aligned text");

    // construct
    auto* construct = app.add_subcommand("construct", "emit a named construction");
    std::string construct_name;
    std::string construct_emit = "g6";
    construct->add_option("name", construct_name, "gn:N, ehm:N:K, ejc:N, sw:N")->required();
    construct->add_option("--emit", construct_emit, "g6 or edges")
        ->check(CLI::IsMember({"g6", "edges"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // help/version exit clean, usage errors exit 2
    }

    try {
        if (verify->parsed()) return run_verify(verify_src, verify_pattern, verify_cert);
        if (sat->parsed()) {
            satkit::SearchOptions so;
            if (!sat_max_time.empty()) so.budget.max_seconds = parse_duration(sat_max_time);
            so.budget.max_nodes = sat_max_nodes;
            so.threads = sat_threads;
            so.seed = sat_seed;
            so.greedy_seeds = sat_greedy;
            so.upper_only = sat_upper_only;
            so.checkpoint_out = sat_checkpoint;
            so.resume_from = sat_resume;
            std::optional<std::int64_t> confirm;
            if (*confirm_opt) confirm = sat_confirm;
            return run_sat(sat_n, sat_pattern, so, confirm);
        }
        if (analyze->parsed()) {
            std::optional<int> root;
            if (analyze_vertex >= 0) root = analyze_vertex;
            if (!analyze_mdv.empty() && analyze_mdv != "auto")
                root = parse_int(analyze_mdv, "--min-degree-vertex");
            return run_analyze(analyze_src, root, analyze_json);
        }
        if (table->parsed()) {
            std::cout << satkit::sat_table(MultipartitePattern::parse(table_pattern), table_from,
                                           table_to, table_csv);
            return 0;
        }
        if (construct->parsed()) {
            Graph g = make_construction(construct_name);
            if (construct_emit == "g6") {
                std::cout << satkit::to_graph6(g) << "\n";
            } else {
                for (auto [u, v] : g.edges()) std::cout << u << " " << v << "\n";
            }
            std::cerr << "# order " << g.order() << ", " << g.edge_count() << " edges\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
