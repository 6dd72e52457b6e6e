#include "commands.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "nodecut/explorer.hpp"
#include "nodecut/hierarchy.hpp"
#include "nodecut/landscape.hpp"
#include "nodecut/line_graph.hpp"
#include "nodecut/report.hpp"

namespace nodecut::cli {

using nlohmann::json;

int report_error(int code, std::string_view kind, std::string_view message) {
    std::string msg(message);
    for (auto& ch : msg)
        if (ch == '\n' || ch == '"') ch = '\'';
    std::cerr << "error code=" << code << " kind=" << kind << " msg=\"" << msg << "\"\n";
    return code;
}

namespace {

GraphSource to_source(const GraphArgs& a) {
    GraphSource s;
    s.dataset = a.dataset;
    s.path = a.dataset.empty() ? a.path : std::string();
    s.weighted = a.weighted;
    return s;
}

Graph load(const GraphSource& source) {
    std::vector<std::string> warnings;
    Graph g = load_graph(source, &warnings);
    for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
    return g;
}

/// Report-driven commands reuse the report's graph unless one is given.
GraphSource source_for_report(const json& report, const GraphArgs& override) {
    if (!override.dataset.empty() || !override.path.empty()) return to_source(override);
    return report_source(report);
}

void emit(const std::string& target, const std::string& text) {
    if (target.empty() || target == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(target, std::ios::binary);
    if (!out) throw Error(ErrorKind::Io, "cannot write " + target);
    out << text;
}

LinkId parse_seed(const Graph& g, const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) throw Error(ErrorKind::Parse, "--seed expects 'u,v', got '" + text + "'");
    return g.link_between(text.substr(0, comma), text.substr(comma + 1));
}

TieBreakPolicy parse_policy(const std::string& mode, std::uint64_t rng_seed) {
    TieBreakPolicy p;
    p.rng_seed = rng_seed;
    if (mode == "det") {
        p.mode = TieBreakMode::deterministic;
    } else if (mode == "rng") {
        p.mode = TieBreakMode::random;
    } else {
        throw Error(ErrorKind::Parse, "--tie-break must be 'det' or 'rng'");
    }
    return p;
}

json minima_json(const Graph& g, const std::vector<Community>& minima) {
    json out = json::array();
    for (const auto& c : minima) {
        out.push_back({{"name", c.name},
                       {"nodes", labels_json(g, c.nodes)},
                       {"size", c.nodes.size()},
                       {"link_count", c.links.size()},
                       {"psi", round_report(c.psi)},
                       {"boundary", labels_json(g, c.boundary)}});
    }
    return out;
}

}  // namespace

int cmd_detect(const DetectArgs& args) {
    const auto started = std::chrono::steady_clock::now();
    const GraphSource source = to_source(args.graph);
    const Graph g = load(source);
    const TieBreakPolicy policy = parse_policy(args.tie_break, args.rng_seed);
    RunOptions options;
    options.allow_disconnected = args.allow_disconnected;

    std::vector<LinkId> seeds;
    ReportOptions report_options;
    if (!args.seed.empty()) {
        seeds.push_back(parse_seed(g, args.seed));
        report_options.seed_mode = "single";
    } else {
        for (LinkId k = 0; k < g.link_count(); ++k) seeds.push_back(k);
    }
    if (!is_connected(g) && !args.allow_disconnected)
        throw Error(ErrorKind::DisconnectedGraph, "input graph is disconnected (pass --allow-disconnected)");

    Detection detection = run_seeds(g, seeds, policy, args.jobs, options);

    if (!args.trajectories.empty()) {
        std::filesystem::create_directories(args.trajectories);
        for (const auto& run : detection.runs) {
            auto path = (std::filesystem::path(args.trajectories) / trajectory_file_name(g, run.trajectory.seed)).string();
            std::ofstream out(path, std::ios::binary);
            if (!out) throw Error(ErrorKind::Io, "cannot write " + path);
            write_trajectory_csv(out, g, run.trajectory);
            report_options.trajectory_files.push_back(path);
        }
    }
    report_options.include_ground_state = args.include_ground_state;

    emit(args.out, dump_report(make_report(g, source, detection, policy, report_options)));

    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    std::cerr << "detect: " << detection.runs.size() << " seed run(s), " << detection.communities.size()
              << " communities, " << seconds << " s\n";
    for (const auto& run : detection.runs)
        if (run.error) std::cerr << "warning: seed " << run.trajectory.seed << ": " << *run.error << '\n';
    return kOk;
}

int cmd_oracle(const OracleArgs& args) {
    const Graph g = load(to_source(args.graph));
    LandscapeOptions options;
    options.max_nodes = args.max_nodes;
    options.force = args.force;
    auto minima = exact_local_minima(g, options);

    json out;
    out["format"] = "nodecut-oracle/1";
    out["graph"] = {{"nodes", g.node_count()}, {"links", g.link_count()}, {"weighted", g.weighted()}};
    out["minima"] = minima_json(g, minima);

    int code = kOk;
    if (!args.compare.empty()) {
        auto report = parse_report(read_json_file(args.compare), g);
        std::set<std::vector<NodeId>> exact;
        for (const auto& m : minima) exact.insert(m.nodes.members());
        std::set<std::vector<NodeId>> greedy;
        json greedy_only = json::array();
        for (const auto& c : report.communities) {
            greedy.insert(c.nodes.members());
            if (!exact.count(c.nodes.members())) greedy_only.push_back({{"name", c.name}, {"nodes", labels_json(g, c.nodes)}});
        }
        json exact_only = json::array();
        for (const auto& m : minima)
            if (!greedy.count(m.nodes.members())) exact_only.push_back({{"name", m.name}, {"nodes", labels_json(g, m.nodes)}});
        const bool sound = greedy_only.empty();
        out["compare"] = {{"report", args.compare}, {"greedy_only", greedy_only}, {"exact_only", exact_only}, {"sound", sound}};
        std::cerr << "oracle: " << minima.size() << " exact minima, " << report.communities.size() << " greedy, "
                  << greedy_only.size() << " greedy-only, " << exact_only.size() << " missed by greedy\n";
        if (!sound) code = kCertificateFailed;
    }
    emit(args.out, out.dump(2) + "\n");
    if (code != kOk) return report_error(code, "CertificateFailed", "greedy report contains non-minima");
    return code;
}

int cmd_verify(const VerifyArgs& args) {
    const json raw = read_json_file(args.report);
    const Graph g = load(source_for_report(raw, args.graph));
    const auto report = parse_report(raw, g);

    bool check_equivalence_flag = !args.no_equivalence && !g.weighted();
    if (args.equivalence && !args.no_equivalence) {
        if (g.weighted())
            throw Error(ErrorKind::WeightedUnsupported, "equivalence check needs an unweighted graph");
        check_equivalence_flag = true;
    }
    std::optional<LineGraph> lg;
    if (check_equivalence_flag) lg = build_line_graph(g);

    json rows = json::array();
    bool certificates_ok = true;
    bool equivalence_ok = true;
    for (const auto& c : report.communities) {
        json row;
        row["name"] = c.name;
        row["psi_reported"] = c.psi;
        bool minimum = false;
        try {
            minimum = verify_local_minimum(g, c.nodes);
            row["psi"] = round_report(psi(g, c.nodes));
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::ZeroInternalDegree) throw;
            row["psi"] = nullptr;
        }
        row["local_minimum"] = minimum;
        certificates_ok = certificates_ok && minimum;
        if (lg) {
            try {
                double residual = check_equivalence(g, *lg, c.nodes);
                row["equivalence_residual"] = residual;
                equivalence_ok = equivalence_ok && residual < 1e-10;
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::ZeroInternalDegree) throw;
                row["equivalence_residual"] = nullptr;
                equivalence_ok = false;
            }
        }
        rows.push_back(row);
    }
    json out = {{"format", "nodecut-verify/1"},
                {"communities", rows},
                {"certificates_ok", certificates_ok},
                {"equivalence_checked", lg.has_value()},
                {"equivalence_ok", equivalence_ok}};
    emit(args.out, out.dump(2) + "\n");
    if (!certificates_ok) return report_error(kCertificateFailed, "CertificateFailed", "a community is not a local psi minimum");
    if (!equivalence_ok) return report_error(kEquivalenceFailed, "EquivalenceFailed", "|phi - psi| >= 1e-10");
    return kOk;
}

int cmd_hierarchy(const HierarchyArgs& args) {
    const json raw = read_json_file(args.report);
    const Graph g = load(source_for_report(raw, args.graph));
    const auto report = parse_report(raw, g);
    const auto dag = build_polyhierarchy(g, report.communities);

    std::ostringstream dot;
    write_dot(dot, dag);

    json vertices = json::array();
    for (std::size_t v = 0; v < dag.vertices.size(); ++v) {
        json parents = json::array();
        for (auto p : dag.parents(v)) parents.push_back(dag.names[p]);
        vertices.push_back({{"name", dag.names[v]}, {"size", dag.vertices[v].size()}, {"parents", parents}});
    }
    json edges = json::array();
    for (const auto& [p, c] : dag.edges) edges.push_back({dag.names[p], dag.names[c]});
    json relations = json::array();
    const auto& cs = report.communities;
    for (std::size_t a = 0; a < cs.size(); ++a) {
        for (std::size_t b = a + 1; b < cs.size(); ++b) {
            auto rel = classify_overlap(g, cs[a], cs[b]);
            relations.push_back({{"a", cs[a].name},
                                 {"b", cs[b].name},
                                 {"kind", std::string(to_string(rel.kind))},
                                 {"shared_nodes", labels_json(g, rel.shared_nodes)},
                                 {"shared_links", links_json(g, rel.shared_links)},
                                 {"covers_graph", cover_check(g, cs[a], cs[b])}});
        }
    }
    json out = {{"format", "nodecut-hierarchy/1"},
                {"vertices", vertices},
                {"edges", edges},
                {"is_tree", dag.is_tree()},
                {"relations", relations}};

    if (!args.dot.empty()) emit(args.dot, dot.str());
    if (!args.out.empty()) emit(args.out, out.dump(2) + "\n");
    if (args.dot.empty() && args.out.empty()) std::cout << dot.str();
    return kOk;
}

int cmd_linegraph(const LineGraphArgs& args) {
    const Graph g = load(to_source(args.graph));
    const auto lg = build_line_graph(g);
    std::ostringstream text;
    if (args.format == "edges") {
        write_line_graph_edges(text, g, lg);
    } else if (args.format == "dot") {
        write_line_graph_dot(text, g, lg);
    } else {
        throw Error(ErrorKind::Parse, "--format must be 'edges' or 'dot'");
    }
    emit(args.out, text.str());
    return kOk;
}

}  // namespace nodecut::cli
