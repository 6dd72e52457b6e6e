#include "nodecut/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>

#include "nodecut/karate.hpp"

namespace nodecut {

using nlohmann::json;

Graph load_graph(const GraphSource& source, std::vector<std::string>* warnings) {
    if (!source.dataset.empty()) {
        if (source.dataset == "karate") return karate_club();
        throw Error(ErrorKind::Parse, "unknown dataset '" + source.dataset + "'");
    }
    if (source.path.empty()) throw Error(ErrorKind::Parse, "no graph given (path or dataset)");
    return load_edge_list_file(source.path, source.weighted, warnings);
}

double round_report(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    double r = std::strtod(buf, nullptr);
    return r == 0.0 ? 0.0 : r;  // no negative zero
}

json labels_json(const Graph& g, const NodeSet& c) { return labels_of(g, c); }

json links_json(const Graph& g, const LinkSet& l) {
    json out = json::array();
    for (auto k : l.members()) out.push_back({g.label(g.link(k).u), g.label(g.link(k).v)});
    return out;
}

namespace {

json community_json(const Graph& g, const Community& c) {
    json j;
    j["name"] = c.name;
    j["nodes"] = labels_json(g, c.nodes);
    j["links"] = links_json(g, c.links);
    j["size"] = c.nodes.size();
    j["link_count"] = c.links.size();
    j["psi"] = round_report(c.psi);
    j["boundary"] = labels_json(g, c.boundary);
    j["seed_count"] = c.seed_count;
    j["stability"] = c.stability ? json(round_report(*c.stability)) : json(nullptr);
    return j;
}

json seed_json(const Graph& g, LinkId k) { return {g.label(g.link(k).u), g.label(g.link(k).v)}; }

std::vector<std::string> string_list(const json& j, const char* what) {
    if (!j.is_array()) throw Error(ErrorKind::Parse, std::string("report: '") + what + "' must be an array");
    std::vector<std::string> out;
    for (const auto& e : j) {
        if (!e.is_string()) throw Error(ErrorKind::Parse, std::string("report: '") + what + "' must hold strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

}  // namespace

json make_report(const Graph& g, const GraphSource& source, const Detection& detection, const TieBreakPolicy& policy,
                 const ReportOptions& options) {
    json r;
    r["format"] = kReportFormat;

    json src;
    if (!source.dataset.empty()) {
        src["dataset"] = source.dataset;
    } else {
        src["path"] = source.path;
    }
    src["weighted"] = source.weighted;
    r["graph"] = {{"nodes", g.node_count()},
                  {"links", g.link_count()},
                  {"connected", detection.connected},
                  {"weighted", g.weighted()},
                  {"source", src}};

    r["policy"] = {{"mode", policy.mode == TieBreakMode::deterministic ? "det" : "rng"},
                   {"rng_seed", policy.rng_seed}};

    json communities = json::array();
    for (const auto& c : detection.communities) communities.push_back(community_json(g, c));
    if (options.include_ground_state) {
        Community whole = make_community(g, g.all_nodes());
        whole.name = "C0";
        if (!detection.connected) whole.psi = 0.0;
        communities.push_back(community_json(g, whole));
    }
    r["communities"] = communities;

    r["ground_state"] = {{"psi", 0.0},
                         {"included", options.include_ground_state},
                         {"note", "the whole connected graph has psi = 0 and ends every run; it is not listed as a "
                                  "community unless included explicitly (as C0)"}};

    // Name lookup for per-run minima.
    std::map<std::vector<NodeId>, std::string> names;
    for (const auto& c : detection.communities) names[c.nodes.members()] = c.name;

    json runs = json::array();
    json errors = json::array();
    for (std::size_t k = 0; k < detection.runs.size(); ++k) {
        const auto& run = detection.runs[k];
        json entry;
        entry["seed"] = seed_json(g, run.trajectory.seed);
        json minima = json::array();
        for (const auto& m : run.trajectory.minima) minima.push_back(names.at(m.nodes.members()));
        entry["minima"] = minima;
        entry["reached_ground_state"] = run.trajectory.reached_ground_state;
        if (k < options.trajectory_files.size() && !options.trajectory_files[k].empty()) {
            entry["trajectory"] = options.trajectory_files[k];
        } else {
            entry["trajectory"] = nullptr;
        }
        runs.push_back(entry);
        if (run.error) errors.push_back({{"seed", seed_json(g, run.trajectory.seed)}, {"message", *run.error}});
    }
    json histogram = json::object();
    for (const auto& [count, runs_with] : detection.minima_histogram) histogram[std::to_string(count)] = runs_with;
    r["seeds"] = {{"mode", options.seed_mode},
                  {"count", detection.runs.size()},
                  {"histogram", histogram},
                  {"errors", errors},
                  {"runs", runs}};
    return r;
}

std::string dump_report(const json& report) { return report.dump(2) + "\n"; }

GraphSource report_source(const json& report) {
    try {
        const auto& src = report.at("graph").at("source");
        GraphSource s;
        if (src.contains("dataset")) s.dataset = src.at("dataset").get<std::string>();
        if (src.contains("path")) s.path = src.at("path").get<std::string>();
        s.weighted = src.value("weighted", false);
        return s;
    } catch (const json::exception& e) {
        throw Error(ErrorKind::Parse, std::string("report: malformed graph source: ") + e.what());
    }
}

LoadedReport parse_report(const json& report, const Graph& g) {
    if (!report.is_object() || report.value("format", "") != kReportFormat)
        throw Error(ErrorKind::Parse, std::string("report: expected format '") + kReportFormat + "'");
    LoadedReport out;
    out.source = report_source(report);
    if (!report.contains("communities") || !report.at("communities").is_array())
        throw Error(ErrorKind::Parse, "report: missing 'communities' array");
    try {
        for (const auto& j : report.at("communities")) {
            auto name = j.at("name").get<std::string>();
            if (name == "C0") continue;
            auto labels = string_list(j.at("nodes"), "nodes");
            Community c;
            c.nodes = g.nodes_of(labels);
            c.links = induced_links(g, c.nodes);
            c.boundary = boundary_nodes(g, c.nodes);
            c.psi = j.at("psi").get<double>();
            c.seed_count = j.value("seed_count", std::size_t{0});
            if (j.contains("stability") && j.at("stability").is_number()) c.stability = j.at("stability").get<double>();
            c.name = std::move(name);
            out.communities.push_back(std::move(c));
        }
    } catch (const json::exception& e) {
        throw Error(ErrorKind::Parse, std::string("report: malformed community: ") + e.what());
    }
    return out;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw Error(ErrorKind::Parse, path + ": " + e.what());
    }
}

void write_trajectory_csv(std::ostream& out, const Graph& g, const Trajectory& t) {
    out << "step,action,node,psi,size\n";
    char buf[64];
    for (const auto& s : t.steps) {
        out << s.index << ',' << to_string(s.action) << ',';
        if (s.action == Move::seed) {
            const auto& l = g.link(t.seed);
            out << g.label(l.u) << ' ' << g.label(l.v);
        } else if (s.node != kNoNode) {
            out << g.label(s.node);
        }
        std::snprintf(buf, sizeof buf, "%.12g", round_report(s.psi));
        out << ',' << buf << ',' << s.size << '\n';
    }
}

std::string trajectory_file_name(const Graph& g, LinkId seed) {
    auto clean = [](std::string s) {
        for (auto& ch : s) {
            bool ok = (ch >= '0' && ch <= '9') || (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') || ch == '.' ||
                      ch == '-';
            if (!ok) ch = '_';
        }
        return s;
    };
    const auto& l = g.link(seed);
    return "seed_" + clean(g.label(l.u)) + "_" + clean(g.label(l.v)) + ".csv";
}

}  // namespace nodecut
