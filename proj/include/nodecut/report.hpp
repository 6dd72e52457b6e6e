#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "nodecut/community.hpp"
#include "nodecut/explorer.hpp"
#include "nodecut/graph.hpp"

namespace nodecut {

/// Where a report's graph came from, so `verify` and `hierarchy` can reload it.
struct GraphSource {
    std::string dataset;  ///< "karate" or empty
    std::string path;     ///< edge-list path when dataset is empty
    bool weighted = false;
};

/// Throws Io / Parse / UnknownLabel.
Graph load_graph(const GraphSource& source, std::vector<std::string>* warnings = nullptr);

struct ReportOptions {
    std::string seed_mode = "all";  ///< "all" or "single"
    bool include_ground_state = false;
    /// Per-run trajectory file, parallel to Detection::runs; empty = not written.
    std::vector<std::string> trajectory_files;
};

inline constexpr const char* kReportFormat = "nodecut-report/1";

/// Rounds to 12 significant digits, the precision of every real in a report.
double round_report(double x);

/// Key-sorted JSON document describing a detection run. Contains no timing
/// or host data, so identical inputs give byte-identical output.
nlohmann::json make_report(const Graph& g, const GraphSource& source, const Detection& detection,
                           const TieBreakPolicy& policy, const ReportOptions& options = {});

/// Serialised form used on disk: two-space indentation, trailing newline.
std::string dump_report(const nlohmann::json& report);

struct LoadedReport {
    GraphSource source;
    std::vector<Community> communities;  ///< ground-state entry (C0) excluded
};

/// Resolves the report's node labels against g. Throws Parse on malformed
/// documents and UnknownLabel on labels g lacks.
LoadedReport parse_report(const nlohmann::json& report, const Graph& g);
GraphSource report_source(const nlohmann::json& report);
nlohmann::json read_json_file(const std::string& path);

/// CSV with header step,action,node,psi,size.
void write_trajectory_csv(std::ostream& out, const Graph& g, const Trajectory& t);
std::string trajectory_file_name(const Graph& g, LinkId seed);

nlohmann::json labels_json(const Graph& g, const NodeSet& c);
nlohmann::json links_json(const Graph& g, const LinkSet& l);

}  // namespace nodecut
