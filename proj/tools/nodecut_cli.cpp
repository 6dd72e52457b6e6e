#include <exception>
#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "nodecut/error.hpp"

namespace {

using namespace nodecut::cli;

int exit_code_for(nodecut::ErrorKind kind) {
    switch (kind) {
        case nodecut::ErrorKind::Parse:
        case nodecut::ErrorKind::UnknownLabel: return kParse;
        case nodecut::ErrorKind::DisconnectedGraph: return kDisconnected;
        case nodecut::ErrorKind::TooLarge: return kTooLarge;
        case nodecut::ErrorKind::WeightedUnsupported: return kWeightedUnsupported;
        case nodecut::ErrorKind::Io: return kIo;
        default: return kInternal;
    }
}

void add_graph_options(CLI::App* cmd, GraphArgs& g, bool positional = true) {
    if (positional) cmd->add_option("graph", g.path, "Edge-list file");
    cmd->add_option("--dataset", g.dataset, "Built-in dataset instead of a file")->check(CLI::IsMember({"karate"}));
    cmd->add_flag("--weighted", g.weighted, "Read the third column as link weight");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Overlapping link communities as local minima of the normalised node cut"};
    app.require_subcommand(1);

    DetectArgs detect;
    auto* d = app.add_subcommand("detect", "Greedy search from seed links; writes a JSON report");
    add_graph_options(d, detect.graph);
    auto* seed_opt = d->add_option("--seed", detect.seed, "Single seed link 'u,v'");
    d->add_flag("--all-seeds", "Run from every link (default)")->excludes(seed_opt);
    d->add_option("--tie-break", detect.tie_break, "det | rng")->check(CLI::IsMember({"det", "rng"}));
    d->add_option("--rng-seed", detect.rng_seed, "Seed for --tie-break rng");
    d->add_option("--jobs", detect.jobs, "Worker threads")->check(CLI::PositiveNumber);
    d->add_option("--out", detect.out, "Report path ('-' for stdout)");
    d->add_option("--trajectories", detect.trajectories, "Directory for per-seed CSV trajectories");
    d->add_flag("--include-ground-state", detect.include_ground_state, "List the whole graph as C0");
    d->add_flag("--allow-disconnected", detect.allow_disconnected, "Confine runs to the seed's component");

    OracleArgs oracle;
    auto* o = app.add_subcommand("oracle", "Exhaustive psi landscape of a small graph");
    add_graph_options(o, oracle.graph);
    o->add_option("--max-nodes", oracle.max_nodes, "Node cap for enumeration");
    o->add_flag("--force", oracle.force, "Enumerate above the cap (up to 63 nodes)");
    o->add_option("--compare", oracle.compare, "Greedy report to check against the exact minima");
    o->add_option("--out", oracle.out, "Output path ('-' for stdout)");

    VerifyArgs verify;
    auto* v = app.add_subcommand("verify", "Check every community of a report");
    v->add_option("report", verify.report, "Report JSON")->required();
    add_graph_options(v, verify.graph);
    v->add_flag("--equivalence", verify.equivalence, "Require the line-graph equivalence check");
    v->add_flag("--no-equivalence", verify.no_equivalence, "Skip the line-graph equivalence check");
    v->add_option("--out", verify.out, "Output path ('-' for stdout)");

    HierarchyArgs hierarchy;
    auto* h = app.add_subcommand("hierarchy", "Containment polyhierarchy and pairwise overlaps");
    h->add_option("report", hierarchy.report, "Report JSON")->required();
    add_graph_options(h, hierarchy.graph);
    h->add_option("--dot", hierarchy.dot, "DOT output path");
    h->add_option("--out", hierarchy.out, "Relations JSON path");

    LineGraphArgs linegraph;
    auto* l = app.add_subcommand("linegraph", "Dump the inverse-degree weighted line graph");
    add_graph_options(l, linegraph.graph);
    l->add_option("--format", linegraph.format, "edges | dot")->check(CLI::IsMember({"edges", "dot"}));
    l->add_option("--out", linegraph.out, "Output path ('-' for stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return report_error(kParse, "UsageError", e.what());
    }

    try {
        if (*d) return cmd_detect(detect);
        if (*o) return cmd_oracle(oracle);
        if (*v) return cmd_verify(verify);
        if (*h) return cmd_hierarchy(hierarchy);
        if (*l) return cmd_linegraph(linegraph);
    } catch (const nodecut::Error& e) {
        return report_error(exit_code_for(e.kind()), nodecut::to_string(e.kind()), e.what());
    } catch (const std::exception& e) {
        return report_error(kInternal, "InternalError", e.what());
    }
    return kInternal;
}
