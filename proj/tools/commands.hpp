#pragma once

#include <cstdint>
#include <string>

namespace nodecut::cli {

// Exit codes. Every failure prints one line to stderr:
//   error code=<N> kind=<Kind> msg="<text>"
enum ExitCode : int {
    kOk = 0,
    kInternal = 1,
    kParse = 2,
    kDisconnected = 3,
    kTooLarge = 4,
    kCertificateFailed = 5,
    kEquivalenceFailed = 6,
    kWeightedUnsupported = 7,
    kIo = 8,
};

struct GraphArgs {
    std::string path;
    std::string dataset;
    bool weighted = false;
};

struct DetectArgs {
    GraphArgs graph;
    std::string seed;  ///< "u,v"; empty means all seeds
    std::string tie_break = "det";
    std::uint64_t rng_seed = 0;
    std::size_t jobs = 1;
    std::string out = "-";
    std::string trajectories;
    bool include_ground_state = false;
    bool allow_disconnected = false;
};

struct OracleArgs {
    GraphArgs graph;
    std::size_t max_nodes = 16;
    bool force = false;
    std::string compare;
    std::string out = "-";
};

struct VerifyArgs {
    std::string report;
    GraphArgs graph;
    bool equivalence = false;
    bool no_equivalence = false;
    std::string out = "-";
};

struct HierarchyArgs {
    std::string report;
    GraphArgs graph;
    std::string dot;
    std::string out;
};

struct LineGraphArgs {
    GraphArgs graph;
    std::string format = "edges";
    std::string out = "-";
};

int cmd_detect(const DetectArgs& args);
int cmd_oracle(const OracleArgs& args);
int cmd_verify(const VerifyArgs& args);
int cmd_hierarchy(const HierarchyArgs& args);
int cmd_linegraph(const LineGraphArgs& args);

/// Prints the machine-parsable error line and returns the exit code.
int report_error(int code, std::string_view kind, std::string_view message);

}  // namespace nodecut::cli
