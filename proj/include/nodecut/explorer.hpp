#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "nodecut/community.hpp"
#include "nodecut/graph.hpp"
#include "nodecut/psi.hpp"

namespace nodecut {

/// Absolute tolerance for "psi decreases" comparisons and for tie detection.
inline constexpr double kPsiTolerance = 1e-12;

enum class TieBreakMode { deterministic, random };

struct TieBreakPolicy {
    TieBreakMode mode = TieBreakMode::deterministic;
    std::uint64_t rng_seed = 0;
};

/// Per-run candidate chooser. Deterministic mode picks the smallest node
/// index (label order) among candidates whose psi lies within kPsiTolerance
/// of the best; random mode picks uniformly among them.
class TieBreaker {
public:
    TieBreaker(TieBreakPolicy policy, std::uint64_t stream);

    /// Index of the chosen minimum; `values` are psi per candidate in ascending
    /// node order.
    std::size_t choose(const std::vector<double>& values);

private:
    TieBreakPolicy policy_;
    std::mt19937_64 engine_;
};

struct Choice {
    NodeId node = kNoNode;
    double delta_psi = 0.0;
};

/// Frontier node minimising psi(C u i). Throws NoFrontier when there is none.
Choice best_addition(const SubgraphState& s, TieBreaker& tb);

/// Repeatedly removes the member whose exclusion lowers psi the most, never
/// disconnecting the subgraph or emptying its link set. Returns the removed
/// nodes in order; empty when no removal lowers psi. `on_remove` sees the
/// state after each removal.
std::vector<NodeId> prune(SubgraphState& s, TieBreaker& tb,
                          const std::function<void(NodeId, const SubgraphState&)>& on_remove = {});

/// Adds the frontier node with the smallest psi increase. `rank` > 0 picks
/// the rank-th best candidate instead (ascending psi, then label), clamped to
/// the frontier size. Throws NoFrontier.
NodeId escape_step(SubgraphState& s, TieBreaker& tb, std::size_t rank = 0);

enum class Move { seed, add, remove, record_minimum };

std::string_view to_string(Move m);

struct Step {
    std::size_t index = 0;
    Move action = Move::add;
    NodeId node = kNoNode;  ///< kNoNode for record_minimum
    double psi = 0.0;
    std::size_t size = 0;
};

struct Minimum {
    NodeSet nodes;
    double psi = 0.0;
};

struct Trajectory {
    LinkId seed = 0;
    std::vector<Step> steps;
    std::vector<Minimum> minima;
    /// The run reached its whole component (psi = 0).
    bool reached_ground_state = false;
    /// The graph was disconnected; the run covered only the seed's component.
    bool confined_to_component = false;
    bool aborted = false;
    std::string diagnostic;
};

struct RunOptions {
    bool allow_disconnected = false;
    /// Hard cap on minimum/escape phases as a multiple of the node count.
    std::size_t phase_cap_factor = 10;
};

/// Walks the psi landscape from a seed link: descend by best additions, prune,
/// record the local minimum, escape by the gentlest ascent, and repeat until
/// the whole (component of the) graph is reached.
///
/// Throws DisconnectedGraph for disconnected graphs unless allowed.
Trajectory run_from_seed(const Graph& g, LinkId seed, const TieBreakPolicy& policy, const RunOptions& options = {});

struct SeedRun {
    Trajectory trajectory;
    std::optional<std::string> error;
};

struct Detection {
    /// Distinct minima sorted by psi, then by size (larger first), then by
    /// members; names C1, C2, ... in that order.
    std::vector<Community> communities;
    std::vector<SeedRun> runs;
    /// number of distinct minima per run -> number of runs
    std::map<std::size_t, std::size_t> minima_histogram;
    bool connected = true;
};

/// One run per link on `jobs` worker threads. The result does not depend on
/// `jobs` or scheduling. Errors are collected per seed.
Detection run_all_seeds(const Graph& g, const TieBreakPolicy& policy, std::size_t jobs = 1,
                        const RunOptions& options = {});

/// Same aggregation for an explicit list of seeds.
Detection run_seeds(const Graph& g, const std::vector<LinkId>& seeds, const TieBreakPolicy& policy,
                    std::size_t jobs = 1, const RunOptions& options = {});

}  // namespace nodecut
