#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "nodecut/community.hpp"
#include "nodecut/graph.hpp"

namespace nodecut {

struct LandscapeOptions {
    /// Refuse graphs with more nodes unless `force` is set.
    std::size_t max_nodes = 16;
    bool force = false;
};

/// Hard limit of the bitmask enumeration, independent of `force`.
inline constexpr std::size_t kLandscapeHardLimit = 63;

/// Calls `visit` once for every connected node set with at least one internal
/// link (i.e. at least two nodes). Throws TooLarge.
void for_each_connected_subgraph(const Graph& g, const std::function<void(const NodeSet&)>& visit,
                                 const LandscapeOptions& options = {});

std::vector<NodeSet> enumerate_connected_subgraphs(const Graph& g, const LandscapeOptions& options = {});

/// Every place of the landscape none of whose neighbours (one node added, or
/// one node removed while staying connected) has strictly smaller psi. Whole
/// components are excluded. Sorted like the greedy output (psi, then size
/// descending). Throws TooLarge.
std::vector<Community> exact_local_minima(const Graph& g, const LandscapeOptions& options = {});

/// Neighbourhood certificate for a single node set, evaluated from scratch.
/// Throws ZeroInternalDegree when c spans no link.
bool verify_local_minimum(const Graph& g, const NodeSet& c);

/// (|M u N| - |M n N|) / |M u N|. Throws EmptyUnion.
double jaccard_distance(const NodeSet& m, const NodeSet& n);

/// Shortest Jaccard distance from target to a community with strictly lower
/// psi. Throws NoLowerCommunity when there is none.
double stability(const Community& target, std::span<const Community> all);

}  // namespace nodecut
