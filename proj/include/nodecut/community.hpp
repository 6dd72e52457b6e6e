#pragma once

#include <optional>
#include <string>

#include "nodecut/graph.hpp"

namespace nodecut {

/// A local minimum of psi, frozen.
struct Community {
    NodeSet nodes;
    LinkSet links;   ///< L(nodes)
    double psi = 0.0;
    NodeSet boundary;
    std::size_t seed_count = 0;
    std::optional<double> stability;
    std::string name;
};

/// Fills links, psi (from scratch) and boundary for a connected node set.
Community make_community(const Graph& g, NodeSet nodes);

}  // namespace nodecut
