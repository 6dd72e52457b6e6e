#pragma once

#include <string_view>

#include "nodecut/graph.hpp"

namespace nodecut {

/// Embedded 34-node, 78-link karate club edge list.
std::string_view karate_edge_list();
Graph karate_club();

}  // namespace nodecut
