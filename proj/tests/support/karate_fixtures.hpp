#pragma once

// Node sets of the seven karate communities. C1/C4 and C2/C3 are the two
// covering pairs; sizes and psi agree with the published table.

#include <string>
#include <vector>

#include "nodecut/graph.hpp"

namespace fixtures {

inline const std::vector<std::vector<std::string>>& karate_communities() {
    static const std::vector<std::vector<std::string>> sets = {
        {"1",  "2",  "3",  "4",  "8",  "9",  "10", "12", "13", "14", "15", "16", "18", "19", "20",
         "21", "22", "23", "24", "25", "26", "27", "28", "29", "30", "31", "32", "33", "34"},
        {"3",  "9",  "10", "14", "15", "16", "19", "20", "21", "23", "24",
         "25", "26", "27", "28", "29", "30", "31", "32", "33", "34"},
        {"1", "2", "3", "4", "5", "6", "7", "8", "9", "11", "12", "13", "14", "17", "18", "20", "22", "31", "32"},
        {"1", "5", "6", "7", "11", "17"},
        {"24", "25", "26", "28", "32"},
        {"3", "10", "34"},
        {"1", "12"},
    };
    return sets;
}

inline nodecut::NodeSet karate_set(const nodecut::Graph& g, std::size_t one_based) {
    return g.nodes_of(karate_communities().at(one_based - 1));
}

}  // namespace fixtures
