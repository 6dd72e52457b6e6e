#include "nodecut/karate.hpp"

#include <sstream>

namespace nodecut {

namespace {

// Zachary's karate club, unweighted, 1-based labels.
constexpr std::string_view kKarate =
    "1 2\n1 3\n1 4\n1 5\n1 6\n1 7\n"
    "1 8\n1 9\n1 11\n1 12\n1 13\n1 14\n"
    "1 18\n1 20\n1 22\n1 32\n2 3\n2 4\n"
    "2 8\n2 14\n2 18\n2 20\n2 22\n2 31\n"
    "3 4\n3 8\n3 9\n3 10\n3 14\n3 28\n"
    "3 29\n3 33\n4 8\n4 13\n4 14\n5 7\n"
    "5 11\n6 7\n6 11\n6 17\n7 17\n9 31\n"
    "9 33\n9 34\n10 34\n14 34\n15 33\n15 34\n"
    "16 33\n16 34\n19 33\n19 34\n20 34\n21 33\n"
    "21 34\n23 33\n23 34\n24 26\n24 28\n24 30\n"
    "24 33\n24 34\n25 26\n25 28\n25 32\n26 32\n"
    "27 30\n27 34\n28 34\n29 32\n29 34\n30 33\n"
    "30 34\n31 33\n31 34\n32 33\n32 34\n33 34\n";

}  // namespace

std::string_view karate_edge_list() { return kKarate; }

Graph karate_club() {
    std::istringstream in{std::string(kKarate)};
    return load_edge_list(in, false);
}

}  // namespace nodecut
