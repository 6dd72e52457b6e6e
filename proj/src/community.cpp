#include "nodecut/community.hpp"

#include "nodecut/psi.hpp"

namespace nodecut {

Community make_community(const Graph& g, NodeSet nodes) {
    Community c;
    c.links = induced_links(g, nodes);
    c.psi = psi(g, nodes);
    c.boundary = boundary_nodes(g, nodes);
    c.nodes = std::move(nodes);
    return c;
}

}  // namespace nodecut
