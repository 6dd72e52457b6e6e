#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nodecut/community.hpp"
#include "nodecut/graph.hpp"

namespace nodecut {

enum class OverlapKind { disjoint, nested, boundary_overlap, permeating };

std::string_view to_string(OverlapKind kind);

struct OverlapRelation {
    OverlapKind kind = OverlapKind::disjoint;
    NodeSet shared_nodes;
    LinkSet shared_links;
};

/// Nested wins when one node set contains the other. Otherwise a non-empty
/// intersection is a boundary overlap when every shared node is a boundary
/// node of both communities, and permeating when some shared node is inner
/// to at least one of them. Boundaries are recomputed from g.
OverlapRelation classify_overlap(const Graph& g, const Community& a, const Community& b);

/// Containment DAG. Vertex 0 is the whole graph (C0); vertex k > 0 is
/// communities[k - 1]. An edge (parent, child) means child is strictly
/// contained in parent with no community strictly in between.
struct PolyhierarchyDag {
    std::vector<std::string> names;
    std::vector<NodeSet> vertices;
    std::vector<std::pair<std::size_t, std::size_t>> edges;

    std::vector<std::size_t> parents(std::size_t v) const;
    std::vector<std::size_t> children(std::size_t v) const;
    bool has_edge(std::size_t parent, std::size_t child) const;
    bool is_tree() const;
};

PolyhierarchyDag build_polyhierarchy(const Graph& g, std::span<const Community> communities);

/// True when the two node sets together cover every node of g.
bool cover_check(const Graph& g, const Community& a, const Community& b);

void write_dot(std::ostream& out, const PolyhierarchyDag& dag);

}  // namespace nodecut
