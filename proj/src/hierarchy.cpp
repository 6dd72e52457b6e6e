#include "nodecut/hierarchy.hpp"

#include <algorithm>
#include <ostream>

namespace nodecut {

std::string_view to_string(OverlapKind kind) {
    switch (kind) {
        case OverlapKind::disjoint: return "disjoint";
        case OverlapKind::nested: return "nested";
        case OverlapKind::boundary_overlap: return "boundary-overlap";
        case OverlapKind::permeating: return "permeating";
    }
    return "unknown";
}

OverlapRelation classify_overlap(const Graph& g, const Community& a, const Community& b) {
    OverlapRelation r;
    r.shared_nodes = a.nodes.intersect(b.nodes);
    r.shared_links = induced_links(g, r.shared_nodes);
    if (r.shared_nodes.empty()) {
        r.kind = OverlapKind::disjoint;
    } else if (a.nodes.is_subset_of(b.nodes) || b.nodes.is_subset_of(a.nodes)) {
        r.kind = OverlapKind::nested;
    } else {
        auto boundary_a = boundary_nodes(g, a.nodes);
        auto boundary_b = boundary_nodes(g, b.nodes);
        bool all_boundary = true;
        for (auto i : r.shared_nodes.members())
            if (!boundary_a.contains(i) || !boundary_b.contains(i)) all_boundary = false;
        r.kind = all_boundary ? OverlapKind::boundary_overlap : OverlapKind::permeating;
    }
    return r;
}

std::vector<std::size_t> PolyhierarchyDag::parents(std::size_t v) const {
    std::vector<std::size_t> out;
    for (const auto& [p, c] : edges)
        if (c == v) out.push_back(p);
    return out;
}

std::vector<std::size_t> PolyhierarchyDag::children(std::size_t v) const {
    std::vector<std::size_t> out;
    for (const auto& [p, c] : edges)
        if (p == v) out.push_back(c);
    return out;
}

bool PolyhierarchyDag::has_edge(std::size_t parent, std::size_t child) const {
    return std::find(edges.begin(), edges.end(), std::pair{parent, child}) != edges.end();
}

bool PolyhierarchyDag::is_tree() const {
    for (std::size_t v = 1; v < vertices.size(); ++v)
        if (parents(v).size() != 1) return false;
    return true;
}

PolyhierarchyDag build_polyhierarchy(const Graph& g, std::span<const Community> communities) {
    PolyhierarchyDag dag;
    dag.names.push_back("C0");
    dag.vertices.push_back(g.all_nodes());
    for (const auto& c : communities) {
        dag.names.push_back(c.name.empty() ? "C" + std::to_string(dag.names.size()) : c.name);
        dag.vertices.push_back(c.nodes);
    }
    const std::size_t n = dag.vertices.size();
    auto strictly_inside = [&](std::size_t inner, std::size_t outer) {
        const auto& a = dag.vertices[inner];
        const auto& b = dag.vertices[outer];
        return a.size() < b.size() && a.is_subset_of(b);
    };
    for (std::size_t parent = 0; parent < n; ++parent) {
        for (std::size_t child = 1; child < n; ++child) {
            if (child == parent || !strictly_inside(child, parent)) continue;
            bool direct = true;
            for (std::size_t mid = 1; mid < n && direct; ++mid) {
                if (mid == parent || mid == child) continue;
                if (strictly_inside(child, mid) && strictly_inside(mid, parent)) direct = false;
            }
            if (direct) dag.edges.emplace_back(parent, child);
        }
    }
    return dag;
}

bool cover_check(const Graph& g, const Community& a, const Community& b) {
    return a.nodes.unite(b.nodes).size() == g.node_count();
}

void write_dot(std::ostream& out, const PolyhierarchyDag& dag) {
    out << "digraph polyhierarchy {\n";
    out << "  rankdir=TB;\n";
    for (std::size_t v = 0; v < dag.vertices.size(); ++v)
        out << "  \"" << dag.names[v] << "\" [label=\"" << dag.names[v] << " (" << dag.vertices[v].size()
            << ")\"];\n";
    for (const auto& [p, c] : dag.edges) out << "  \"" << dag.names[p] << "\" -> \"" << dag.names[c] << "\";\n";
    out << "}\n";
}

}  // namespace nodecut
