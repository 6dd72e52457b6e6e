#include "nodecut/landscape.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <unordered_map>

#include "nodecut/explorer.hpp"
#include "nodecut/psi.hpp"

namespace nodecut {

namespace {

using Mask = std::uint64_t;

struct MaskGraph {
    std::vector<Mask> adj;
    std::vector<std::vector<std::pair<NodeId, double>>> weighted;
    std::vector<double> degree;

    explicit MaskGraph(const Graph& g) : adj(g.node_count(), 0), weighted(g.node_count()), degree(g.node_count()) {
        for (NodeId i = 0; i < g.node_count(); ++i) {
            degree[i] = g.degree(i);
            for (const auto& a : g.arcs(i)) {
                adj[i] |= Mask{1} << a.node;
                weighted[i].emplace_back(a.node, a.weight);
            }
        }
    }

    double psi(Mask c) const {
        double k_in = 0.0;
        double sigma = 0.0;
        for (Mask rest = c; rest; rest &= rest - 1) {
            auto i = static_cast<NodeId>(std::countr_zero(rest));
            double in = 0.0;
            double out = 0.0;
            for (const auto& [j, w] : weighted[i]) ((c >> j) & 1 ? in : out) += w;
            k_in += in;
            sigma += in * out / degree[i];
        }
        return sigma / k_in;
    }

    Mask frontier(Mask c) const {
        Mask f = 0;
        for (Mask rest = c; rest; rest &= rest - 1) f |= adj[std::countr_zero(rest)];
        return f & ~c;
    }
};

void check_size(const Graph& g, const LandscapeOptions& options) {
    const auto n = g.node_count();
    if (n > kLandscapeHardLimit)
        throw Error(ErrorKind::TooLarge, "exhaustive landscape supports at most " +
                                             std::to_string(kLandscapeHardLimit) + " nodes, graph has " +
                                             std::to_string(n));
    if (n > options.max_nodes && !options.force)
        throw Error(ErrorKind::TooLarge, "graph has " + std::to_string(n) + " nodes, above the cap of " +
                                             std::to_string(options.max_nodes) + " (use force to override)");
}

// Connected-subgraph enumeration by exclusive-neighbourhood extension: every
// connected set is generated exactly once, from its smallest member `root`.
template <class Visit>
void extend(const MaskGraph& mg, Mask sub, Mask sub_nbrs, Mask ext, Mask above_root, Visit& visit) {
    if (std::popcount(sub) >= 2) visit(sub);
    while (ext) {
        auto w = static_cast<unsigned>(std::countr_zero(ext));
        ext &= ext - 1;
        Mask next_sub = sub | (Mask{1} << w);
        Mask exclusive = mg.adj[w] & ~sub & ~sub_nbrs & above_root;
        extend(mg, next_sub, (sub_nbrs | mg.adj[w]) & ~next_sub, ext | exclusive, above_root, visit);
    }
}

template <class Visit>
void enumerate_masks(const Graph& g, Visit&& visit) {
    MaskGraph mg(g);
    const auto n = static_cast<unsigned>(g.node_count());
    for (unsigned root = 0; root < n; ++root) {
        Mask above = ~Mask{0} << (root + 1);  // root <= 62
        Mask sub = Mask{1} << root;
        extend(mg, sub, mg.adj[root], mg.adj[root] & above, above, visit);
    }
}

NodeSet to_node_set(std::size_t n, Mask m) {
    NodeSet s(n);
    for (; m; m &= m - 1) s.insert(static_cast<NodeId>(std::countr_zero(m)));
    return s;
}

}  // namespace

void for_each_connected_subgraph(const Graph& g, const std::function<void(const NodeSet&)>& visit,
                                 const LandscapeOptions& options) {
    check_size(g, options);
    const auto n = g.node_count();
    auto adapter = [&](Mask m) { visit(to_node_set(n, m)); };
    enumerate_masks(g, adapter);
}

std::vector<NodeSet> enumerate_connected_subgraphs(const Graph& g, const LandscapeOptions& options) {
    std::vector<NodeSet> out;
    for_each_connected_subgraph(g, [&](const NodeSet& s) { out.push_back(s); }, options);
    return out;
}

std::vector<Community> exact_local_minima(const Graph& g, const LandscapeOptions& options) {
    check_size(g, options);
    MaskGraph mg(g);
    std::unordered_map<Mask, double> height;
    std::vector<Mask> places;
    auto record = [&](Mask m) {
        places.push_back(m);
        height.emplace(m, mg.psi(m));
    };
    enumerate_masks(g, record);

    std::vector<Community> out;
    for (Mask place : places) {
        Mask up = mg.frontier(place);
        if (up == 0) continue;
        const double h = height.at(place);
        bool minimum = true;
        for (Mask rest = up; rest && minimum; rest &= rest - 1) {
            Mask q = place | (Mask{1} << std::countr_zero(rest));
            if (height.at(q) < h - kPsiTolerance) minimum = false;
        }
        if (std::popcount(place) >= 3) {
            for (Mask rest = place; rest && minimum; rest &= rest - 1) {
                Mask q = place & ~(Mask{1} << std::countr_zero(rest));
                // Only connected sets are places, so the lookup doubles as the connectivity test.
                if (auto it = height.find(q); it != height.end() && it->second < h - kPsiTolerance) minimum = false;
            }
        }
        if (minimum) out.push_back(make_community(g, to_node_set(g.node_count(), place)));
    }
    std::sort(out.begin(), out.end(), [](const Community& a, const Community& b) {
        if (a.psi != b.psi) return a.psi < b.psi;
        if (a.nodes.size() != b.nodes.size()) return a.nodes.size() > b.nodes.size();
        return a.nodes.members() < b.nodes.members();
    });
    for (std::size_t k = 0; k < out.size(); ++k) out[k].name = "M" + std::to_string(k + 1);
    return out;
}

bool verify_local_minimum(const Graph& g, const NodeSet& c) {
    const double h = psi(g, c);
    if (!is_connected(g, c)) return false;
    for (auto j : neighbors_of_set(g, c).members()) {
        NodeSet up = c;
        up.insert(j);
        if (psi(g, up) < h - kPsiTolerance) return false;
    }
    if (c.size() >= 3) {
        for (auto i : c.members()) {
            NodeSet down = c;
            down.erase(i);
            if (!is_connected(g, down)) continue;
            if (psi(g, down) < h - kPsiTolerance) return false;
        }
    }
    return true;
}

double jaccard_distance(const NodeSet& m, const NodeSet& n) {
    const std::size_t common = m.intersection_size(n);
    const std::size_t total = m.size() + n.size() - common;
    if (total == 0) throw Error(ErrorKind::EmptyUnion, "jaccard distance of two empty sets");
    return static_cast<double>(total - common) / static_cast<double>(total);
}

double stability(const Community& target, std::span<const Community> all) {
    double best = std::numeric_limits<double>::infinity();
    bool found = false;
    for (const auto& other : all) {
        if (!(other.psi < target.psi - kPsiTolerance)) continue;
        best = std::min(best, jaccard_distance(target.nodes, other.nodes));
        found = true;
    }
    if (!found) throw Error(ErrorKind::NoLowerCommunity, "no community with lower psi");
    return best;
}

}  // namespace nodecut
