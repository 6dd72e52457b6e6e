#include "nodecut/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

namespace nodecut {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Parse: return "ParseError";
        case ErrorKind::ZeroInternalDegree: return "ZeroInternalDegree";
        case ErrorKind::NotANeighbor: return "NotANeighbor";
        case ErrorKind::NotAMember: return "NotAMember";
        case ErrorKind::WeightedUnsupported: return "WeightedUnsupported";
        case ErrorKind::EmptyCut: return "EmptyCut";
        case ErrorKind::NoFrontier: return "NoFrontier";
        case ErrorKind::DisconnectedGraph: return "DisconnectedGraph";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::EmptyUnion: return "EmptyUnion";
        case ErrorKind::NoLowerCommunity: return "NoLowerCommunity";
        case ErrorKind::UnknownLabel: return "UnknownLabel";
        case ErrorKind::Io: return "IoError";
    }
    return "Unknown";
}

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::string_view strip_zeros(std::string_view s) {
    auto pos = s.find_first_not_of('0');
    return pos == std::string_view::npos ? s.substr(s.size() - 1) : s.substr(pos);
}

}  // namespace

bool label_less(std::string_view a, std::string_view b) {
    bool da = all_digits(a);
    bool db = all_digits(b);
    if (da != db) return da;
    if (da) {
        auto sa = strip_zeros(a);
        auto sb = strip_zeros(b);
        if (sa.size() != sb.size()) return sa.size() < sb.size();
        if (sa != sb) return sa < sb;
    }
    return a < b;
}

Graph Graph::from_edges(std::span<const Edge> edges, std::span<const std::string> isolated) {
    std::vector<std::string> labels;
    labels.reserve(edges.size() * 2 + isolated.size());
    for (const auto& e : edges) {
        if (e.u == e.v) throw Error(ErrorKind::Parse, "self-loop at node " + e.u);
        if (!(e.weight > 0.0) || !std::isfinite(e.weight))
            throw Error(ErrorKind::Parse, "non-positive weight on link " + e.u + " " + e.v);
        labels.push_back(e.u);
        labels.push_back(e.v);
    }
    labels.insert(labels.end(), isolated.begin(), isolated.end());
    std::sort(labels.begin(), labels.end(), [](const auto& a, const auto& b) { return label_less(a, b); });
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

    Graph g;
    g.labels_ = std::move(labels);
    for (NodeId i = 0; i < g.labels_.size(); ++i) g.index_.emplace(g.labels_[i], i);

    std::vector<Link> links;
    links.reserve(edges.size());
    for (const auto& e : edges) {
        NodeId a = g.index_.at(e.u);
        NodeId b = g.index_.at(e.v);
        if (b < a) std::swap(a, b);
        links.push_back({a, b, e.weight});
        if (e.weight != 1.0) g.weighted_ = true;
    }
    std::sort(links.begin(), links.end(), [](const Link& x, const Link& y) {
        return x.u != y.u ? x.u < y.u : x.v < y.v;
    });
    for (std::size_t k = 1; k < links.size(); ++k) {
        if (links[k].u == links[k - 1].u && links[k].v == links[k - 1].v)
            throw Error(ErrorKind::Parse, "duplicate link " + g.labels_[links[k].u] + " " + g.labels_[links[k].v]);
    }
    g.links_ = std::move(links);

    const std::size_t n = g.labels_.size();
    std::vector<std::size_t> counts(n + 1, 0);
    for (const auto& l : g.links_) {
        ++counts[l.u + 1];
        ++counts[l.v + 1];
    }
    std::partial_sum(counts.begin(), counts.end(), counts.begin());
    g.offsets_ = counts;
    g.arcs_.resize(g.links_.size() * 2);
    g.degrees_.assign(n, 0.0);
    std::vector<std::size_t> fill(counts.begin(), counts.end() - 1);
    for (LinkId k = 0; k < g.links_.size(); ++k) {
        const auto& l = g.links_[k];
        g.arcs_[fill[l.u]++] = {l.v, k, l.weight};
        g.arcs_[fill[l.v]++] = {l.u, k, l.weight};
        g.degrees_[l.u] += l.weight;
        g.degrees_[l.v] += l.weight;
    }
    for (NodeId i = 0; i < n; ++i) {
        std::sort(g.arcs_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i]),
                  g.arcs_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i + 1]),
                  [](const Arc& x, const Arc& y) { return x.node < y.node; });
    }
    return g;
}

std::optional<NodeId> Graph::find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

NodeId Graph::node(std::string_view label) const {
    if (auto i = find(label)) return *i;
    throw Error(ErrorKind::UnknownLabel, "unknown node label '" + std::string(label) + "'");
}

std::optional<LinkId> Graph::find_link(NodeId a, NodeId b) const {
    auto row = arcs(a);
    auto it = std::lower_bound(row.begin(), row.end(), b, [](const Arc& x, NodeId v) { return x.node < v; });
    if (it == row.end() || it->node != b) return std::nullopt;
    return it->link;
}

LinkId Graph::link_between(std::string_view a, std::string_view b) const {
    if (auto k = find_link(node(a), node(b))) return *k;
    throw Error(ErrorKind::UnknownLabel, "no link between '" + std::string(a) + "' and '" + std::string(b) + "'");
}

NodeSet Graph::nodes_of(std::initializer_list<std::string_view> labels) const {
    NodeSet s(node_count());
    for (auto l : labels) s.insert(node(l));
    return s;
}

NodeSet Graph::nodes_of(std::span<const std::string> labels) const {
    NodeSet s(node_count());
    for (const auto& l : labels) s.insert(node(l));
    return s;
}

Graph load_edge_list(std::istream& in, bool weighted, std::vector<std::string>* warnings) {
    std::map<std::pair<std::string, std::string>, double> merged;
    std::vector<std::pair<std::string, std::string>> order;
    std::string line;
    std::size_t lineno = 0;
    bool warned_extra = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream tokens(line);
        std::vector<std::string> tok;
        for (std::string t; tokens >> t;) tok.push_back(std::move(t));
        if (tok.empty()) continue;
        auto where = "line " + std::to_string(lineno) + ": ";
        if (tok.size() < 2) throw Error(ErrorKind::Parse, where + "expected 'u v' or 'u v w'");
        if (tok[0] == tok[1]) throw Error(ErrorKind::Parse, where + "self-loop at node " + tok[0]);
        double w = 1.0;
        if (weighted && tok.size() >= 3) {
            const auto& s = tok[2];
            auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), w);
            if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(w))
                throw Error(ErrorKind::Parse, where + "invalid weight '" + s + "'");
            if (w <= 0.0) throw Error(ErrorKind::Parse, where + "non-positive weight " + s);
        } else if (!weighted && tok.size() >= 3 && !warned_extra && warnings) {
            warnings->push_back(where + "extra columns ignored (not reading weights)");
            warned_extra = true;
        }
        auto key = label_less(tok[1], tok[0]) ? std::pair{tok[1], tok[0]} : std::pair{tok[0], tok[1]};
        auto [it, inserted] = merged.emplace(key, w);
        if (inserted) {
            order.push_back(key);
        } else {
            if (weighted) it->second += w;
            if (warnings)
                warnings->push_back(where + "duplicate link " + key.first + " " + key.second +
                                    (weighted ? " merged by summing weights" : " ignored"));
        }
    }
    std::vector<Graph::Edge> edges;
    edges.reserve(order.size());
    for (const auto& key : order) edges.push_back({key.first, key.second, merged.at(key)});
    return Graph::from_edges(edges);
}

Graph load_edge_list_file(const std::string& path, bool weighted, std::vector<std::string>* warnings) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
    return load_edge_list(in, weighted, warnings);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    auto old_precision = out.precision(17);
    for (const auto& l : g.links()) {
        out << g.label(l.u) << ' ' << g.label(l.v);
        if (g.weighted()) out << ' ' << l.weight;
        out << '\n';
    }
    out.precision(old_precision);
}

LinkSet induced_links(const Graph& g, const NodeSet& c) {
    LinkSet out(g.link_count());
    for (auto i : c.members())
        for (const auto& a : g.arcs(i))
            if (a.node > i && c.contains(a.node)) out.insert(a.link);
    return out;
}

NodeSet induced_nodes(const Graph& g, const LinkSet& l) {
    NodeSet out(g.node_count());
    for (auto k : l.members()) {
        out.insert(g.link(k).u);
        out.insert(g.link(k).v);
    }
    return out;
}

NodeSet neighbors_of_set(const Graph& g, const NodeSet& c) {
    NodeSet out(g.node_count());
    for (auto i : c.members())
        for (const auto& a : g.arcs(i))
            if (!c.contains(a.node)) out.insert(a.node);
    return out;
}

bool is_connected(const Graph& g, const NodeSet& c) {
    if (c.empty()) return false;
    auto members = c.members();
    NodeSet seen(g.node_count());
    std::vector<NodeId> stack{members.front()};
    seen.insert(members.front());
    while (!stack.empty()) {
        NodeId x = stack.back();
        stack.pop_back();
        for (const auto& a : g.arcs(x)) {
            if (c.contains(a.node) && seen.insert(a.node)) stack.push_back(a.node);
        }
    }
    return seen.size() == c.size();
}

NodeSet boundary_nodes(const Graph& g, const NodeSet& c) {
    NodeSet out(g.node_count());
    for (auto i : c.members()) {
        for (const auto& a : g.arcs(i)) {
            if (!c.contains(a.node)) {
                out.insert(i);
                break;
            }
        }
    }
    return out;
}

NodeSet articulation_points(const Graph& g, const NodeSet& c) {
    // Iterative Tarjan low-link over the induced subgraph.
    NodeSet out(g.node_count());
    const std::size_t n = g.node_count();
    constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
    std::vector<std::size_t> disc(n, unvisited), low(n, 0);
    std::vector<NodeId> parent(n, kNoNode);
    struct Frame {
        NodeId node;
        std::size_t next;
    };
    std::size_t timer = 0;
    for (auto root : c.members()) {
        if (disc[root] != unvisited) continue;
        std::size_t root_children = 0;
        std::vector<Frame> stack{{root, 0}};
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            auto& f = stack.back();
            auto arcs = g.arcs(f.node);
            if (f.next < arcs.size()) {
                NodeId w = arcs[f.next++].node;
                if (!c.contains(w)) continue;
                if (disc[w] == unvisited) {
                    parent[w] = f.node;
                    disc[w] = low[w] = timer++;
                    if (f.node == root) ++root_children;
                    stack.push_back({w, 0});
                } else if (w != parent[f.node]) {
                    low[f.node] = std::min(low[f.node], disc[w]);
                }
            } else {
                NodeId v = f.node;
                stack.pop_back();
                if (!stack.empty()) {
                    NodeId p = stack.back().node;
                    low[p] = std::min(low[p], low[v]);
                    if (p != root && low[v] >= disc[p]) out.insert(p);
                }
            }
        }
        if (root_children > 1) out.insert(root);
    }
    return out;
}

NodeSet component_of(const Graph& g, NodeId start) {
    NodeSet seen(g.node_count());
    std::vector<NodeId> stack{start};
    seen.insert(start);
    while (!stack.empty()) {
        NodeId x = stack.back();
        stack.pop_back();
        for (const auto& a : g.arcs(x))
            if (seen.insert(a.node)) stack.push_back(a.node);
    }
    return seen;
}

bool is_connected(const Graph& g) {
    return g.node_count() > 0 && component_of(g, 0).size() == g.node_count();
}

std::vector<std::string> labels_of(const Graph& g, const NodeSet& c) {
    std::vector<std::string> out;
    out.reserve(c.size());
    for (auto i : c.members()) out.push_back(g.label(i));
    return out;
}

}  // namespace nodecut
