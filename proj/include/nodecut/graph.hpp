#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "nodecut/error.hpp"

namespace nodecut {

using NodeId = std::uint32_t;
using LinkId = std::uint32_t;

inline constexpr NodeId kNoNode = static_cast<NodeId>(-1);

/// Membership set over the dense index range [0, universe). Value type with
/// O(1) membership tests; iteration through members() is in ascending order.
template <class Tag>
class IndexSet {
public:
    using index_type = std::uint32_t;

    IndexSet() = default;
    explicit IndexSet(std::size_t universe) : bits_(universe, 0) {}
    IndexSet(std::size_t universe, std::initializer_list<index_type> items) : bits_(universe, 0) {
        for (auto i : items) insert(i);
    }

    static IndexSet full(std::size_t universe) {
        IndexSet s(universe);
        for (std::size_t i = 0; i < universe; ++i) s.insert(static_cast<index_type>(i));
        return s;
    }

    template <class Range>
    static IndexSet from(std::size_t universe, const Range& items) {
        IndexSet s(universe);
        for (auto i : items) s.insert(static_cast<index_type>(i));
        return s;
    }

    std::size_t universe() const noexcept { return bits_.size(); }
    std::size_t size() const noexcept { return count_; }
    bool empty() const noexcept { return count_ == 0; }

    bool contains(index_type i) const noexcept { return i < bits_.size() && bits_[i] != 0; }

    bool insert(index_type i) {
        if (i >= bits_.size()) throw Error(ErrorKind::UnknownLabel, "index out of range: " + std::to_string(i));
        if (bits_[i]) return false;
        bits_[i] = 1;
        ++count_;
        return true;
    }

    bool erase(index_type i) noexcept {
        if (!contains(i)) return false;
        bits_[i] = 0;
        --count_;
        return true;
    }

    std::vector<index_type> members() const {
        std::vector<index_type> out;
        out.reserve(count_);
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i]) out.push_back(static_cast<index_type>(i));
        return out;
    }

    bool is_subset_of(const IndexSet& other) const noexcept {
        if (count_ > other.count_) return false;
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i] && !other.contains(static_cast<index_type>(i))) return false;
        return true;
    }

    IndexSet intersect(const IndexSet& other) const {
        IndexSet out(bits_.size());
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i] && other.contains(static_cast<index_type>(i))) out.insert(static_cast<index_type>(i));
        return out;
    }

    IndexSet unite(const IndexSet& other) const {
        IndexSet out(std::max(bits_.size(), other.universe()));
        for (std::size_t i = 0; i < out.universe(); ++i) {
            auto idx = static_cast<index_type>(i);
            if (contains(idx) || other.contains(idx)) out.insert(idx);
        }
        return out;
    }

    std::size_t intersection_size(const IndexSet& other) const noexcept {
        std::size_t n = 0;
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i] && other.contains(static_cast<index_type>(i))) ++n;
        return n;
    }

    std::size_t hash() const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (std::size_t i = 0; i < bits_.size(); ++i) {
            if (bits_[i]) {
                h ^= i + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            }
        }
        return h;
    }

    friend bool operator==(const IndexSet& a, const IndexSet& b) noexcept {
        return a.count_ == b.count_ && a.bits_ == b.bits_;
    }

private:
    std::vector<std::uint8_t> bits_;
    std::size_t count_ = 0;
};

struct NodeTag {};
struct LinkTag {};
using NodeSet = IndexSet<NodeTag>;
using LinkSet = IndexSet<LinkTag>;

template <class Set>
struct SetHash {
    std::size_t operator()(const Set& s) const noexcept { return s.hash(); }
};

struct Arc {
    NodeId node;
    LinkId link;
    double weight;
};

/// Undirected link; u precedes v in label order.
struct Link {
    NodeId u;
    NodeId v;
    double weight;
};

/// Orders node labels: all-digit labels numerically and before other labels,
/// which compare lexicographically.
bool label_less(std::string_view a, std::string_view b);

/// Immutable undirected weighted graph without self-loops or parallel links.
///
/// Internal node indices follow label order (see label_less), and link ids
/// follow the (u, v) index order, so two graphs with the same labelled links
/// are identical regardless of the order they were read in. "Smallest label"
/// tie-breaking is therefore "smallest index".
class Graph {
public:
    struct Edge {
        std::string u;
        std::string v;
        double weight = 1.0;
    };

    Graph() = default;

    /// Builds from labelled edges. Parallel edges must already be merged;
    /// self-loops and non-positive weights are rejected.
    static Graph from_edges(std::span<const Edge> edges, std::span<const std::string> isolated = {});

    std::size_t node_count() const noexcept { return labels_.size(); }
    std::size_t link_count() const noexcept { return links_.size(); }

    std::span<const Arc> arcs(NodeId i) const {
        return {arcs_.data() + offsets_[i], arcs_.data() + offsets_[i + 1]};
    }
    std::size_t neighbor_count(NodeId i) const { return offsets_[i + 1] - offsets_[i]; }

    const Link& link(LinkId k) const { return links_[k]; }
    std::span<const Link> links() const noexcept { return links_; }

    /// k_i: total weight incident to node i.
    double degree(NodeId i) const { return degrees_[i]; }

    const std::string& label(NodeId i) const { return labels_[i]; }
    std::span<const std::string> labels() const noexcept { return labels_; }

    std::optional<NodeId> find(std::string_view label) const;
    /// Throws UnknownLabel.
    NodeId node(std::string_view label) const;
    std::optional<LinkId> find_link(NodeId a, NodeId b) const;
    /// Throws UnknownLabel when the two labels are not linked.
    LinkId link_between(std::string_view a, std::string_view b) const;

    /// True when some link weight differs from 1.
    bool weighted() const noexcept { return weighted_; }

    NodeSet empty_nodes() const { return NodeSet(node_count()); }
    NodeSet all_nodes() const { return NodeSet::full(node_count()); }
    NodeSet nodes_of(std::initializer_list<std::string_view> labels) const;
    NodeSet nodes_of(std::span<const std::string> labels) const;
    LinkSet empty_links() const { return LinkSet(link_count()); }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, NodeId> index_;
    std::vector<std::size_t> offsets_;
    std::vector<Arc> arcs_;
    std::vector<Link> links_;
    std::vector<double> degrees_;
    bool weighted_ = false;
};

/// Parses an edge list: one "u v" or "u v w" per line, '#' starts a comment,
/// tokens are whitespace separated. Without `weighted` a third column is
/// ignored and every weight is 1. Repeated pairs are merged (weights summed
/// when weighted, collapsed otherwise) and reported through `warnings`.
Graph load_edge_list(std::istream& in, bool weighted, std::vector<std::string>* warnings = nullptr);
Graph load_edge_list_file(const std::string& path, bool weighted, std::vector<std::string>* warnings = nullptr);

/// Writes one "u v" (or "u v w" for weighted graphs) line per link.
void write_edge_list(std::ostream& out, const Graph& g);

/// L(C): links with both endpoints in c.
LinkSet induced_links(const Graph& g, const NodeSet& c);
/// C(L): endpoints of the links in l.
NodeSet induced_nodes(const Graph& g, const LinkSet& l);
/// Nodes outside c adjacent to at least one member.
NodeSet neighbors_of_set(const Graph& g, const NodeSet& c);
/// Empty sets are not connected; a single node is.
bool is_connected(const Graph& g, const NodeSet& c);
/// Members with positive external degree.
NodeSet boundary_nodes(const Graph& g, const NodeSet& c);
/// Members whose removal disconnects the subgraph induced by c.
NodeSet articulation_points(const Graph& g, const NodeSet& c);
/// Nodes reachable from `start`.
NodeSet component_of(const Graph& g, NodeId start);
bool is_connected(const Graph& g);

/// Labels of the members of c in label order.
std::vector<std::string> labels_of(const Graph& g, const NodeSet& c);

}  // namespace nodecut
