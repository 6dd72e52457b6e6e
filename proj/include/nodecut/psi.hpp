#pragma once

#include <optional>
#include <span>
#include <vector>

#include "nodecut/graph.hpp"

namespace nodecut {

/// Normalised node cut of c, evaluated from scratch:
///   psi(C) = (1 / k_in(C)) * sum_{i in C} k_i^in(C) k_i^out(C) / k_i.
/// Throws ZeroInternalDegree when c spans no link.
double psi(const Graph& g, const NodeSet& c);

/// Mutable subgraph tracker for single-node moves.
///
/// Caches k_i^in(C) for every node of the graph (members and outsiders), so
/// the external degree of any node is k_i - k_i^in(C) and the frontier is the
/// set of outsiders with at least one member neighbour. sigma is the numerator
/// of psi and is updated through the closed-form add/remove differences.
class SubgraphState {
public:
    /// Throws ZeroInternalDegree when c spans no link.
    SubgraphState(const Graph& g, NodeSet c);

    const Graph& graph() const noexcept { return *graph_; }
    const NodeSet& members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }

    double internal_degree(NodeId i) const { return in_deg_[i]; }
    double external_degree(NodeId i) const { return graph_->degree(i) - in_deg_[i]; }
    /// Number of member neighbours of i.
    std::size_t member_neighbors(NodeId i) const { return member_nbrs_[i]; }

    /// k_in(C), the sum of internal degrees of the members.
    double total_internal_degree() const noexcept { return k_in_; }
    std::size_t internal_link_count() const noexcept { return internal_links_; }
    double sigma() const noexcept { return sigma_; }
    double psi() const noexcept { return sigma_ / k_in_; }

    /// Outsiders adjacent to the subgraph, in no particular order.
    std::span<const NodeId> frontier() const noexcept { return frontier_; }
    bool on_frontier(NodeId i) const { return frontier_pos_[i] != kAbsent; }

    /// sigma(C u i) - sigma(C). Throws NotANeighbor unless i is on the frontier.
    double delta_sigma_add(NodeId i) const;
    /// sigma(C \ i) - sigma(C). Throws NotAMember.
    double delta_sigma_remove(NodeId i) const;

    double psi_after_add(NodeId i) const;
    /// Empty when removing i would leave no internal link.
    std::optional<double> psi_after_remove(NodeId i) const;

    void add(NodeId i);
    /// Throws ZeroInternalDegree (state unchanged) when the removal would
    /// leave no internal link.
    void remove(NodeId i);

    /// Rebuilds every cached quantity from the member set alone.
    void recompute();

private:
    static constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);

    void frontier_insert(NodeId i);
    void frontier_erase(NodeId i);

    const Graph* graph_;
    NodeSet members_;
    std::vector<double> in_deg_;
    std::vector<std::uint32_t> member_nbrs_;
    std::vector<NodeId> frontier_;
    std::vector<std::size_t> frontier_pos_;
    double k_in_ = 0.0;
    double sigma_ = 0.0;
    std::size_t internal_links_ = 0;
};

SubgraphState make_state(const Graph& g, const NodeSet& c);

}  // namespace nodecut
