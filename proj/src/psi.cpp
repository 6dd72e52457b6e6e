#include "nodecut/psi.hpp"

#include <algorithm>
#include <string>

namespace nodecut {

double psi(const Graph& g, const NodeSet& c) {
    double k_in = 0.0;
    double sigma = 0.0;
    for (auto i : c.members()) {
        double in = 0.0;
        double out = 0.0;
        for (const auto& a : g.arcs(i)) (c.contains(a.node) ? in : out) += a.weight;
        k_in += in;
        sigma += in * out / g.degree(i);
    }
    if (!(k_in > 0.0)) throw Error(ErrorKind::ZeroInternalDegree, "node set spans no link; psi undefined");
    return sigma / k_in;
}

SubgraphState::SubgraphState(const Graph& g, NodeSet c)
    : graph_(&g),
      members_(std::move(c)),
      in_deg_(g.node_count(), 0.0),
      member_nbrs_(g.node_count(), 0),
      frontier_pos_(g.node_count(), kAbsent) {
    recompute();
    if (internal_links_ == 0) throw Error(ErrorKind::ZeroInternalDegree, "node set spans no link; psi undefined");
}

void SubgraphState::recompute() {
    const auto& g = *graph_;
    std::fill(in_deg_.begin(), in_deg_.end(), 0.0);
    std::fill(member_nbrs_.begin(), member_nbrs_.end(), 0u);
    for (auto i : frontier_) frontier_pos_[i] = kAbsent;
    frontier_.clear();

    auto members = members_.members();
    std::size_t endpoint_count = 0;
    for (auto i : members) {
        for (const auto& a : g.arcs(i)) {
            in_deg_[a.node] += a.weight;
            ++member_nbrs_[a.node];
            if (members_.contains(a.node)) ++endpoint_count;
        }
    }
    internal_links_ = endpoint_count / 2;
    k_in_ = 0.0;
    sigma_ = 0.0;
    for (auto i : members) {
        double out = 0.0;
        for (const auto& a : g.arcs(i))
            if (!members_.contains(a.node)) out += a.weight;
        k_in_ += in_deg_[i];
        sigma_ += in_deg_[i] * out / g.degree(i);
    }
    for (NodeId i = 0; i < g.node_count(); ++i)
        if (!members_.contains(i) && member_nbrs_[i] > 0) frontier_insert(i);
}

double SubgraphState::delta_sigma_add(NodeId i) const {
    if (members_.contains(i) || member_nbrs_[i] == 0)
        throw Error(ErrorKind::NotANeighbor, "node " + graph_->label(i) + " is not a neighbour of the subgraph");
    double sum = 0.0;
    for (const auto& a : graph_->arcs(i)) {
        if (!members_.contains(a.node)) continue;
        sum += a.weight * (2.0 * external_degree(a.node) - a.weight) / graph_->degree(a.node);
    }
    return sum - in_deg_[i] * in_deg_[i] / graph_->degree(i);
}

double SubgraphState::delta_sigma_remove(NodeId i) const {
    if (!members_.contains(i))
        throw Error(ErrorKind::NotAMember, "node " + graph_->label(i) + " is not a member of the subgraph");
    double sum = 0.0;
    for (const auto& a : graph_->arcs(i)) {
        if (!members_.contains(a.node)) continue;
        sum += a.weight * (2.0 * external_degree(a.node) + a.weight) / graph_->degree(a.node);
    }
    return in_deg_[i] * in_deg_[i] / graph_->degree(i) - sum;
}

double SubgraphState::psi_after_add(NodeId i) const {
    double ds = delta_sigma_add(i);
    return (sigma_ + ds) / (k_in_ + 2.0 * in_deg_[i]);
}

std::optional<double> SubgraphState::psi_after_remove(NodeId i) const {
    double ds = delta_sigma_remove(i);
    if (internal_links_ <= member_nbrs_[i]) return std::nullopt;
    return (sigma_ + ds) / (k_in_ - 2.0 * in_deg_[i]);
}

void SubgraphState::add(NodeId i) {
    double ds = delta_sigma_add(i);
    sigma_ += ds;
    k_in_ += 2.0 * in_deg_[i];
    internal_links_ += member_nbrs_[i];
    members_.insert(i);
    frontier_erase(i);
    for (const auto& a : graph_->arcs(i)) {
        in_deg_[a.node] += a.weight;
        if (member_nbrs_[a.node]++ == 0 && !members_.contains(a.node)) frontier_insert(a.node);
    }
}

void SubgraphState::remove(NodeId i) {
    double ds = delta_sigma_remove(i);
    if (internal_links_ <= member_nbrs_[i])
        throw Error(ErrorKind::ZeroInternalDegree, "removing " + graph_->label(i) + " leaves no internal link");
    sigma_ += ds;
    k_in_ -= 2.0 * in_deg_[i];
    internal_links_ -= member_nbrs_[i];
    members_.erase(i);
    for (const auto& a : graph_->arcs(i)) {
        in_deg_[a.node] -= a.weight;
        if (--member_nbrs_[a.node] == 0) {
            in_deg_[a.node] = 0.0;
            if (!members_.contains(a.node)) frontier_erase(a.node);
        }
    }
    if (member_nbrs_[i] > 0) frontier_insert(i);
}

void SubgraphState::frontier_insert(NodeId i) {
    if (frontier_pos_[i] != kAbsent) return;
    frontier_pos_[i] = frontier_.size();
    frontier_.push_back(i);
}

void SubgraphState::frontier_erase(NodeId i) {
    auto pos = frontier_pos_[i];
    if (pos == kAbsent) return;
    NodeId last = frontier_.back();
    frontier_[pos] = last;
    frontier_pos_[last] = pos;
    frontier_.pop_back();
    frontier_pos_[i] = kAbsent;
}

SubgraphState make_state(const Graph& g, const NodeSet& c) { return SubgraphState(g, c); }

}  // namespace nodecut
