#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

#include "nodecut/graph.hpp"

namespace nodecut {

/// Row-major sparse matrix; each row holds (column, value) pairs sorted by column.
struct SparseMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::vector<std::pair<std::uint32_t, double>>> entries;

    double at(std::size_t r, std::size_t c) const;
};

/// Node-link incidence B of the bipartite node/link graph, stored per link as
/// its endpoint pair. Every column has exactly two non-zero (unit) entries.
struct IncidenceMatrix {
    std::size_t nodes = 0;
    std::vector<std::pair<NodeId, NodeId>> columns;

    double at(NodeId i, LinkId k) const {
        return (columns[k].first == i || columns[k].second == i) ? 1.0 : 0.0;
    }
};

IncidenceMatrix incidence_matrix(const Graph& g);

/// Line graph weighted by inverse node degrees:
///   E_kl = sum_i B_ik B_il / k_i,
/// diagonal included, so E_kk = 1/k_u + 1/k_v for link k = (u, v).
struct LineGraph {
    SparseMatrix e;
    /// Row sums of e (link degrees in the line graph).
    std::vector<double> link_degrees;

    std::size_t size() const noexcept { return e.rows; }
};

/// Throws WeightedUnsupported for graphs with non-unit weights.
LineGraph build_line_graph(const Graph& g);

/// D_ik = B_ik / sqrt(k_i), an n x m matrix with unit Euclidean row norms.
SparseMatrix normalized_affiliation(const Graph& g);

/// Off-diagonal part of D D^T: A_ij / sqrt(k_i k_j), symmetric n x n.
SparseMatrix back_projection(const Graph& g);

/// Normalised edge cut of a link set in the line graph:
///   K_in  = sum_{k,l} mu_k E_kl mu_l,  K_out = sum_{k,l} mu_k E_kl (1 - mu_l),
///   phi   = K_out / (K_in + K_out).
/// Throws EmptyCut when K_in + K_out is zero (empty link set).
double phi(const LineGraph& lg, const LinkSet& l);

/// |phi(L(C)) - psi(C)|.
double check_equivalence(const Graph& g, const NodeSet& c);
double check_equivalence(const Graph& g, const LineGraph& lg, const NodeSet& c);

/// Writes "k l weight" lines (upper triangle and diagonal) with link ids.
void write_line_graph_edges(std::ostream& out, const Graph& g, const LineGraph& lg);
/// Undirected DOT graph whose vertices are the links "u-v".
void write_line_graph_dot(std::ostream& out, const Graph& g, const LineGraph& lg);

}  // namespace nodecut
