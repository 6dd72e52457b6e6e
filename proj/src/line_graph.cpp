#include "nodecut/line_graph.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "nodecut/psi.hpp"

namespace nodecut {

namespace {

void require_unweighted(const Graph& g, const char* what) {
    if (g.weighted())
        throw Error(ErrorKind::WeightedUnsupported,
                    std::string(what) + " requires an unweighted graph (binary incidence matrix)");
}

void sort_and_merge(std::vector<std::pair<std::uint32_t, double>>& row) {
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (out > 0 && row[out - 1].first == row[i].first) {
            row[out - 1].second += row[i].second;
        } else {
            row[out++] = row[i];
        }
    }
    row.resize(out);
}

}  // namespace

double SparseMatrix::at(std::size_t r, std::size_t c) const {
    const auto& row = entries[r];
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, std::size_t col) { return e.first < col; });
    return (it != row.end() && it->first == c) ? it->second : 0.0;
}

IncidenceMatrix incidence_matrix(const Graph& g) {
    IncidenceMatrix b;
    b.nodes = g.node_count();
    b.columns.reserve(g.link_count());
    for (const auto& l : g.links()) b.columns.emplace_back(l.u, l.v);
    return b;
}

LineGraph build_line_graph(const Graph& g) {
    require_unweighted(g, "line graph");
    LineGraph lg;
    const std::size_t m = g.link_count();
    lg.e.rows = lg.e.cols = m;
    lg.e.entries.assign(m, {});
    for (NodeId i = 0; i < g.node_count(); ++i) {
        const double w = 1.0 / g.degree(i);
        auto arcs = g.arcs(i);
        for (const auto& a : arcs)
            for (const auto& b : arcs) lg.e.entries[a.link].emplace_back(b.link, w);
    }
    lg.link_degrees.assign(m, 0.0);
    for (std::size_t k = 0; k < m; ++k) {
        sort_and_merge(lg.e.entries[k]);
        for (const auto& [l, v] : lg.e.entries[k]) lg.link_degrees[k] += v;
    }
    return lg;
}

SparseMatrix normalized_affiliation(const Graph& g) {
    require_unweighted(g, "normalised affiliation");
    SparseMatrix d;
    d.rows = g.node_count();
    d.cols = g.link_count();
    d.entries.assign(d.rows, {});
    for (NodeId i = 0; i < g.node_count(); ++i) {
        const double v = 1.0 / std::sqrt(g.degree(i));
        for (const auto& a : g.arcs(i)) d.entries[i].emplace_back(a.link, v);
        sort_and_merge(d.entries[i]);
    }
    return d;
}

SparseMatrix back_projection(const Graph& g) {
    require_unweighted(g, "back projection");
    SparseMatrix w;
    w.rows = w.cols = g.node_count();
    w.entries.assign(w.rows, {});
    for (NodeId i = 0; i < g.node_count(); ++i) {
        for (const auto& a : g.arcs(i))
            w.entries[i].emplace_back(a.node, a.weight / std::sqrt(g.degree(i) * g.degree(a.node)));
    }
    return w;
}

double phi(const LineGraph& lg, const LinkSet& l) {
    double k_in = 0.0;
    double k_out = 0.0;
    for (auto k : l.members()) {
        for (const auto& [col, v] : lg.e.entries[k]) {
            if (l.contains(col)) {
                k_in += v;
            } else {
                k_out += v;
            }
        }
    }
    if (!(k_in + k_out > 0.0)) throw Error(ErrorKind::EmptyCut, "link set has zero total degree in the line graph");
    return k_out / (k_in + k_out);
}

double check_equivalence(const Graph& g, const LineGraph& lg, const NodeSet& c) {
    double node_cut = psi(g, c);
    double edge_cut = phi(lg, induced_links(g, c));
    return std::abs(edge_cut - node_cut);
}

double check_equivalence(const Graph& g, const NodeSet& c) {
    return check_equivalence(g, build_line_graph(g), c);
}

void write_line_graph_edges(std::ostream& out, const Graph& g, const LineGraph& lg) {
    auto old_precision = out.precision(17);
    out << "# link_k link_l weight  (links: ";
    out << g.link_count() << ")\n";
    for (std::size_t k = 0; k < lg.size(); ++k)
        for (const auto& [l, v] : lg.e.entries[k])
            if (l >= k) out << k << ' ' << l << ' ' << v << '\n';
    out.precision(old_precision);
}

void write_line_graph_dot(std::ostream& out, const Graph& g, const LineGraph& lg) {
    auto name = [&](std::size_t k) {
        const auto& link = g.link(static_cast<LinkId>(k));
        return "\"" + g.label(link.u) + "-" + g.label(link.v) + "\"";
    };
    auto old_precision = out.precision(12);
    out << "graph line_graph {\n";
    for (std::size_t k = 0; k < lg.size(); ++k) {
        out << "  " << name(k) << " [self_weight=" << lg.e.at(k, k) << "];\n";
    }
    for (std::size_t k = 0; k < lg.size(); ++k)
        for (const auto& [l, v] : lg.e.entries[k])
            if (l > k) out << "  " << name(k) << " -- " << name(l) << " [weight=" << v << "];\n";
    out << "}\n";
    out.precision(old_precision);
}

}  // namespace nodecut
