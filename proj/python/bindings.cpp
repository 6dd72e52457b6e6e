#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "nodecut/explorer.hpp"
#include "nodecut/hierarchy.hpp"
#include "nodecut/karate.hpp"
#include "nodecut/landscape.hpp"
#include "nodecut/line_graph.hpp"
#include "nodecut/psi.hpp"
#include "nodecut/report.hpp"

namespace py = pybind11;
using namespace nodecut;

namespace {

using Labels = std::vector<std::string>;

TieBreakPolicy policy_of(const std::string& tie_break, std::uint64_t rng_seed) {
    if (tie_break == "det") return {TieBreakMode::deterministic, rng_seed};
    if (tie_break == "rng") return {TieBreakMode::random, rng_seed};
    throw Error(ErrorKind::Parse, "tie_break must be 'det' or 'rng'");
}

py::dict community_dict(const Graph& g, const Community& c) {
    py::dict d;
    d["name"] = c.name;
    d["nodes"] = labels_of(g, c.nodes);
    d["psi"] = c.psi;
    d["boundary"] = labels_of(g, c.boundary);
    d["link_count"] = c.links.size();
    return d;
}

Community community_of(const Graph& g, const Labels& nodes, std::string name = {}) {
    auto c = make_community(g, g.nodes_of(nodes));
    c.name = std::move(name);
    return c;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Overlapping link communities as local minima of the normalised node cut";

    static py::exception<Error> error_type(m, "NodecutError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::set_error(error_type, (std::string(to_string(e.kind())) + ": " + e.what()).c_str());
        }
    });

    py::class_<Graph>(m, "Graph")
        .def_static(
            "from_edges",
            [](const std::vector<std::tuple<std::string, std::string, double>>& edges) {
                std::vector<Graph::Edge> es;
                es.reserve(edges.size());
                for (const auto& [u, v, w] : edges) es.push_back({u, v, w});
                return Graph::from_edges(es);
            },
            py::arg("edges"), "Build from (u, v, weight) triples.")
        .def_static(
            "parse",
            [](const std::string& text, bool weighted) {
                std::istringstream in(text);
                return load_edge_list(in, weighted);
            },
            py::arg("text"), py::arg("weighted") = false)
        .def_static(
            "load", [](const std::string& path, bool weighted) { return load_edge_list_file(path, weighted); },
            py::arg("path"), py::arg("weighted") = false)
        .def_static("karate", &karate_club)
        .def_property_readonly("node_count", &Graph::node_count)
        .def_property_readonly("link_count", &Graph::link_count)
        .def_property_readonly("weighted", &Graph::weighted)
        .def_property_readonly("labels", [](const Graph& g) { return Labels(g.labels().begin(), g.labels().end()); })
        .def("degree", [](const Graph& g, const std::string& label) { return g.degree(g.node(label)); })
        .def("links",
             [](const Graph& g) {
                 std::vector<std::tuple<std::string, std::string, double>> out;
                 for (const auto& l : g.links()) out.emplace_back(g.label(l.u), g.label(l.v), l.weight);
                 return out;
             })
        .def("__repr__", [](const Graph& g) {
            return "<nodecut.Graph n=" + std::to_string(g.node_count()) + " m=" + std::to_string(g.link_count()) + ">";
        });

    m.def("psi", [](const Graph& g, const Labels& nodes) { return psi(g, g.nodes_of(nodes)); }, py::arg("graph"),
          py::arg("nodes"));
    m.def("is_connected", [](const Graph& g, const Labels& nodes) { return is_connected(g, g.nodes_of(nodes)); });
    m.def("boundary_nodes",
          [](const Graph& g, const Labels& nodes) { return labels_of(g, boundary_nodes(g, g.nodes_of(nodes))); });
    m.def("check_equivalence",
          [](const Graph& g, const Labels& nodes) { return check_equivalence(g, g.nodes_of(nodes)); });
    m.def("verify_local_minimum",
          [](const Graph& g, const Labels& nodes) { return verify_local_minimum(g, g.nodes_of(nodes)); });
    m.def("jaccard_distance", [](const Graph& g, const Labels& a, const Labels& b) {
        return jaccard_distance(g.nodes_of(a), g.nodes_of(b));
    });

    m.def(
        "detect_report",
        [](const Graph& g, const std::string& tie_break, std::uint64_t rng_seed, std::size_t jobs,
           bool allow_disconnected) {
            auto policy = policy_of(tie_break, rng_seed);
            RunOptions options;
            options.allow_disconnected = allow_disconnected;
            if (!is_connected(g) && !allow_disconnected)
                throw Error(ErrorKind::DisconnectedGraph, "input graph is disconnected");
            Detection d;
            {
                py::gil_scoped_release release;
                d = run_all_seeds(g, policy, jobs, options);
            }
            return dump_report(make_report(g, {}, d, policy));
        },
        py::arg("graph"), py::arg("tie_break") = "det", py::arg("rng_seed") = 0, py::arg("jobs") = 1,
        py::arg("allow_disconnected") = false, "JSON report of a run over every seed link.");

    m.def(
        "run_from_seed",
        [](const Graph& g, const std::string& u, const std::string& v, const std::string& tie_break,
           std::uint64_t rng_seed) {
            auto t = run_from_seed(g, g.link_between(u, v), policy_of(tie_break, rng_seed));
            py::list minima;
            for (const auto& mm : t.minima) minima.append(py::make_tuple(labels_of(g, mm.nodes), mm.psi));
            py::list steps;
            for (const auto& s : t.steps)
                steps.append(py::make_tuple(std::string(to_string(s.action)),
                                            s.node == kNoNode ? py::object(py::none()) : py::cast(g.label(s.node)),
                                            s.psi, s.size));
            py::dict out;
            out["minima"] = minima;
            out["steps"] = steps;
            out["reached_ground_state"] = t.reached_ground_state;
            return out;
        },
        py::arg("graph"), py::arg("u"), py::arg("v"), py::arg("tie_break") = "det", py::arg("rng_seed") = 0);

    m.def(
        "exact_local_minima",
        [](const Graph& g, std::size_t max_nodes, bool force) {
            LandscapeOptions o;
            o.max_nodes = max_nodes;
            o.force = force;
            py::list out;
            for (const auto& c : exact_local_minima(g, o)) out.append(community_dict(g, c));
            return out;
        },
        py::arg("graph"), py::arg("max_nodes") = 16, py::arg("force") = false);

    m.def(
        "line_graph",
        [](const Graph& g) {
            auto lg = build_line_graph(g);
            std::vector<std::tuple<std::size_t, std::size_t, double>> out;
            for (std::size_t k = 0; k < lg.size(); ++k)
                for (const auto& [l, v] : lg.e.entries[k])
                    if (l >= k) out.emplace_back(k, l, v);
            return out;
        },
        "Upper triangle of E as (k, l, weight); link ids follow Graph.links().");

    m.def("classify_overlap", [](const Graph& g, const Labels& a, const Labels& b) {
        auto r = classify_overlap(g, community_of(g, a), community_of(g, b));
        return std::string(to_string(r.kind));
    });

    m.def(
        "polyhierarchy",
        [](const Graph& g, const std::vector<std::pair<std::string, Labels>>& named) {
            std::vector<Community> cs;
            for (const auto& [name, nodes] : named) cs.push_back(community_of(g, nodes, name));
            auto dag = build_polyhierarchy(g, cs);
            std::vector<std::pair<std::string, std::string>> edges;
            for (const auto& [p, c] : dag.edges) edges.emplace_back(dag.names[p], dag.names[c]);
            return edges;
        },
        py::arg("graph"), py::arg("communities"), "Containment edges (parent, child), rooted at C0.");
}
