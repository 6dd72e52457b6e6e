#include <random>
#include <sstream>

#include "doctest.h"
#include "nodecut/graph.hpp"
#include "nodecut/karate.hpp"
#include "support/karate_fixtures.hpp"
#include "support/oracles.hpp"

using namespace nodecut;

namespace {

Graph parse(const std::string& text, bool weighted = false, std::vector<std::string>* warnings = nullptr) {
    std::istringstream in(text);
    return load_edge_list(in, weighted, warnings);
}

ErrorKind kind_of(const std::string& text, bool weighted = false) {
    try {
        parse(text, weighted);
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::Io;
}

}  // namespace

TEST_CASE("path graph degrees") {
    auto g = parse("1 2\n2 3");
    CHECK(g.node_count() == 3);
    CHECK(g.link_count() == 2);
    CHECK(g.degree(g.node("1")) == 1.0);
    CHECK(g.degree(g.node("2")) == 2.0);
    CHECK(g.degree(g.node("3")) == 1.0);
    CHECK_FALSE(g.weighted());
}

TEST_CASE("karate fixture size") {
    auto g = karate_club();
    CHECK(g.node_count() == 34);
    CHECK(g.link_count() == 78);
    CHECK(is_connected(g));
    CHECK(g.degree(g.node("1")) == 16.0);
    CHECK(g.degree(g.node("34")) == 17.0);
}

TEST_CASE("duplicate links merge with a warning") {
    std::vector<std::string> warnings;
    auto g = parse("a b 2\nb a 3", true, &warnings);
    CHECK(g.node_count() == 2);
    CHECK(g.link_count() == 1);
    CHECK(g.link(0).weight == 5.0);
    CHECK(g.weighted());
    CHECK(warnings.size() == 1);

    warnings.clear();
    auto unweighted = parse("a b\nb a\n", false, &warnings);
    CHECK(unweighted.link(0).weight == 1.0);
    CHECK(warnings.size() == 1);
}

TEST_CASE("ingestion errors") {
    CHECK(kind_of("1 2\n3 3\n") == ErrorKind::Parse);
    CHECK(kind_of("1 2 0\n", true) == ErrorKind::Parse);
    CHECK(kind_of("1 2 -1\n", true) == ErrorKind::Parse);
    CHECK(kind_of("1 2 abc\n", true) == ErrorKind::Parse);
    CHECK(kind_of("1\n") == ErrorKind::Parse);

    try {
        parse("1 2\n# comment\n4 4\n");
        FAIL("self-loop accepted");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("comments, blank lines and arbitrary labels") {
    auto g = parse("# header\n\nalice bob # trailing\nbob carol\n");
    CHECK(g.node_count() == 3);
    CHECK(g.find("carol").has_value());
    CHECK_FALSE(g.find("dave").has_value());
    CHECK_THROWS_AS(g.node("dave"), Error);
}

TEST_CASE("labels order numerically") {
    CHECK(label_less("2", "10"));
    CHECK_FALSE(label_less("10", "2"));
    CHECK(label_less("9", "a"));
    CHECK(label_less("a", "b"));
    auto g = parse("10 2\n2 1\n");
    CHECK(g.label(0) == "1");
    CHECK(g.label(1) == "2");
    CHECK(g.label(2) == "10");
}

TEST_CASE("induced links and nodes") {
    auto g = karate_club();
    auto c7 = g.nodes_of({"1", "12"});
    auto l7 = induced_links(g, c7);
    CHECK(l7.size() == 1);
    CHECK(l7.contains(g.link_between("1", "12")));
    CHECK(induced_links(g, g.empty_nodes()).empty());

    auto shared = g.nodes_of({"3", "9", "14", "20", "31", "32"});
    auto ls = induced_links(g, shared);
    CHECK(ls.contains(g.link_between("3", "9")));
    CHECK(ls.contains(g.link_between("9", "31")));

    CHECK(induced_nodes(g, l7) == c7);
    CHECK(induced_nodes(g, g.empty_links()).empty());
    auto c2 = fixtures::karate_set(g, 2);
    CHECK(induced_nodes(g, induced_links(g, c2)) == c2);
    CHECK(c2.size() == 21);
}

TEST_CASE("neighbors of a set") {
    auto p = parse("1 2\n2 3");
    CHECK(neighbors_of_set(p, p.nodes_of({"1"})) == p.nodes_of({"2"}));
    CHECK(neighbors_of_set(p, p.all_nodes()).empty());

    auto g = karate_club();
    auto nb = neighbors_of_set(g, g.nodes_of({"1", "12"}));
    // Derived from the fixture: node 1's neighbours other than 12.
    auto expected = g.empty_nodes();
    for (const auto& a : g.arcs(g.node("1")))
        if (a.node != g.node("12")) expected.insert(a.node);
    CHECK(nb.size() == 15);
    CHECK(nb == expected);
}

TEST_CASE("connectivity") {
    auto p = parse("1 2\n2 3");
    CHECK_FALSE(is_connected(p, p.nodes_of({"1", "3"})));
    CHECK(is_connected(p, p.nodes_of({"1", "2"})));
    CHECK(is_connected(p, p.nodes_of({"2"})));
    CHECK_FALSE(is_connected(p, p.empty_nodes()));

    auto g = karate_club();
    CHECK(is_connected(g, fixtures::karate_set(g, 5)));
}

TEST_CASE("boundary nodes") {
    auto g = karate_club();
    CHECK(boundary_nodes(g, fixtures::karate_set(g, 1)) == g.nodes_of({"1"}));
    auto b2 = boundary_nodes(g, fixtures::karate_set(g, 2));
    CHECK(g.nodes_of({"3", "9", "14", "20", "31", "32"}).is_subset_of(b2));
    CHECK(boundary_nodes(g, g.all_nodes()).empty());
}

TEST_CASE("articulation points match brute-force connectivity") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 40; ++round) {
        auto g = oracle::random_connected_graph(12, 0.1, rng);
        auto c = oracle::random_connected_subgraph(g, 8, rng);
        auto cut = articulation_points(g, c);
        for (auto i : c.members()) {
            NodeSet rest = c;
            rest.erase(i);
            bool disconnects = !rest.empty() && !is_connected(g, rest);
            CHECK(cut.contains(i) == disconnects);
        }
    }
}

TEST_CASE("degree split and induced-set invariants on random sets") {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 30; ++round) {
        auto g = oracle::random_connected_graph(15, 0.15, rng, round % 2 == 1);
        NodeSet c(g.node_count());
        for (NodeId i = 0; i < g.node_count(); ++i)
            if (rng() % 2) c.insert(i);
        for (NodeId i = 0; i < g.node_count(); ++i) {
            double in = 0, out = 0;
            for (const auto& a : g.arcs(i)) (c.contains(a.node) ? in : out) += a.weight;
            CHECK(in + out == doctest::Approx(g.degree(i)).epsilon(1e-15));
        }
        auto back = induced_nodes(g, induced_links(g, c));
        CHECK(back.is_subset_of(c));
        bool isolated = false;
        for (auto i : c.members()) {
            bool has = false;
            for (const auto& a : g.arcs(i)) has = has || c.contains(a.node);
            isolated = isolated || !has;
        }
        CHECK((back == c) == !isolated);
        CHECK(boundary_nodes(g, c).is_subset_of(c));
    }
}

TEST_CASE("edge list round trip") {
    std::mt19937_64 rng(3);
    for (bool weighted : {false, true}) {
        auto g = oracle::random_connected_graph(20, 0.1, rng, weighted);
        std::ostringstream out;
        write_edge_list(out, g);
        auto h = parse(out.str(), weighted);
        REQUIRE(h.node_count() == g.node_count());
        REQUIRE(h.link_count() == g.link_count());
        for (LinkId k = 0; k < g.link_count(); ++k) {
            CHECK(g.label(g.link(k).u) == h.label(h.link(k).u));
            CHECK(g.label(g.link(k).v) == h.label(h.link(k).v));
            CHECK(g.link(k).weight == h.link(k).weight);
        }
    }
}
