#include <cmath>
#include <random>
#include <sstream>

#include "doctest.h"
#include "nodecut/karate.hpp"
#include "nodecut/psi.hpp"
#include "support/karate_fixtures.hpp"
#include "support/oracles.hpp"

using namespace nodecut;

namespace {

Graph path3() {
    std::istringstream in("1 2\n2 3\n");
    return load_edge_list(in, false);
}

double oracle_sigma(const Graph& g, const NodeSet& c) {
    return oracle::sigma(oracle::dense_adjacency(g), oracle::membership(c, g.node_count()));
}

double oracle_psi(const Graph& g, const NodeSet& c) {
    return oracle::psi(oracle::dense_adjacency(g), oracle::membership(c, g.node_count()));
}

NodeSet with(NodeSet c, NodeId i) {
    c.insert(i);
    return c;
}

NodeSet without(NodeSet c, NodeId i) {
    c.erase(i);
    return c;
}

}  // namespace

TEST_CASE("psi of small karate communities") {
    auto g = karate_club();
    CHECK(psi(g, g.nodes_of({"1", "12"})) == doctest::Approx(15.0 / 32.0).epsilon(1e-14));
    CHECK(std::round(psi(g, g.nodes_of({"3", "10", "34"})) * 1000) / 1000 == doctest::Approx(0.460));
    CHECK(psi(g, g.all_nodes()) == 0.0);
    CHECK_THROWS_AS(psi(g, g.nodes_of({"1", "34"})), Error);
    CHECK_THROWS_AS(psi(g, g.empty_nodes()), Error);
}

TEST_CASE("psi agrees with the conductance oracle") {
    auto g = karate_club();
    for (std::size_t k = 1; k <= 7; ++k) {
        auto c = fixtures::karate_set(g, k);
        CHECK(psi(g, c) == doctest::Approx(oracle_psi(g, c)).epsilon(1e-13));
    }
}

TEST_CASE("make_state on the path") {
    auto p = path3();
    auto s = make_state(p, p.nodes_of({"1", "2"}));
    CHECK(s.sigma() == doctest::Approx(0.5));
    CHECK(s.total_internal_degree() == 2.0);
    CHECK(s.psi() == doctest::Approx(0.25));
    CHECK(s.internal_link_count() == 1);
    REQUIRE(s.frontier().size() == 1);
    CHECK(s.frontier()[0] == p.node("3"));

    auto whole = make_state(p, p.all_nodes());
    CHECK(whole.psi() == 0.0);
    CHECK(whole.frontier().empty());
}

TEST_CASE("make_state on karate C1") {
    auto g = karate_club();
    auto s = make_state(g, fixtures::karate_set(g, 1));
    CHECK(std::round(s.psi() * 1000) / 1000 == doctest::Approx(0.022));
    CHECK(s.internal_link_count() == 68);
    CHECK(make_state(g, g.all_nodes()).psi() == 0.0);
}

TEST_CASE("delta sigma on additions matches full recompute") {
    auto p = path3();
    auto s = make_state(p, p.nodes_of({"1", "2"}));
    CHECK(s.delta_sigma_add(p.node("3")) == doctest::Approx(-0.5));
    CHECK_THROWS_AS(s.delta_sigma_add(p.node("1")), Error);

    std::istringstream star_text("c a\nc b\nc d\n");
    auto star = load_edge_list(star_text, false);
    auto st = make_state(star, star.nodes_of({"c", "a"}));
    auto b = star.node("b");
    CHECK(st.delta_sigma_add(b) ==
          doctest::Approx(oracle_sigma(star, with(st.members(), b)) - oracle_sigma(star, st.members())).epsilon(1e-12));

    auto g = karate_club();
    auto c7 = make_state(g, g.nodes_of({"1", "12"}));
    for (const auto& a : g.arcs(g.node("1"))) {
        if (a.node == g.node("12")) continue;
        double expect = oracle_sigma(g, with(c7.members(), a.node)) - oracle_sigma(g, c7.members());
        CHECK(std::abs(c7.delta_sigma_add(a.node) - expect) < 1e-12);
    }
}

TEST_CASE("delta sigma on removals matches full recompute") {
    auto p = path3();
    auto s = make_state(p, p.all_nodes());
    CHECK(s.delta_sigma_remove(p.node("3")) == doctest::Approx(0.5));

    auto g = karate_club();
    auto c2 = make_state(g, fixtures::karate_set(g, 2));
    auto ten = g.node("10");
    double expect = oracle_sigma(g, without(c2.members(), ten)) - oracle_sigma(g, c2.members());
    CHECK(std::abs(c2.delta_sigma_remove(ten) - expect) < 1e-12);
    CHECK_THROWS_AS(c2.delta_sigma_remove(g.node("5")), Error);
}

TEST_CASE("remove then re-add restores the state") {
    auto g = karate_club();
    auto s = make_state(g, fixtures::karate_set(g, 3));
    const double sigma0 = s.sigma(), kin0 = s.total_internal_degree();
    const auto members0 = s.members();
    for (auto i : members0.members()) {
        if (!s.psi_after_remove(i)) continue;
        s.remove(i);
        s.add(i);
        CHECK(s.members() == members0);
        CHECK(std::abs(s.sigma() - sigma0) < 1e-12);
        CHECK(std::abs(s.total_internal_degree() - kin0) < 1e-12);
    }
}

TEST_CASE("apply add and remove") {
    auto p = path3();
    auto s = make_state(p, p.nodes_of({"1", "2"}));
    s.add(p.node("3"));
    CHECK(s.psi() == doctest::Approx(0.0));
    s.remove(p.node("3"));
    CHECK(s.psi() == doctest::Approx(0.25));
    CHECK_THROWS_AS(s.remove(p.node("2")), Error);
    CHECK(s.size() == 2);  // unchanged after the refused removal

    auto g = karate_club();
    auto grow = make_state(g, g.nodes_of({"1", "12"}));
    for (const auto& a : g.arcs(g.node("1"))) {
        if (grow.members().contains(a.node)) continue;
        grow.add(a.node);
        auto fresh = make_state(g, grow.members());
        CHECK(std::abs(grow.sigma() - fresh.sigma()) < 1e-12);
        CHECK(grow.total_internal_degree() == fresh.total_internal_degree());
        CHECK(grow.internal_link_count() == fresh.internal_link_count());
        CHECK(std::abs(grow.sigma() - oracle_sigma(g, grow.members())) < 1e-12);
    }
}

TEST_CASE("psi_after_remove reports sets without internal links") {
    auto p = path3();
    auto s = make_state(p, p.nodes_of({"1", "2"}));
    CHECK_FALSE(s.psi_after_remove(p.node("1")).has_value());
    auto whole = make_state(p, p.all_nodes());
    REQUIRE(whole.psi_after_remove(p.node("1")).has_value());
    CHECK(*whole.psi_after_remove(p.node("1")) == doctest::Approx(0.25));
}

TEST_CASE("psi stays below one and only boundary nodes contribute") {
    std::mt19937_64 rng(5);
    for (int round = 0; round < 50; ++round) {
        auto g = oracle::random_connected_graph(14, 0.2, rng, round % 2 == 0);
        auto c = oracle::random_connected_subgraph(g, 2 + rng() % 10, rng);
        auto s = make_state(g, c);
        CHECK(s.psi() >= 0.0);
        CHECK(s.psi() < 1.0);
        double boundary_sum = 0.0;
        for (auto i : boundary_nodes(g, c).members())
            boundary_sum += s.internal_degree(i) * s.external_degree(i) / g.degree(i);
        CHECK(std::abs(boundary_sum - s.sigma()) < 1e-12);
        CHECK(std::abs(s.psi() - oracle_psi(g, c)) < 1e-12);
    }
}

TEST_CASE("weighted incremental updates") {
    std::mt19937_64 rng(17);
    for (int round = 0; round < 20; ++round) {
        auto g = oracle::random_connected_graph(16, 0.2, rng, true);
        auto s = make_state(g, oracle::random_connected_subgraph(g, 3, rng));
        for (int step = 0; step < 40; ++step) {
            bool grow = s.frontier().size() > 0 && (rng() % 3 != 0 || s.size() <= 2);
            if (grow) {
                auto i = s.frontier()[rng() % s.frontier().size()];
                double before = s.sigma();
                double d = s.delta_sigma_add(i);
                s.add(i);
                CHECK(std::abs(s.sigma() - (before + d)) < 1e-12);
            } else {
                auto ms = s.members().members();
                auto i = ms[rng() % ms.size()];
                if (!s.psi_after_remove(i)) continue;
                s.remove(i);
            }
            auto fresh = make_state(g, s.members());
            CHECK(std::abs(s.sigma() - fresh.sigma()) <= 1e-9 * std::max(1.0, fresh.sigma()));
            CHECK(std::abs(s.total_internal_degree() - fresh.total_internal_degree()) <=
                  1e-9 * fresh.total_internal_degree());
            CHECK(std::abs(fresh.sigma() - oracle_sigma(g, s.members())) < 1e-10);
        }
    }
}
