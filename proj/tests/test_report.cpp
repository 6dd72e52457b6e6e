#include <sstream>

#include "doctest.h"
#include "nodecut/karate.hpp"
#include "nodecut/report.hpp"
#include "support/karate_fixtures.hpp"

using namespace nodecut;
using nlohmann::json;

namespace {

GraphSource karate_source() {
    GraphSource s;
    s.dataset = "karate";
    return s;
}

}  // namespace

TEST_CASE("rounding to twelve significant digits") {
    CHECK(round_report(0.1 + 0.2) == 0.3);
    CHECK(round_report(15.0 / 32.0) == 0.46875);
    CHECK(round_report(0.0) == 0.0);
}

TEST_CASE("karate report content") {
    auto g = karate_club();
    auto d = run_all_seeds(g, {}, 2);
    auto r = make_report(g, karate_source(), d, {});
    CHECK(r["format"] == kReportFormat);
    CHECK(r["graph"]["nodes"] == 34);
    CHECK(r["graph"]["links"] == 78);
    CHECK(r["policy"]["mode"] == "det");
    REQUIRE(r["communities"].size() == 7);
    CHECK(r["communities"][6]["nodes"] == json({"1", "12"}));
    CHECK(r["communities"][6]["links"] == json::array({json::array({"1", "12"})}));
    CHECK(r["communities"][0]["boundary"] == json({"1"}));
    CHECK(r["communities"][0]["stability"].is_null());
    CHECK(r["communities"][3]["stability"].is_number());
    CHECK(r["seeds"]["count"] == 78);
    CHECK(r["seeds"]["runs"].size() == 78);
    CHECK(r["ground_state"]["psi"] == 0.0);
    CHECK_FALSE(r["ground_state"]["included"].get<bool>());

    ReportOptions with_c0;
    with_c0.include_ground_state = true;
    auto r0 = make_report(g, karate_source(), d, {}, with_c0);
    CHECK(r0["communities"].size() == 8);
}

TEST_CASE("report round trip") {
    auto g = karate_club();
    auto d = run_all_seeds(g, {});
    auto text = dump_report(make_report(g, karate_source(), d, {}));
    CHECK(text.back() == '\n');
    auto loaded = parse_report(json::parse(text), g);
    CHECK(loaded.source.dataset == "karate");
    REQUIRE(loaded.communities.size() == 7);
    for (std::size_t k = 0; k < 7; ++k) {
        CHECK(loaded.communities[k].nodes == fixtures::karate_set(g, k + 1));
        CHECK(loaded.communities[k].links == d.communities[k].links);
        CHECK(loaded.communities[k].psi == doctest::Approx(d.communities[k].psi).epsilon(1e-11));
        CHECK(loaded.communities[k].seed_count == d.communities[k].seed_count);
    }
}

TEST_CASE("identical inputs give identical bytes") {
    auto g = karate_club();
    auto a = dump_report(make_report(g, karate_source(), run_all_seeds(g, {}, 1), {}));
    auto b = dump_report(make_report(g, karate_source(), run_all_seeds(g, {}, 3), {}));
    CHECK(a == b);
}

TEST_CASE("malformed reports") {
    auto g = karate_club();
    CHECK_THROWS_AS(parse_report(json::object(), g), Error);
    json bad = {{"format", kReportFormat}, {"graph", {{"source", {{"dataset", "karate"}}}}}, {"communities", {{{"name", "C1"}}}}};
    CHECK_THROWS_AS(parse_report(bad, g), Error);
    json unknown = {{"format", kReportFormat},
                    {"graph", {{"source", {{"dataset", "karate"}}}}},
                    {"communities", {{{"name", "C1"}, {"nodes", {"1", "99"}}, {"psi", 0.5}}}}};
    try {
        parse_report(unknown, g);
        FAIL("unknown label accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnknownLabel);
    }
    CHECK_THROWS_AS(read_json_file("/nonexistent/report.json"), Error);
}

TEST_CASE("trajectory csv") {
    auto g = karate_club();
    auto t = run_from_seed(g, g.link_between("33", "34"), {});
    std::ostringstream out;
    write_trajectory_csv(out, g, t);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "step,action,node,psi,size");
    std::getline(in, line);
    CHECK(line.rfind("0,seed,33 34,", 0) == 0);
    std::size_t minima = 0;
    std::string last;
    while (std::getline(in, line)) {
        if (line.find(",record-minimum,") != std::string::npos) ++minima;
        last = line;
    }
    CHECK(minima == 2);
    CHECK(last.substr(last.size() - 5) == ",0,34");
    CHECK(trajectory_file_name(g, g.link_between("33", "34")) == "seed_33_34.csv");
}
