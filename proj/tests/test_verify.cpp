#include <doctest.h>

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "wdim/verify.hpp"

using namespace wdim;

TEST_CASE("check catalog") {
    const auto& ids = theorem_ids();
    CHECK(ids.size() == 17);
    CHECK(ids.front() == "nd");
    for (const char* id : {"nkd", "ag", "eg1", "eg2", "ekd", "complete", "fig1",
                           "vt1dim", "obs1", "wdt_chain", "type_bound", "lem12",
                           "gik", "n2main", "graph_n2", "embed"})
        CHECK(std::count(ids.begin(), ids.end(), id) == 1);
}

TEST_CASE("default parameters") {
    const auto nd = default_params("nd");
    CHECK(nd.at("max_order") == 5);
    CHECK(nd.at("family_max_order") == 17);
    const auto embed = default_params("embed");
    CHECK(embed.at("samples") == 50);
    CHECK(embed.at("seed") == 1);
    CHECK(embed.at("max_rand_order") == 6);
    CHECK(default_params("fig1").empty());
    CHECK_THROWS_AS(default_params("nope"), std::invalid_argument);
}

TEST_CASE("figure fixtures check") {
    const auto rep = verify("fig1");
    CHECK(rep.theorem == "fig1");
    CHECK(rep.verdict == "verified");
    CHECK(rep.counterexamples.empty());
    CHECK(rep.stats.at("instances") == 16);
    CHECK(rep.params.empty());
    CHECK(rep.wall_time_ms >= 0);
}

TEST_CASE("every check verifies on a reduced range") {
    const std::map<std::string, std::map<std::string, long long>> runs{
        {"nd", {{"max_order", 4}, {"family_max_order", 8}}},
        {"nkd", {{"max_order", 4}, {"family_max_order", 8}}},
        {"ag", {{"max_order", 4}}},
        {"eg1", {{"max_order", 6}}},
        {"eg2", {{"n2_max", 8}, {"n3_max", 6}}},
        {"ekd", {{"max_size", 20}}},
        {"complete", {{"max_order", 5}}},
        {"fig1", {}},
        {"vt1dim", {{"max_order", 4}, {"family_max_order", 8}}},
        {"obs1", {{"max_order", 4}}},
        {"wdt_chain", {{"max_order", 4}, {"family_max_order", 8}}},
        {"type_bound", {{"max_order", 4}}},
        {"lem12", {{"max_order", 4}}},
        {"gik", {{"t_max", 2}}},
        {"n2main", {{"max_order", 4}}},
        {"graph_n2", {{"max_order", 4}}},
        {"embed", {{"samples", 5}, {"seed", 7}}},
    };
    for (const auto& [id, params] : runs) {
        const auto rep = verify(id, params);
        CHECK(rep.theorem == id);
        CHECK(rep.verdict == "verified");
        CHECK((rep.verdict == "counterexample") == !rep.counterexamples.empty());
        CHECK(rep.stats.at("instances") > 0);
        // Effective parameters echo the overrides on top of the defaults.
        for (const auto& [key, value] : params) CHECK(rep.params.at(key) == value);
        CHECK(rep.params.size() == default_params(id).size());
    }
}

TEST_CASE("restricted converse search reports partially-checked") {
    const auto rep =
        verify("vt1dim", {{"max_order", 6}, {"family_max_order", 8}});
    CHECK(rep.verdict == "partially-checked");
    CHECK(rep.counterexamples.empty());
    CHECK(rep.stats.at("order6_candidates") > 0);
    CHECK(rep.stats.at("order6_dim1_classes") == 3);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(verify("nope"), std::invalid_argument);
    CHECK_THROWS_AS(verify("nd", {{"bogus", 1}}), std::invalid_argument);
    CHECK_THROWS_AS(verify("nd", {{"max_order", 99}}), std::invalid_argument);
    CHECK_THROWS_AS(verify("nd", {{"max_order", 0}}), std::invalid_argument);
    CHECK_THROWS_AS(verify("embed", {{"samples", -1}}), std::invalid_argument);
}

TEST_CASE("repeated runs are deterministic") {
    const auto a = verify("ag", {{"max_order", 4}});
    const auto b = verify("ag", {{"max_order", 4}});
    CHECK(a.verdict == b.verdict);
    CHECK(a.stats == b.stats);
    CHECK(a.params == b.params);
    CHECK(a.counterexamples.size() == b.counterexamples.size());
}
