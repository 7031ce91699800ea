#include <doctest.h>
#include <json.hpp>

#include "tau_atlas/serialize.hpp"

using namespace tau_atlas;
using nlohmann::json;

TEST_CASE("algebra json") {
    auto j = json::parse(algebra_json(*build_auslander(2, Field(3))));
    CHECK(j["n"] == 2);
    CHECK(j["p"] == 3);
    CHECK(j["dim"] == 5);
    CHECK(j["basis"].size() == 5);
    CHECK(j["idempotents"].size() == 2);
}

TEST_CASE("tilt catalog json") {
    TiltCatalog cat = tilt_enumerate(build_auslander(3));
    auto j = json::parse(tilt_catalog_json(cat));
    REQUIRE(j.size() == 6);
    for (const auto& e : j) {
        CHECK(e["summands"].size() == 3);
        CHECK(e["summand_dim_vectors"].size() == 3);
        CHECK(e["summands"][2]["layers"] == "3/2/13/2/3");
    }
    auto bottom = json::parse(ideal_json(cat, *cat.find(Permutation::longest(3))));
    CHECK(bottom["word"] == json::array({1, 2, 1}));
    CHECK(bottom["ideal_dim"] == 10);
}

TEST_CASE("stt json and dot") {
    SttContext ctx(build_auslander(2));
    SttCatalog cat = enumerate_stt(ctx);
    auto j = json::parse(stt_catalog_json(ctx, cat));
    REQUIRE(j.size() == 6);
    CHECK(j[0]["i"] == 2);
    CHECK(j[0]["word"] == json::array({1, 2, 3}));
    CHECK(j[0]["support_complement"].empty());
    CHECK(json::parse(pair_json(ctx, ctx.of_word(Permutation::longest(3))))["support_complement"] == json::array({1, 2}));
    CHECK(stt_catalog_json(ctx, cat) == stt_catalog_json(ctx, enumerate_stt(ctx, 3)));

    auto h = json::parse(hasse_json(cat.hasse));
    CHECK(h["vertices"].size() == 6);
    CHECK(h["edges"].size() == 6);
    std::string dot = hasse_dot(cat.hasse, "stt");
    CHECK(dot.rfind("digraph stt {", 0) == 0);
    CHECK(dot.find("label=\"w=[3,2,1]\"") != std::string::npos);

    GammaBridge bridge(ctx);
    auto g = json::parse(gamma_catalog_json(bridge, cat));
    CHECK(g.size() == 6);
    CHECK(g[0]["source_key"] == j[0]["key"]);
}

TEST_CASE("verify report json") {
    VerifyOptions opts;
    opts.n = 2;
    auto res = run_verify(opts);
    CHECK(res.ok());
    auto j = json::parse(report_json(res, opts));
    CHECK(j["ok"] == true);
    CHECK(j["reports"].size() == res.reports.size());
}
