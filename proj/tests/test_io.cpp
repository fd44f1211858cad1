#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "snchodge/io.hpp"
#include "snchodge/report.hpp"
#include "snchodge/weight_ss.hpp"

#include <cstdlib>

using namespace snchodge;

TEST_CASE("serialization round-trips every scenario") {
    for (const Scenario& s :
         {hopf_f1(), hashimoto_sano(2), clemens(2, {1, 1}), tyurin_quintic()}) {
        InputModel m = model_of(s);
        std::string text = serialize_model(m);
        InputModel parsed = parse_model(text);
        CHECK(serialize_model(parsed) == text);  // canonical fixed point
        CHECK(parsed.variety.components.size() == m.variety.components.size());
        CHECK(validate(parsed.variety).empty());
        // verdicts survive the round trip
        CHECK(n1_map(parsed.variety, parsed.variety.n).is_iso ==
              n1_map(m.variety, m.variety.n).is_iso);
        for (int k = 0; k <= 2 * m.variety.n; ++k)
            CHECK(betti_fiber(parsed.variety, k) == betti_fiber(m.variety, k));
    }
}

TEST_CASE("parse errors carry a line position") {
    try {
        parse_model("{\n  \"schema\": \"snc-hodge/1\",\n  broken\n}");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("schema errors name the offending field") {
    SUBCASE("wrong schema id") {
        CHECK_THROWS_AS(parse_model("{\"schema\": \"other/9\"}"), SchemaError);
    }
    SUBCASE("missing components") {
        CHECK_THROWS_AS(parse_model("{\"schema\": \"snc-hodge/1\", \"n\": 2}"), SchemaError);
    }
    SUBCASE("bad matrix shape") {
        std::string text = R"({"schema": "snc-hodge/1", "n": 1,
            "components": [{"name": "c", "dim": 1,
              "cohomology": [{"degree": 0, "explicit": 1, "blocks": []}],
              "pairings": {"0": {"rows": 2, "cols": 1, "entries": [["1/1+0/1*i"]]}}}]})";
        CHECK_THROWS_AS(parse_model(text), SchemaError);
    }
    SUBCASE("missing pairing names the degree") {
        std::string text = R"({"schema": "snc-hodge/1", "n": 1,
            "components": [{"name": "c", "dim": 1,
              "cohomology": [
                {"degree": 0, "explicit": 1,
                 "blocks": [{"p": 0, "q": 0,
                             "basis": {"rows": 1, "cols": 1, "entries": [["1/1+0/1*i"]]}}]},
                {"degree": 2, "explicit": 1,
                 "blocks": [{"p": 1, "q": 1,
                             "basis": {"rows": 1, "cols": 1, "entries": [["1/1+0/1*i"]]}}]}]}]})";
        try {
            parse_model(text);
            CHECK(false);
        } catch (const SchemaError& e) {
            CHECK(std::string(e.what()).find("degree 0") != std::string::npos);
        }
    }
}

TEST_CASE("dimension cap from the environment") {
    InputModel m = model_of(hopf_f1());
    std::string text = serialize_model(m);
    setenv("SNC_HODGE_MAX_DIM", "1", 1);
    CHECK_THROWS_AS(parse_model(text), SchemaError);
    setenv("SNC_HODGE_MAX_DIM", "512", 1);
    CHECK_NOTHROW(parse_model(text));
    unsetenv("SNC_HODGE_MAX_DIM");
}

TEST_CASE("reports are deterministic and carry the conventions") {
    InputModel m = model_of(hopf_f1());
    nlohmann::json a = build_report(m);
    nlohmann::json b = build_report(m);
    CHECK(a.dump() == b.dump());
    CHECK(a.contains("conventions"));
    CHECK(a["conventions"].contains("restriction_map"));
    CHECK(a["conventions"].contains("q_w3"));
    CHECK(a.contains("input_digest"));
    CHECK(a["degrees"].size() == 5);
}

TEST_CASE("degenerate input blocks the analysis") {
    InputModel m = model_of(hopf_f1());
    m.variety.components[0].pairing[2] = Mat::zero(2, 2);
    nlohmann::json rep = build_report(m);
    CHECK(rep["blocking"].get<bool>());
    CHECK_FALSE(rep.contains("degrees"));
}

TEST_CASE("analysis report verdict content") {
    nlohmann::json rep = build_report(model_of(hopf_f1()));
    const auto& d1 = rep["degrees"][1];
    CHECK(d1["k"] == 1);
    CHECK_FALSE(d1["n1"]["is_iso"].get<bool>());
    CHECK(d1["n1"]["note"].get<std::string>().find("dimension mismatch") !=
          std::string::npos);
    CHECK_FALSE(d1["pure_hodge_structure"]["established"].get<bool>());
    CHECK(rep["euler_check"]["equal"].get<bool>());
    CHECK(rep["middle_degree"]["equivalence_holds"].get<bool>());

    nlohmann::json rep_c = build_report(model_of(clemens(2, {1, 1})));
    CHECK_FALSE(rep_c["degree2_restriction"]["surjective"].get<bool>());
    CHECK(rep_c["degree2_restriction"].contains("note"));
    CHECK(rep_c["condition_star"]["overall"] == "positive_definite");

    nlohmann::json rep_t = build_report(model_of(tyurin_quintic()));
    CHECK(rep_t["middle_degree"]["image_rho_lefschetz_compatible"].get<bool>());
    CHECK(rep_t["bundles"]["L"]["residual"][0] == Scalar(0).str());

    nlohmann::json rep_h = build_report(model_of(hashimoto_sano(1)));
    CHECK(rep_h["bundles"]["L"]["glued"].get<bool>());
    CHECK(rep_h["bundles"]["L"]["h2_hodge_riemann"]["hodge_riemann"] == "no");
    CHECK(rep_h["bundles"]["L"]["top_power"] == Scalar(-804).str());
}
