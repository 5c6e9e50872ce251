#include "simpson/generate.hpp"
#include "simpson/report.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

using namespace simpson;
using nlohmann::json;

TEST_CASE("pair_from_json accepts integers and exact strings") {
    json j = json::parse(R"({
        "t1": {"a": 1000, "b": 9000, "c": 50, "d": 950},
        "t2": {"a": "95", "b": "5", "c": "5000", "d": "5000"}
    })");
    TablePair p = pair_from_json(j);
    CHECK(p == literature_example("blyth1971").pair);

    json frac = json::parse(R"({
        "t1": {"a": "1/2", "b": "0.25", "c": "3", "d": "7/5"},
        "t2": {"a": 1, "b": 1, "c": 1, "d": 1}
    })");
    TablePair q = pair_from_json(frac);
    CHECK(q.t1.a() == Rational(1, 2));
    CHECK(q.t1.b() == Rational(1, 4));
    CHECK(q.t1.d() == Rational(7, 5));
}

TEST_CASE("pair_from_json rejects bad input") {
    CHECK_THROWS_AS(pair_from_json(json::parse(R"({"t1": {}})")), ParseError);
    CHECK_THROWS_AS(
        pair_from_json(json::parse(
            R"({"t1": {"a": 0.1, "b": 1, "c": 1, "d": 1},
                "t2": {"a": 1, "b": 1, "c": 1, "d": 1}})")),
        ParseError);  // float literals are not exact
    CHECK_THROWS_AS(
        pair_from_json(json::parse(
            R"({"t1": {"a": 0, "b": 1, "c": 1, "d": 1},
                "t2": {"a": 1, "b": 1, "c": 1, "d": 1}})")),
        NonPositiveEntry);
}

TEST_CASE("pair JSON round trip is exact") {
    TablePair p{from_counts(Rational(1, 3), Rational(2), Rational(7, 2), Rational(5)),
                from_counts(4, 3, 8, 5)};
    CHECK(pair_from_json(pair_to_json(p)) == p);
}

TEST_CASE("parse_pair_text auto-detects JSON and CSV") {
    std::string csv = "t1,4,3,8,5\nt2,2,3,12,15\n";
    TablePair p = parse_pair_text(csv);
    CHECK(p == literature_example("simpson1951").pair);

    std::string js = R"({"t1":{"a":4,"b":3,"c":8,"d":5},"t2":{"a":2,"b":3,"c":12,"d":15}})";
    CHECK(parse_pair_text(js) == p);

    CHECK_THROWS_AS(parse_pair_text("t1,4,3,8\nt2,2,3,12,15\n"), ParseError);
    CHECK_THROWS_AS(parse_pair_text("garbage"), ParseError);
}

TEST_CASE("parse_stream_text reads a JSON array of pairs") {
    std::string text = R"([
        {"t1":{"a":1,"b":1,"c":1,"d":1},"t2":{"a":1,"b":1,"c":1,"d":1}},
        {"t1":{"a":5,"b":3,"c":10,"d":10},"t2":{"a":1,"b":19,"c":1,"d":20}}
    ])";
    std::vector<TablePair> snapshots = parse_stream_text(text);
    REQUIRE(snapshots.size() == 2);
    CHECK(case_of(snapshots[0]) == 14);
    CHECK(case_of(snapshots[1]) == 3);

    CHECK_THROWS_AS(parse_stream_text(R"({"t1":{}})"), ParseError);
}

TEST_CASE("analyze is internally consistent") {
    for (const CorpusEntry& e : literature_corpus()) {
        CAPTURE(e.id);
        AnalysisReport r = analyze(e.pair);
        CHECK(r.case_id == e.expected_case);
        CHECK(r.verdict == r.verdict_via_odds);
        CHECK(r.verdict == r.verdict_via_association);
        CHECK(r.definitions.sp == (r.verdict != SpVerdict::None));
        CHECK(r.aggregated == e.pair.aggregate());
        CHECK(r.decomposition.mu == r.quantities.mu);
    }
}

TEST_CASE("rational_to_json carries exact and approximate forms") {
    json j = rational_to_json(Rational(19, 9));
    CHECK(j["num"] == "19");
    CHECK(j["den"] == "9");
    CHECK(j["approx"].get<double>() == doctest::Approx(19.0 / 9.0));
}

TEST_CASE("report JSON has the documented shape") {
    AnalysisReport r = analyze(literature_example("blyth1971").pair);
    json j = report_to_json(r);

    CHECK(j["case"] == 3);
    CHECK(j["class"] == "Paradox");
    CHECK(j["sp"]["verdict"] == "SP1");
    CHECK(j["sp"]["via_odds_ratio"] == "SP1");
    CHECK(j["sp"]["via_association"] == "SP1");
    CHECK(j["relations"]["t1"] == ">");
    CHECK(j["relations"]["aggregate"] == "<");
    CHECK(j["definitions"]["B72"] == true);
    CHECK(j["quantities"]["mu"]["num"] == "219");
    CHECK(j["quantities"]["mu"]["den"] == "2020");
    CHECK(j["necessary_conditions"]["margins_differ"] == true);
    CHECK(j["homogeneity"]["orh"] == false);
    CHECK(j["dichotomy_diagnostic"]["matches_dichotomy"] == false);

    SUBCASE("echoed input reproduces the identical report") {
        TablePair again = pair_from_json(j["input"]);
        CHECK(report_to_json(analyze(again)) == j);
    }
}

TEST_CASE("text report mentions the headline facts") {
    std::string text = report_to_text(analyze(literature_example("blyth1971").pair));
    CHECK(text.find("Case 3") != std::string::npos);
    CHECK(text.find("SP1") != std::string::npos);
}
