#include <doctest.h>

#include <json.hpp>

#include "semistar/errors.hpp"
#include "semistar/scenario.hpp"

using namespace semistar;

namespace {

const char* kSmall = R"cfg(
# comment line
scenario tiny { title = "small \"quoted\" case"; seed = 3 }
domain { field = "Q"; vars = [X, Y]; localize_at = "(X, Y)" }
overring T1 { adjoin = "X/Y"; }
overring W { dvr_at = "X"; }
pool P1 { ideals = ["(X, Y)", "(X^2, Y)"]; }
star s { term = "custom_gcd_star"; }
query q1 { kind = eab; ideal = "(X)"; star = s; pool = P1; expect = Holds; provenance = "[TRIVIAL]"; }
query q2 { kind = closure; ideal = "(X, Y^3)"; star = s; expect = "(X, Y)"; provenance = "[DERIVED: rule table]"; }
query q3 { kind = ideal_member; ideal = "(X^2, Y^2)"; element = "X*Y"; expect = true; provenance = "[DERIVED]"; }
)cfg";

}  // namespace

TEST_CASE("config grammar round trip")
{
    ConfigDoc const d = parse_config_text(kSmall);
    REQUIRE(d.blocks.size() == 9);
    CHECK(d.blocks[0].kind == "scenario");
    CHECK(d.blocks[0].name == "tiny");
    CHECK(d.blocks[0].find("title")->scalar() == "small \"quoted\" case");
    CHECK(d.blocks[1].require("vars").list().size() == 2);
    std::string const once = print_config(d);
    CHECK(print_config(parse_config_text(once)) == once);

    for (const char* name : {"ex126", "ex1143", "ex75"}) {
        ScenarioSpec const s = load_scenario(name);
        std::string const text = print_config(s.source);
        CHECK(print_config(parse_config_text(text)) == text);
        CHECK(parse_config(text).queries.size() == s.queries.size());
    }
}

TEST_CASE("parse_config examples")
{
    ScenarioSpec const s126 = load_scenario("ex126");
    CHECK(s126.name == "ex126");
    CHECK(s126.domain().prime.has_value());
    CHECK(s126.certs.kn_equals_dz);
    CHECK(s126.env.overrings.size() == 2);

    ScenarioSpec const s1143 = load_scenario("ex1143");
    CHECK(s1143.overring("D1").ring.kind() == Overring::Kind::Adjunction);
    CHECK(s1143.star("ast").to_string() == "wedge(D1, D2)");

    CHECK_THROWS_AS(parse_config(""), ParseError);
    CHECK_THROWS_AS(parse_config("   # only a comment\n"), ParseError);
}

TEST_CASE("parse errors carry positions")
{
    auto offset_of = [](const std::string& text) -> std::size_t {
        try {
            parse_config(text);
        } catch (const ParseError& e) {
            return e.position();
        }
        FAIL("no parse error");
        return 0;
    };
    std::string const dom = "domain { field = \"Q\"; vars = [X, Y]; localize_at = \"(X, Y)\" }\n";
    std::string const q = "query q { kind = closure; ideal = \"(X)\"; star = d; expect = \"(X)\"; provenance = \"[TRIVIAL]\" }\n";

    std::string text = dom + "star s { term = \"frob\" }\n" + q;
    CHECK(offset_of(text) == text.find("\"frob\""));
    text = dom + "overring T { adjoin = \"X/+\" }\n" + q;
    CHECK(offset_of(text) == text.find("\"X/+\""));
    text = "domain { field = \"Q\"; vars = [X, Y]; localize_at = \"(X^2 + Y^2)\" }\n" + q;
    CHECK_THROWS_AS(parse_config(text), ParseError);
    text = "domain { field = \"Q\"; vars = [X, Y]; localize_at = \"(X*Y)\" }\n" + q;
    CHECK_THROWS_AS(parse_config(text), ParseError);
    text = dom + "query q { kind = eab; ideal = \"(X)\"; star = d; expect = Holds; provenance = \"[PAPER: x]\" }\n";
    CHECK_THROWS_AS(parse_config(text), ParseError);  // quote required
    text = dom + "query q { kind = eab; ideal = \"(X)\"; star = d; expect = Holds; provenance = \"guess\" }\n";
    CHECK_THROWS_AS(parse_config(text), ParseError);
    CHECK_THROWS_AS(parse_config(dom + "widget w { a = 1 }\n" + q), ParseError);
    CHECK_THROWS_AS(parse_config(dom + "star s { term = \"d\" \n"), ParseError);
    CHECK_THROWS_AS(parse_config(dom), ParseError);  // no queries
}

TEST_CASE("run_scenario and emit_report")
{
    ScenarioSpec const s = parse_config(kSmall);
    Report const r = run_scenario(s);
    REQUIRE(r.outcomes.size() == 3);
    CHECK(r.outcomes[0].pass);
    CHECK(r.outcomes[1].pass);
    CHECK_FALSE(r.outcomes[2].pass);  // XY is not in (X^2, Y^2)
    CHECK(r.exit_code() == 1);
    CHECK(r.seed == 3);
    CHECK(run_scenario(s, 9).seed == 9);

    std::string const text = emit_report(r, ReportFormat::Text);
    CHECK(text.find("PASS  q1") != std::string::npos);
    CHECK(text.find("FAIL  q3") != std::string::npos);
    CHECK(text.find("wall time") != std::string::npos);

    auto j = nlohmann::json::parse(emit_report(r, ReportFormat::Json));
    CHECK(j["exit_code"] == 1);
    CHECK(j["queries"][2]["status"] == "FAIL");
    CHECK(j.dump().find("wall") == std::string::npos);
}

TEST_CASE("engine errors are captured per query")
{
    std::string const text = "domain { field = \"Q\"; vars = [X, Y]; localize_at = \"(X, Y)\" }\n"
                              "query bad { kind = closure; ideal = \"(X + Y^2, X*Y)\"; star = b; expect = \"(1)\"; provenance = \"[TRIVIAL]\" }\n"
                              "query good { kind = ideal_member; ideal = \"(X)\"; element = \"X*Y\"; expect = true; provenance = \"[TRIVIAL]\" }\n";
    Report const r = run_scenario(parse_config(text));
    REQUIRE(r.outcomes.size() == 2);
    CHECK(r.outcomes[0].error);
    CHECK(r.outcomes[1].pass);
    CHECK(r.exit_code() == 2);
}

TEST_CASE("bundled scenarios pass and are deterministic")
{
    for (const char* name : {"ex126", "ex1143", "ex75"}) {
        ScenarioSpec const s = load_scenario(name);
        Report const a = run_scenario(s, 5);
        Report const b = run_scenario(s, 5);
        INFO(emit_report(a, ReportFormat::Text));
        CHECK(a.exit_code() == 0);
        CHECK(emit_report(a, ReportFormat::Json) == emit_report(b, ReportFormat::Json));
    }
    auto j = nlohmann::json::parse(emit_report(run_scenario(load_scenario("ex126")), ReportFormat::Json));
    bool found = false;
    for (const auto& a : j["assumptions"]) found |= a == "eab up to pool default-2";
    CHECK(found);
    for (const auto& q : j["queries"]) {
        std::string const p = q["provenance"];
        CHECK((p.rfind("[PAPER", 0) == 0 || p.rfind("[DERIVED", 0) == 0 || p.rfind("[TRIVIAL", 0) == 0));
        if (p.rfind("[PAPER", 0) == 0) CHECK_FALSE(std::string(q["quote"]).empty());
    }
}

TEST_CASE("scenario catalog")
{
    auto names = list_scenarios();
    CHECK(names == std::vector<std::string>{"ex1143", "ex126", "ex75"});
    CHECK_THROWS_AS(resolve_scenario("no-such-scenario"), InvalidInput);
}
