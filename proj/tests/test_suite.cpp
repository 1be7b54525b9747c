#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "json.hpp"

#include "bidegree/birat.hpp"
#include "bidegree/polyfile.hpp"
#include "bidegree/suite.hpp"
#include "fixtures.hpp"

using namespace bidegree;

namespace {

std::string data_path(const std::string& rel) {
    return std::string(BIDEGREE_DATA_DIR) + "/" + rel;
}

// report text with the wall-clock lines removed
std::string stable_report(const SuiteReport& r) {
    std::istringstream in(report_text(r));
    std::ostringstream out;
    std::string line;
    while (std::getline(in, line))
        if (line.rfind("  time:", 0) != 0) out << line << "\n";
    return out.str();
}

} // namespace

TEST_CASE("polynomial files parse bindings and ideals") {
    PolyFile f = parse_poly_file(
        "# demo\n"
        "vars: y0:Y y1:Y x0:X x1:X t:P\n"
        "q = y0*x0^2 + y1*x1^2\n"
        "r = q^2 - t*q\n"
        "ideal axis: y0, x0, q\n");
    CHECK(f.names == std::vector<std::string>{"q", "r"});
    CHECK(f.poly("q").bidegree() == Bidegree{1, 2});
    CHECK(f.poly("r") == f.poly("q") * f.poly("q") -
                             parse_poly("t", f.table) * f.poly("q"));
    REQUIRE(f.ideal_gens("axis").size() == 3);
    CHECK(f.ideal_gens("axis")[2] == f.poly("q"));
    CHECK_THROWS_AS(f.poly("missing"), ConfigError);
    CHECK_THROWS_AS(f.ideal_gens("missing"), ConfigError);
}

TEST_CASE("polynomial file errors") {
    CHECK_THROWS_AS(parse_poly_file("q = y0\nvars: y0:Y\n"), ConfigError);
    CHECK_THROWS_AS(parse_poly_file("vars: y0:Y\nvars: y1:Y\n"), ConfigError);
    CHECK_THROWS_AS(parse_poly_file("vars: y0:Y\ny0 = y0^2\n"), ConfigError);
    CHECK_THROWS_AS(parse_poly_file("vars: y0:Y\nq = y0\nq = y0^2\n"), ConfigError);
    CHECK_THROWS_AS(parse_poly_file("vars: y0:Q\n"), ConfigError);
    CHECK_THROWS_AS(parse_poly_file("vars: y0:Y\nideal j: y0,, y0^2\n"), ConfigError);
    CHECK_THROWS_AS(parse_poly_file("just text\n"), ConfigError);
    CHECK_THROWS_AS(parse_poly_file("vars: y0:Y\nq = y0 +\n"), SyntaxError);
    CHECK_THROWS_AS(load_poly_file("/no/such/file.poly"), ConfigError);
}

TEST_CASE("the shipped quadric file matches the built-in fixture") {
    PolyFile f = load_poly_file(data_path("hpt.poly"));
    auto qt = fixtures::quadric_table();
    CHECK(f.poly("q").str() == fixtures::quadric(qt).str());
    CHECK(f.poly("h").str() == parse_poly("y0*y1*y2", qt).str());
    CHECK(f.ideals.size() == 6);
    for (int i = 0; i < 6; ++i)
        CHECK(f.ideal_gens("conic" + std::to_string(i)).size() == 4);
}

TEST_CASE("chart identity files parse and verify") {
    ChartIdentity inline_id = parse_chart_identity(
        "source-vars: y1:Y x2:X X2:X\n"
        "source = y1^3*x2^2 + y1\n"
        "target = y1*X2^2 + y1\n"
        "map X2 = y1*x2\n");
    CHECK(verify_chart_identity(inline_id).passed());

    for (const char* name :
         {"absorb-squares.chart", "quadric-to-2-3.chart", "eliminate-coordinate.chart",
          "chart-to-2-4.chart", "single-block-reduction.chart"}) {
        CAPTURE(name);
        ChartIdentity id = load_chart_identity(data_path(std::string("identities/") + name));
        Certificate cert = verify_chart_identity(id);
        CHECK(cert.passed());
    }
}

TEST_CASE("chart identity file errors") {
    CHECK_THROWS_AS(parse_chart_identity("source = y0\n"), ConfigError);
    CHECK_THROWS_AS(parse_chart_identity("source-vars: y0:Y\nsource = y0\n"),
                    ConfigError);  // no target
    CHECK_THROWS_AS(parse_chart_identity("source-vars: y0:Y\n"
                                         "source = y0\ntarget = y0\n"
                                         "map nope = y0\n"),
                    ConfigError);  // unknown target variable
    CHECK_THROWS_AS(parse_chart_identity("source-vars: y0:Y\nfrobnicate: 1\n"),
                    ConfigError);
}

TEST_CASE("built-in check registry") {
    std::vector<std::string> names = builtin_check_names();
    CHECK(std::is_sorted(names.begin(), names.end()));
    CHECK(std::count(names.begin(), names.end(), "pfister-subform-lemma") == 1);
    CHECK(std::count(names.begin(), names.end(), "reference-tables") == 1);
    CHECK_THROWS_AS(run_builtin_check("no-such-check"), ConfigError);

    // every fast check meets its shipped expectation
    for (const auto& name : names) {
        if (name == "quadric-hyperplane-containment") continue;  // heavy suite
        CAPTURE(name);
        Certificate cert = run_builtin_check(name);
        if (name == "perturbed-conic-control")
            CHECK(cert.verdict == Verdict::Fail);
        else
            CHECK(cert.passed());
    }
}

TEST_CASE("suite files parse directives and check lines") {
    SuiteConfig cfg = parse_suite(
        "# header\n"
        "seed: 7\n"
        "timeout-secs: 42\n"
        "max-pairs: 1000\n"
        "max-terms: 2000\n"
        "check reference-tables expect Pass anchor summary tables\n"
        "check perturbed-conic-control expect Fail anchor flipped sign control\n"
        "check quadric-hyperplane-containment expect PassOrUnknown anchor heavy\n");
    CHECK(cfg.rng_seed == 7);
    CHECK(cfg.limits.timeout == std::chrono::seconds(42));
    CHECK(cfg.limits.max_pairs == 1000);
    CHECK(cfg.limits.max_terms == 2000);
    REQUIRE(cfg.checks.size() == 3);
    CHECK(cfg.checks[0].expected == Expectation::Pass);
    CHECK(cfg.checks[1].expected == Expectation::Fail);
    CHECK(cfg.checks[2].expected == Expectation::PassOrUnknown);
    CHECK(cfg.checks[1].anchor == "flipped sign control");

    CHECK_THROWS_AS(parse_suite("check x expect Pass\n"), ConfigError);  // no anchor
    CHECK_THROWS_AS(parse_suite("check x expect Maybe anchor a\n"), ConfigError);
    CHECK_THROWS_AS(parse_suite("check x anchor a expect Pass\n"), ConfigError);
    CHECK_THROWS_AS(parse_suite("seed: lots\n"), ConfigError);
    CHECK_THROWS_AS(parse_suite("bogus-directive: 1\n"), ConfigError);
}

TEST_CASE("empty suite runs to an empty, all-met report") {
    SuiteReport r = run_suite(parse_suite("# nothing here\n"));
    CHECK(r.outcomes.empty());
    CHECK(r.all_met());
    CHECK(report_text(r) == "0/0 expectations met\n");
}

TEST_CASE("unknown check names are recorded, not thrown") {
    SuiteConfig cfg = parse_suite(
        "check reference-tables expect Pass anchor tables\n"
        "check no-such-check expect Pass anchor broken entry\n");
    SuiteReport r = run_suite(cfg);
    REQUIRE(r.outcomes.size() == 2);
    CHECK(r.outcomes[0].met);
    CHECK_FALSE(r.outcomes[1].met);
    CHECK(r.outcomes[1].error.find("no-such-check") != std::string::npos);
    CHECK_FALSE(r.all_met());
}

TEST_CASE("the shipped core suite meets every expectation") {
    SuiteConfig cfg = load_suite(data_path("suites/paper-core.suite"));
    CHECK(cfg.checks.size() == 16);
    SuiteReport r = run_suite(cfg);
    for (const auto& o : r.outcomes) {
        CAPTURE(o.desc.name);
        CHECK(o.met);
        CHECK(o.error.empty());
    }
    CHECK(r.all_met());

    SUBCASE("reports are deterministic modulo timing") {
        SuiteReport again = run_suite(cfg);
        CHECK(stable_report(r) == stable_report(again));
    }

    SUBCASE("the JSON report round-trips") {
        nlohmann::json doc = nlohmann::json::parse(report_json(r));
        CHECK(doc["all_met"] == true);
        REQUIRE(doc["checks"].size() == 16);
        CHECK(doc["checks"][0]["name"] == cfg.checks[0].name);
        for (const auto& entry : doc["checks"]) {
            CHECK(entry["met"] == true);
            CHECK(entry.contains("digest"));
        }
    }
}

TEST_CASE("the shipped heavy suite tolerates resource exhaustion") {
    SuiteConfig cfg = load_suite(data_path("suites/paper-heavy.suite"));
    REQUIRE(cfg.checks.size() == 1);
    CHECK(cfg.checks[0].expected == Expectation::PassOrUnknown);
    CHECK(cfg.limits.timeout == std::chrono::seconds(600));
    SuiteReport r = run_suite(cfg);
    CHECK(r.all_met());
    CHECK(r.outcomes[0].cert.verdict != Verdict::Fail);

    // starving the basis computation must downgrade to Unknown, never Fail
    cfg.limits.max_pairs = 1;
    SuiteReport starved = run_suite(cfg);
    CHECK(starved.outcomes[0].cert.verdict != Verdict::Fail);
}

TEST_CASE("thread cap environment variable is honored") {
    SuiteConfig cfg = load_suite(data_path("suites/paper-core.suite"));
    setenv("BIDEGREE_LAB_THREADS", "2", 1);
    SuiteReport capped = run_suite(cfg);
    unsetenv("BIDEGREE_LAB_THREADS");
    SuiteReport uncapped = run_suite(cfg);
    CHECK(capped.all_met());
    CHECK(stable_report(capped) == stable_report(uncapped));
}
