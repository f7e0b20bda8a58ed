#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <string>

#include "commands.hpp"
#include "report.hpp"
#include "run_config.hpp"

using namespace hermsq::cli;
using nlohmann::json;

namespace {

RunConfig base(const std::string& command) {
    RunConfig cfg;
    cfg.command = command;
    return cfg;
}

json parse_json_report(const Report& rep) { return json::parse(render_json(rep)); }

}  // namespace

TEST_CASE("hvalue fixtures and check column") {
    RunConfig cfg = base("hvalue");
    cfg.indices = {2, 2, 1, 1};
    cfg.method = "recurrence";
    cfg.check = true;
    const Report rep = run_command(cfg);
    CHECK(rep.exit_code() == 0);
    REQUIRE(rep.rows.size() == 1);
    CHECK(rep.rows[0]["value"] == "7");
    CHECK(rep.rows[0]["check"] == "agree");

    cfg.indices = {1, 1, 1};
    cfg.method = "closed";
    CHECK(run_command(cfg).rows[0]["value"] == "0");

    cfg.indices = {4};
    CHECK(run_command(cfg).rows[0]["value"] == "3");
}

TEST_CASE("hvalue usage errors") {
    RunConfig cfg = base("hvalue");
    cfg.indices = {};
    CHECK_THROWS_AS(run_command(cfg), UsageError);
    cfg.indices = {1, 1};
    cfg.method = "gf";
    cfg.order = 1;
    CHECK_THROWS_AS(run_command(cfg), UsageError);
    cfg.method = "nope";
    CHECK_THROWS_AS(run_command(cfg), UsageError);
}

TEST_CASE("json documents follow the schema") {
    RunConfig cfg = base("verify");
    cfg.suite = "claim1";
    cfg.max_index = 6;
    cfg.format = "json";
    const Report rep = run_command(cfg);
    const json doc = parse_json_report(rep);
    CHECK(doc["command"] == "verify");
    CHECK(doc["config"].is_object());
    CHECK(doc["config"]["seed"] == 0);
    CHECK(doc["rows"].is_array());
    CHECK(doc["warnings"].is_array());
    CHECK(doc["failures"].is_array());
    CHECK(doc["failures"].empty());
    // documented WARN-class discrepancy never alters the exit status
    CHECK(doc["warnings"].size() == 1);
    CHECK(rep.exit_code() == 0);
    const std::string warn = doc["warnings"][0].get<std::string>();
    CHECK(warn.find("(1,1)") != std::string::npos);
}

TEST_CASE("rationals render as integer or p/q strings, never floats") {
    RunConfig cfg = base("dn");
    cfg.max_index = 2;
    cfg.size = 2;
    const Report rep = run_command(cfg);
    const json doc = parse_json_report(rep);
    for (const auto& row : doc["rows"]) {
        CHECK(row["value"].is_string());
    }
    CHECK(doc["rows"][0]["value"] == "-2");
}

TEST_CASE("identical configs render byte-identical output") {
    RunConfig cfg = base("verify");
    cfg.suite = "recursion";
    cfg.max_index = 6;
    cfg.k = 2;
    cfg.seed = 42;
    const std::string once = render_json(run_command(cfg));
    const std::string twice = render_json(run_command(cfg));
    CHECK(once == twice);

    // worker count must not leak into the byte stream
    RunConfig wide = cfg;
    wide.jobs = 4;
    Report rep = run_command(wide);
    rep.config["jobs"] = cfg.jobs;  // config echo differs by design; rows must not
    CHECK(render_csv_rows(rep) == render_csv_rows(run_command(cfg)));
}

TEST_CASE("dn rows expose both routes and the fixtures") {
    RunConfig cfg = base("dn");
    cfg.max_index = 3;
    cfg.size = 1;
    const Report rep = run_command(cfg);
    REQUIRE(rep.rows.size() == 4);
    CHECK(rep.rows[0]["value"] == "1");
    CHECK(rep.rows[1]["value"] == "0");
    CHECK(rep.rows[2]["value"] == "-1");
    for (const auto& row : rep.rows) CHECK(row["routes_agree"] == true);
    CHECK(rep.exit_code() == 0);
}

TEST_CASE("asym defaults cover the whole catalogue") {
    RunConfig cfg = base("asym");
    const Report rep = run_command(cfg);
    CHECK(rep.exit_code() == 0);
    CHECK(rep.rows.size() > 20);
    RunConfig bad = cfg;
    bad.quantities = {"bogus"};
    CHECK_THROWS_AS(run_command(bad), UsageError);
}

TEST_CASE("pk rows are graded-lex sorted and compare clean against references") {
    RunConfig cfg = base("pk");
    cfg.k = 1;
    cfg.compare_paper = true;
    const Report rep = run_command(cfg);
    CHECK(rep.exit_code() == 0);
    REQUIRE(rep.rows.size() == 6);
    CHECK(rep.rows[0]["a"] == 2);
    CHECK(rep.rows[0]["coeff"] == "1");
    CHECK(rep.rows[1]["coeff"] == "-2");
    CHECK(rep.warnings.size() == 1);

    CHECK(pk_canonical_text(0) == "0 0 0 : 1\n");

    RunConfig bad = cfg;
    bad.k = 6;
    bad.compare_paper = true;
    CHECK_THROWS_AS(run_command(bad), UsageError);
}

TEST_CASE("table rows agree with the oracle when asked to check") {
    RunConfig cfg = base("table");
    cfg.max_index = 5;
    cfg.check = true;
    const Report rep = run_command(cfg);
    CHECK(rep.exit_code() == 0);
    for (const auto& row : rep.rows) CHECK(row["check"] == "agree");
}

TEST_CASE("csv rendering quotes awkward cells") {
    Report rep;
    nlohmann::ordered_json row;
    row["name"] = "a,b";
    row["quote"] = "say \"hi\"";
    row["value"] = 3;
    rep.rows.push_back(row);
    CHECK(render_csv_rows(rep) == "name,quote,value\n\"a,b\",\"say \"\"hi\"\"\",3\n");
}

TEST_CASE("format_double round-trips") {
    for (double v : {0.0, 1.0, -1.5, 0.1, 1e-9, 6.643789733147672, 1e300}) {
        const std::string s = format_double(v);
        CHECK(std::stod(s) == v);
    }
}

TEST_CASE("format text is pk-only") {
    RunConfig cfg = base("dn");
    cfg.format = "text";
    CHECK_THROWS_AS(run_command(cfg), UsageError);
}

TEST_CASE("exit status reflects failures, not warnings") {
    Report rep;
    CHECK(rep.exit_code() == 0);
    rep.warnings.push_back("documented discrepancy");
    CHECK(rep.exit_code() == 0);
    rep.failures.push_back("broken");
    CHECK(rep.exit_code() == 1);
}

TEST_CASE("every command emits a schema-conformant document") {
    std::vector<RunConfig> configs;
    {
        RunConfig c = base("hvalue");
        c.indices = {2, 2};
        configs.push_back(c);
    }
    {
        RunConfig c = base("pk");
        c.k = 2;
        configs.push_back(c);
    }
    {
        RunConfig c = base("verify");
        c.suite = "claim1";
        c.max_index = 4;
        configs.push_back(c);
    }
    {
        RunConfig c = base("gfcheck");
        c.order = 4;
        c.max_index = 4;
        configs.push_back(c);
    }
    {
        RunConfig c = base("dn");
        c.max_index = 2;
        c.size = 2;
        configs.push_back(c);
    }
    {
        RunConfig c = base("asym");
        c.n_values = {8};
        configs.push_back(c);
    }
    {
        RunConfig c = base("table");
        c.max_index = 3;
        configs.push_back(c);
    }
    for (const auto& c : configs) {
        CAPTURE(c.command);
        const json doc = parse_json_report(run_command(c));
        CHECK(doc["command"] == c.command);
        CHECK(doc["config"].is_object());
        CHECK(doc["config"].contains("seed"));
        CHECK(doc["config"].contains("jobs"));
        CHECK(doc["rows"].is_array());
        CHECK(!doc["rows"].empty());
        CHECK(doc["warnings"].is_array());
        CHECK(doc["failures"].is_array());
        for (const auto& row : doc["rows"]) {
            if (row.contains("value")) CHECK(row["value"].is_string());
            if (row.contains("exact")) CHECK(row["exact"].is_string());
        }
    }
}

TEST_CASE("budget guards are usage errors") {
    {
        RunConfig c = base("dn");
        c.size = 0;
        CHECK_THROWS_AS(run_command(c), UsageError);
        c.size = 7;
        CHECK_THROWS_AS(run_command(c), UsageError);
    }
    {
        RunConfig c = base("gfcheck");
        c.order = 17;
        CHECK_THROWS_AS(run_command(c), UsageError);
    }
    {
        RunConfig c = base("table");
        c.max_index = 25;
        CHECK_THROWS_AS(run_command(c), UsageError);
    }
    {
        RunConfig c = base("hvalue");
        c.indices = {1, 1, 1, 14};
        c.method = "closed";
        CHECK_THROWS_AS(run_command(c), UsageError);
    }
}
