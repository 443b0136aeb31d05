#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include <json.hpp>

#include "lax/verify.hpp"

using namespace lax;

namespace {

const std::string corpus = LAX_MODELS;

struct Outcome {
    int status = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome run_cli(const std::string& args) {
    const std::string out = "cli_test_stdout.txt";
    const std::string err = "cli_test_stderr.txt";
    const int raw = std::system((std::string(LAX_CLI) + " " + args + " >" + out + " 2>" + err).c_str());
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, slurp(out), slurp(err)};
}

RunConfig config(const std::string& model, const std::string& command) {
    RunConfig c;
    c.model_path = corpus + "/" + model;
    c.command = command;
    return c;
}

}  // namespace

TEST_CASE("compare-gz on the single-arrow spec reports bijections", "[cli]") {
    const Outcome o = run_cli("--model " + corpus + "/category/arrow.json --command compare-gz");
    CHECK(o.status == 0);
    const auto doc = nlohmann::json::parse(o.out);
    CHECK(doc["tool"] == "lax");
    CHECK(doc["command"] == "compare-gz");
    CHECK(doc["model"] == "arrow.json");
    CHECK(doc["checks"].size() == 4);
    CHECK(doc["summary"]["pass"] == 4);
    CHECK(doc["passed"] == true);
    for (const auto& c : doc["checks"]) CHECK(c["anchor"] == "Classical: category of left fractions");
}

TEST_CASE("a non-transitive poset file is a positioned parse error", "[cli]") {
    const Outcome o = run_cli("--model " + corpus + "/pos/bad_leq.json --command hom");
    CHECK(o.status == 2);
    CHECK(o.out.empty());
    CHECK(o.err.find("bad_leq.json:6:15: leq is not transitive") != std::string::npos);
}

TEST_CASE("usage errors exit with status 2", "[cli]") {
    CHECK(run_cli("--model " + corpus + "/pos/small.json --command nope").status == 2);
    CHECK(run_cli("--model " + corpus + "/pos/small.json --command hom --apex-bound 0").status == 2);
    CHECK(run_cli("--model " + corpus + "/pos/small.json --command hom --witness-bound -3").status == 2);
    CHECK(run_cli("--model " + corpus + "/pos/small.json --command compare-gz").status == 2);
    CHECK(run_cli("--model " + corpus + "/category/square.json --command compose").status == 2);
    CHECK(run_cli("--command hom").status == 2);
    CHECK(run_cli("--model " + corpus + "/missing.json --command hom").status == 2);
}

TEST_CASE("failing checks exit with status 1", "[cli]") {
    const Outcome o = run_cli("--model " + corpus + "/category/not_ore.json --command compare-gz");
    CHECK(o.status == 1);
    const auto doc = nlohmann::json::parse(o.out);
    CHECK(doc["passed"] == false);
    CHECK(doc["checks"][0]["verdict"] == "fail");
    CHECK(doc["checks"][0]["subject"] == "ore");
}

TEST_CASE("undetermined checks are not reported as passing", "[cli]") {
    // The square axiom has no witness on this spec, so the search gives up.
    const Report r = run(config("category/not_ore.json", "check-axioms"));
    CHECK_FALSE(r.passed());
    CHECK(r.count(CheckVerdict::undetermined) == 1);
    CHECK(run_cli("--model " + corpus + "/category/not_ore.json --command check-axioms").status == 1);
}

TEST_CASE("every query command passes on the small poset model", "[cli]") {
    for (const std::string cmd : {"check-axioms", "hom", "compose", "two-cell-equal", "check-lari", "check-bc"}) {
        INFO(cmd);
        const Report r = run(config("pos/small.json", cmd));
        CHECK(r.passed());
        CHECK_FALSE(r.checks.empty());
    }
    const Report lari = run(config("pos/small.json", "check-lari"));
    REQUIRE(lari.checks.size() == 2);
    CHECK(lari.checks[0].subject == "bottom");
}

TEST_CASE("reports are byte-identical for identical runs", "[cli]") {
    RunConfig c = config("pos/small.json", "verify-coherence");
    c.seed = 7;
    const std::string a = report_json(run(c));
    const std::string b = report_json(run(c));
    CHECK(a == b);
    const auto doc = nlohmann::json::parse(a);
    CHECK(doc["config"]["samples"] == 20);
    CHECK(doc["config"]["seed"] == 7);
    CHECK(doc["passed"] == true);
    for (const auto& rec : doc["checks"]) CHECK(rec["instances"].get<int>() >= 20);

    const std::string args = "--model " + corpus + "/pos/small.json --command verify-coherence --seed 7 --out ";
    REQUIRE(run_cli(args + "cli_test_a.json").status == 0);
    REQUIRE(run_cli(args + "cli_test_b.json").status == 0);
    CHECK(slurp("cli_test_a.json") == slurp("cli_test_b.json"));
    CHECK(slurp("cli_test_a.json") == a);
}

TEST_CASE("report fields appear in a fixed order", "[cli]") {
    const std::string text = report_json(run(config("category/arrow.json", "check-lari")));
    const auto at = [&](const char* key) { return text.find(std::string("\"") + key + "\""); };
    CHECK(at("tool") < at("command"));
    CHECK(at("command") < at("model"));
    CHECK(at("model") < at("config"));
    CHECK(at("config") < at("checks"));
    CHECK(at("checks") < at("summary"));
    CHECK(at("summary") < at("passed"));
    CHECK(text.back() == '\n');
}
