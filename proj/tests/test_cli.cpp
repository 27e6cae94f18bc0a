#include "ctrans/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace ctrans;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args, cli::CliConfig cfg = {}) {
    if (cfg.cache_dir.empty()) cfg.cache_dir = (std::filesystem::temp_directory_path() / "ctrans-cli-empty-cache").string();
    std::ostringstream out, err;
    int code = cli::run(args, cfg, out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json json_of(const Run& r) { return nlohmann::json::parse(r.out); }

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

const std::string kFixtures = std::string(CTRANS_FIXTURE_DIR) + "/oeis";

}  // namespace

TEST_CASE("ctransform of the all-ones sequence") {
    Run r = run({"--no-timestamp", "ctransform", "1/(1-x)", "--order", "8"});
    CHECK(r.code == cli::kExitOk);
    nlohmann::json j = json_of(r);
    CHECK(j["terms"] == nlohmann::json({"1", "1", "2", "5", "14", "42", "132", "429", "1430"}));
    CHECK(j["command"] == "ctransform");
}

TEST_CASE("every ctransform route gives the same terms") {
    std::string expected = json_of(run({"--no-timestamp", "ctransform", "(1+2*x)/(1-x^2)", "--order", "12"}))["terms"].dump();
    for (const char* route : {"constructive", "sequence", "catalan-squared", "catalan-matrix"}) {
        Run r = run({"--no-timestamp", "ctransform", "(1+2*x)/(1-x^2)", "--order", "12", "--route", route});
        CHECK(r.code == 0);
        CHECK(json_of(r)["terms"].dump() == expected);
    }
}

TEST_CASE("hankel command") {
    Run r = run({"--no-timestamp", "hankel", "1,2,6,20,70,252,924", "--count", "4"});
    CHECK(r.code == 0);
    CHECK(json_of(r)["terms"] == nlohmann::json({"1", "2", "4", "8"}));
    Run serial = run({"--no-timestamp", "hankel", "1,2,6,20,70,252,924", "--count", "4", "--serial"});
    CHECK(serial.out == r.out);
}

TEST_CASE("verify reports and strict mode") {
    Run r = run({"--no-timestamp", "verify", "5", "--a", "-2", "--b", "1"});
    CHECK(r.code == 0);
    auto ls = lines(r.out);
    REQUIRE(ls.size() >= 2);
    for (std::size_t i = 0; i + 1 < ls.size(); ++i) CHECK(nlohmann::json::parse(ls[i])["status"] == "pass");
    nlohmann::json summary = nlohmann::json::parse(ls.back())["summary"];
    CHECK(summary["failed"] == 0);
    CHECK(summary["section"] == "5");
    bool hankel_found = false;
    for (const auto& l : ls) {
        auto j = nlohmann::json::parse(l);
        if (j.value("claim_id", "") == "linear-ratio.conjecture.hankel") {
            hankel_found = true;
            CHECK(j["computed_prefix"][1] == "-1");
            CHECK(j["computed_prefix"][2] == "1");
        }
    }
    CHECK(hankel_found);
    CHECK(run({"--no-timestamp", "--strict", "verify", "5", "--a", "-2", "--b", "1"}).code == 0);
    Run failing = run({"--no-timestamp", "--strict", "verify", "6", "--a", "1", "--b", "2"});
    CHECK(failing.code == cli::kExitVerification);
    CHECK(run({"--no-timestamp", "verify", "6", "--a", "1", "--b", "2"}).code == 0);
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == cli::kExitUsage);
    CHECK(run({"frobnicate"}).code == cli::kExitUsage);
    CHECK(run({"verify", "12"}).code == cli::kExitUsage);
    CHECK(run({"--order", "1", "expand", "1/(1-x)"}).code == cli::kExitUsage);
    CHECK(run({"expand", "1/(1-x"}).code == cli::kExitParse);
    CHECK(run({"expand", "1/(1-y)"}).code == cli::kExitParse);
    CHECK(run({"hankel", "1,2,3", "--count", "4"}).code == cli::kExitMath);
    CHECK(run({"ctransform", "2/(1-x)"}).code == cli::kExitMath);
    CHECK(run({"expand", "1/x"}).code == cli::kExitMath);
    Run bad = run({"expand", "1/(1-x"});
    CHECK(bad.err.find("position 6") != std::string::npos);
    CHECK(run({"--help"}).code == cli::kExitOk);
}

TEST_CASE("output is deterministic without the timestamp") {
    std::vector<std::string> args{"--no-timestamp", "verify", "8", "--r", "2", "--s", "-1"};
    CHECK(run(args).out == run(args).out);
    Run stamped = run({"expand", "1/(1-x)", "--order", "3"});
    CHECK(json_of(stamped).contains("generated_at"));
    CHECK_FALSE(json_of(run({"--no-timestamp", "expand", "1/(1-x)", "--order", "3"})).contains("generated_at"));
}

TEST_CASE("output formats") {
    CHECK(run({"--format", "csv", "expand", "1/(1-2*x)", "--order", "3"}).out == "1\n2\n4\n8\n");
    CHECK(run({"--format", "text", "expand", "1/(1-2*x)", "--order", "3"}).out == "1, 2, 4, 8\n");
    Run text = run({"--format", "text", "verify", "3"});
    CHECK(text.code == 0);
    CHECK(text.out.find("construction.central-elements") != std::string::npos);
    CHECK(run({"--format", "xml", "expand", "x"}).code == cli::kExitUsage);
}

TEST_CASE("environment overrides") {
    setenv("CTRANS_ORDER", "6", 1);
    setenv("CTRANS_CACHE_DIR", kFixtures.c_str(), 1);
    cli::CliConfig cfg = cli::config_from_environment();
    unsetenv("CTRANS_ORDER");
    unsetenv("CTRANS_CACHE_DIR");
    CHECK(cfg.order == 6);
    CHECK(cfg.cache_dir == kFixtures);
    Run r = run({"--no-timestamp", "ctransform", "1/(1-x)"}, cfg);
    CHECK(json_of(r)["terms"].size() == 7);
    Run id = run({"--no-timestamp", "identify", "1,1,2,5,14,42"}, cfg);
    CHECK(json_of(id)["matches"][0]["id"] == "A000108");
    CHECK(cli::config_from_environment().order == 24);
}

TEST_CASE("sequence file input") {
    auto path = std::filesystem::temp_directory_path() / "ctrans-cli-ones.json";
    std::ofstream(path) << R"(["1","-1","-1","-1","-1","-1"])";
    Run r = run({"--no-timestamp", "ctransform", path.string()});
    CHECK(r.code == 0);
    CHECK(json_of(r)["terms"] == nlohmann::json({"1", "3", "12", "51", "222", "978"}));
    Run h = run({"--no-timestamp", "cinverse", path.string()});
    CHECK(h.code == 0);
    std::ofstream(path) << "[1, 2";
    CHECK(run({"ctransform", path.string()}).code == cli::kExitParse);
    std::filesystem::remove(path);
}

TEST_CASE("fitgf, jfrac, table and identify") {
    Run fit = run({"--no-timestamp", "fitgf", "1,-1,-4,4,16,-16,-64,64,256,-256", "--num-deg", "2", "--den-deg", "2"});
    CHECK(json_of(fit)["gf"] == "(1 - x) / (1 + 4*x^2)");
    Run jf = run({"--no-timestamp", "jfrac", "--linear", "1,4,0,4", "--quadratic", "1,1,1", "--order", "6"});
    CHECK(json_of(jf)["terms"] == nlohmann::json({"1", "1", "0", "-5", "-24", "-90", "-312"}));
    CHECK(run({"jfrac", "--linear", "1,2", "--quadratic", "1,1"}).code == cli::kExitUsage);
    Run tab = run({"--no-timestamp", "table", "9", "--max-r", "6"});
    CHECK(json_of(tab)["rows"].size() == 6);
    cli::CliConfig cfg;
    cfg.cache_dir = kFixtures;
    Run hit = run({"--no-timestamp", "identify", "1,3,12,51,222"}, cfg);
    CHECK(json_of(hit)["status"] == "identified");
    CHECK(json_of(hit)["matches"][0]["id"] == "A007854");
    Run miss = run({"--no-timestamp", "identify", "1,4,9,16,25,36"});
    CHECK(miss.code == 0);
    CHECK(json_of(miss)["status"] == "unidentified");
}
