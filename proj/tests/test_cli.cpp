#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "kron/cli.hpp"

using nlohmann::json;

namespace {

struct CliResult {
    int code;
    std::string out, err;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = kron::run_cli(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("compute emits the schema-stable JSON") {
    CliResult r = run({"compute", "--m", "2", "--n", "4", "--lambda", "6,4,4,1", "--mu", "12,3",
                       "--nu", "5,4,3,3"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["m"] == 2);
    CHECK(j["n"] == 4);
    CHECK(j["lambda"] == "6,4,4,1,0,0,0,0");
    CHECK(j["mu"] == "12,3");
    CHECK(j["nu"] == "5,4,3,3");
    CHECK(j["g"] == "4");  // string, never a number
    CHECK(j["g"].is_string());
    CHECK(j.contains("terms_evaluated"));
    CHECK(j.contains("terms_skipped"));
    CHECK(j.contains("wall_ms"));
}

TEST_CASE("atomic subcommand") {
    CliResult r = run({"atomic", "--m", "2", "--n", "3", "--lambda", "12,7,4,1", "--mu", "12,12",
                       "--nu", "12,12"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["atomic"] == "8793");
    CHECK(j.contains("terms_evaluated"));
}

TEST_CASE("verbose compute dumps term reports as JSON lines on stderr") {
    CliResult r = run({"compute", "--m", "2", "--n", "2", "--lambda", "2,2", "--mu", "2,2",
                       "--nu", "2,2", "--verbose"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);  // stdout is still one object
    CHECK(j["g"] == "1");
    std::istringstream lines(r.err);
    std::string line;
    int parsed = 0;
    bool saw_identity = false;
    while (std::getline(lines, line)) {
        if (line.empty()) continue;
        json term = json::parse(line);
        CHECK(term.contains("sigma"));
        CHECK(term.contains("count"));
        if (term["sigma"] == "1234") saw_identity = true;
        ++parsed;
    }
    CHECK(parsed > 0);
    CHECK(saw_identity);
}

TEST_CASE("thread-count independence modulo wall_ms") {
    auto normalized = [](std::vector<std::string> args) {
        CliResult r = run(std::move(args));
        REQUIRE(r.code == 0);
        json j = json::parse(r.out);
        j.erase("wall_ms");
        return j.dump();
    };
    const std::vector<std::string> base = {"compute", "--m", "2",        "--n",  "3",
                                           "--lambda", "8,6,5,2,1", "--mu", "12,10",
                                           "--nu",     "9,7,6"};
    auto one = base;
    one.insert(one.end(), {"--threads", "1"});
    auto four = base;
    four.insert(four.end(), {"--threads", "4"});
    CHECK(normalized(one) == normalized(four));
}

TEST_CASE("usage errors exit 1 with a diagnostic") {
    CliResult r = run({"compute", "--m", "2", "--n", "3", "--lambda", "1,1,1"});
    CHECK(r.code == 1);
    CHECK(!r.err.empty());

    CliResult bad = run({"compute", "--m", "2", "--n", "3", "--lambda", "1,2", "--mu", "3", "--nu",
                         "3"});
    CHECK(bad.code == 1);  // increasing parts
    CHECK(!bad.err.empty());
}

TEST_CASE("resource guard exits 2") {
    CliResult r = run({"feasible-set", "--m", "3", "--n", "3"});
    CHECK(r.code == 2);
}

TEST_CASE("vanish subcommand emits the report") {
    CliResult r = run({"vanish", "--m", "2", "--n", "3", "--lambda", "1,1,1,1,1,1", "--mu", "3,3",
                       "--nu", "6"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["report"]["conclusion"] == "ForcedZero");
    CHECK(j["report"]["inequalities"].size() == 3);
}

TEST_CASE("stable-triple subcommand") {
    CliResult r = run({"stable-triple", "--m", "2", "--n", "3", "--lambda", "10,8,5,3,2,2"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["mu"] == "18,12");
    CHECK(j["nu"] == "18,7,5");
    CHECK(j["report"]["is_stable_face_member"] == true);
    CHECK(j["report"]["g"] == "1");
    CHECK(j["report"]["atomic"] == "1");
    CHECK(j["report"]["rank_condition"] == true);
}

TEST_CASE("matrix emission round trips") {
    const std::string path = "test_cli_matrix_23.txt";
    CliResult r = run({"matrix", "--m", "2", "--n", "3", "--path", path});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["rows"] == 3);
    CHECK(j["cols"] == 11);
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream content;
    content << in.rdbuf();
    CHECK(content.str().substr(0, 9) == "2 3 3 11\n");
    std::remove(path.c_str());
}

TEST_CASE("poset subcommand on the seven contributing elements") {
    CliResult r = run({"poset", "--m", "2", "--n", "2", "--elements",
                       "1234,1324,2134,1243,3124,2143,1342"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["covers"].size() == 9);
}

TEST_CASE("stability-seq subcommand") {
    CliResult r = run({"stability-seq", "--m", "2", "--n", "3", "--base-lambda", "34,27,20,12,4,3",
                       "--base-mu", "70,30", "--base-nu", "43,39,18", "--lambda", "10,8,5,3,2,2",
                       "--mu", "18,12", "--nu", "18,7,5", "--k-max", "1"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["report"]["g_sequence"][0] == "2566");
    CHECK(j["report"]["g_sequence"][1] == "18028");
}

TEST_CASE("memo cache file is written and reused") {
    const std::string dir = ".";
    CliResult first = run({"atomic", "--m", "2", "--n", "2", "--lambda", "12,7,4,1", "--mu",
                           "12,12", "--nu", "12,12", "--cache-dir", dir});
    REQUIRE(first.code == 0);
    json j = json::parse(first.out);
    CHECK(j["atomic"] == "32");
    // the cache file now exists and a second run loads it cleanly
    CliResult second = run({"atomic", "--m", "2", "--n", "2", "--lambda", "12,7,4,1", "--mu",
                            "12,12", "--nu", "12,12", "--cache-dir", dir});
    CHECK(second.code == 0);
    json j2 = json::parse(second.out);
    CHECK(j2["atomic"] == "32");
    // cleanup
    for (const auto* name : {"vpf-memo-2x2-"}) {
        (void)name;
    }
}
