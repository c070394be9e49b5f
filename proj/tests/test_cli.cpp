#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = semistab::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name)
{
    return "semistab_cli_test_" + name;
}

} // namespace

TEST_CASE("bott")
{
    CHECK(run({"bott", "3", "1", "1", "0"}).out == "0\n");
    CHECK(run({"bott", "2", "1", "0", "1"}).out == "1\n");
    auto r = run({"bott", "2", "1", "2", "0", "--oracle"});
    CHECK(r.code == 0);
    CHECK(r.out == "3 3 OK\n");
    CHECK(run({"bott", "2", "1"}).code == 2);
    CHECK(run({"bott", "2", "5", "0", "0"}).code == 2);
    CHECK(run({"bott", "x", "1", "0", "0"}).code == 2);
}

TEST_CASE("certify exit codes")
{
    auto two = run({"certify", "--ambient", "P2", "--divisor", "1,1"});
    CHECK(two.code == 3);
    CHECK(two.out.find("NotSemistable") != std::string::npos);
    CHECK(run({"certify", "--ambient", "P2", "--divisor", "2"}).code == 0);
    auto open = run({"certify", "--ambient", "fano:5,3", "--divisor", "1"});
    CHECK(open.code == 4);
    CHECK(open.out.find("a=3 t=1") != std::string::npos);

    CHECK(run({"certify", "--ambient", "P2", "--divisor", "x"}).code == 2);
    CHECK(run({"certify", "--ambient", "R2", "--divisor", "1"}).code == 2);
    CHECK(run({"certify", "--ambient", "P3", "--divisor", "2:singular"}).code == 2);
    CHECK(run({"certify", "--ambient", "P3", "--divisor", "2:wobbly"}).code == 2);
    CHECK(run({"certify", "--ambient", "P3", "--divisor", "1,1", "--non-snc"}).code == 2);
    CHECK(run({"certify", "--ambient", "P3"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("certify json replays")
{
    auto r = run({"certify", "--ambient", "P3", "--divisor", "2", "--format", "json"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["outcome"] == "Semistable");
    CHECK(j["pair"]["slope"] == "-2/3");

    auto path = temp_path("verdict.json");
    {
        std::ofstream f(path);
        f << r.out;
    }
    auto rep = run({"replay", "--file", path});
    CHECK(rep.code == 0);
    CHECK(rep.out.rfind("OK SlopeBound", 0) == 0);

    j["certificate"]["children"][0]["children"][0]["inputs"]["t"] = 5;
    {
        std::ofstream f(path);
        f << j["certificate"].dump();
    }
    CHECK(run({"replay", "--file", path}).code == 1);
    {
        std::ofstream f(path);
        f << "{ not json";
    }
    CHECK(run({"replay", "--file", path}).code == 2);
    std::remove(path.c_str());
    CHECK(run({"replay", "--file", temp_path("missing.json")}).code == 2);
}

TEST_CASE("table, crosscheck, cover, catalog")
{
    auto t = run({"table", "--n", "5", "--s", "6", "--k", "2"});
    CHECK(t.code == 0);
    CHECK(t.out.find("a=3 t=2 Resolved SnowVanish") != std::string::npos);
    std::size_t lines = std::count(t.out.begin(), t.out.end(), '\n');
    CHECK(lines == 10);
    CHECK(run({"table", "--n", "5", "--s", "6"}).code == 2);
    CHECK(run({"table", "--n", "9"}).code == 2);
    auto all = run({"table", "--n", "3", "--format", "json"});
    CHECK(nlohmann::json::parse(all.out).is_array());

    auto c = run({"crosscheck", "--n", "6"});
    CHECK(c.code == 0);
    CHECK(c.out.find("engine resolves, statement excludes: (s=5,k=2)") != std::string::npos);
    auto cj = nlohmann::json::parse(run({"crosscheck", "--n", "5", "--format", "json"}).out);
    CHECK(cj["engine_only"].size() == 1);

    CHECK(run({"cover", "--ambient", "P2", "--divisor", "2,2"}).code == 0);
    CHECK(run({"cover", "--ambient", "P3", "--divisor", "1"}).code == 4);

    auto cat = run({"catalog", "run", "--file", "default"});
    CHECK(cat.code == 0);
    CHECK(std::count(cat.out.begin(), cat.out.end(), '\n') == 14);
    auto listed = run({"catalog", "list"});
    auto path = temp_path("catalog.txt");
    {
        std::ofstream f(path);
        f << listed.out;
    }
    auto again = run({"catalog", "run", "--file", path, "--format", "json"});
    CHECK(nlohmann::json::parse(again.out).size() == 13);
    {
        std::ofstream f(path);
        f << "id = a\nambient = projective\nbroken line\n";
    }
    auto bad = run({"catalog", "run", "--file", path});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("line 3") != std::string::npos);
    std::remove(path.c_str());
    CHECK(run({"catalog"}).code == 2);
}
