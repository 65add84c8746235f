#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "diamonds/cli.hpp"

namespace {

struct Run {
    int status = 0;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    args.insert(args.begin(), "diamonds");
    std::vector<const char*> argv;
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    Run r;
    r.status = diamonds::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string write_temp(const std::string& name, const std::string& text)
{
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << text;
    return path.string();
}

} // namespace

TEST_CASE("coeffs")
{
    const Run r = run({"coeffs", "--family", "size", "--d", "1", "--N", "6"});
    CHECK(r.status == 0);
    CHECK(r.out == "n,coefficient\n0,1\n1,1\n2,2\n3,3\n4,5\n5,7\n6,11\n");

    const Run j = run({"coeffs", "--family", "schmidt", "--d", "1", "--N", "5", "--json"});
    REQUIRE(j.status == 0);
    const auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["schema"] == 1);
    CHECK(doc["coefficients"] == nlohmann::json({"1", "2", "5", "10", "20", "36"}));

    const std::string spec = write_temp("diamonds_distinct.json", R"({"P": "1+x", "A": 1, "a": 1})");
    const Run g = run({"coeffs", "--family", "general", "--spec", spec, "--N", "7"});
    CHECK(g.status == 0);
    CHECK(g.out.substr(g.out.rfind('\n', g.out.size() - 2) + 1) == "7,5\n");
}

TEST_CASE("output is deterministic")
{
    const std::vector<std::string> args{"compare", "--family", "schmidt", "--d", "2", "--N", "400", "--grid", "100,200,400"};
    CHECK(run(args).out == run(args).out);
    const Run c = run(args);
    CHECK(c.out.rfind("n,exact_log,asym_log,log_ratio\n", 0) == 0);
    CHECK(std::count(c.out.begin(), c.out.end(), '\n') == 4);
}

TEST_CASE("enumerate")
{
    CHECK(run({"enumerate", "--d", "1", "--n", "2", "--stat", "schmidt"}).out == "5\n");
    CHECK(run({"enumerate", "--d", "2", "--n", "6", "--stat", "size"}).out ==
          run({"coeffs", "--family", "size", "--d", "2", "--N", "6"}).out.substr(
              run({"coeffs", "--family", "size", "--d", "2", "--N", "6"}).out.rfind(',') + 1));
    const Run l = run({"enumerate", "--d", "2", "--n", "3", "--stat", "size", "--list"});
    REQUIRE(l.status == 0);
    const auto doc = nlohmann::json::parse(l.out);
    CHECK(doc["count"] == doc["diamonds"].size());
    CHECK(run({"enumerate", "--d", "2", "--n", "9", "--stat", "size", "--list"}).status == 2);
}

TEST_CASE("constants, asym, roots, dilog")
{
    const auto c = nlohmann::json::parse(run({"constants", "--d", "2"}).out);
    CHECK(c["C_d"]["quad"].get<double>() == doctest::Approx(0.8224670334241132));
    CHECK(c["D_Fd"].get<double>() == doctest::Approx(-0.6931471805599453));
    CHECK(c["C_d"]["agrees"] == true);

    const auto a = nlohmann::json::parse(run({"asym", "--family", "size", "--d", "1", "--n", "100"}).out);
    CHECK(a["log_estimate"].get<double>() == doctest::Approx(19.110225911795244).epsilon(1e-12));

    const auto roots = nlohmann::json::parse(run({"roots", "--poly", "1+4x+x^2"}).out);
    CHECK(roots["roots"].size() == 2);
    CHECK(roots["roots"][1][0].get<double>() == doctest::Approx(-0.2679491924311228));

    const auto li = nlohmann::json::parse(run({"dilog", "--z", "-1,0"}).out);
    CHECK(li["value"][0].get<double>() == doctest::Approx(-0.8224670334241132));
}

TEST_CASE("tolerance override from the environment")
{
    ::setenv(diamonds::cli::kToleranceEnv, "1e-30", 1);
    const auto strict = nlohmann::json::parse(run({"constants", "--poly", "1+x+x^2+x^3"}).out);
    ::unsetenv(diamonds::cli::kToleranceEnv);
    const auto loose = nlohmann::json::parse(run({"constants", "--poly", "1+x+x^2+x^3"}).out);
    CHECK(loose["C_P"]["agrees"] == true);
    CHECK(strict["C_P"]["gap"] == loose["C_P"]["gap"]);
    if (strict["C_P"]["gap"].get<double>() > 1e-30) {
        CHECK(strict["C_P"]["agrees"] == false);
    }
    ::setenv(diamonds::cli::kToleranceEnv, "banana", 1);
    CHECK(run({"constants", "--d", "2"}).status == 2);
    ::unsetenv(diamonds::cli::kToleranceEnv);
}

TEST_CASE("exit codes")
{
    CHECK(run({}).status == 2);
    CHECK(run({"coeffs", "--family", "size", "--d", "1", "--N", "5", "--bogus"}).status == 2);
    CHECK(run({"coeffs", "--family", "weird", "--d", "1", "--N", "5"}).status == 2);
    CHECK(run({"coeffs", "--family", "size", "--d", "0", "--N", "5"}).status == 2);
    CHECK(run({"coeffs", "--family", "size", "--d", "17", "--N", "5"}).status == 2);
    CHECK(run({"coeffs", "--family", "general", "--N", "5"}).status == 2);
    CHECK(run({"roots", "--poly", "1.5+x"}).status == 2);
    CHECK(run({"compare", "--family", "size", "--d", "1", "--N", "10", "--grid", "5,20"}).status == 2);
    CHECK(run({"--help"}).status == 0);
    CHECK(run({"coeffs", "--family", "size", "--d", "1", "--N", "3", "--seed", "42"}).status == 0);

    const Run cut = run({"dilog", "--z", "2,0"});
    CHECK(cut.status == 1);
    CHECK(cut.err.find("branch cut") != std::string::npos);

    const std::string bad = write_temp("diamonds_bad.json", R"({"P": "1", "Q": "1+x", "A": 1, "a": 1})");
    const Run hyp = run({"asym", "--family", "general", "--spec", bad, "--n", "10"});
    CHECK(hyp.status == 1);
    CHECK(hyp.err.find("theorem hypothesis violated") != std::string::npos);
    CHECK(hyp.out.empty());

    const Run verbose = run({"coeffs", "--family", "size", "--d", "1", "--N", "2", "--verbose"});
    CHECK(verbose.out == "n,coefficient\n0,1\n1,1\n2,2\n");
    CHECK_FALSE(verbose.err.empty());
}

TEST_CASE("verify")
{
    const Run q = run({"verify", "--quick"});
    CHECK(q.status == 0);
    CHECK(std::count(q.out.begin(), q.out.end(), '\n') == 10);
    const Run one = run({"verify", "--criterion", "6"});
    CHECK(one.status == 0);
    CHECK(one.out.rfind("criterion 6 PASS", 0) == 0);
    CHECK(run({"verify", "--criterion", "11"}).status == 2);
}
