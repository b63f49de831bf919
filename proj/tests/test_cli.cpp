#include "ccseries/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <sstream>

using namespace ccseries;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("table output")
{
    auto r = run({"table", "--kind", "doublecoset", "-n", "3", "--format", "csv"});
    CHECK(r.code == 0);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    CHECK(line == "lambda,mu,value");
    int rows = 0;
    while (std::getline(in, line))
        ++rows;
    CHECK(rows == 9);

    auto j = nlohmann::json::parse(run({"table", "--kind", "pi", "-n", "4"}).out);
    CHECK(j["n"] == 4);
    CHECK(j["kind"] == "pi");
    CHECK(j["entries"][0]["lambda"] == "4");
    CHECK(j["entries"][0]["value"] == "48");
    CHECK_FALSE(j["entries"][0].contains("mu"));

    auto c = nlohmann::json::parse(run({"table", "--kind", "class", "-n", "2"}).out);
    CHECK(c["kind"] == "class-top");
    CHECK(c["entries"][0]["lambda"] == "2");
    CHECK(c["entries"][0]["mu"] == "2");
    CHECK(c["entries"][0]["value"] == "1");

    auto q = run({"table", "--kind", "zonalQ", "-n", "2", "--format", "csv"});
    CHECK(q.out.find("2,2,3/8\n") != std::string::npos);
}

TEST_CASE("single coefficients")
{
    auto value = [](const std::vector<std::string>& args) {
        return nlohmann::json::parse(run(args).out)["value"].get<std::string>();
    };
    CHECK(value({"coeff", "--kind", "doublecoset", "-n", "5", "--lambda", "5", "--mu", "5"}) == "945");
    CHECK(value({"coeff", "--kind", "doublecoset", "-n", "5", "--lambda", "4.1", "--mu", "4.1"}) == "225");
    CHECK(value({"coeff", "--kind", "class", "-n", "4", "--lambda", "1.1.1.1", "--mu", "4"}) == "6");
    CHECK(value({"coeff", "--kind", "zonalP", "-n", "4", "--lambda", "2.1.1", "--mu", "2.1.1"}) == "1");
}

TEST_CASE("exit codes")
{
    CHECK(run({"table", "--kind", "bogus", "-n", "3"}).code == cli::kUsageError);
    CHECK(run({"coeff", "--kind", "class", "-n", "4", "--lambda", "1.x", "--mu", "4"}).code == cli::kUsageError);
    CHECK(run({"coeff", "--kind", "class", "-n", "4", "--lambda", "3", "--mu", "4"}).code == cli::kUsageError);
    CHECK(run({"coeff", "--kind", "zonalQ", "-n", "6", "--lambda", "2.2.2", "--mu", "6"}).code == cli::kUsageError);
    CHECK(run({"coeff", "--kind", "class", "-n", "4", "--lambda", "4"}).code == cli::kUsageError);
    CHECK(run({}).code == cli::kUsageError);
    CHECK(run({"--help"}).code == cli::kSuccess);
    auto over = run({"verify", "--suite", "coset-oracle", "-n", "9"});
    CHECK(over.code == cli::kOverCap);
    CHECK(over.err.find("cap") != std::string::npos);
    CHECK(run({"table", "--kind", "class", "-n", "21"}).code == cli::kOverCap);
    CHECK(run({"--oracle-cap-coset", "9", "verify", "--suite", "coset-oracle", "-n", "3"}).code == cli::kUsageError);
}

TEST_CASE("verify suites")
{
    CHECK(run({"verify", "--suite", "class-oracle", "-n", "5"}).code == 0);
    CHECK(run({"verify", "--suite", "coset-oracle", "-n", "3"}).code == 0);
    CHECK(run({"verify", "--suite", "zonal-oracle", "-n", "4"}).code == 0);
    CHECK(run({"verify", "--suite", "closed-forms", "-n", "8"}).code == 0);
    auto all = run({"verify", "--suite", "all", "-n", "9"});
    CHECK(all.code == 0);
    CHECK(all.out.find("clamped") != std::string::npos);
    CHECK(run({"--oracle-cap-class", "4", "verify", "--suite", "class-oracle", "-n", "5"}).code == cli::kOverCap);
}

TEST_CASE("environment overrides the caps")
{
    setenv("CCSERIES_ORACLE_CAP_COSET", "2", 1);
    CHECK(run({"verify", "--suite", "coset-oracle", "-n", "3"}).code == cli::kOverCap);
    setenv("CCSERIES_ORACLE_CAP_COSET", "x", 1);
    CHECK(run({"verify", "--suite", "coset-oracle", "-n", "3"}).code == cli::kUsageError);
    unsetenv("CCSERIES_ORACLE_CAP_COSET");
}

TEST_CASE("output is independent of the thread count")
{
    for (const char* kind : {"class", "doublecoset", "pi", "zonalQ", "zonalP"}) {
        auto one = run({"--threads", "1", "table", "--kind", kind, "-n", "7"});
        auto four = run({"--threads", "4", "table", "--kind", kind, "-n", "7"});
        CHECK(one.code == 0);
        CHECK(one.out == four.out);
        CHECK(one.out == run({"table", "--kind", kind, "-n", "7"}).out);
    }
}

TEST_CASE("integer values carry no denominator")
{
    auto j = nlohmann::json::parse(run({"table", "--kind", "doublecoset", "-n", "6"}).out);
    for (const auto& e : j["entries"])
        CHECK(e["value"].get<std::string>().find('/') == std::string::npos);
}
