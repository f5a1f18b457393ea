#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "tafverify/verify.hpp"

using namespace tafverify;

namespace {

int run(std::string const & args)
{
    std::string cmd = std::string(TAFVERIFY_CLI) + " " + args + " > /dev/null 2>&1";
    int st = std::system(cmd.c_str());
    return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

std::size_t count(std::vector<check_result> const & r, check_status s)
{
    std::size_t k = 0;
    for (auto const & c : r)
        k += c.status == s;
    return k;
}

} // namespace

TEST_CASE("verify_all over N <= 10")
{
    auto r = verify_all(10);
    CHECK(count(r, check_status::fail) == 0);
    CHECK(count(r, check_status::flagged) == 2);
    CHECK(exit_status(r) == 0);
    for (std::size_t i = 1; i < r.size(); ++i)
        CHECK(r[i - 1].id < r[i].id);
    CHECK(report_json(r).dump() == report_json(verify_all(10)).dump());
}

TEST_CASE("verify_all over N <= 1 only has N = 1 checks")
{
    for (auto const & c : verify_all(1))
        CHECK(c.id.rfind("n01.", 0) == 0);
}

TEST_CASE("theorem reports")
{
    auto r1 = report(1);
    CHECK(r1.k0.to_string() == "GaloisCover(2)");
    CHECK(r1.ring == "c4,c6^2");
    auto r3 = report(3, 7);
    CHECK(r3.k0.to_string() == "GaloisCover(3)");
    CHECK(r3.k1.to_string() == "GaloisCover(3)");
    auto r5 = report(5);
    CHECK(r5.k0.to_string() == "Components(2)");
    CHECK(r5.ring == "involution-invariants only");
    auto r2 = report(2);
    CHECK(r2.k0.to_string() == "Components(1)");
    CHECK_THROWS_AS(report(3, 5), std::invalid_argument);
    CHECK_THROWS_AS(report(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(report(1, 9), std::invalid_argument);
    CHECK_THROWS_AS(report(8), std::invalid_argument);
}

TEST_CASE("command line exit codes")
{
    CHECK(run("verify-all --max-n 3") == 0);
    CHECK(run("verify-all --max-n 3 --report /nonexistent-dir/report.json") == 2);
    CHECK(run("report --n 2 --p 3") == 2);
    CHECK(run("bogus") == 2);
    CHECK(run("classgroup --n 5") == 0);
    CHECK(run("honda-tate --n 1 --p 5 --aux 11,19") == 0);
    CHECK(run("honda-tate --n 1 --p 5 --aux 11,11") == 2);
    CHECK(run("invariants --level 3") == 0);
    CHECK(run("qseries --prec 50") == 0);
}

TEST_CASE("report file is byte-identical across runs")
{
    std::string a = "verify_run_a.json", b = "verify_run_b.json";
    REQUIRE(run("verify-all --max-n 10 --report " + a) == 0);
    REQUIRE(run("verify-all --max-n 10 --report " + b) == 0);
    auto slurp = [](std::string const & p) {
        std::ifstream f(p, std::ios::binary);
        std::stringstream ss;
        ss << f.rdbuf();
        return ss.str();
    };
    CHECK(slurp(a) == slurp(b));
    CHECK_FALSE(slurp(a).empty());
    std::remove(a.c_str());
    std::remove(b.c_str());
}
