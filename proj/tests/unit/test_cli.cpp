#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "shintani/eisenstein.hpp"
#include "shintani/jobs.hpp"

using namespace shintani;
using jobs::Json;

namespace {

const std::string dir = SHINTANI_JOBS_DIR;

jobs::Outcome run_text(const std::string& text, bool toml = false, std::uint64_t seed = 1)
{
    return jobs::run_jobs(jobs::parse_job_text(text, toml), {seed, false, false});
}

const Json& job(const jobs::Outcome& o, const std::string& name)
{
    for (const auto& j : o.doc.at("jobs"))
        if (j.at("name") == name)
            return j;
    FAIL("no job named " << name);
    throw;
}

std::string value_at(const Json& job, unsigned k)
{
    for (const auto& row : job.at("result").at("values"))
        if (row.at("k") == k)
            return row.at("value");
    return "";
}

int run_binary(const std::string& args)
{
    const int rc = std::system((std::string(SHINTANI_BIN) + " " + args + " >/dev/null 2>&1").c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

// Every string in the document that looks like a rational re-parses to itself.
void check_round_trip(const Json& j, int& seen)
{
    if (j.is_structured()) {
        for (const auto& x : j)
            check_round_trip(x, seen);
    } else if (j.is_string()) {
        const std::string s = j;
        Rational r;
        if (!s.empty() && r.set_str(s, 10) == 0 && r.get_den() != 0) {
            CHECK(to_string(parse_rational(s)) == s);
            ++seen;
        }
    }
}

}  // namespace

TEST_CASE("flagship job file")
{
    const auto o = jobs::run_file(dir + "/flagship.toml", {});
    REQUIRE(o.exit_code == jobs::Ok);
    CHECK(o.doc.at("status") == "ok");
    const Json& smoothed = job(o, "smoothed");
    CHECK(value_at(smoothed, 1) == "-4");
    CHECK(value_at(smoothed, 3) == "-244");
    const Json& zeta = job(o, "zeta");
    CHECK(value_at(zeta, 0) == "0");
    CHECK(value_at(zeta, 1) == "1/30");
    CHECK(value_at(zeta, 3) == "1/60");
    CHECK(zeta.at("result").at("ell") == "11");
    CHECK(value_at(job(o, "zeta-second-basis"), 1) == "1/30");
}

TEST_CASE("two ray classes")
{
    const auto o = jobs::run_file(dir + "/two_classes.json", {});
    REQUIRE(o.exit_code == jobs::Ok);
    const Json& rows = job(o, "ray-classes").at("result").at("values");
    CHECK(rows[0].at("k") == 1);
    CHECK(rows[0].at("sum") == "-2/15");
    CHECK(rows[1].at("sum") == "-31/15");
}

TEST_CASE("domain, dedekind and sczech jobs")
{
    const auto o = jobs::run_file(dir + "/misc.toml", {});
    REQUIRE(o.exit_code == jobs::Ok);
    const Json& d = job(o, "domain").at("result");
    CHECK(d.at("pieces") == 2);
    CHECK(d.at("checked") == 20);
    CHECK(d.at("orbit_sum_one") == 20);

    IntMatrix sigma(2, 2);
    sigma(0, 0) = 1;
    sigma(1, 1) = 5;
    const Rational expect = dedekind_D(sigma, {1, 2}, PerturbationVector::rational({Rational(1, 3), Rational(2, 7)}),
                                       {Rational(1, 5), 0});
    CHECK(job(o, "dedekind").at("result").at("value") == to_string(expect));

    const Json& s = job(o, "sczech").at("result");
    CHECK(s.at("passed") == true);
    CHECK(s.at("checked") == 27);
}

TEST_CASE("TOML and JSON inputs agree")
{
    const std::string toml = R"(
field = { minpoly = [-2, 0, 1] }
ideals = { c = { basis = [[7, 0], [3, -1]] } }
[[jobs]]
kind = "zeta"
c = "c"
k = [1, 3]
)";
    const std::string json = R"({"field": {"minpoly": [-2, 0, 1]},
        "ideals": {"c": {"basis": [["7", "0"], ["3", "-1"]]}},
        "jobs": [{"kind": "zeta", "c": "c", "k": [1, 3]}]})";
    const auto a = run_text(toml, true), b = run_text(json);
    REQUIRE(a.exit_code == jobs::Ok);
    CHECK(jobs::render(a.doc) == jobs::render(b.doc));
    CHECK(value_at(a.doc.at("jobs")[0], 1) == "1/12");
    CHECK(value_at(a.doc.at("jobs")[0], 3) == "11/120");
}

TEST_CASE("schema errors stop before any job runs")
{
    const auto reducible = jobs::run_file(dir + "/reducible.json", {});
    CHECK(reducible.exit_code == jobs::Schema);
    const std::string msg = reducible.doc.at("error").at("message");
    CHECK(msg.find("irreducibility check") != std::string::npos);
    CHECK_FALSE(reducible.doc.contains("jobs"));

    const std::vector<std::string> bad{
        R"({"jobs": []})",
        R"({"field": "D7", "jobs": []})",
        R"({"field": "D5", "jobs": [{"kind": "zeta", "c": "nope", "k": 1}]})",
        R"({"field": "D5", "jobs": [{"kind": "frobnicate"}]})",
        R"({"field": "D5", "ideals": {"c": {"generator": [4, -1]}}, "jobs": [{"kind": "zeta", "c": "c"}]})",
        R"({"field": "D5", "ideals": {"c": {"generator": [4.0, -1]}}, "jobs": []})",
        R"({"field": "D5", "ideals": {"c": {"generator": [4, -1]}}, "jobs": [{"kind": "zeta", "c": "c", "k": 1, "ell": 7}]})",
        R"({"field": "D5", "ideals": {"c": {"generator": [4, -1]}, "two": {"generator": [2, 0]}},
            "jobs": [{"kind": "zeta", "classes": ["O", "two"], "c": "c", "k": 1}]})",
        R"({"field": "D5", "jobs": [{"kind": "sczech-verify", "n": 3}, {"kind": "sczech-verify", "name": "job1"}]})",
        R"({"field": "D5", "jobs": [{"kind": "verify", "suite": "everything"}]})",
        R"({"field": {"minpoly": [-1, -2, 1, 1]}, "jobs": []})",
        R"({"field": "D5", "units": [[2, 1]], "jobs": []})",
        R"({"field": "D5", "ideals": {"O": {"generator": [1, 0]}}, "jobs": []})",
        R"({"field": "D5", "jobs": [{"kind": "dedekind", "sigma": [[1, 0], [0, 5]], "e": [1], "q": [1, 1], "v": [0, 0]}]})",
        R"({"field": "D5", "jobs": [], "extra": 1})",
    };
    for (const auto& text : bad) {
        CAPTURE(text);
        const auto o = run_text(text);
        CHECK(o.exit_code == jobs::Schema);
        CHECK(o.doc.at("status") == "schema-error");
        CHECK_FALSE(o.doc.contains("jobs"));
    }
    CHECK_THROWS_AS(jobs::parse_job_text("field = [", true), jobs::SchemaError);
    CHECK_THROWS_AS(jobs::parse_job_text("{ not json", false), jobs::SchemaError);
}

TEST_CASE("computation errors are reported per job")
{
    // (2) is inert in Q(sqrt5), so no adapted basis exists; the next job still runs
    const auto o = run_text(R"({"field": "D5", "ideals": {"c": {"generator": [2, 0]}},
        "jobs": [{"kind": "zeta", "c": "c", "k": 1}, {"kind": "sczech-verify", "n": 2}]})");
    CHECK(o.exit_code == jobs::Computation);
    CHECK(o.doc.at("jobs")[0].at("status") == "error");
    CHECK(o.doc.at("jobs")[0].at("error").at("code") == "InvalidInput");
    CHECK(o.doc.at("jobs")[1].at("status") == "ok");

    // a degenerate Q is a computation error, not a schema error
    const auto q = run_text(R"({"field": "D5", "jobs": [{"kind": "dedekind", "sigma": [[1, 0], [0, 5]],
        "e": [1, 1], "q": [0, 1], "v": [0, 0]}]})");
    CHECK(q.exit_code == jobs::Computation);
    CHECK(q.doc.at("jobs")[0].at("error").at("code") == "DegenerateQ");
}

TEST_CASE("determinism and round trip")
{
    const std::string text = R"({"field": "D12", "ideals": {"c": {"generator": [1, 2]}, "r": {"generator": [0, 1]}},
        "jobs": [{"kind": "zeta", "classes": ["O", "r"], "c": "c", "c_action": [1, 0], "k": [0, 1, 2, 3]},
                 {"kind": "domain", "points": 30},
                 {"kind": "dedekind", "sigma": [[2, 1], [5, 15]], "e": [2, 3], "q": ["1/2", "-3/7"], "v": ["1/3", "1/4"], "ell": 5}]})";
    const auto a = run_text(text, false, 9), b = run_text(text, false, 9);
    REQUIRE(a.exit_code == jobs::Ok);
    CHECK(jobs::render(a.doc) == jobs::render(b.doc));
    CHECK(jobs::render(a.doc).find("seconds") == std::string::npos);
    const Json& zrows = a.doc.at("jobs")[0].at("result").at("values");
    CHECK(zrows[1].at("sum") == "1/6");
    CHECK(zrows[3].at("sum") == "23/60");

    int seen = 0;
    check_round_trip(a.doc, seen);
    CHECK(seen > 10);
    // re-reading the rendered document gives the same document
    CHECK(jobs::render(Json::parse(jobs::render(a.doc))) == jobs::render(a.doc));

    std::mt19937_64 rng(5);
    for (int t = 0; t < 200; ++t) {
        Rational x(long(rng() % 2000001) - 1000000, long(rng() % 999) + 1);
        x.canonicalize();
        const std::string s = to_string(x);
        CHECK(parse_rational(s) == x);
        if (x.get_den() != 1)
            CHECK(s == x.get_num().get_str() + "/" + x.get_den().get_str());
    }
}

TEST_CASE("verify suites")
{
    const auto o = jobs::verify_suite("sczech", 3);
    CHECK(o.exit_code == jobs::Ok);
    CHECK(o.doc.at("ok") == true);
    CHECK(jobs::render(o.doc) == jobs::render(jobs::verify_suite("sczech", 3).doc));
    CHECK(jobs::verify_suite("nonsense", 1).exit_code == jobs::Schema);
    CHECK(jobs::verify_suite("cones", 11).exit_code == jobs::Ok);
}

TEST_CASE("command-line exit codes")
{
    CHECK(run_binary("run " + dir + "/flagship.toml") == 0);
    CHECK(run_binary("run " + dir + "/reducible.json") == 2);
    CHECK(run_binary("run " + dir + "/missing-file.json") == 2);
    CHECK(run_binary("verify domain --seed 4") == 0);
    CHECK(run_binary("verify nonsense") == 2);
    CHECK(run_binary("frobnicate") == 2);

    const std::string out = "test_cli_out.json";
    REQUIRE(run_binary("run " + dir + "/misc.toml --seed 3 --parallel --out " + out) == 0);
    std::ifstream in(out);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == jobs::render(jobs::run_file(dir + "/misc.toml", {3, false, false}).doc));
    std::remove(out.c_str());
}
