#include <json.hpp>

#include "doctest.h"
#include "support/checks.hpp"
#include "suite.hpp"

using namespace symtriple;
using namespace symtriple::verify;
using testutil::throws_kind;

namespace {

RunConfig config_for(std::vector<std::string> suites) {
    RunConfig c;
    c.suites = std::move(suites);
    c.timing = false;
    return c;
}

}  // namespace

TEST_CASE("suite list is sorted and complete") {
    const auto& all = suites();
    REQUIRE(all.size() == 20);
    for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1].name < all[i].name);
    for (const char* name : {"pentagonal", "transitions", "numeric", "exact", "general_series"})
        CHECK(std::any_of(all.begin(), all.end(), [&](const SuiteInfo& s) { return s.name == name; }));
}

TEST_CASE("run_suite rejects bad configurations") {
    CHECK(throws_kind([] { run_suite(config_for({"nonexistent"})); }, ErrorKind::UnknownSuite));
    CHECK(throws_kind([] { run_suite(config_for({})); }, ErrorKind::UnknownSuite));
    RunConfig c = config_for({"exact"});
    c.order = 0;
    CHECK(throws_kind([&] { run_suite(c); }, ErrorKind::BadParams));
    c.order = 25;
    c.trials = 0;
    CHECK(throws_kind([&] { run_suite(c); }, ErrorKind::BadParams));
}

TEST_CASE("selected suites run once each, in name order") {
    auto reports = run_suite(config_for({"pentagonal", "jacobi", "pentagonal"}));
    REQUIRE(reports.size() == 2);
    CHECK(reports[0].suite == "jacobi");
    CHECK(reports[1].suite == "pentagonal");
    for (const auto& r : reports) {
        CHECK(r.passed());
        CHECK(r.cases_run > 0);
        CHECK(r.elapsed_ms == 0);
    }
}

TEST_CASE("reports are deterministic in the seed") {
    RunConfig c = config_for({"exact", "pentagonal"});
    c.trials = 8;
    c.seed = 12345;
    std::string a = report_json(run_suite(c)), b = report_json(run_suite(c));
    CHECK(a == b);
}

TEST_CASE("report JSON has the documented schema") {
    auto j = nlohmann::json::parse(report_json(run_suite(config_for({"jacobi"}))));
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 1);
    CHECK(j[0]["suite"] == "jacobi");
    CHECK(j[0]["status"] == "pass");
    CHECK(j[0]["cases_run"].get<long>() > 0);
    CHECK(j[0]["elapsed_ms"] == 0);
    CHECK_FALSE(j[0].contains("first_failure"));
}

TEST_CASE("recorder keeps the first failure and counts every case") {
    Recorder r("probe", RunConfig{});
    CHECK(r.check("equal", 0, FieldElement(1L), FieldElement(1L)));
    CHECK_FALSE(r.check("first", 1, FieldElement(1L), FieldElement(2L)));
    CHECK_FALSE(r.check_true("second", 2, false));
    CHECK_FALSE(r.check_near("third", 3, 1.0, 1.1, 1e-3));
    IdentityReport rep = r.report();
    CHECK(rep.cases_run == 4);
    REQUIRE_FALSE(rep.passed());
    CHECK(rep.first_failure->identity == "first");
    CHECK(rep.first_failure->index == 1);
    CHECK(rep.first_failure->lhs == "1");
    CHECK(rep.first_failure->rhs == "2");
    auto j = nlohmann::json::parse(report_json({rep}));
    CHECK(j[0]["status"] == "fail");
    CHECK(j[0]["first_failure"]["identity"] == "first");
    CHECK(j[0]["first_failure"]["index"] == 1);
}

TEST_CASE("samplers are independent per suite and stream, fixed per seed") {
    RunConfig c;
    c.seed = 7;
    Recorder a("alpha", c), b("beta", c);
    auto draw = [](Sampler s) {
        std::vector<long> v;
        for (int i = 0; i < 8; ++i) v.push_back(s.uniform(0, 1000000));
        return v;
    };
    CHECK(draw(a.sampler(0)) == draw(a.sampler(0)));
    CHECK(draw(a.sampler(0)) != draw(a.sampler(1)));
    CHECK(draw(a.sampler(0)) != draw(b.sampler(0)));
}

TEST_CASE("brute-force oracles on known values") {
    auto p = oracle::partitions(10);
    CHECK(p[10] == 42);
    CHECK(oracle::pentagonal(5) == 1);
    CHECK(oracle::pentagonal(12) == -1);
    CHECK(oracle::pentagonal(7) == 1);
    CHECK(oracle::pentagonal(4) == 0);
    CHECK(oracle::lattice_squares(2, 25) == 12);
    CHECK(oracle::lattice_triangular(2, 4) == 2);
    CHECK(oracle::stirling_subset(5, 2) == 15);
    CHECK(oracle::stirling_cycle(5, 2) == 50);
    CHECK(oracle::bernoulli(4)[4] == make_rational(-1, 30));
    // (q;q)^3 begins 1 - 3q + 5q^3 - 7q^6.
    auto cube = oracle::product(6, 3, 0);
    CHECK(cube == std::vector<Integer>{1, -3, 0, 5, 0, 0, -7});
    // B_2^{(-1)} = 2!/3! = 1/3.
    CHECK(oracle::norlund(-1, 2)[2] == make_rational(1, 3));
}
