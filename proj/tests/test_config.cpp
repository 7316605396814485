#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>

#include "roughlob/csv.hpp"
#include "roughlob/scenario.hpp"
#include "roughlob/special.hpp"

using namespace roughlob;

TEST_CASE("scenario round trip is the identity") {
    Scenario s;
    s.name = "roundtrip";
    s.kernel.scale = 0.41;
    s.volterra.kappa_bar = 0.9;
    s.book.u0_csv = "profile.csv";
    s.run.master_seed = 123456789012345ULL;
    const std::string text = serialize_scenario(s);
    const Scenario back = parse_scenario(text);
    CHECK(back == s);
    CHECK(serialize_scenario(back) == text);
}

TEST_CASE("unknown fields are rejected with their location") {
    const char* bad = R"({"name":"x","betas":{"beta1":0.6,"beta2":0.3,"beta3":0.5,"beta4":0.1}})";
    try {
        (void)parse_scenario(bad);
        FAIL("expected ConfigError");
    } catch (const model_error& e) {
        CHECK(e.code == errc::config_error);
        CHECK(std::string(e.what()).find("beta4") != std::string::npos);
    }
    CHECK_THROWS_AS((void)parse_scenario("{\"nope\":1}"), model_error);
    CHECK_THROWS_AS((void)parse_scenario("not json"), model_error);
}

TEST_CASE("referential consistency: derived volatility parameters") {
    Scenario s;
    const auto vp = s.resolved_volterra();
    CHECK(vp.theta == doctest::Approx(1.6).epsilon(1e-13));
    CHECK(vp.nu_bar == doctest::Approx(1.0 / special::gamma_fn(0.3)).epsilon(1e-12));
    // kappa_bar from (a_bar, mu_bar=0.2, v1): sqrt(0.65/1.6)/sqrt(0.2)
    CHECK(vp.kappa_bar == doctest::Approx(std::sqrt(0.65 / 1.6) / std::sqrt(0.2)).epsilon(1e-12));

    Scenario o = s;
    o.volterra.theta = 2.5;
    o.volterra.nu_bar = 0.5;
    o.volterra.kappa_bar = 1.0;
    const auto vo = o.resolved_volterra();
    CHECK(vo.theta == 2.5);
    CHECK(vo.nu_bar == 0.5);
    CHECK(vo.kappa_bar == 1.0);

    // default kernel is exactly critical
    const auto rep = classify_stability(s.resolved_phi0(), s.resolved_kernel());
    CHECK(rep.regime == Regime::Critical);
}

TEST_CASE("initial profile ingestion from CSV with interpolation") {
    const std::string path = "/tmp/roughlob-test-profile.csv";
    io::write_text(path, "x,u\n-1,0\n-0.5,-0.7\n0,0\n0.5,0.7\n1,0\n");
    Scenario s;
    s.book.nodes = 40;
    s.book.u0_csv = path;
    const auto g = s.resolved_initial_book();
    CHECK(g.u[g.mid()] == 0.0);
    // x = 0.25 interpolates halfway between 0 and 0.7
    const std::size_t i25 = g.mid() + 5; // dx = 0.05
    CHECK(g.u[i25] == doctest::Approx(0.35).epsilon(1e-12));
    CHECK(g.u.front() == 0.0);
    CHECK(g.u.back() == 0.0);
    std::remove(path.c_str());
}

TEST_CASE("timestamp parsing: iso8601, epoch nanoseconds, plain seconds") {
    CHECK(io::parse_timestamp("1970-01-01T00:00:01") == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(io::parse_timestamp("1970-01-01 00:01:00.5") == doctest::Approx(60.5).epsilon(1e-12));
    CHECK(io::parse_timestamp("2000000000") == doctest::Approx(2.0).epsilon(1e-12)); // ns
    CHECK(io::parse_timestamp("12.75") == doctest::Approx(12.75).epsilon(1e-12));
    const double day = io::parse_timestamp("2024-11-13T08:00:00");
    CHECK(day == doctest::Approx(1731484800.0).epsilon(1e-12));
}

TEST_CASE("tick and depth CSV ingestion") {
    const std::string path = "/tmp/roughlob-test-ticks.csv";
    io::write_text(path, "timestamp,price\n1000000000,100.0\n2000000000,100.5\n3000000000,99.5\n");
    const auto ticks = io::read_ticks_csv(path);
    REQUIRE(ticks.t.size() == 3);
    CHECK(ticks.t[1] == doctest::Approx(2.0));
    CHECK(ticks.s[2] == doctest::Approx(99.5));
    std::remove(path.c_str());

    const std::string dpath = "/tmp/roughlob-test-depth.csv";
    io::write_text(dpath, "timestamp,x_offset,size,side\n1.5,0.01,100,ask\n1.5,-0.01,50,bid\n");
    const auto recs = io::read_depth_csv(dpath);
    REQUIRE(recs.size() == 2);
    CHECK(recs[0].ask);
    CHECK_FALSE(recs[1].ask);
    CHECK(recs[1].size == doctest::Approx(50.0));
    std::remove(dpath.c_str());
}
