#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "roughlob/book.hpp"
#include "roughlob/rng.hpp"
#include "support/test_support.hpp"

using namespace roughlob;

namespace {

BookParams plain_params() {
    BookParams p = default_book_params();
    p.eta = 0.1;
    p.beta = 0.0;
    p.zeta = 0.0;
    p.c = 0.0;
    set_default_terms(p, 1.0, 0.3, 0.0, 0.25); // G off
    p.q0 = 1e18;                               // J off
    return p;
}

VolterraPath flat_y(double horizon, double level) {
    VolterraPath vp;
    const std::size_t n = 16;
    for (std::size_t i = 0; i <= n; ++i) {
        vp.times.push_back(horizon * static_cast<double>(i) / n);
        vp.y.push_back(level);
        vp.raw.push_back(level);
    }
    return vp;
}

} // namespace

TEST_CASE("zero book is a fixed point of the full dynamics, noise on") {
    BookParams p = default_book_params();
    BookGrid g = make_book_grid(1.0, 64);
    CounterRng rng(5, 5);
    for (int s = 0; s < 200; ++s) book_step(g, p, 0.5, 0.01 * rng.normal(), 1e-3);
    for (double u : g.u) CHECK(u == 0.0);
    CHECK(g.clamp_mass == 0.0);
}

TEST_CASE("drift of a sine mode is the diffusion eigenvalue to O(dx^2)") {
    BookParams p = plain_params();
    const double L = 1.0;
    const int kmode = 1;
    const double q = kmode * M_PI / (2.0 * L);
    BookGrid g = make_book_grid(L, 200, [&](double x) { return std::sin(kmode * M_PI * (x + L) / (2.0 * L)); });
    const auto d = drift_terms(g, p);
    const double dx = g.dx();
    for (std::size_t i = 1; i + 1 < g.x.size(); ++i) {
        const double expect = -p.eta * q * q * g.u[i];
        CHECK(std::fabs(d[i] - expect) <= 5.0 * p.eta * q * q * q * q * dx * dx / 12.0 + 1e-12);
    }
}

TEST_CASE("odd profile gives exactly zero imbalance, so no G contribution") {
    BookParams p = default_book_params();
    BookGrid g = make_book_grid(1.0, 128, [](double x) { return 3.1 * x * (1.0 - std::fabs(x)); });
    CHECK(window_imbalance(g, p.iota) == 0.0);
    // G with gain on vs gain off agree on the odd profile
    BookParams p2 = p;
    set_default_terms(p2, 1.0, 0.3, 7.0, 0.25);
    CHECK(drift_terms(g, p) == drift_terms(g, p2));
}

TEST_CASE("serial and parallel drift evaluation are bit-identical") {
    BookParams p = default_book_params();
    CounterRng rng(9, 1);
    BookGrid g = make_book_grid(1.0, 400);
    const std::size_t m = g.mid();
    for (std::size_t i = 1; i + 1 < g.u.size(); ++i)
        g.u[i] = (i > m ? 1.0 : (i < m ? -1.0 : 0.0)) * rng.uniform01();
    CHECK(drift_terms(g, p) == drift_terms_serial(g, p));
}

TEST_CASE("pure diffusion+decay eigenmode: terminal profile matches the heat solution") {
    BookParams p = plain_params();
    p.zeta = 0.5;
    const double L = 1.0;
    // k=2 Dirichlet mode sin(pi x / L): odd, so it honors the sign zones and
    // the clamp stays inert
    const double q = M_PI / L;
    const double rate = p.eta * q * q + p.zeta;
    BookGrid g = make_book_grid(L, 400, [&](double x) { return std::sin(M_PI * x / L); });
    const double dt = 5e-4;
    const std::size_t steps = 2000; // to t = 1
    for (std::size_t s = 0; s < steps; ++s) book_step(g, p, 0.0, 0.0, dt);
    // terminal profile vs the modal decay, relative L2 error <= 1e-3
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < g.x.size(); ++i) {
        const double exact = std::exp(-rate) * std::sin(M_PI * g.x[i] / L);
        num += (g.u[i] - exact) * (g.u[i] - exact);
        den += exact * exact;
    }
    CHECK(std::sqrt(num / den) <= 1e-3);
    CHECK(g.u.front() == 0.0);
    CHECK(g.u.back() == 0.0);
    CHECK(g.clamp_mass == 0.0);
}

TEST_CASE("multiplicative noise only: mean preserved, variance at the scheme value") {
    BookParams p = plain_params();
    p.eta = 0.0;
    p.c = 1.0;
    p.iota = 0.5; // the 8-cell toy grid is coarser than the default window
    const double y0 = 0.36;
    const double dt = 1e-2;
    const std::size_t steps = 50;
    BookGrid base = make_book_grid(1.0, 8, [](double x) { return x; });
    const std::size_t probe = 6; // some ask-side node
    std::vector<double> vals;
    const std::size_t n_paths = 4000;
    for (std::size_t r = 0; r < n_paths; ++r) {
        BookGrid g = base;
        CounterRng rng(31, derive_stream("gbm", r));
        for (std::size_t s = 0; s < steps; ++s)
            book_step(g, p, y0, std::sqrt(dt) * rng.normal(), dt);
        vals.push_back(g.u[probe]);
    }
    const auto ms = testsup::mean_se(vals);
    CHECK(std::fabs(ms.mean - base.u[probe]) <= 4.0 * ms.se);
    // scheme variance: u0^2 ((1 + c^2 y dt)^n - 1)
    double m2 = 0.0;
    for (double v : vals) m2 += (v - ms.mean) * (v - ms.mean);
    m2 /= static_cast<double>(vals.size() - 1);
    const double expect =
        base.u[probe] * base.u[probe] * (std::pow(1.0 + y0 * dt, double(steps)) - 1.0);
    CHECK(m2 == doctest::Approx(expect).epsilon(0.15));
}

TEST_CASE("reference nonlinear run: sign zones hold and clamp mass stays small") {
    BookParams p = default_book_params();
    BookGrid u0 = make_book_grid(1.0, 200, [](double x) {
        return 4.0 * x * (1.0 - std::fabs(x));
    });
    const auto vp = flat_y(0.5, 0.4);
    BookRunOptions opt;
    opt.horizon = 0.5;
    opt.dt = 2.5e-4;
    opt.snapshot_stride = 200;
    opt.seed = 12;
    const auto series = simulate_book(p, u0, vp, opt);
    const std::size_t m = (series.x.size() - 1) / 2;
    for (const auto& snap : series.snapshots) {
        CHECK(snap.front() == 0.0);
        CHECK(snap.back() == 0.0);
        for (std::size_t i = 0; i < snap.size(); ++i) {
            if (i > m) CHECK(snap[i] >= 0.0);
            if (i < m) CHECK(snap[i] <= 0.0);
        }
    }
    CHECK(series.clamp_mass <= 0.01 * series.initial_abs_mass);
    CHECK_FALSE(series.truncated_at.has_value());
}

TEST_CASE("y cap triggers the stopping-time split") {
    BookParams p = default_book_params();
    p.y_cap = 0.3;
    BookGrid u0 = make_book_grid(1.0, 64, [](double x) { return x; });
    VolterraPath vp = flat_y(1.0, 0.1);
    vp.y[8] = 0.9; // jumps above the cap at t = 0.5
    for (std::size_t i = 9; i < vp.y.size(); ++i) vp.y[i] = 0.9;
    BookRunOptions opt;
    opt.horizon = 1.0;
    opt.dt = 1e-2;
    const auto series = simulate_book(p, u0, vp, opt);
    REQUIRE(series.truncated_at.has_value());
    CHECK(*series.truncated_at == doctest::Approx(0.5).epsilon(0.05));
}

TEST_CASE("temporal self-convergence of the deterministic scheme") {
    BookParams p = default_book_params();
    p.c = 0.0;
    BookGrid u0 = make_book_grid(1.0, 100, [](double x) { return 4.0 * x * (1.0 - std::fabs(x)); });
    const auto vp = flat_y(0.25, 0.2);
    auto terminal = [&](double dt) {
        BookRunOptions opt;
        opt.horizon = 0.25;
        opt.dt = dt;
        opt.snapshot_stride = 1u << 30;
        const auto s = simulate_book(p, u0, vp, opt);
        return s.snapshots.back();
    };
    std::vector<double> errs, dts;
    std::vector<double> prev;
    for (double dt : {4e-3, 2e-3, 1e-3, 5e-4}) {
        const auto u = terminal(dt);
        if (!prev.empty()) {
            double e2 = 0.0;
            for (std::size_t i = 0; i < u.size(); ++i) e2 += (u[i] - prev[i]) * (u[i] - prev[i]);
            errs.push_back(std::log(std::sqrt(e2)));
            dts.push_back(std::log(dt));
        }
        prev = u;
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const auto m = static_cast<double>(errs.size());
    for (std::size_t i = 0; i < errs.size(); ++i) {
        sx += dts[i]; sy += errs[i]; sxx += dts[i] * dts[i]; sxy += dts[i] * errs[i];
    }
    const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    INFO("temporal slope ", slope);
    CHECK(slope >= 0.8);
}

TEST_CASE("CFL guard rejects oversized convection steps") {
    BookParams p = default_book_params();
    p.beta = 100.0;
    BookGrid g = make_book_grid(1.0, 64, [](double x) { return x; });
    try {
        book_step(g, p, 0.1, 0.0, 0.1);
        FAIL("expected CflViolation");
    } catch (const model_error& e) {
        CHECK(e.code == errc::cfl_violation);
    }
}

TEST_CASE("sign-zone clamp accounting measures exactly the removed mass") {
    BookParams p = default_book_params();
    p.eta = 0.0;
    p.beta = 0.0;
    p.zeta = 0.0;
    p.c = 1.0;
    p.iota = 0.5;
    p.q0 = 1e18;
    set_default_terms(p, 1.0, 0.3, 0.0, 0.25);
    p.q0 = 1e18;
    BookGrid g = make_book_grid(1.0, 8, [](double x) { return x; });
    const auto before = g.u;
    // dW large enough that 1 + c sqrt(y) dW < 0 flips every sign
    book_step(g, p, 1.0, -2.0, 1.0e-6);
    const double factor = 1.0 + std::sqrt(1.0) * (-2.0);
    double expected_clamp = 0.0;
    const std::size_t m = g.mid();
    for (std::size_t i = 1; i + 1 < g.u.size(); ++i) {
        if (i == m) continue;
        expected_clamp += std::fabs(before[i] * factor) * g.dx();
        CHECK(g.u[i] == 0.0); // flipped values violate the zones and are removed
    }
    CHECK(g.clamp_mass == doctest::Approx(expected_clamp).epsilon(1e-6));
}
