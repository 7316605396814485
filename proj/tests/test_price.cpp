#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "roughlob/price.hpp"
#include "support/test_support.hpp"

using namespace roughlob;

namespace {

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

TEST_CASE("depths: linear ask book, odd symmetry, degenerate floor") {
    BookGrid g = make_book_grid(1.0, 400, [](double x) { return x; });
    const auto d = depths(g, 0.1);
    CHECK(d.D_a == doctest::Approx(0.005).epsilon(1e-12)); // int_0^0.1 x dx
    CHECK(d.D_b == -d.D_a);                                // exact mirror

    BookGrid zero = make_book_grid(1.0, 400);
    try {
        (void)depths(zero, 0.1);
        FAIL("expected DegenerateDepth");
    } catch (const model_error& e) {
        CHECK(e.code == errc::degenerate_depth);
    }
}

TEST_CASE("antisymmetric book with equal impact constants: zero increment, bit-exact") {
    BookParams bp = default_book_params();
    PriceParams pp;
    pp.C_a = pp.C_b = 1.7;
    pp.delta = 0.01;
    CounterRng rng(123, 5);
    BookGrid g = make_book_grid(1.0, 400);
    const std::size_t m = g.mid();
    // random antisymmetric book honoring the sign zones
    for (std::size_t j = 1; j < m; ++j) {
        const double v = rng.uniform01() + 0.05;
        g.u[m + j] = v;
        g.u[m - j] = -v;
    }
    const double S0 = 100.0;
    for (int rep = 0; rep < 5; ++rep) {
        const double dW = rng.normal();
        const double S1 = price_step(S0, g, pp, bp, 0.37, dW, 1e-3);
        CHECK(S1 == S0); // increment is exactly zero
    }
}

TEST_CASE("equal impact constants kill the noise term for any book") {
    BookParams bp = default_book_params();
    PriceParams pp;
    pp.C_a = pp.C_b = 2.0;
    CounterRng rng(5, 6);
    BookGrid g = make_book_grid(1.0, 200);
    const std::size_t m = g.mid();
    for (std::size_t j = 1; j < m; ++j) {
        g.u[m + j] = 0.5 + rng.uniform01();
        g.u[m - j] = -(0.2 + rng.uniform01());
    }
    const double a = price_step(100.0, g, pp, bp, 0.9, 5.0, 1e-3);
    const double b = price_step(100.0, g, pp, bp, 0.9, -5.0, 1e-3);
    CHECK(a == b);
}

TEST_CASE("tick scaling doubles every increment exactly") {
    BookParams bp = default_book_params();
    PriceParams p1, p2;
    p1.C_a = p2.C_a = 1.0;
    p1.C_b = p2.C_b = 1.5;
    p1.delta = 0.01;
    p2.delta = 0.02;
    CounterRng rng(77, 8);
    BookGrid g = make_book_grid(1.0, 100);
    const std::size_t m = g.mid();
    for (std::size_t j = 1; j < m; ++j) {
        g.u[m + j] = 0.4 + rng.uniform01();
        g.u[m - j] = -(0.3 + rng.uniform01());
    }
    for (int rep = 0; rep < 10; ++rep) {
        const double dW = rng.normal();
        const double d1 = price_increment(g, p1, bp, 0.5, dW, 1e-3);
        const double d2 = price_increment(g, p2, bp, 0.5, dW, 1e-3);
        CHECK(d2 == 2.0 * d1);
    }
}

TEST_CASE("hand-computed single step on the 5-node toy grid") {
    // L=1, 5 nodes, iota = one cell (0.5); eta = beta = 0, zeta = 1, J and G
    // off, so the drift is just -u and every integral is a short trapezoid
    BookParams bp;
    bp.eta = 0.0;
    bp.beta = 0.0;
    bp.zeta = 1.0;
    bp.iota = 0.5;
    bp.c = 1.0;
    bp.q0 = 1e18;
    set_default_terms(bp, 1.0, 0.3, 0.0, 0.25);
    bp.q0 = 1e18;
    PriceParams pp;
    pp.C_a = 2.0;
    pp.C_b = 1.0;
    pp.delta = 0.01;
    BookGrid g = make_book_grid(1.0, 4);
    g.u = {0.0, -0.6, 0.0, 0.8, 0.0};
    const double dt = 1e-3;

    const double dx = 0.5;
    const double drift_ask = -0.8;                    // -zeta u at x=+0.5
    const double drift_bid = 0.6;                     // at x=-0.5
    const double I_a = dx * 0.5 * drift_ask;          // trapezoid over [0, 0.5]
    const double I_b = dx * 0.5 * drift_bid;
    const double D_a = dx * 0.5 * 0.8;
    const double D_b = dx * 0.5 * (-0.6);
    const double nu_a = pp.C_a * I_a / D_a;
    const double nu_b = pp.C_b * I_b / D_b;
    const double expect = 0.5 * pp.delta * (nu_b - nu_a) * dt;

    const double got = price_step(100.0, g, pp, bp, 0.0, 0.0, dt) - 100.0;
    CHECK(got == doctest::Approx(expect).epsilon(1e-14));
    // ask side drains (negative drift integrand), bid side relatively slower
    // drain with C_b < C_a: the mid-price moves up
    CHECK(got > 0.0);
}

TEST_CASE("coupled run: symmetric scenario keeps the price at S0") {
    BookParams bp = default_book_params();
    PriceParams pp;
    pp.C_a = pp.C_b = 1.0;
    pp.S0 = 100.0;
    BookGrid u0 = make_book_grid(1.0, 128, [](double x) { return 2.0 * x * (1.0 - std::fabs(x)); });
    CoupledOptions opt;
    opt.horizon = 0.2;
    opt.dt = 5e-4;
    opt.seed = 3;
    const auto res = simulate_coupled(bp, pp, u0, flat_y(0.2, 0.3), opt);
    for (double s : res.price.s) CHECK(std::fabs(s - pp.S0) <= 1e-9);
    CHECK(res.warnings.empty());
}

TEST_CASE("coupled run: book and price consume the same Brownian increments") {
    // eta = zeta = beta = 0, J and G off: the book is a pure multiplicative
    // flow, so dW can be reconstructed from the depth ratio and must equal
    // the dW the price consumed
    BookParams bp;
    bp.eta = 0.0;
    bp.beta = 0.0;
    bp.zeta = 0.0;
    bp.c = 1.0;
    bp.iota = 0.25;
    bp.q0 = 1e18;
    set_default_terms(bp, 1.0, 0.3, 0.0, 0.25);
    PriceParams pp;
    pp.C_a = 1.0;
    pp.C_b = 3.0;
    pp.S0 = 50.0;
    const double y0 = 0.49;
    BookGrid u0 = make_book_grid(1.0, 64, [](double x) { return x > 0 ? 1.0 : (x < 0 ? -0.5 : 0.0); });
    u0.u.front() = u0.u.back() = 0.0;
    CoupledOptions opt;
    opt.horizon = 0.05;
    opt.dt = 1e-3;
    opt.seed = 9;
    const auto res = simulate_coupled(bp, pp, u0, flat_y(0.05, y0), opt);
    for (std::size_t i = 1; i < res.price.times.size(); ++i) {
        const double ratio = res.price.depth_a[i] / res.price.depth_a[i - 1];
        const double dw_book = (ratio - 1.0) / std::sqrt(y0);
        // price increment: drift is zero (drift integrand vanishes), so
        // dS = (delta c / 2)(C_b - C_a) sqrt(y) dW
        const double ds = res.price.s[i] - res.price.s[i - 1];
        const double dw_price =
            ds / (0.5 * pp.delta * bp.c * (pp.C_b - pp.C_a) * std::sqrt(y0));
        CHECK(dw_price == doctest::Approx(dw_book).epsilon(1e-9));
    }
}

TEST_CASE("noise knobs: W-B1 correlation and price decoupling") {
    BookParams bp;
    bp.eta = 0.0;
    bp.beta = 0.0;
    bp.zeta = 0.0;
    bp.c = 1.0;
    bp.iota = 0.25;
    bp.q0 = 1e18;
    set_default_terms(bp, 1.0, 0.3, 0.0, 0.25);
    PriceParams pp;
    pp.C_a = 1.0;
    pp.C_b = 2.0;
    BookGrid u0 = make_book_grid(1.0, 64, [](double x) { return x; });

    // Y path on the co-simulation grid so its stored noise can be reused
    VolterraParams vparams;
    vparams.alpha = 0.7;
    vparams.nu_bar = 0.334272922;
    vparams.kappa_bar = 0.6;
    vparams.theta = 1.6;
    vparams.horizon = 0.064;
    vparams.n_steps = 64;
    const auto y = solve_y_fractional(vparams, 5);
    CoupledOptions opt;
    opt.horizon = 0.064;
    opt.dt = 0.001;
    opt.seed = 9;

    SUBCASE("rho = 1 reproduces the B1 increments in the book factor") {
        opt.y_noise_correlation = 1.0;
        const auto res = simulate_coupled(bp, pp, u0, y, opt);
        for (std::size_t i = 1; i < res.price.times.size(); ++i) {
            const double ratio = res.price.depth_a[i] / res.price.depth_a[i - 1];
            const double y_t = res.price.y[i]; // y recorded with the post-step row
            if (y_t < 1e-12) continue;
            const double dw = (ratio - 1.0) / std::sqrt(y_t);
            CHECK(dw == doctest::Approx(y.noise[i - 1]).epsilon(1e-9));
        }
    }
    SUBCASE("correlation demands matching grids") {
        opt.y_noise_correlation = 0.5;
        opt.dt = 0.0005; // twice as fine as the Y grid
        CHECK_THROWS_AS((void)simulate_coupled(bp, pp, u0, y, opt), model_error);
    }
    SUBCASE("decoupled price differs, book identical") {
        const auto shared = simulate_coupled(bp, pp, u0, y, opt);
        opt.decouple_price_noise = true;
        const auto split = simulate_coupled(bp, pp, u0, y, opt);
        CHECK(shared.book.snapshots.back() == split.book.snapshots.back());
        CHECK(shared.price.s != split.price.s);
    }
}
