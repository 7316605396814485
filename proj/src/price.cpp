#include "roughlob/price.hpp"

#include <cmath>
#include <string>

#include "roughlob/rng.hpp"

namespace roughlob {

namespace {
constexpr double kDepthFloor = 1e-10;
}

DepthPair depths(const BookGrid& g, double iota) {
    DepthPair d{window_integral_ask(g.u, g, iota), window_integral_bid(g.u, g, iota)};
    if (std::fabs(d.D_a) < kDepthFloor || std::fabs(d.D_b) < kDepthFloor)
        fail(errc::degenerate_depth, "depth below floor: D_a=" + std::to_string(d.D_a) +
                                         " D_b=" + std::to_string(d.D_b));
    return d;
}

double price_increment(const BookGrid& g, const PriceParams& pp, const BookParams& bp,
                       double y_t, double dW, double dt) {
    const DepthPair d = depths(g, bp.iota);
    const std::vector<double> drift = drift_terms(g, bp);
    const double nu_a = pp.C_a * window_integral_ask(drift, g, bp.iota) / d.D_a;
    const double nu_b = pp.C_b * window_integral_bid(drift, g, bp.iota) / d.D_b;
    // single delta/2 factor: scaling the tick rescales the increment exactly
    return 0.5 * pp.delta *
           ((nu_b - nu_a) * dt + bp.c * (pp.C_b - pp.C_a) * std::sqrt(y_t) * dW);
}

double price_step(double S, const BookGrid& g, const PriceParams& pp, const BookParams& bp,
                  double y_t, double dW, double dt) {
    return S + price_increment(g, pp, bp, y_t, dW, dt);
}

CoupledResult simulate_coupled(const BookParams& bp, const PriceParams& pp, const BookGrid& u0,
                               const VolterraPath& vp, const CoupledOptions& opt) {
    if (vp.times.back() + 1e-12 < opt.horizon)
        fail(errc::volterra_path_too_short, "Y path ends before the coupled horizon");
    const auto n_steps = static_cast<std::size_t>(std::llround(opt.horizon / opt.dt));
    const double y_dt = vp.times[1] - vp.times[0];
    const double sq_dt = std::sqrt(opt.dt);

    CoupledResult out;
    BookGrid g = u0;
    out.book.x = g.x;
    for (std::size_t i = 0; i < g.u.size(); ++i)
        out.book.initial_abs_mass += std::fabs(g.u[i]) * g.dx();
    out.book.times.push_back(0.0);
    out.book.snapshots.push_back(g.u);

    double S = pp.S0;
    CounterRng rng(opt.seed, derive_stream("coupled-w", 0));
    CounterRng rng_price(opt.seed, derive_stream("coupled-w-price", 0));
    const double rho = opt.y_noise_correlation;
    if (rho != 0.0) {
        if (!(rho >= -1.0 && rho <= 1.0))
            fail(errc::config_error, "noise correlation must lie in [-1,1]");
        if (std::fabs(y_dt - opt.dt) > 1e-12 * opt.dt || vp.noise.size() < n_steps)
            fail(errc::config_error,
                 "correlated noise needs the Y path on the co-simulation grid");
    }

    auto push_price = [&](double t, double y) {
        out.price.times.push_back(t);
        out.price.s.push_back(S);
        out.price.y.push_back(y);
        double da = 0.0, db = 0.0;
        // record raw depths even when degenerate
        da = window_integral_ask(g.u, g, bp.iota);
        db = window_integral_bid(g.u, g, bp.iota);
        out.price.depth_a.push_back(da);
        out.price.depth_b.push_back(db);
    };

    {
        auto y0 = vp.y.empty() ? 0.0 : vp.y[0];
        push_price(0.0, y0);
    }

    for (std::size_t s = 0; s < n_steps; ++s) {
        const double t = static_cast<double>(s) * opt.dt;
        auto yi = static_cast<std::size_t>(t / y_dt);
        if (yi >= vp.y.size()) yi = vp.y.size() - 1;
        const double y_t = vp.y[yi];
        if (bp.y_cap > 0.0 && y_t > bp.y_cap) {
            out.book.truncated_at = t;
            break;
        }
        double dW = sq_dt * rng.normal();
        if (rho != 0.0)
            dW = rho * vp.noise[s] + std::sqrt(1.0 - rho * rho) * dW;
        const double dW_price = opt.decouple_price_noise ? sq_dt * rng_price.normal() : dW;
        // price uses the state at the step start, then the book advances with
        // the same (y_t, dW)
        try {
            S = price_step(S, g, pp, bp, y_t, dW_price, opt.dt);
        } catch (const model_error& e) {
            if (e.code != errc::degenerate_depth) throw;
            out.warnings.push_back({t, window_integral_ask(g.u, g, bp.iota),
                                    window_integral_bid(g.u, g, bp.iota)});
        }
        book_step(g, bp, y_t, dW, opt.dt);
        push_price(g.t, y_t);
        if ((s + 1) % opt.snapshot_stride == 0 || s + 1 == n_steps) {
            out.book.times.push_back(g.t);
            out.book.snapshots.push_back(g.u);
        }
    }
    out.book.clamp_mass = g.clamp_mass;
    return out;
}

} // namespace roughlob
