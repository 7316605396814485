#include "roughlob/book.hpp"

#include <cmath>
#include <string>

#include "roughlob/parallel.hpp"
#include "roughlob/rng.hpp"

namespace roughlob {

void set_default_terms(BookParams& p, double j0, double x_j, double g_gain, double w_scale) {
    p.j_fun = [j0, x_j](double x) { return j0 * std::exp(-std::fabs(x) / x_j); };
    p.g_fun = [g_gain, w_scale](double x, double ell) {
        return -g_gain * ell * std::exp(-(x / w_scale) * (x / w_scale));
    };
}

BookParams default_book_params() {
    BookParams p;
    set_default_terms(p, 1.0, 0.3, 1.0, 0.25);
    return p;
}

BookGrid make_book_grid(double L, std::size_t M) {
    if (M < 4 || (M % 2) != 0) fail(errc::config_error, "grid needs even M >= 4");
    BookGrid g;
    g.x.resize(M + 1);
    g.u.assign(M + 1, 0.0);
    const double dx = 2.0 * L / static_cast<double>(M);
    // build around the mid node: x[M-i] is the exact negation of x[i], which
    // the antisymmetry contracts downstream rely on
    const auto mid = static_cast<std::ptrdiff_t>(M / 2);
    for (std::size_t i = 0; i <= M; ++i)
        g.x[i] = dx * static_cast<double>(static_cast<std::ptrdiff_t>(i) - mid);
    return g;
}

BookGrid make_book_grid(double L, std::size_t M, const std::function<double(double)>& profile) {
    BookGrid g = make_book_grid(L, M);
    for (std::size_t i = 1; i + 1 < g.x.size(); ++i) g.u[i] = profile(g.x[i]);
    return g;
}

namespace {

std::size_t window_cells(const BookGrid& g, double iota) {
    const auto j = static_cast<std::size_t>(std::llround(iota / g.dx()));
    if (j < 1 || j > g.mid()) fail(errc::config_error, "iota must satisfy dx <= iota <= L");
    return j;
}

} // namespace

double window_imbalance(const BookGrid& g, double iota) {
    const std::size_t jm = window_cells(g, iota);
    const std::size_t m = g.mid();
    // trapezoid over [-jm dx, jm dx], node pairs added before accumulating so
    // mirrored values cancel exactly
    double s = g.u[m];
    for (std::size_t j = 1; j < jm; ++j) s += g.u[m + j] + g.u[m - j];
    s += 0.5 * (g.u[m + jm] + g.u[m - jm]);
    return s * g.dx();
}

double window_integral_ask(const std::vector<double>& f, const BookGrid& g, double iota) {
    const std::size_t jm = window_cells(g, iota);
    const std::size_t m = g.mid();
    double s = 0.5 * f[m];
    for (std::size_t j = 1; j < jm; ++j) s += f[m + j];
    s += 0.5 * f[m + jm];
    return s * g.dx();
}

double window_integral_bid(const std::vector<double>& f, const BookGrid& g, double iota) {
    const std::size_t jm = window_cells(g, iota);
    const std::size_t m = g.mid();
    double s = 0.5 * f[m];
    for (std::size_t j = 1; j < jm; ++j) s += f[m - j];
    s += 0.5 * f[m - jm];
    return s * g.dx();
}

namespace {

inline double pos_part(double x) { return x > 0.0 ? x : 0.0; }
inline double neg_part(double x) { return x < 0.0 ? -x : 0.0; }

template <bool WithLinear>
void drift_into(const BookGrid& g, const BookParams& p, std::vector<double>& out, bool parallel) {
    const std::size_t n = g.x.size();
    const std::size_t m = g.mid();
    const double dx = g.dx();
    const double inv_dx = 1.0 / dx;
    const double inv_dx2 = inv_dx * inv_dx;
    const double ell = window_imbalance(g, p.iota);
    out.assign(n, 0.0);

    auto body = [&](std::size_t i) {
        if (i == 0 || i + 1 == n) return;
        const double xi = g.x[i];
        double v = 0.0;
        if constexpr (WithLinear) {
            // grouped so mirrored nodes of an antisymmetric profile give exact
            // negations (the price symmetry null relies on it)
            v += p.eta * ((g.u[i + 1] + g.u[i - 1]) - 2.0 * g.u[i]) * inv_dx2;
            v -= p.zeta * g.u[i];
        }
        if (i != m) {
            // one-sided difference toward the mid-price
            const double ux = (i > m) ? (g.u[i] - g.u[i - 1]) * inv_dx
                                      : (g.u[i + 1] - g.u[i]) * inv_dx;
            const double sgn = (i > m) ? 1.0 : -1.0;
            v -= p.beta * sgn * neg_part(ux);
            // market-order replacement: couples the node with its mirror
            const std::size_t off = (i > m) ? i - m : m - i;
            const double u_pos = g.u[m + off]; // u(t, |x|)
            const double u_neg = g.u[m - off]; // u(t,-|x|)
            const double xa = dx * static_cast<double>(off);
            const double bracket =
                p.j_fun(xa) * pos_part(u_pos - p.q0) + p.j_fun(-xa) * neg_part(u_neg + p.q0);
            v -= sgn * bracket;
        }
        v += p.g_fun(xi, ell);
        out[i] = v;
    };
    if (parallel)
        par::parallel_for_static(n, body);
    else
        for (std::size_t i = 0; i < n; ++i) body(i);
}

} // namespace

std::vector<double> drift_terms(const BookGrid& g, const BookParams& p) {
    std::vector<double> out;
    drift_into<true>(g, p, out, true);
    return out;
}

std::vector<double> drift_terms_serial(const BookGrid& g, const BookParams& p) {
    std::vector<double> out;
    drift_into<true>(g, p, out, false);
    return out;
}

std::vector<double> explicit_drift(const BookGrid& g, const BookParams& p) {
    std::vector<double> out;
    drift_into<false>(g, p, out, true);
    return out;
}

void book_step(BookGrid& g, const BookParams& p, double y_t, double dW, double dt) {
    const std::size_t n = g.x.size();
    const std::size_t m = g.mid();
    const double dx = g.dx();
    if (p.beta * dt > dx)
        fail(errc::cfl_violation, "beta*dt/dx = " + std::to_string(p.beta * dt / dx) + " > 1");
    if (y_t < 0.0) fail(errc::non_finite_state, "negative variance supplied");

    const std::vector<double> ex = explicit_drift(g, p);
    const double noise = p.c * std::sqrt(y_t) * dW;

    // rhs of (I + dt(zeta - eta D2)) u_new = u + dt*explicit + noise*u
    std::vector<double> rhs(n);
    par::parallel_for_static(n, [&](std::size_t i) {
        rhs[i] = g.u[i] + dt * ex[i] + noise * g.u[i];
    });
    rhs[0] = 0.0;
    rhs[n - 1] = 0.0;

    // Thomas solve on interior nodes
    const double off = -p.eta * dt / (dx * dx);
    const double diag = 1.0 + p.zeta * dt + 2.0 * p.eta * dt / (dx * dx);
    const std::size_t ni = n - 2;
    std::vector<double> cp(ni), dp(ni);
    cp[0] = off / diag;
    dp[0] = rhs[1] / diag;
    for (std::size_t i = 1; i < ni; ++i) {
        const double w = diag - off * cp[i - 1];
        cp[i] = off / w;
        dp[i] = (rhs[i + 1] - off * dp[i - 1]) / w;
    }
    g.u[ni] = dp[ni - 1];
    for (std::size_t i = ni - 1; i >= 1; --i) g.u[i] = dp[i - 1] - cp[i - 1] * g.u[i + 1];
    g.u[0] = 0.0;
    g.u[n - 1] = 0.0;
    if (p.pin_zero) g.u[m] = 0.0;

    // sign zones: ask side >= 0, bid side <= 0; removed |mass| is accounted
    double clamped = 0.0;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (i > m && g.u[i] < 0.0) {
            clamped += -g.u[i] * dx;
            g.u[i] = 0.0;
        } else if (i < m && g.u[i] > 0.0) {
            clamped += g.u[i] * dx;
            g.u[i] = 0.0;
        }
        if (!std::isfinite(g.u[i])) fail(errc::non_finite_state, "non-finite book state");
    }
    g.clamp_mass += clamped;
    g.t += dt;
}

BookSeries simulate_book(const BookParams& p, const BookGrid& u0, const VolterraPath& vp,
                         const BookRunOptions& opt) {
    if (!p.j_fun || !p.g_fun) fail(errc::config_error, "book terms not set");
    // sampled shape constraints: j > 0, G(x,0) = 0
    for (double x : u0.x) {
        if (!(p.j_fun(x) > 0.0)) fail(errc::config_error, "j must be positive on the grid");
        if (std::fabs(p.g_fun(x, 0.0)) > 1e-14)
            fail(errc::config_error, "G(x,0) must vanish on the grid");
    }
    if (vp.times.back() + 1e-12 < opt.horizon)
        fail(errc::volterra_path_too_short, "Y path ends before the book horizon");

    const auto n_steps = static_cast<std::size_t>(std::llround(opt.horizon / opt.dt));
    const double y_dt = vp.times[1] - vp.times[0];

    BookGrid g = u0;
    BookSeries out;
    out.x = g.x;
    for (std::size_t i = 0; i < g.u.size(); ++i)
        out.initial_abs_mass += std::fabs(g.u[i]) * g.dx();
    out.times.push_back(0.0);
    out.snapshots.push_back(g.u);

    CounterRng rng(opt.seed, opt.stream != 0 ? opt.stream : derive_stream("book", 0));
    const double sq_dt = std::sqrt(opt.dt);

    for (std::size_t s = 0; s < n_steps; ++s) {
        const double t = static_cast<double>(s) * opt.dt;
        // left-constant interpolation keeps Y adapted (no look-ahead)
        auto yi = static_cast<std::size_t>(t / y_dt);
        if (yi >= vp.y.size()) yi = vp.y.size() - 1;
        const double y_t = vp.y[yi];
        if (p.y_cap > 0.0 && y_t > p.y_cap) {
            out.truncated_at = t;
            break;
        }
        const double dW = sq_dt * rng.normal();
        book_step(g, p, y_t, dW, opt.dt);
        if ((s + 1) % opt.snapshot_stride == 0 || s + 1 == n_steps) {
            out.times.push_back(g.t);
            out.snapshots.push_back(g.u);
        }
    }
    out.clamp_mass = g.clamp_mass;
    return out;
}

} // namespace roughlob
