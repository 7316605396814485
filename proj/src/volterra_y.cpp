#include "roughlob/volterra_y.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "roughlob/parallel.hpp"
#include "roughlob/rng.hpp"
#include "roughlob/special.hpp"

namespace roughlob {

VolterraParams volterra_from_model(const Phi0Matrix& phi0, const KernelSpec& critical,
                                   double a_bar, double mu_bar, double horizon,
                                   std::size_t n_steps) {
    if (!critical.kappa)
        fail(errc::not_critical, "kernel has no power-law tail constant");
    const double crit = phi0.eigenvalues[0] * critical.l1_norm;
    if (std::fabs(crit - 1.0) > 1e-9)
        fail(errc::not_critical, "lambda1*|phi|_1 = " + std::to_string(crit) + ", need 1");
    VolterraParams p;
    p.alpha = critical.alpha;
    p.nu_bar = special::nu_bar(a_bar, phi0.eigenvalues[0], *critical.kappa, critical.alpha);
    p.kappa_bar = special::kappa_bar(a_bar, mu_bar, phi0.eigenvectors[0]);
    p.theta = phi0.ones_dot_v1;
    p.horizon = horizon;
    p.n_steps = n_steps;
    return p;
}

std::vector<double> gaussian_increments(std::size_t n, double dt, std::uint64_t seed,
                                        std::uint64_t stream) {
    CounterRng rng(seed, stream);
    std::vector<double> db(n);
    const double s = std::sqrt(dt);
    for (std::size_t i = 0; i < n; ++i) db[i] = s * rng.normal();
    return db;
}

namespace {

void validate_params(const VolterraParams& p) {
    if (!(p.alpha > 0.5 && p.alpha < 1.0)) fail(errc::alpha_out_of_range, "alpha must lie in (1/2,1)");
    if (!(p.nu_bar > 0.0)) fail(errc::nonpositive_t, "nu_bar must be positive");
    if (p.kappa_bar < 0.0) fail(errc::nonpositive_t, "kappa_bar must be >= 0");
    if (p.theta < 0.0) fail(errc::nonpositive_t, "theta must be >= 0");
    if (!(p.horizon > 0.0) || p.n_steps < 1) fail(errc::step_too_coarse, "empty grid");
    const double dt = p.horizon / static_cast<double>(p.n_steps);
    const double load = p.nu_bar * std::pow(dt, p.alpha) / special::gamma_fn(p.alpha + 1.0);
    if (load > 0.5)
        fail(errc::step_too_coarse,
             "dt^alpha nu/Gamma(1+alpha) = " + std::to_string(load) + " > 0.5");
}

// shared driver: drift_base[n] is the exogenous drift at step n, wdrift/wnoise
// the convolution weights against (theta - Y) and sqrt(Y)dB respectively
// (wdrift may be null when drift_base already contains the whole drift).
VolterraPath run_scheme(const VolterraParams& p, std::span<const double> db, YForm form,
                        const std::vector<double>& drift_base, const double* wdrift,
                        const double* wnoise, double noise_gain) {
    const std::size_t n = p.n_steps;
    const double dt = p.horizon / static_cast<double>(n);
    if (db.size() < n) fail(errc::volterra_path_too_short, "need n_steps noise increments");

    VolterraPath out;
    out.form = form;
    out.times.resize(n + 1);
    out.y.resize(n + 1);
    out.noise.assign(db.begin(), db.begin() + static_cast<std::ptrdiff_t>(n));

    std::vector<double> raw(n + 1, 0.0);     // scheme state, may dip below 0
    std::vector<double> gdrift(n + 1, 0.0);  // theta - raw
    std::vector<double> gnoise(n + 1, 0.0);  // sqrt(max(raw,0)) dB

    out.times[0] = 0.0;
    out.y[0] = 0.0;
    gdrift[0] = p.theta;
    gnoise[0] = 0.0; // sqrt(0) * dB

    for (std::size_t i = 1; i <= n; ++i) {
        double v = drift_base[i];
        if (wdrift) v += par::conv_tap(wdrift, gdrift.data(), i);
        v += noise_gain * par::conv_tap(wnoise, gnoise.data(), i);
        raw[i] = v;
        if (v < 0.0) ++out.clamp_count;
        out.y[i] = v > 0.0 ? v : 0.0;
        out.times[i] = static_cast<double>(i) * dt;
        gdrift[i] = p.theta - raw[i];
        gnoise[i] = std::sqrt(out.y[i]) * db[i];
    }
    out.raw = std::move(raw);
    return out;
}

} // namespace

VolterraPath solve_y_fractional_noise(const VolterraParams& p, std::span<const double> db) {
    validate_params(p);
    const std::size_t n = p.n_steps;
    const double dt = p.horizon / static_cast<double>(n);
    const double ga = special::gamma_fn(p.alpha);
    // w[m] = int over one subinterval of (t-s)^{a-1}/G(a) = dt^a (m^a-(m-1)^a)/(a G(a))
    std::vector<double> wd(n), wn(n);
    const double base = std::pow(dt, p.alpha) / (p.alpha * ga);
    double prev = 0.0;
    for (std::size_t m = 1; m <= n; ++m) {
        const double cur = std::pow(static_cast<double>(m), p.alpha);
        wd[m - 1] = p.nu_bar * base * (cur - prev);
        wn[m - 1] = wd[m - 1] / dt; // kernel average times the dB increment
        prev = cur;
    }
    std::vector<double> zero(n + 1, 0.0);
    return run_scheme(p, db, YForm::FractionalKernel, zero, wd.data(), wn.data(), p.kappa_bar);
}

VolterraPath solve_y_mittag_leffler_noise(const VolterraParams& p, std::span<const double> db) {
    validate_params(p);
    const std::size_t n = p.n_steps;
    const double dt = p.horizon / static_cast<double>(n);
    // exact subinterval integrals of f^{a,nu}: g[m] = E_{a,1}(-nu ((m-1)dt)^a)
    //                                               - E_{a,1}(-nu (m dt)^a)
    std::vector<double> relax(n + 1);
    for (std::size_t m = 0; m <= n; ++m)
        relax[m] = special::ml_relax(p.alpha, p.nu_bar * std::pow(static_cast<double>(m) * dt, p.alpha));
    std::vector<double> wn(n);
    for (std::size_t m = 1; m <= n; ++m) wn[m - 1] = (relax[m - 1] - relax[m]) / dt;
    // deterministic part telescopes to theta (1 - E_{a,1}(-nu t^a)) exactly
    std::vector<double> drift(n + 1);
    for (std::size_t i = 0; i <= n; ++i) drift[i] = p.theta * (1.0 - relax[i]);
    return run_scheme(p, db, YForm::MittagLeffler, drift, nullptr, wn.data(), p.kappa_bar);
}

VolterraPath solve_y_fractional(const VolterraParams& p, std::uint64_t seed, std::uint64_t stream) {
    const auto db = gaussian_increments(p.n_steps, p.horizon / static_cast<double>(p.n_steps),
                                        seed, stream == 0 ? derive_stream("volterra", 0) : stream);
    return solve_y_fractional_noise(p, db);
}

VolterraPath solve_y_mittag_leffler(const VolterraParams& p, std::uint64_t seed,
                                    std::uint64_t stream) {
    const auto db = gaussian_increments(p.n_steps, p.horizon / static_cast<double>(p.n_steps),
                                        seed, stream == 0 ? derive_stream("volterra", 0) : stream);
    return solve_y_mittag_leffler_noise(p, db);
}

std::vector<double> mean_of_y(const VolterraParams& p) {
    VolterraParams q = p;
    q.kappa_bar = 0.0;
    std::vector<double> zero(p.n_steps, 0.0);
    return solve_y_fractional_noise(q, zero).y;
}

double hurst_of_path(std::span<const double> y) {
    const std::size_t n = y.size();
    if (n < 512) fail(errc::path_too_short, "Hurst estimate needs >= 512 samples");
    // integer lags spanning 1.5 decades; the top lag stays small relative to
    // n, otherwise the few effective samples bias log V(m) downward
    const std::size_t m_hi = std::min<std::size_t>(std::max<std::size_t>(n / 64, 32), 256);
    const std::size_t m_lo = std::max<std::size_t>(1, static_cast<std::size_t>(
                                                          std::lround(m_hi / std::pow(10.0, 1.5))));
    std::vector<std::size_t> lags;
    const int n_lags = 12;
    for (int i = 0; i < n_lags; ++i) {
        const double f = static_cast<double>(i) / (n_lags - 1);
        const auto m = static_cast<std::size_t>(
            std::lround(m_lo * std::pow(static_cast<double>(m_hi) / m_lo, f)));
        if (lags.empty() || m > lags.back()) lags.push_back(m);
    }
    // log-log regression of the variogram
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t used = 0;
    for (std::size_t m : lags) {
        double v = 0.0;
        const std::size_t cnt = n - m;
        for (std::size_t i = 0; i < cnt; ++i) {
            const double d = y[i + m] - y[i];
            v += d * d;
        }
        v /= static_cast<double>(cnt);
        if (v <= 0.0) continue;
        const double lx = std::log(static_cast<double>(m));
        const double ly = std::log(v);
        sx += lx; sy += ly; sxx += lx * lx; sxy += lx * ly;
        ++used;
    }
    if (used < 2) return std::numeric_limits<double>::quiet_NaN();
    const double slope = (used * sxy - sx * sy) / (used * sxx - sx * sx);
    return 0.5 * slope;
}

} // namespace roughlob
