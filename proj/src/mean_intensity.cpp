#include "roughlob/mean_intensity.hpp"

#include <cmath>

#include "roughlob/parallel.hpp"
#include "roughlob/quad.hpp"

namespace roughlob {

BaselineSpec constant_baseline(const Vec4& v) {
    BaselineSpec b;
    b.value = [v](double) { return v; };
    b.mu_infinity = v;
    b.sup = v;
    b.integral0t = [v](double t) { return t * v; };
    return b;
}

Baseline1 constant_baseline_1d(double v) {
    Baseline1 b;
    b.value = [v](double) { return v; };
    b.mu_infinity = v;
    b.sup = v;
    b.integral0t = [v](double t) { return v * t; };
    return b;
}

namespace {

// w[m] = int_{(m-1)dt}^{m dt} phi, m = 1..n
std::vector<double> product_weights(const KernelSpec& k, double dt, std::size_t n) {
    std::vector<double> w(n + 1, 0.0);
    double prev = 0.0;
    for (std::size_t m = 1; m <= n; ++m) {
        const double cur = k.integral(static_cast<double>(m) * dt);
        w[m] = cur - prev;
        prev = cur;
    }
    return w;
}

} // namespace

MeanIntensityPath mean_intensity(const BaselineSpec& mu, const KernelSpec& k,
                                 const Phi0Matrix& phi0, double horizon, double dt) {
    if (!(dt > 0.0) || !(horizon > 0.0))
        fail(errc::unstable_regime, "mean_intensity needs dt > 0 and horizon > 0");
    if (phi0.eigenvalues[0] * k.l1_norm > 1.0 + 1e-12)
        fail(errc::unstable_regime, "spectral L1 norm exceeds 1: the mean intensity blows up");

    const std::size_t n = static_cast<std::size_t>(std::llround(horizon / dt));
    const auto w = product_weights(k, dt, n);

    MeanIntensityPath out;
    out.dt = dt;
    out.values.resize(n + 1);
    // per-component history kept contiguous for the convolution taps
    std::array<std::vector<double>, 4> hist;
    for (auto& h : hist) h.resize(n + 1);

    out.values[0] = mu.value(0.0);
    for (int c = 0; c < 4; ++c) hist[c][0] = out.values[0][c];

    for (std::size_t i = 1; i <= n; ++i) {
        Vec4 conv{};
        for (int c = 0; c < 4; ++c)
            conv[c] = par::conv_tap(w.data() + 1, hist[c].data(), i);
        const Vec4 exc = matvec(phi0.entries, conv);
        const Vec4 m = mu.value(static_cast<double>(i) * dt) + exc;
        out.values[i] = m;
        for (int c = 0; c < 4; ++c) hist[c][i] = m[c];
    }
    return out;
}

std::vector<double> mean_intensity_scalar(const Baseline1& mu, const KernelSpec& k,
                                          double gain, double horizon, double dt) {
    if (gain * k.l1_norm > 1.0 + 1e-12)
        fail(errc::unstable_regime, "gain * L1 norm exceeds 1: the mean blows up");
    const std::size_t n = static_cast<std::size_t>(std::llround(horizon / dt));
    const auto w = product_weights(k, dt, n);
    std::vector<double> m(n + 1);
    m[0] = mu.value(0.0);
    for (std::size_t i = 1; i <= n; ++i)
        m[i] = mu.value(static_cast<double>(i) * dt) + gain * par::conv_tap(w.data() + 1, m.data(), i);
    return m;
}

std::vector<double> neumann_series_scalar(const Baseline1& mu, const KernelSpec& k,
                                          double gain, double horizon, double dt,
                                          double tail_tol) {
    const double gl1 = gain * k.l1_norm;
    if (gl1 >= 1.0)
        fail(errc::unstable_regime, "Neumann series needs gain * L1 norm < 1");
    const std::size_t n = static_cast<std::size_t>(std::llround(horizon / dt));
    const auto w = product_weights(k, dt, n);

    std::vector<double> term(n + 1), total(n + 1);
    for (std::size_t i = 0; i <= n; ++i) total[i] = term[i] = mu.value(static_cast<double>(i) * dt);

    double tail = mu.sup / (1.0 - gl1);
    for (int kk = 1;; ++kk) {
        tail *= gl1;           // = gl1^k |mu|_inf / (1-gl1)
        std::vector<double> next(n + 1, 0.0);
        for (std::size_t i = 1; i <= n; ++i)
            next[i] = gain * par::conv_tap(w.data() + 1, term.data(), i);
        for (std::size_t i = 0; i <= n; ++i) total[i] += next[i];
        term = std::move(next);
        if (tail < tail_tol) break;
        if (kk > 10000) break;
    }
    return total;
}

} // namespace roughlob
