#include "roughlob/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "roughlob/quad.hpp"

namespace roughlob {

double KernelSpec::value(double t) const {
    if (t < 0.0 || t > support_cutoff) return 0.0;
    switch (family) {
        case KernelFamily::PowerLaw:
            return scale * std::pow(1.0 + t, -1.0 - alpha);
        case KernelFamily::Exponential:
            return scale * std::exp(-rate * t);
        case KernelFamily::Tabulated: {
            if (tab_t.empty() || t > tab_t.back()) return 0.0;
            auto it = std::upper_bound(tab_t.begin(), tab_t.end(), t);
            if (it == tab_t.begin()) return tab_phi.front();
            const std::size_t i = static_cast<std::size_t>(it - tab_t.begin()) - 1;
            if (i + 1 >= tab_t.size()) return tab_phi.back();
            const double w = (t - tab_t[i]) / (tab_t[i + 1] - tab_t[i]);
            return tab_phi[i] + w * (tab_phi[i + 1] - tab_phi[i]);
        }
    }
    return 0.0;
}

double KernelSpec::integral(double t) const {
    if (t <= 0.0) return 0.0;
    const double x = std::min(t, support_cutoff);
    switch (family) {
        case KernelFamily::PowerLaw:
            return scale / alpha * (1.0 - std::pow(1.0 + x, -alpha));
        case KernelFamily::Exponential:
            return scale / rate * (1.0 - std::exp(-rate * x));
        case KernelFamily::Tabulated: {
            // trapezoid cumulative of the interpolant (exact for it)
            double acc = 0.0;
            for (std::size_t i = 0; i + 1 < tab_t.size(); ++i) {
                const double t0 = tab_t[i], t1 = tab_t[i + 1];
                if (x <= t0) break;
                const double hi = std::min(x, t1);
                const double p0 = tab_phi[i];
                const double p1 = tab_phi[i] + (tab_phi[i + 1] - tab_phi[i]) * (hi - t0) / (t1 - t0);
                acc += 0.5 * (p0 + p1) * (hi - t0);
            }
            return acc;
        }
    }
    return 0.0;
}

KernelSpec make_power_law_kernel(double scale, double alpha) {
    if (!(alpha > 0.5 && alpha < 1.0))
        fail(errc::alpha_out_of_range, "power-law tail exponent must lie in (1/2,1), got " +
                                           std::to_string(alpha));
    if (!(scale > 0.0)) fail(errc::non_integrable, "power-law scale must be positive");
    KernelSpec k;
    k.family = KernelFamily::PowerLaw;
    k.alpha = alpha;
    k.scale = scale;
    k.l1_norm = scale / alpha;
    k.l2_norm = scale / std::sqrt(1.0 + 2.0 * alpha); // (int c^2 (1+t)^{-2-2a})^(1/2)
    k.kappa = scale / alpha;
    k.support_cutoff = std::pow(10.0, 12.0 / (1.0 + alpha)) - 1.0;
    k.truncated_mass = scale / alpha * std::pow(1.0 + k.support_cutoff, -alpha);
    return k;
}

KernelSpec make_exponential_kernel(double scale, double rate) {
    if (!(scale > 0.0) || !(rate > 0.0))
        fail(errc::non_integrable, "exponential kernel needs positive scale and rate");
    KernelSpec k;
    k.family = KernelFamily::Exponential;
    k.scale = scale;
    k.rate = rate;
    k.l1_norm = scale / rate;
    k.l2_norm = scale / std::sqrt(2.0 * rate);
    k.kappa = std::nullopt; // tail decays faster than any power
    k.support_cutoff = 12.0 * std::log(10.0) / rate;
    k.truncated_mass = scale / rate * std::exp(-rate * k.support_cutoff);
    return k;
}

KernelSpec make_tabulated_kernel(std::vector<double> t, std::vector<double> phi) {
    if (t.size() < 2 || t.size() != phi.size())
        fail(errc::non_integrable, "tabulated kernel needs >= 2 matching samples");
    for (std::size_t i = 0; i + 1 < t.size(); ++i)
        if (!(t[i] < t[i + 1])) fail(errc::non_integrable, "tabulated abscissae must increase");
    for (double v : phi)
        if (!(v >= 0.0) || !std::isfinite(v))
            fail(errc::non_integrable, "tabulated values must be finite and >= 0");
    KernelSpec k;
    k.family = KernelFamily::Tabulated;
    k.tab_t = std::move(t);
    k.tab_phi = std::move(phi);
    k.support_cutoff = k.tab_t.back();
    double l1 = 0.0, l2sq = 0.0;
    for (std::size_t i = 0; i + 1 < k.tab_t.size(); ++i) {
        const double h = k.tab_t[i + 1] - k.tab_t[i];
        l1 += 0.5 * (k.tab_phi[i] + k.tab_phi[i + 1]) * h;
        const double a = k.tab_phi[i], b = k.tab_phi[i + 1];
        l2sq += h * (a * a + a * b + b * b) / 3.0; // exact for linear pieces
    }
    k.l1_norm = l1;
    k.l2_norm = std::sqrt(l2sq);
    k.kappa = std::nullopt;
    k.truncated_mass = 0.0;
    return k;
}

KernelSpec critical_kernel(const BetaParams& b, double alpha) {
    const double lambda1 = b.beta1 + 2.0 * b.beta2 + b.beta2 * b.beta3;
    return make_power_law_kernel(alpha / lambda1, alpha);
}

StabilityReport classify_stability(const Phi0Matrix& phi0, const KernelSpec& k) {
    StabilityReport r;
    r.spectral_l1 = phi0.eigenvalues[0] * k.l1_norm;
    for (int i = 0; i < 4; ++i) r.per_eigenvalue_l1[i] = phi0.eigenvalues[i] * k.l1_norm;
    if (std::fabs(r.spectral_l1 - 1.0) <= 1e-12)
        r.regime = Regime::Critical;
    else if (r.spectral_l1 < 1.0)
        r.regime = Regime::Stable;
    else
        r.regime = Regime::Unstable;
    return r;
}

const char* regime_name(Regime r) {
    switch (r) {
        case Regime::Stable: return "stable";
        case Regime::Critical: return "critical";
        case Regime::Unstable: return "unstable";
    }
    return "?";
}

double convolution_power_l1(const KernelSpec& k, int n) {
    if (n < 0) fail(errc::non_integrable, "convolution power needs n >= 0");
    return std::pow(k.l1_norm, n);
}

std::vector<double> convolution_power_grid(const KernelSpec& k, int n, double dt,
                                           std::size_t n_steps) {
    if (n < 1) fail(errc::non_integrable, "grid convolution needs n >= 1");
    std::vector<double> cur(n_steps + 1);
    for (std::size_t i = 0; i <= n_steps; ++i) cur[i] = k.value(static_cast<double>(i) * dt);
    std::vector<double> base = cur;
    for (int p = 1; p < n; ++p) {
        std::vector<double> next(n_steps + 1, 0.0);
        for (std::size_t i = 1; i <= n_steps; ++i) {
            double s = 0.0;
            for (std::size_t j = 0; j <= i; ++j) {
                const double w = (j == 0 || j == i) ? 0.5 : 1.0;
                s += w * cur[i - j] * base[j];
            }
            next[i] = s * dt;
        }
        cur = std::move(next);
    }
    return cur;
}

} // namespace roughlob
