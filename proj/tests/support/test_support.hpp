#pragma once

// Shared oracle and statistics helpers for the test suites. Everything here
// is test-only and deliberately independent of the library implementation
// paths it checks.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <vector>

#include "roughlob/linalg.hpp"
#include "roughlob/rng.hpp"

namespace testsup {

// ---------------------------------------------------------------- statistics

struct MeanSe {
    double mean = 0.0;
    double se = 0.0;
    std::size_t n = 0;
};

inline MeanSe mean_se(const std::vector<double>& x) {
    MeanSe r;
    r.n = x.size();
    if (x.empty()) return r;
    double m = 0.0;
    for (double v : x) m += v;
    m /= static_cast<double>(x.size());
    double s2 = 0.0;
    for (double v : x) s2 += (v - m) * (v - m);
    s2 /= x.size() > 1 ? static_cast<double>(x.size() - 1) : 1.0;
    r.mean = m;
    r.se = std::sqrt(s2 / static_cast<double>(x.size()));
    return r;
}

inline double median(std::vector<double> x) {
    std::sort(x.begin(), x.end());
    const std::size_t n = x.size();
    return n % 2 ? x[n / 2] : 0.5 * (x[n / 2 - 1] + x[n / 2]);
}

// ------------------------------------------------- incomplete gamma, chi^2 p

// regularized upper incomplete gamma Q(a,x) (series / continued fraction)
inline double gamma_q(double a, double x) {
    if (x < 0.0 || a <= 0.0) return 1.0;
    if (x == 0.0) return 1.0;
    const double gln = std::lgamma(a);
    if (x < a + 1.0) {
        // P by series, Q = 1 - P
        double ap = a, sum = 1.0 / a, del = sum;
        for (int i = 0; i < 500; ++i) {
            ap += 1.0;
            del *= x / ap;
            sum += del;
            if (std::fabs(del) < std::fabs(sum) * 1e-15) break;
        }
        return 1.0 - sum * std::exp(-x + a * std::log(x) - gln);
    }
    // continued fraction for Q
    double b = x + 1.0 - a, c = 1e300, d = 1.0 / b, h = d;
    for (int i = 1; i < 500; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < 1e-300) d = 1e-300;
        c = b + an / c;
        if (std::fabs(c) < 1e-300) c = 1e-300;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-15) break;
    }
    return std::exp(-x + a * std::log(x) - gln) * h;
}

// two-sample chi-square homogeneity test over count histograms; returns the
// p-value after merging bins so every expected count is >= 5
inline double chi2_homogeneity_p(const std::vector<long>& h1, const std::vector<long>& h2) {
    const std::size_t nb = std::max(h1.size(), h2.size());
    std::vector<double> o1(nb, 0.0), o2(nb, 0.0);
    for (std::size_t i = 0; i < h1.size(); ++i) o1[i] = static_cast<double>(h1[i]);
    for (std::size_t i = 0; i < h2.size(); ++i) o2[i] = static_cast<double>(h2[i]);
    // merge adjacent bins until both expected totals are >= 5
    std::vector<double> m1, m2;
    double a1 = 0.0, a2 = 0.0;
    for (std::size_t i = 0; i < nb; ++i) {
        a1 += o1[i];
        a2 += o2[i];
        if (a1 + a2 >= 10.0) {
            m1.push_back(a1);
            m2.push_back(a2);
            a1 = a2 = 0.0;
        }
    }
    if (a1 + a2 > 0.0) {
        if (m1.empty()) { m1.push_back(a1); m2.push_back(a2); }
        else { m1.back() += a1; m2.back() += a2; }
    }
    const double n1 = std::accumulate(m1.begin(), m1.end(), 0.0);
    const double n2 = std::accumulate(m2.begin(), m2.end(), 0.0);
    double stat = 0.0;
    std::size_t dof = 0;
    for (std::size_t i = 0; i < m1.size(); ++i) {
        const double col = m1[i] + m2[i];
        if (col <= 0.0) continue;
        const double e1 = col * n1 / (n1 + n2);
        const double e2 = col * n2 / (n1 + n2);
        stat += (m1[i] - e1) * (m1[i] - e1) / e1 + (m2[i] - e2) * (m2[i] - e2) / e2;
        ++dof;
    }
    if (dof <= 1) return 1.0;
    return gamma_q(0.5 * static_cast<double>(dof - 1), 0.5 * stat);
}

// ------------------------------------------------------------- FFT and fBm

// iterative radix-2 complex FFT, n a power of two
inline void fft_pow2(std::vector<std::complex<double>>& a) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = 2.0 * M_PI / static_cast<double>(len);
        const std::complex<double> wl(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const std::complex<double> u = a[i + k];
                const std::complex<double> v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

// fractional Gaussian noise by circulant embedding (Davies-Harte); n must be
// a power of two. Returns n increments with Var = 1 per unit lag.
inline std::vector<double> fgn_circulant(std::size_t n, double hurst, std::uint64_t seed,
                                         std::uint64_t stream) {
    auto gamma_cov = [hurst](double k) {
        const double h2 = 2.0 * hurst;
        return 0.5 * (std::pow(std::fabs(k + 1.0), h2) - 2.0 * std::pow(std::fabs(k), h2) +
                      std::pow(std::fabs(k - 1.0), h2));
    };
    const std::size_t m = 2 * n;
    std::vector<std::complex<double>> c(m);
    for (std::size_t k = 0; k <= n; ++k) c[k] = gamma_cov(static_cast<double>(k));
    for (std::size_t k = 1; k < n; ++k) c[m - k] = c[k];
    fft_pow2(c); // eigenvalues of the circulant
    std::vector<double> lam(m);
    for (std::size_t k = 0; k < m; ++k) lam[k] = std::max(0.0, c[k].real());

    roughlob::CounterRng rng(seed, stream);
    std::vector<std::complex<double>> z(m);
    z[0] = std::sqrt(lam[0] / m) * rng.normal();
    z[n] = std::sqrt(lam[n] / m) * rng.normal();
    for (std::size_t k = 1; k < n; ++k) {
        const double s = std::sqrt(lam[k] / (2.0 * m));
        const double re = rng.normal(), im = rng.normal();
        z[k] = std::complex<double>(s * re, s * im);
        z[m - k] = std::conj(z[k]);
    }
    fft_pow2(z);
    std::vector<double> out(n);
    for (std::size_t k = 0; k < n; ++k) out[k] = z[k].real();
    return out;
}

// fBm path (cumulative sum of fGn), length n+1 starting at 0
inline std::vector<double> fbm_circulant(std::size_t n, double hurst, std::uint64_t seed,
                                         std::uint64_t stream = 7) {
    const auto inc = fgn_circulant(n, hurst, seed, stream);
    std::vector<double> path(n + 1, 0.0);
    for (std::size_t i = 0; i < n; ++i) path[i + 1] = path[i] + inc[i];
    return path;
}

// ------------------------------------------------------ Beta params sampling

struct BetaTriple {
    double b1, b2, b3;
};

inline BetaTriple random_valid_betas(roughlob::CounterRng& rng) {
    for (;;) {
        const double b1 = rng.uniform01();
        const double b2 = rng.uniform01() * b1;
        const double b3 = rng.uniform01();
        if (b2 <= 0.0 || b1 >= 1.0) continue;
        if (b1 + b2 * b3 < 1.0 && b1 + b2 + b2 * b3 > 1.0) return {b1, b2, b3};
    }
}

} // namespace testsup
