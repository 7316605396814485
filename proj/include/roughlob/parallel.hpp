#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace roughlob::par {

// Thread budget for all parallel kernels. 0 means the OpenMP default.
int threads();
void set_threads(int n);

inline int effective_threads() {
#ifdef _OPENMP
    const int t = threads();
    return t > 0 ? t : omp_get_max_threads();
#else
    return 1;
#endif
}

// All reductions below sum fixed-size blocks in index order and then fold the
// block partials serially, so the result is bit-identical for any thread
// count (and identical to the *_serial variants).
inline constexpr std::size_t kBlock = 2048;

namespace detail {
inline double fold_blocks(const std::vector<double>& partial) {
    double s = 0.0;
    for (double p : partial) s += p;
    return s;
}
} // namespace detail

// sum_{i<n} w[i] * g[n-1-i]  (discrete convolution tap), serial reference
inline double conv_tap_serial(const double* w, const double* g, std::size_t n) {
    const std::size_t nb = (n + kBlock - 1) / kBlock;
    std::vector<double> partial(nb, 0.0);
    for (std::size_t b = 0; b < nb; ++b) {
        const std::size_t lo = b * kBlock, hi = lo + kBlock < n ? lo + kBlock : n;
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += w[i] * g[n - 1 - i];
        partial[b] = s;
    }
    return detail::fold_blocks(partial);
}

inline double conv_tap(const double* w, const double* g, std::size_t n) {
#ifdef _OPENMP
    if (n >= 4 * kBlock && effective_threads() > 1) {
        const std::size_t nb = (n + kBlock - 1) / kBlock;
        std::vector<double> partial(nb, 0.0);
#pragma omp parallel for schedule(static) num_threads(effective_threads())
        for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(nb); ++b) {
            const std::size_t lo = static_cast<std::size_t>(b) * kBlock;
            const std::size_t hi = lo + kBlock < n ? lo + kBlock : n;
            double s = 0.0;
            for (std::size_t i = lo; i < hi; ++i) s += w[i] * g[n - 1 - i];
            partial[static_cast<std::size_t>(b)] = s;
        }
        return detail::fold_blocks(partial);
    }
#endif
    return conv_tap_serial(w, g, n);
}

inline double block_sum_serial(const double* x, std::size_t n) {
    const std::size_t nb = (n + kBlock - 1) / kBlock;
    std::vector<double> partial(nb, 0.0);
    for (std::size_t b = 0; b < nb; ++b) {
        const std::size_t lo = b * kBlock, hi = lo + kBlock < n ? lo + kBlock : n;
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += x[i];
        partial[b] = s;
    }
    return detail::fold_blocks(partial);
}

inline double block_sum(const double* x, std::size_t n) {
#ifdef _OPENMP
    if (n >= 4 * kBlock && effective_threads() > 1) {
        const std::size_t nb = (n + kBlock - 1) / kBlock;
        std::vector<double> partial(nb, 0.0);
#pragma omp parallel for schedule(static) num_threads(effective_threads())
        for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(nb); ++b) {
            const std::size_t lo = static_cast<std::size_t>(b) * kBlock;
            const std::size_t hi = lo + kBlock < n ? lo + kBlock : n;
            double s = 0.0;
            for (std::size_t i = lo; i < hi; ++i) s += x[i];
            partial[static_cast<std::size_t>(b)] = s;
        }
        return detail::fold_blocks(partial);
    }
#endif
    return block_sum_serial(x, n);
}

// Independent iterations writing to disjoint slots; deterministic under any
// thread count.
template <class F>
void parallel_for(std::size_t n, F&& f) {
#ifdef _OPENMP
    if (n > 1 && effective_threads() > 1) {
#pragma omp parallel for schedule(dynamic, 1) num_threads(effective_threads())
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
            f(static_cast<std::size_t>(i));
        return;
    }
#endif
    for (std::size_t i = 0; i < n; ++i) f(i);
}

// Same loop shape with a static schedule, for cheap per-element bodies.
template <class F>
void parallel_for_static(std::size_t n, F&& f) {
#ifdef _OPENMP
    if (n >= 1024 && effective_threads() > 1) {
#pragma omp parallel for schedule(static) num_threads(effective_threads())
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
            f(static_cast<std::size_t>(i));
        return;
    }
#endif
    for (std::size_t i = 0; i < n; ++i) f(i);
}

} // namespace roughlob::par
