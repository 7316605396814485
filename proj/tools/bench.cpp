// Serial vs OpenMP timing for the data-parallel kernels, with bit-equality
// checks between the two paths. Build and run: ./bench [--quick]

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "roughlob/book.hpp"
#include "roughlob/hawkes_sim.hpp"
#include "roughlob/mean_intensity.hpp"
#include "roughlob/parallel.hpp"
#include "roughlob/rng.hpp"
#include "roughlob/volterra_y.hpp"

using namespace roughlob;

namespace {

double now_ms() {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

template <class F>
double time_ms(F&& f, int reps) {
    const double t0 = now_ms();
    for (int i = 0; i < reps; ++i) f();
    return (now_ms() - t0) / reps;
}

void row(const char* name, double serial_ms, double parallel_ms, bool match) {
    std::printf("%-28s %10.2f ms %10.2f ms %7.2fx   %s\n", name, serial_ms, parallel_ms,
                serial_ms / parallel_ms, match ? "bit-identical" : "MISMATCH");
}

} // namespace

int main(int argc, char** argv) {
    const bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
    const int reps = quick ? 1 : 3;
    std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

    // rough Volterra solve: O(n^2) convolution taps
    {
        VolterraParams p;
        p.alpha = 0.7;
        p.nu_bar = 0.334272922;
        p.kappa_bar = 0.637377;
        p.theta = 1.6;
        p.horizon = 1.0;
        p.n_steps = quick ? 4096 : 16384;
        const auto db = gaussian_increments(p.n_steps, p.horizon / p.n_steps, 7, 7);
        VolterraPath a, b;
        par::set_threads(1);
        const double ts = time_ms([&] { a = solve_y_fractional_noise(p, db); }, reps);
        par::set_threads(0);
        const double tp = time_ms([&] { b = solve_y_fractional_noise(p, db); }, reps);
        row("volterra solve", ts, tp, a.y == b.y);
    }

    // book drift evaluation across nodes
    {
        BookParams bp = default_book_params();
        BookGrid g = make_book_grid(1.0, quick ? 4000 : 20000);
        const std::size_t m = g.mid();
        CounterRng rng(3, 3);
        for (std::size_t i = 1; i + 1 < g.u.size(); ++i)
            g.u[i] = (i > m ? 1.0 : (i < m ? -1.0 : 0.0)) * rng.uniform01();
        std::vector<double> a, b;
        const int dreps = quick ? 20 : 100;
        const double ts = time_ms([&] { a = drift_terms_serial(g, bp); }, dreps);
        par::set_threads(0);
        const double tp = time_ms([&] { b = drift_terms(g, bp); }, dreps);
        row("book drift", ts, tp, a == b);
    }

    // Monte Carlo replication of Hawkes paths
    {
        const auto bt = validate_betas(0.6, 0.3, 0.5);
        const auto phi0 = build_phi0(bt);
        const auto k = critical_kernel(bt, 0.7);
        const auto mu = constant_baseline({0.5, 0.5, 0.5, 0.5});
        const std::size_t n_paths = quick ? 8 : 16;
        auto run_path = [&](std::size_t r, std::vector<std::size_t>& counts) {
            HawkesOptions opt;
            opt.horizon = quick ? 100.0 : 300.0;
            opt.seed = 11;
            opt.stream = derive_stream("bench", r);
            counts[r] = simulate_hawkes(mu, k, phi0, 0.95, opt).size();
        };
        std::vector<std::size_t> ca(n_paths), cb(n_paths);
        const double ts = time_ms(
            [&] {
                for (std::size_t r = 0; r < n_paths; ++r) run_path(r, ca);
            },
            1);
        par::set_threads(0);
        const double tp = time_ms(
            [&] { par::parallel_for(n_paths, [&](std::size_t r) { run_path(r, cb); }); }, 1);
        row("hawkes MC batch", ts, tp, ca == cb);
    }

    // 4-type mean intensity (product-integration convolution)
    {
        const auto bt = validate_betas(0.6, 0.3, 0.5);
        const auto phi0 = build_phi0(bt);
        const auto k = make_exponential_kernel(0.5 / 1.35, 1.0);
        const auto mu = constant_baseline(ones4());
        const double horizon = quick ? 20.0 : 60.0;
        MeanIntensityPath a, b;
        par::set_threads(1);
        const double ts = time_ms([&] { a = mean_intensity(mu, k, phi0, horizon, 0.005); }, 1);
        par::set_threads(0);
        const double tp = time_ms([&] { b = mean_intensity(mu, k, phi0, horizon, 0.005); }, 1);
        bool match = a.values.size() == b.values.size();
        for (std::size_t i = 0; match && i < a.values.size(); ++i)
            match = a.values[i] == b.values[i];
        row("mean intensity", ts, tp, match);
    }

    return 0;
}
