#include "roughlob/analytics.hpp"

#include <cmath>

#include "roughlob/errors.hpp"

namespace roughlob {

RealizedVolSeries realized_vol(std::span<const double> t, std::span<const double> s,
                               double window) {
    if (!(window > 0.0)) fail(errc::window_too_small, "window must be positive");
    if (t.size() != s.size() || t.size() < 2)
        fail(errc::window_too_small, "need at least two (t, S) points");

    RealizedVolSeries out;
    out.window = window;
    const double t0 = t[0];
    std::size_t cur_win = 0;
    double acc = 0.0;
    bool have_any = false;
    auto flush = [&](std::size_t win) {
        if (have_any) {
            out.times.push_back(t0 + window * static_cast<double>(win + 1));
            out.rv.push_back(std::sqrt(acc));
        }
        acc = 0.0;
        have_any = false;
    };
    for (std::size_t i = 1; i < t.size(); ++i) {
        if (!(s[i] > 0.0 && s[i - 1] > 0.0))
            fail(errc::window_too_small, "prices must be positive for log-returns");
        const double rel = t[i] - t0;
        auto win = static_cast<std::size_t>(rel / window);
        if (win > 0 && rel <= window * static_cast<double>(win)) --win; // edge closes the earlier window
        while (win > cur_win) {
            flush(cur_win);
            ++cur_win;
        }
        const double r = std::log(s[i] / s[i - 1]);
        acc += r * r;
        have_any = true;
    }
    flush(cur_win);
    if (out.rv.empty()) fail(errc::window_too_small, "no window received two points");
    return out;
}

double roughness(const RealizedVolSeries& rv) {
    if (rv.rv.size() < 512) fail(errc::series_too_short, "roughness needs >= 512 rv points");
    std::vector<double> logs(rv.rv.size());
    for (std::size_t i = 0; i < rv.rv.size(); ++i)
        logs[i] = std::log(rv.rv[i] > 1e-12 ? rv.rv[i] : 1e-12);
    return hurst_of_path(logs);
}

DepthProfile depth_profile(const BookSeries& series) {
    DepthProfile p;
    if (series.snapshots.empty()) return p;
    const std::size_t n = series.x.size();
    const std::size_t m = (n - 1) / 2;
    const double dx = series.x[1] - series.x[0];
    p.x = series.x;
    p.mean_abs_u.assign(n, 0.0);
    for (const auto& snap : series.snapshots) {
        double mass = 0.0;
        std::size_t best_a = m + 1, best_b = m - 1;
        for (std::size_t i = 0; i < n; ++i) {
            const double a = std::fabs(snap[i]);
            p.mean_abs_u[i] += a;
            mass += a * dx;
            if (i > m && a > std::fabs(snap[best_a])) best_a = i;
            if (i < m && a > std::fabs(snap[best_b])) best_b = i;
        }
        p.peak_x_ask.push_back(series.x[best_a]);
        p.peak_x_bid.push_back(series.x[best_b]);
        p.mass.push_back(mass);
    }
    const double inv = 1.0 / static_cast<double>(series.snapshots.size());
    for (double& v : p.mean_abs_u) v *= inv;

    auto variance = [](const std::vector<double>& v) {
        if (v.size() < 2) return 0.0;
        double mean = 0.0;
        for (double x : v) mean += x;
        mean /= static_cast<double>(v.size());
        double s = 0.0;
        for (double x : v) s += (x - mean) * (x - mean);
        return s / static_cast<double>(v.size() - 1);
    };
    p.peak_location_variance = 0.5 * (variance(p.peak_x_ask) + variance(p.peak_x_bid));
    return p;
}

} // namespace roughlob
