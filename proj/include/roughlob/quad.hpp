#pragma once

#include <cmath>

namespace roughlob::quad {

namespace detail {
template <class F>
double simpson_rec(const F& f, double lo, double hi, double flo, double fmid, double fhi,
                   double whole, double tol, int depth) {
    const double mid = 0.5 * (lo + hi);
    const double lm = 0.5 * (lo + mid), rm = 0.5 * (mid + hi);
    const double flm = f(lm), frm = f(rm);
    const double left = (mid - lo) / 6.0 * (flo + 4.0 * flm + fmid);
    const double right = (hi - mid) / 6.0 * (fmid + 4.0 * frm + fhi);
    const double delta = left + right - whole;
    if (depth <= 0 || std::fabs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return simpson_rec(f, lo, mid, flo, flm, fmid, left, 0.5 * tol, depth - 1) +
           simpson_rec(f, mid, hi, fmid, frm, fhi, right, 0.5 * tol, depth - 1);
}
} // namespace detail

template <class F>
double adaptive_simpson(const F& f, double lo, double hi, double tol, int depth = 50) {
    const double flo = f(lo), fhi = f(hi), fmid = f(0.5 * (lo + hi));
    const double whole = (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
    return detail::simpson_rec(f, lo, hi, flo, fmid, fhi, whole, tol, depth);
}

// 8-point Gauss-Legendre on [lo, hi]
template <class F>
double gauss8(const F& f, double lo, double hi) {
    static const double x[4] = {0.1834346424956498, 0.5255324099163290,
                                0.7966664774136267, 0.9602898564975363};
    static const double w[4] = {0.3626837833783620, 0.3137066458778873,
                                0.2223810344533745, 0.1012285362903763};
    const double c = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
    double s = 0.0;
    for (int i = 0; i < 4; ++i) s += w[i] * (f(c - h * x[i]) + f(c + h * x[i]));
    return s * h;
}

} // namespace roughlob::quad
