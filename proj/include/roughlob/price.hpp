#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "roughlob/book.hpp"

namespace roughlob {

struct PriceParams {
    double delta = 0.01; // tick size
    double C_a = 1.0;
    double C_b = 1.0;
    double S0 = 100.0;
    // the noise amplitude is BookParams::c (one c in both equations)
};

struct DepthPair {
    double D_a; // int_0^iota u  (> 0 for a healthy book)
    double D_b; // int_{-iota}^0 u  (< 0)
};

// Trapezoid depths over the near-mid windows; throws DegenerateDepth when
// either magnitude is below the 1e-10 division floor.
DepthPair depths(const BookGrid& g, double iota);

// One Euler increment of
//   dS = (delta/2)(nu_b - nu_a) dt + (delta c/2)(C_b - C_a) sqrt(Y) dW,
//   nu_a = (C_a/D_a) int_0^iota  [full drift] dx,
//   nu_b = (C_b/D_b) int_{-iota}^0 [full drift] dx,
// with the same drift operator the book uses and the same dW as the book
// step. Scaling delta scales the increment exactly (delta multiplies once).
double price_increment(const BookGrid& g, const PriceParams& pp, const BookParams& bp,
                       double y_t, double dW, double dt);

double price_step(double S, const BookGrid& g, const PriceParams& pp, const BookParams& bp,
                  double y_t, double dW, double dt);

struct PricePath {
    std::vector<double> times;
    std::vector<double> s;
    std::vector<double> y;
    std::vector<double> depth_a;
    std::vector<double> depth_b;
};

struct DepthWarning {
    double t;
    double depth_a;
    double depth_b;
};

struct CoupledResult {
    BookSeries book;
    PricePath price;
    std::vector<DepthWarning> warnings; // degenerate-depth steps (price held)
};

struct CoupledOptions {
    double horizon = 1.0;
    double dt = 1e-3;
    std::size_t snapshot_stride = 16;
    std::uint64_t seed = 1;
    // correlation between W and the volatility driver B1; nonzero values
    // require the Y path to live on the same time grid (its stored noise is
    // reused). Default keeps the two drivers independent.
    double y_noise_correlation = 0.0;
    // diagnostic switch: let the price consume its own Brownian increments
    // instead of the book's
    bool decouple_price_noise = false;
};

// Single-clock co-simulation: per step the same (y_t, dW) drives the book and
// the price. Y comes from the supplied path (left-constant in time). On a
// degenerate depth the price holds for that step and a warning is recorded.
CoupledResult simulate_coupled(const BookParams& bp, const PriceParams& pp, const BookGrid& u0,
                               const VolterraPath& vp, const CoupledOptions& opt);

} // namespace roughlob
