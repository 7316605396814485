#pragma once

#include <span>
#include <vector>

#include "roughlob/book.hpp"

namespace roughlob {

// Rolling realized volatility: the time axis is cut into consecutive windows
// anchored at the first timestamp; each log-return belongs to the window
// containing its right endpoint, so squared values over a partition add up
// exactly to the full-range value. Windows that receive no return (data gaps)
// are skipped.
struct RealizedVolSeries {
    double window = 0.0;
    std::vector<double> times; // window end
    std::vector<double> rv;    // sqrt of the summed squared log-returns
};

RealizedVolSeries realized_vol(std::span<const double> t, std::span<const double> s,
                               double window);

// Variogram-slope Hurst estimate of log rv (rv floored at 1e-12 before the
// log); needs at least 512 windows.
double roughness(const RealizedVolSeries& rv);

struct DepthProfile {
    std::vector<double> x;
    std::vector<double> mean_abs_u;    // per node, averaged over snapshots
    std::vector<double> peak_x_ask;    // per snapshot, argmax |u| on x > 0
    std::vector<double> peak_x_bid;    // per snapshot, argmax |u| on x < 0
    std::vector<double> mass;          // per snapshot, int |u| dx
    double peak_location_variance = 0; // mean of the two one-sided variances
};

DepthProfile depth_profile(const BookSeries& series);

} // namespace roughlob
