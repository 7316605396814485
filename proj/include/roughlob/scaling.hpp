#pragma once

#include <optional>
#include <vector>

#include "roughlob/hawkes_sim.hpp"

namespace roughlob {

// Nearly-unstable parameter sequence: a_T = 1 - a_bar T^{-alpha},
// mu_T = mu_bar T^{alpha-1}, h_T = sqrt((1-a_T)/T). The o(.) corrections are
// set to zero, which the hypotheses allow.
struct ScalingParams {
    double T;
    double alpha;
    double a_bar;
    double mu_bar;
    double a_T;
    double mu_T;
    double h_T;
};

ScalingParams make_scaling(double T, double alpha, double a_bar, double mu_bar);

// Prefactor of the rescaled-volume limit, 4 / (sqrt(eps1'v1) (1 - lambda4 |phi|_1))
// with eps1 = ones/2. Requires a critical kernel.
double limit_volume_factor(const BetaParams& b, const KernelSpec& k);

// Rescaled paths on a macro-time grid. X and Lambda are the normalized counts
// and integrated intensities, Z their scaled difference (a martingale),
// v_rescaled = h_T v4'N(tT), y = (1-a_T)/mu_T v1'lambda(tT).
struct AuxiliaryPaths {
    std::vector<double> times; // macro time
    std::vector<Vec4> x;
    std::vector<Vec4> lambda_int;
    std::vector<Vec4> z;
    std::vector<double> v_rescaled;
    std::vector<double> y;
    // optional diagnostic approximation of the normalized martingale integral
    // B_{T,1}; computed per event, floored at 1e-12 under the root
    std::vector<double> b_t1;
    bool b_t1_floored = false;
};

struct AuxiliaryOptions {
    std::size_t grid_points = 32; // uniform on [0, macro_horizon]
    double macro_horizon = 1.0;
    bool compute_b_t1 = false; // costs one intensity evaluation per event
};

AuxiliaryPaths auxiliary_paths(const EventStream& es, const ScalingParams& sp,
                               const Phi0Matrix& phi0, const KernelSpec& k,
                               const BaselineSpec& mu, const AuxiliaryOptions& opt);

} // namespace roughlob
