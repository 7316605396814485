#pragma once

#include <vector>

#include "roughlob/baseline.hpp"
#include "roughlob/kernel.hpp"

namespace roughlob {

// Grid solution of the renewal equation
//   m(t) = mu(t) + int_0^t phi(t-s) Phi0 m(s) ds
// by product integration: the kernel is integrated exactly over each
// subinterval and the unknown is held at the left endpoint. Refuses the
// unstable regime, where the mean blows up.
struct MeanIntensityPath {
    double dt = 0.0;
    std::vector<Vec4> values;
};

MeanIntensityPath mean_intensity(const BaselineSpec& mu, const KernelSpec& k,
                                 const Phi0Matrix& phi0, double horizon, double dt);

// Scalar version: m(t) = mu(t) + gain * int phi(t-s) m(s) ds. With gain =
// a*lambda_i and mu = v_i^T mu this is one eigen-coordinate of the vector
// equation; with gain = 1 it is the one-dimensional model.
std::vector<double> mean_intensity_scalar(const Baseline1& mu, const KernelSpec& k,
                                          double gain, double horizon, double dt);

// Truncated Neumann series sum_k (gain * phi)^{*k} * mu on the same grid and
// with the same product weights; terms are added until the analytic tail
// bound gain_l1^{m+1} |mu|_inf / (1 - gain_l1) drops below tail_tol.
std::vector<double> neumann_series_scalar(const Baseline1& mu, const KernelSpec& k,
                                          double gain, double horizon, double dt,
                                          double tail_tol = 1e-8);

} // namespace roughlob
