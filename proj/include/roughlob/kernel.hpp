#pragma once

#include <optional>
#include <vector>

#include "roughlob/betas.hpp"
#include "roughlob/phi0.hpp"

namespace roughlob {

enum class KernelFamily { PowerLaw, Exponential, Tabulated };

// Scalar excitation function phi with its integrals. PowerLaw is
// phi(t) = c (1+t)^{-1-alpha}: l1 = kappa = c/alpha in closed form, which is
// what makes exact criticality possible. Exponential is a e^{-b t} (kappa
// absent: the tail beats any power). Tabulated interpolates (t, phi) samples
// linearly, mostly for tests.
//
// support_cutoff is where phi drops below 1e-12 * phi(0); simulation treats
// phi as 0 beyond it and truncated_mass records what that discards.
struct KernelSpec {
    KernelFamily family = KernelFamily::PowerLaw;
    double alpha = 0.0;            // tail exponent (PowerLaw only)
    double scale = 0.0;            // c for PowerLaw, a for Exponential
    double rate = 0.0;             // b for Exponential
    std::vector<double> tab_t;     // Tabulated abscissae (increasing, from 0)
    std::vector<double> tab_phi;   // Tabulated values
    double l1_norm = 0.0;
    double l2_norm = 0.0;
    std::optional<double> kappa;   // lim t^alpha int_t^inf phi
    double support_cutoff = 0.0;
    double truncated_mass = 0.0;

    double value(double t) const;      // phi(t), 0 outside [0, support_cutoff]
    double integral(double t) const;   // int_0^t phi, respecting the cutoff
};

KernelSpec make_power_law_kernel(double scale, double alpha);
KernelSpec make_exponential_kernel(double scale, double rate);
KernelSpec make_tabulated_kernel(std::vector<double> t, std::vector<double> phi);

// PowerLaw kernel scaled so lambda1 * l1_norm = 1 exactly (c = alpha/lambda1).
KernelSpec critical_kernel(const BetaParams& b, double alpha);

enum class Regime { Stable, Critical, Unstable };

struct StabilityReport {
    Regime regime;
    double spectral_l1;      // lambda1 * |phi|_1
    Vec4 per_eigenvalue_l1;  // lambda_i * |phi|_1
};

StabilityReport classify_stability(const Phi0Matrix& phi0, const KernelSpec& k);

const char* regime_name(Regime r);

// |phi^{*n}|_1 = |phi|_1^n.
double convolution_power_l1(const KernelSpec& k, int n);

// phi^{*n} sampled on a uniform grid by iterated trapezoid convolution;
// the quadrature oracle behind the closed form above.
std::vector<double> convolution_power_grid(const KernelSpec& k, int n, double dt,
                                           std::size_t n_steps);

} // namespace roughlob
