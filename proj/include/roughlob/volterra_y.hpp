#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "roughlob/kernel.hpp"
#include "roughlob/phi0.hpp"

namespace roughlob {

// Parameters of the limit volatility equation
//   Y(t) = (nu/G(a)) int (t-s)^{a-1} (theta - Y(s)) ds
//        + (kappa nu/G(a)) int (t-s)^{a-1} sqrt(Y(s)) dB(s),
// equivalently with the Mittag-Leffler density as kernel. theta = ones'v1
// when derived from BetaParams.
struct VolterraParams {
    double alpha = 0.7;
    double nu_bar = 0.0;
    double kappa_bar = 0.0;
    double theta = 0.0;
    double horizon = 1.0;
    std::size_t n_steps = 4096;
};

// theta, nu_bar, kappa_bar filled from the model structure; a critical kernel
// is required (lambda1 * kappa = 1 collapses nu_bar to a_bar/Gamma(1-alpha)).
VolterraParams volterra_from_model(const Phi0Matrix& phi0, const KernelSpec& critical,
                                   double a_bar, double mu_bar, double horizon,
                                   std::size_t n_steps);

enum class YForm { FractionalKernel, MittagLeffler };

struct VolterraPath {
    std::vector<double> times;
    std::vector<double> y;     // clamped at 0; the recursion keeps raw values
    std::vector<double> raw;   // scheme state before the nonnegativity projection
    std::vector<double> noise; // dB increments consumed
    YForm form = YForm::FractionalKernel;
    std::size_t clamp_count = 0;
};

// Explicit scheme with exact kernel weights over each subinterval and
// left-point evaluation of the non-kernel factors. sqrt takes max(Y,0); the
// drift uses Y as-is so the scheme mean equals the deterministic solution.
VolterraPath solve_y_fractional(const VolterraParams& p, std::uint64_t seed,
                                std::uint64_t stream = 0);
VolterraPath solve_y_mittag_leffler(const VolterraParams& p, std::uint64_t seed,
                                    std::uint64_t stream = 0);

// Same solvers driven by caller-supplied Brownian increments (size n_steps,
// variance dt each); this is how the two forms share one noise path.
VolterraPath solve_y_fractional_noise(const VolterraParams& p, std::span<const double> db);
VolterraPath solve_y_mittag_leffler_noise(const VolterraParams& p, std::span<const double> db);

// Deterministic mean path (the kappa_bar = 0 relaxation).
std::vector<double> mean_of_y(const VolterraParams& p);

std::vector<double> gaussian_increments(std::size_t n, double dt, std::uint64_t seed,
                                        std::uint64_t stream);

// Variogram-slope Hurst estimate over lags spanning 1.5 decades; needs at
// least 512 samples. Returns NaN when the path is exactly flat.
double hurst_of_path(std::span<const double> y);

} // namespace roughlob
