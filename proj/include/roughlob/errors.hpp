#pragma once

#include <stdexcept>
#include <string>

namespace roughlob {

// Every contract violation carries one of these codes so callers (and tests)
// can dispatch on the condition rather than parse message text.
enum class errc {
    ordering_violation,       // beta2 < beta1 < 1 fails
    beta3_range,              // beta3 outside (0,1)
    subcritical_sum,          // beta1 + beta2*beta3 >= 1
    supercritical_sum,        // beta1 + beta2 + beta2*beta3 <= 1
    alpha_out_of_range,       // tail exponent outside (1/2,1)
    non_integrable,           // kernel parameters give no finite L1 norm
    unstable_regime,          // mean-intensity solve refused above criticality
    explosion_guard,          // event cap hit in simulation
    parameter_mismatch,       // event stream does not match supplied parameters
    degenerate_scale,         // a_T <= 0 in the scaling sequence
    grid_beyond_horizon,      // diagnostic grid extends past simulated horizon
    not_critical,             // operation requires lambda1*|phi|_1 == 1
    overflow,                 // Mittag-Leffler argument beyond representable range
    nonpositive_t,            // density evaluated at t <= 0
    step_too_coarse,          // Volterra scheme stability guard
    path_too_short,           // Hurst estimate needs >= 512 samples
    cfl_violation,            // explicit SPDE pieces violate the step guard
    non_finite_state,         // NaN/Inf detected in the book state
    volterra_path_too_short,  // Y path does not cover the book horizon
    degenerate_depth,         // |depth| below the division floor
    window_too_small,         // realized-vol window has < 2 points everywhere
    series_too_short,         // roughness input below minimum length
    config_error,             // scenario parse/validation failure
    io_error,                 // file read/write failure
};

const char* errc_name(errc c);

struct model_error : std::runtime_error {
    errc code;
    model_error(errc c, const std::string& what)
        : std::runtime_error(std::string(errc_name(c)) + ": " + what), code(c) {}
};

[[noreturn]] inline void fail(errc c, const std::string& what) { throw model_error(c, what); }

} // namespace roughlob
