#include "roughlob/errors.hpp"

namespace roughlob {

const char* errc_name(errc c) {
    switch (c) {
        case errc::ordering_violation: return "OrderingViolation";
        case errc::beta3_range: return "Beta3Range";
        case errc::subcritical_sum: return "SubcriticalSum";
        case errc::supercritical_sum: return "SupercriticalSum";
        case errc::alpha_out_of_range: return "AlphaOutOfRange";
        case errc::non_integrable: return "NonIntegrable";
        case errc::unstable_regime: return "UnstableRegime";
        case errc::explosion_guard: return "ExplosionGuard";
        case errc::parameter_mismatch: return "ParameterMismatch";
        case errc::degenerate_scale: return "DegenerateScale";
        case errc::grid_beyond_horizon: return "GridBeyondHorizon";
        case errc::not_critical: return "NotCritical";
        case errc::overflow: return "Overflow";
        case errc::nonpositive_t: return "NonpositiveT";
        case errc::step_too_coarse: return "StepTooCoarse";
        case errc::path_too_short: return "PathTooShort";
        case errc::cfl_violation: return "CflViolation";
        case errc::non_finite_state: return "NonFiniteState";
        case errc::volterra_path_too_short: return "VolterraPathTooShort";
        case errc::degenerate_depth: return "DegenerateDepth";
        case errc::window_too_small: return "WindowTooSmall";
        case errc::series_too_short: return "SeriesTooShort";
        case errc::config_error: return "ConfigError";
        case errc::io_error: return "IoError";
    }
    return "UnknownError";
}

} // namespace roughlob
