#include "roughlob/betas.hpp"

#include <cmath>
#include <string>

namespace roughlob {

BetaParams validate_betas(double b1, double b2, double b3) {
    auto num = [](double x) { return std::to_string(x); };
    if (!std::isfinite(b1) || !std::isfinite(b2) || !std::isfinite(b3))
        fail(errc::ordering_violation, "betas must be finite");
    if (!(0.0 < b2 && b2 < b1 && b1 < 1.0))
        fail(errc::ordering_violation,
             "need 0 < beta2 < beta1 < 1, got beta1=" + num(b1) + " beta2=" + num(b2));
    if (!(0.0 < b3 && b3 < 1.0))
        fail(errc::beta3_range, "need 0 < beta3 < 1, got beta3=" + num(b3));
    if (!(b1 + b2 * b3 < 1.0))
        fail(errc::subcritical_sum,
             "need beta1 + beta2*beta3 < 1, got " + num(b1 + b2 * b3));
    if (!(b1 + b2 + b2 * b3 > 1.0))
        fail(errc::supercritical_sum,
             "need beta1 + beta2 + beta2*beta3 > 1, got " + num(b1 + b2 + b2 * b3));
    return BetaParams{b1, b2, b3};
}

} // namespace roughlob
