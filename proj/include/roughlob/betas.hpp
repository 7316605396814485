#pragma once

#include "roughlob/errors.hpp"

namespace roughlob {

// Interaction ratios of the 4-type order-flow model. Validity means
//   0 < beta2 < beta1 < 1,  0 < beta3 < 1,
//   beta1 + beta2*beta3 < 1 < beta1 + beta2 + beta2*beta3.
struct BetaParams {
    double beta1;
    double beta2;
    double beta3;
};

// Returns the validated parameters or throws naming the first violated
// inequality group.
BetaParams validate_betas(double b1, double b2, double b3);

} // namespace roughlob
