#include "roughlob/phi0.hpp"

namespace roughlob {

Phi0Matrix build_phi0(const BetaParams& b) {
    const double b1 = b.beta1, b2 = b.beta2, b3 = b.beta3;
    const double q = b1 + b2 + b2 * b3 - 1.0; // in (0, beta2)

    Phi0Matrix p;
    p.betas = b;
    p.entries.m = {{
        {1.0, 0.0, b2, q},
        {0.0, 1.0, q, b2},
        {b2, b2 * b3, b1 + b2, 0.0},
        {b2 * b3, b2, 0.0, b1 + b2},
    }};

    p.eigenvalues = {
        b1 + 2.0 * b2 + b2 * b3,
        1.0 + b2 - b2 * b3,
        b1 + b2 * b3,
        1.0 - b2 - b2 * b3,
    };

    const double s = b1 + b2 * b3 + 2.0 * b2 - 1.0; // = q + b2 > 0
    p.eigenvectors = {{
        {b2 * (b3 + 1.0), b2 * (b3 + 1.0), s, s},
        {-1.0, 1.0, -1.0, 1.0},
        {b2 * (b3 - 1.0), -b2 * (b3 - 1.0), -(b1 + b2 * b3 - 1.0), b1 + b2 * b3 - 1.0},
        {1.0, 1.0, -1.0, -1.0},
    }};

    p.ones_dot_v1 = 2.0 * b1 + 4.0 * b2 * b3 + 6.0 * b2 - 2.0;
    return p;
}

} // namespace roughlob
