#pragma once

#include "roughlob/betas.hpp"
#include "roughlob/linalg.hpp"

namespace roughlob {

// The 4x4 interaction matrix with its analytic eigensystem. Rows/columns are
// ordered (limit ask, limit bid, market ask, market bid). eigenvectors[i] is
// the eigenvector of the transpose belonging to eigenvalues[i]; the
// eigenvalues are strictly decreasing and positive for every valid
// BetaParams. ones_dot_v1 = 2*beta1 + 4*beta2*beta3 + 6*beta2 - 2 > 0 and the
// remaining eigenvectors are orthogonal to the ones vector.
struct Phi0Matrix {
    Mat4 entries;
    Vec4 eigenvalues;
    std::array<Vec4, 4> eigenvectors; // of entries^T
    BetaParams betas;
    double ones_dot_v1;
};

Phi0Matrix build_phi0(const BetaParams& b);

} // namespace roughlob
