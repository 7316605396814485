#pragma once

// Numerical eigensystem oracle backed by Eigen's general (non-symmetric)
// solver. Test-only: the library's closed forms are the product surface and
// this is the independent route that checks them.

#include <Eigen/Dense>
#include <algorithm>
#include <array>

#include "roughlob/linalg.hpp"

namespace testsup {

struct EigSystem {
    std::array<double, 4> values;                 // sorted descending
    std::array<std::array<double, 4>, 4> vectors; // rows, matching order
};

// eigen decomposition of m^T (real spectrum expected)
inline EigSystem eig_transpose_oracle(const roughlob::Mat4& m) {
    Eigen::Matrix4d a;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) a(i, j) = m(j, i);
    Eigen::EigenSolver<Eigen::Matrix4d> solver(a);
    std::array<int, 4> order{0, 1, 2, 3};
    const auto vals = solver.eigenvalues();
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return vals(x).real() > vals(y).real(); });
    EigSystem out;
    for (int r = 0; r < 4; ++r) {
        const int k = order[r];
        out.values[r] = vals(k).real();
        for (int i = 0; i < 4; ++i) out.vectors[r][i] = solver.eigenvectors().col(k)(i).real();
    }
    return out;
}

// relative deviation between a numeric eigenvector and a reference one after
// optimal scaling (they are only defined up to scale)
inline double vector_mismatch(const std::array<double, 4>& num, const roughlob::Vec4& ref) {
    double num_dot_ref = 0.0, num_dot_num = 0.0, ref_norm2 = 0.0;
    for (int i = 0; i < 4; ++i) {
        num_dot_ref += num[i] * ref[i];
        num_dot_num += num[i] * num[i];
        ref_norm2 += ref[i] * ref[i];
    }
    const double s = num_dot_ref / num_dot_num;
    double err2 = 0.0;
    for (int i = 0; i < 4; ++i) {
        const double d = s * num[i] - ref[i];
        err2 += d * d;
    }
    return std::sqrt(err2 / ref_norm2);
}

} // namespace testsup
