#pragma once

#include <functional>

#include "roughlob/linalg.hpp"

namespace roughlob {

// Background intensity mu(t) with its limit. `sup` bounds mu componentwise on
// [0,inf); the thinning simulator uses it as the exogenous part of the
// dominating intensity, so it must be a true upper bound. `integral0t`
// returns int_0^t mu (exact for the constant factory).
struct BaselineSpec {
    std::function<Vec4(double)> value;
    Vec4 mu_infinity{};
    Vec4 sup{};
    std::function<Vec4(double)> integral0t;
};

BaselineSpec constant_baseline(const Vec4& v);

// scalar counterpart for the one-dimensional reduction
struct Baseline1 {
    std::function<double(double)> value;
    double mu_infinity = 0.0;
    double sup = 0.0;
    std::function<double(double)> integral0t;
};

Baseline1 constant_baseline_1d(double v);

} // namespace roughlob
