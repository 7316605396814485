#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace roughlob {

using Vec4 = std::array<double, 4>;

// Row-major 4x4 matrix; only the handful of operations the model needs.
struct Mat4 {
    std::array<std::array<double, 4>, 4> m{};

    double& operator()(int i, int j) { return m[i][j]; }
    double operator()(int i, int j) const { return m[i][j]; }

    Mat4 transpose() const {
        Mat4 t;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) t.m[j][i] = m[i][j];
        return t;
    }
};

inline Vec4 matvec(const Mat4& a, const Vec4& x) {
    Vec4 y{};
    for (int i = 0; i < 4; ++i) {
        double s = 0.0;
        for (int j = 0; j < 4; ++j) s += a.m[i][j] * x[j];
        y[i] = s;
    }
    return y;
}

inline double dot(const Vec4& a, const Vec4& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

inline Vec4 operator+(const Vec4& a, const Vec4& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}

inline Vec4 operator-(const Vec4& a, const Vec4& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}

inline Vec4 operator*(double s, const Vec4& a) {
    return {s * a[0], s * a[1], s * a[2], s * a[3]};
}

inline Vec4 ones4() { return {1.0, 1.0, 1.0, 1.0}; }

inline double sum(const Vec4& a) { return a[0] + a[1] + a[2] + a[3]; }

inline Vec4 square_elems(const Vec4& a) {
    return {a[0] * a[0], a[1] * a[1], a[2] * a[2], a[3] * a[3]};
}

inline double max_abs(const Vec4& a) {
    double m = 0.0;
    for (double v : a) m = std::max(m, std::fabs(v));
    return m;
}

} // namespace roughlob
