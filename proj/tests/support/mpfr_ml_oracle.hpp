#pragma once

// Brute-force Mittag-Leffler series oracle at 200 decimal digits (MPFR).
// Sums z^n / Gamma(a n + b) until the terms are far below the target
// precision; the huge working precision absorbs the alternating-series
// cancellation that limits double-precision summation.

#include <mpfr.h>

#include <cmath>

namespace testsup {

inline double ml_series_mpfr(double a, double b, double z, int terms = 20000) {
    // |z| = 50 at a = 0.55 peaks near e^1230, so the working precision sits
    // far above the ~200 digits the comparisons need
    const mpfr_prec_t prec = 2600;
    mpfr_t sum, term, garg, g, zp, zn;
    mpfr_inits2(prec, sum, term, garg, g, zp, zn, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_d(sum, 0.0, MPFR_RNDN);
    mpfr_set_d(zp, 1.0, MPFR_RNDN); // z^n
    mpfr_set_d(zn, z, MPFR_RNDN);
    for (int n = 0; n < terms; ++n) {
        mpfr_set_d(garg, a, MPFR_RNDN);
        mpfr_mul_si(garg, garg, n, MPFR_RNDN);
        mpfr_add_d(garg, garg, b, MPFR_RNDN);
        mpfr_gamma(g, garg, MPFR_RNDN);
        mpfr_div(term, zp, g, MPFR_RNDN);
        mpfr_add(sum, sum, term, MPFR_RNDN);
        mpfr_mul(zp, zp, zn, MPFR_RNDN);
        // the term/sum ratio only gets this small after the term peak passes
        if (n > 8 && mpfr_cmpabs(term, sum) < 0) {
            mpfr_t ratio;
            mpfr_init2(ratio, prec);
            mpfr_div(ratio, term, sum, MPFR_RNDN);
            const double r = mpfr_get_d(ratio, MPFR_RNDN);
            mpfr_clear(ratio);
            if (r > -1e-80 && r < 1e-80) break;
        }
    }
    const double out = mpfr_get_d(sum, MPFR_RNDN);
    mpfr_clears(sum, term, garg, g, zp, zn, static_cast<mpfr_ptr>(nullptr));
    return out;
}

inline double gamma_mpfr(double x) {
    mpfr_t g, xx;
    mpfr_inits2(400, g, xx, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_d(xx, x, MPFR_RNDN);
    mpfr_gamma(g, xx, MPFR_RNDN);
    const double out = mpfr_get_d(g, MPFR_RNDN);
    mpfr_clears(g, xx, static_cast<mpfr_ptr>(nullptr));
    return out;
}

} // namespace testsup
