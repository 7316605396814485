#pragma once

#include "roughlob/linalg.hpp"

namespace roughlob::special {

// Gamma via the Lanczos approximation (g=7, 9 coefficients), with reflection
// for x < 0.5. Audited in tests against Gamma(0.3) and Gamma(0.5)=sqrt(pi).
double gamma_fn(double x);
double log_gamma(double x);

// Two-parameter Mittag-Leffler E_{a,b}(z) for real z, a,b > 0.
// Power series for moderate |z|; the real-axis integral representation for
// z << 0 (a < 1), where the series cancels catastrophically in floating point.
double mittag_leffler(double a, double b, double z);

// E_{a,1}(-x), the fractional relaxation profile; thin wrapper kept separate
// because it is the partial integral of the density below.
double ml_relax(double a, double x);

// f^{a,nu}(t) = nu t^{a-1} E_{a,a}(-nu t^a), the Mittag-Leffler density.
double ml_density(double a, double nu, double t);

// Limit constants of the volatility equation.
double nu_bar(double a_bar, double lambda1, double kappa, double alpha);
double kappa_bar(double a_bar, double mu_bar, const Vec4& v1);

} // namespace roughlob::special
