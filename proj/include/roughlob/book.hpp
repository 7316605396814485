#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "roughlob/volterra_y.hpp"

namespace roughlob {

// Coefficients and term shapes of the centered order-book density equation
//   du = [eta u_xx - beta sgn(x)[u_x]^- - zeta u + J(x,u) + G(x,ell)] dt
//        + c u sqrt(Y) dW,   u(t,+-L) = 0,
// with J(x,u) = -sgn(x)[ j(|x|)(u(|x|)-q0)^+ + j(-|x|)(u(-|x|)+q0)^- ] and
// ell(t) the integral of u over [-iota, iota]. The default shapes are
// j(x) = j0 exp(-|x|/x_j) and G(x,l) = -g l exp(-(x/w_scale)^2), the simplest
// instances of the qualitative constraints (j positive, decreasing in |x|;
// G strictly decreasing in l with G(x,0) = 0).
struct BookParams {
    double eta = 0.1;
    double beta = 0.3;
    double zeta = 0.5;
    double L = 1.0;
    double iota = 0.1;
    double q0 = 0.7;
    double c = 1.0;
    std::function<double(double)> j_fun;
    std::function<double(double, double)> g_fun;
    bool pin_zero = false;                  // optionally force u(t,0)=0
    double y_cap = 0.0;                     // >0 enables the tau_k split guard
};

BookParams default_book_params();
// fill j_fun/g_fun from the default shapes with explicit constants
void set_default_terms(BookParams& p, double j0, double x_j, double g_gain, double w_scale);

struct BookGrid {
    std::vector<double> x; // uniform on [-L,L], odd node count, node at 0
    std::vector<double> u;
    double t = 0.0;
    double clamp_mass = 0.0; // |mass| removed by sign enforcement so far

    double dx() const { return x[1] - x[0]; }
    std::size_t mid() const { return (x.size() - 1) / 2; }
};

// nodes = M+1 with M even; u starts at 0
BookGrid make_book_grid(double L, std::size_t M);
BookGrid make_book_grid(double L, std::size_t M, const std::function<double(double)>& profile);

// Window quadratures used by the imbalance and the depths. Sums run outward
// from the mid node in mirrored order, so an antisymmetric profile gives an
// exactly zero imbalance and exactly opposite one-sided integrals. iota is
// snapped to a whole number of cells.
double window_imbalance(const BookGrid& g, double iota);
double window_integral_ask(const std::vector<double>& f, const BookGrid& g, double iota);
double window_integral_bid(const std::vector<double>& f, const BookGrid& g, double iota);

// Full drift eta u_xx - beta sgn(x)[u_x]^- - zeta u + J + G per node
// (boundary entries are 0). The convection difference is one-sided toward the
// mid-price. drift_terms_serial is the reference kept for testing; the
// parallel version is bit-identical to it.
std::vector<double> drift_terms(const BookGrid& g, const BookParams& p);
std::vector<double> drift_terms_serial(const BookGrid& g, const BookParams& p);

// convection + J + G only (the pieces the IMEX step treats explicitly)
std::vector<double> explicit_drift(const BookGrid& g, const BookParams& p);

// One IMEX Euler-Maruyama step: diffusion and decay implicit (tridiagonal
// solve), the nonlinear pieces explicit, then noise c u sqrt(y) dW with one
// scalar dW for all nodes; boundary re-imposed and sign zones clamped with
// mass accounting.
void book_step(BookGrid& g, const BookParams& p, double y_t, double dW, double dt);

struct BookSeries {
    std::vector<double> times;
    std::vector<std::vector<double>> snapshots;
    std::vector<double> x;
    double clamp_mass = 0.0;
    double initial_abs_mass = 0.0;
    std::optional<double> truncated_at; // tau_k analog, if the y cap was hit
};

struct BookRunOptions {
    double horizon = 1.0;
    double dt = 1e-3;
    std::size_t snapshot_stride = 16;
    std::uint64_t seed = 1;
    std::uint64_t stream = 0;
};

// Drives book_step over [0, horizon] against a Volterra path (left-constant
// interpolation in time). If p.y_cap > 0 and y exceeds it, the run stops at
// that time and reports it, mirroring the stopping-time truncation.
BookSeries simulate_book(const BookParams& p, const BookGrid& u0, const VolterraPath& vp,
                         const BookRunOptions& opt);

} // namespace roughlob
