#pragma once

#include <cstdint>

#include "roughlob/baseline.hpp"
#include "roughlob/event_stream.hpp"
#include "roughlob/kernel.hpp"
#include "roughlob/mean_intensity.hpp"

namespace roughlob {

struct HawkesOptions {
    double horizon = 1.0;
    std::uint64_t seed = 1;
    std::uint64_t stream = 0;
    std::size_t event_cap = 10'000'000; // ExplosionGuard threshold
};

// Ogata thinning for the 4-type process with kernel matrix a*phi(t)*Phi0.
// The dominating intensity is sum(mu.sup) plus the current excitation, valid
// until the next event because phi is non-increasing. Exact, kernel-agnostic,
// bit-reproducible for a given (seed, stream).
EventStream simulate_hawkes(const BaselineSpec& mu, const KernelSpec& k,
                            const Phi0Matrix& phi0, double a, const HawkesOptions& opt);

// One-dimensional reduction (lambda = mu + a int phi dN), same algorithm.
EventStream simulate_hawkes_1d(const Baseline1& mu, const KernelSpec& k, double a,
                               const HawkesOptions& opt);

std::uint64_t hawkes_fingerprint(const BaselineSpec& mu, const KernelSpec& k,
                                 const Phi0Matrix& phi0, double a);
std::uint64_t hawkes_fingerprint_1d(const Baseline1& mu, const KernelSpec& k, double a);

// lambda(t) reconstructed from a stream; evaluation times must be
// non-decreasing across calls (the evaluator advances expiry cursors).
class IntensityEvaluator {
  public:
    IntensityEvaluator(const EventStream& es, const BaselineSpec& mu, const KernelSpec& k,
                       const Phi0Matrix& phi0, double a);
    // lambda at t using events with time < t (left limit at event times)
    Vec4 at(double t);

  private:
    const EventStream& es_;
    BaselineSpec mu_;
    KernelSpec k_;
    Mat4 phi0_;
    double a_;
    std::array<std::vector<double>, 4> by_comp_;
    std::array<std::size_t, 4> expire_{};
    double last_t_ = 0.0;
};

struct MartingalePath {
    double dt = 0.0;
    std::vector<Vec4> m;       // M(t) = N(t) - int_0^t lambda
    std::vector<Vec4> counts;  // N(t) on the same grid
    std::vector<Vec4> comp;    // int_0^t lambda
};

// Compensated martingale on a uniform grid. The integral of the excitation is
// the kernel antiderivative summed over events (closed form for the power-law
// and exponential families). Throws ParameterMismatch if the stream was not
// produced with these parameters.
MartingalePath compensated_martingale(const EventStream& es, const BaselineSpec& mu,
                                      const KernelSpec& k, const Phi0Matrix& phi0, double a,
                                      double grid_dt);

// int_0^t lambda for one time point (shared by the martingale and the
// rescaled auxiliary paths)
Vec4 integrated_intensity(const EventStream& es, const BaselineSpec& mu, const KernelSpec& k,
                          const Phi0Matrix& phi0, double a, double t);

// fill es.intensity_trace with lambda sampled every trace_dt (diagnostic)
void attach_intensity_trace(EventStream& es, const BaselineSpec& mu, const KernelSpec& k,
                            const Phi0Matrix& phi0, double a, double trace_dt);

} // namespace roughlob
