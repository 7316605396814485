#include "roughlob/scaling.hpp"

#include <cmath>
#include <string>

namespace roughlob {

ScalingParams make_scaling(double T, double alpha, double a_bar, double mu_bar) {
    if (!(T >= 1.0)) fail(errc::degenerate_scale, "need T >= 1");
    if (!(alpha > 0.5 && alpha < 1.0)) fail(errc::alpha_out_of_range, "alpha must lie in (1/2,1)");
    if (!(a_bar > 0.0 && mu_bar > 0.0)) fail(errc::degenerate_scale, "a_bar, mu_bar must be positive");
    ScalingParams sp;
    sp.T = T;
    sp.alpha = alpha;
    sp.a_bar = a_bar;
    sp.mu_bar = mu_bar;
    const double shrink = a_bar * std::pow(T, -alpha);
    if (shrink >= 1.0)
        fail(errc::degenerate_scale,
             "a_bar*T^-alpha = " + std::to_string(shrink) + " >= 1 gives a_T <= 0");
    sp.a_T = 1.0 - shrink;
    sp.mu_T = mu_bar * std::pow(T, alpha - 1.0);
    sp.h_T = std::sqrt((1.0 - sp.a_T) / T);
    return sp;
}

double limit_volume_factor(const BetaParams& b, const KernelSpec& k) {
    const Phi0Matrix p = build_phi0(b);
    const double crit = p.eigenvalues[0] * k.l1_norm;
    if (std::fabs(crit - 1.0) > 1e-9)
        fail(errc::not_critical,
             "lambda1*|phi|_1 = " + std::to_string(crit) + ", need 1 (critical kernel)");
    const double eps1_v1 = 0.5 * p.ones_dot_v1;
    const double l4_phi = p.eigenvalues[3] * k.l1_norm;
    return 4.0 / (std::sqrt(eps1_v1) * (1.0 - l4_phi));
}

AuxiliaryPaths auxiliary_paths(const EventStream& es, const ScalingParams& sp,
                               const Phi0Matrix& phi0, const KernelSpec& k,
                               const BaselineSpec& mu, const AuxiliaryOptions& opt) {
    if (opt.macro_horizon * sp.T > es.horizon * (1.0 + 1e-12))
        fail(errc::grid_beyond_horizon, "grid needs horizon >= macro_horizon * T");

    const std::size_t n = opt.grid_points;
    AuxiliaryPaths out;
    out.times.resize(n + 1);
    out.x.resize(n + 1);
    out.lambda_int.resize(n + 1);
    out.z.resize(n + 1);
    out.v_rescaled.resize(n + 1);
    out.y.resize(n + 1);

    const Vec4 v1 = phi0.eigenvectors[0];
    const Vec4 v4 = phi0.eigenvectors[3];
    const double count_scale = (1.0 - sp.a_T) / (sp.T * sp.mu_T);
    const double z_scale = std::sqrt(sp.T * sp.mu_T / (1.0 - sp.a_T));
    const double y_scale = (1.0 - sp.a_T) / sp.mu_T;

    IntensityEvaluator eval(es, mu, k, phi0, sp.a_T);
    Vec4 counts{};
    std::size_t next_ev = 0;
    for (std::size_t g = 0; g <= n; ++g) {
        const double tau = opt.macro_horizon * static_cast<double>(g) / static_cast<double>(n);
        const double t_micro = tau * sp.T;
        while (next_ev < es.times.size() && es.times[next_ev] <= t_micro) {
            counts[static_cast<std::size_t>(es.components[next_ev])] += 1.0;
            ++next_ev;
        }
        const Vec4 lam_int = integrated_intensity(es, mu, k, phi0, sp.a_T, t_micro);
        out.times[g] = tau;
        out.x[g] = count_scale * counts;
        out.lambda_int[g] = count_scale * lam_int;
        out.z[g] = z_scale * (out.x[g] - out.lambda_int[g]);
        out.v_rescaled[g] = sp.h_T * dot(v4, counts);
        out.y[g] = y_scale * dot(v1, eval.at(t_micro));
    }

    if (opt.compute_b_t1) {
        // (1/sqrt T)[ sum_events v1_c / sqrt((v1^2)'lambda(t-)) - int v1'lambda / sqrt((v1^2)'lambda) ]
        const Vec4 v1sq = square_elems(v1);
        IntensityEvaluator ev2(es, mu, k, phi0, sp.a_T);
        out.b_t1.assign(n + 1, 0.0);
        double jump_part = 0.0;
        std::size_t ev_idx = 0;
        double int_part = 0.0;
        double prev_t = 0.0;
        Vec4 prev_lam = mu.value(0.0);
        for (std::size_t g = 1; g <= n; ++g) {
            const double t_micro = out.times[g] * sp.T;
            // events inside (prev grid, this grid]
            while (ev_idx < es.times.size() && es.times[ev_idx] <= t_micro) {
                const double te = es.times[ev_idx];
                const Vec4 lam = ev2.at(te);
                double under = dot(v1sq, lam);
                if (under < 1e-12) { under = 1e-12; out.b_t1_floored = true; }
                jump_part += v1[static_cast<std::size_t>(es.components[ev_idx])] / std::sqrt(under);
                // left-rectangle piece of the compensator integral
                double under_prev = dot(v1sq, prev_lam);
                if (under_prev < 1e-12) { under_prev = 1e-12; out.b_t1_floored = true; }
                int_part += (te - prev_t) * dot(v1, prev_lam) / std::sqrt(under_prev);
                prev_t = te;
                prev_lam = lam;
                ++ev_idx;
            }
            double under_prev = dot(v1sq, prev_lam);
            if (under_prev < 1e-12) { under_prev = 1e-12; out.b_t1_floored = true; }
            int_part += (t_micro - prev_t) * dot(v1, prev_lam) / std::sqrt(under_prev);
            prev_t = t_micro;
            out.b_t1[g] = (jump_part - int_part) / std::sqrt(sp.T);
        }
    }
    return out;
}

} // namespace roughlob
