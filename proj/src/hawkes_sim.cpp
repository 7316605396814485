#include "roughlob/hawkes_sim.hpp"

#include <cmath>

#include "roughlob/rng.hpp"

namespace roughlob {

namespace {

inline std::uint64_t mix_double(std::uint64_t h, double x) {
    std::uint64_t bits;
    static_assert(sizeof(bits) == sizeof(x));
    __builtin_memcpy(&bits, &x, sizeof(bits));
    return splitmix64(h ^ bits);
}

std::uint64_t kernel_fingerprint(std::uint64_t h, const KernelSpec& k) {
    h = splitmix64(h ^ static_cast<std::uint64_t>(k.family));
    h = mix_double(h, k.alpha);
    h = mix_double(h, k.scale);
    h = mix_double(h, k.rate);
    h = mix_double(h, k.l1_norm);
    for (double t : k.tab_t) h = mix_double(h, t);
    for (double p : k.tab_phi) h = mix_double(h, p);
    return h;
}

// Generic runtime-dimension thinning core. `column(c)` returns the c-th
// column of the interaction matrix scaled by a; `colsum(c)` its sum.
struct ThinningCore {
    int dim;
    std::vector<double> mu_sup;               // per component
    std::vector<std::vector<double>> col;     // col[c][i] = a * Phi0(i,c)
    std::vector<double> colsum;               // sum_i col[c][i]
    const KernelSpec* k;

    // state
    std::vector<std::vector<double>> times_by_comp;
    std::vector<std::size_t> expire;
    std::vector<double> exc_sum; // S_c(t) at the last evaluation

    double excitation_at(double t) {
        double total = 0.0;
        for (int c = 0; c < dim; ++c) {
            auto& tc = times_by_comp[c];
            std::size_t& e0 = expire[c];
            const double oldest = t - k->support_cutoff;
            while (e0 < tc.size() && tc[e0] < oldest) ++e0;
            double s = 0.0;
            for (std::size_t i = e0; i < tc.size(); ++i) s += k->value(t - tc[i]);
            exc_sum[c] = s;
            total += colsum[c] * s;
        }
        return total;
    }
};

} // namespace

std::uint64_t hawkes_fingerprint(const BaselineSpec& mu, const KernelSpec& k,
                                 const Phi0Matrix& phi0, double a) {
    std::uint64_t h = fnv1a64("hawkes4");
    h = mix_double(h, a);
    h = kernel_fingerprint(h, k);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) h = mix_double(h, phi0.entries(i, j));
    for (double t : {0.0, 0.5, 1.0, 2.0, 5.0}) {
        const Vec4 v = mu.value(t);
        for (int i = 0; i < 4; ++i) h = mix_double(h, v[i]);
    }
    return h;
}

std::uint64_t hawkes_fingerprint_1d(const Baseline1& mu, const KernelSpec& k, double a) {
    std::uint64_t h = fnv1a64("hawkes1");
    h = mix_double(h, a);
    h = kernel_fingerprint(h, k);
    for (double t : {0.0, 0.5, 1.0, 2.0, 5.0}) h = mix_double(h, mu.value(t));
    return h;
}

namespace {

EventStream run_thinning(ThinningCore& core, const std::function<void(double, double*)>& mu_fill,
                         double a, const HawkesOptions& opt, int dim,
                         std::uint64_t fingerprint) {
    EventStream es;
    es.horizon = opt.horizon;
    es.dim = dim;
    es.a = a;
    es.seed = opt.seed;
    es.stream = opt.stream;
    es.params_fingerprint = fingerprint;

    CounterRng rng(opt.seed, opt.stream);

    double mu_sup_total = 0.0;
    for (int c = 0; c < dim; ++c) mu_sup_total += core.mu_sup[c];
    const double phi0_val = core.k->value(0.0);

    double t = 0.0;
    double bound = mu_sup_total; // no excitation yet
    std::vector<double> lam(dim);
    while (true) {
        if (bound <= 0.0) break;
        const double tc = t + rng.exponential(bound);
        if (tc > opt.horizon) break;
        // exact intensity at the candidate
        const double exc = core.excitation_at(tc);
        mu_fill(tc, lam.data());
        double lam_total = 0.0;
        for (int i = 0; i < dim; ++i) {
            double s = lam[i];
            for (int c = 0; c < dim; ++c) s += core.col[c][i] * core.exc_sum[c];
            lam[i] = s;
            lam_total += s;
        }
        const double u = rng.uniform01() * bound;
        if (u <= lam_total) {
            // accept; pick the component proportionally to lambda_i
            const double pick = rng.uniform01() * lam_total;
            int comp = dim - 1;
            double acc = 0.0;
            for (int i = 0; i < dim; ++i) {
                acc += lam[i];
                if (pick <= acc) { comp = i; break; }
            }
            es.times.push_back(tc);
            es.components.push_back(comp);
            core.times_by_comp[comp].push_back(tc);
            if (es.times.size() >= opt.event_cap)
                fail(errc::explosion_guard, "event cap reached at t=" + std::to_string(tc));
            t = tc;
            bound = mu_sup_total + (exc + core.colsum[comp] * phi0_val);
        } else {
            // reject; the evaluation tightened the bound
            t = tc;
            bound = mu_sup_total + exc;
        }
    }
    return es;
}

} // namespace

EventStream simulate_hawkes(const BaselineSpec& mu, const KernelSpec& k,
                            const Phi0Matrix& phi0, double a, const HawkesOptions& opt) {
    if (!(a > 0.0 && a <= 1.0))
        fail(errc::unstable_regime, "kernel multiplier a must lie in (0,1]");
    if (a * phi0.eigenvalues[0] * k.l1_norm > 1.0 + 1e-12)
        fail(errc::unstable_regime, "a*lambda1*|phi|_1 must be <= 1 for simulation");

    ThinningCore core;
    core.dim = 4;
    core.k = &k;
    core.mu_sup.assign(mu.sup.begin(), mu.sup.end());
    core.col.resize(4);
    core.colsum.resize(4);
    for (int c = 0; c < 4; ++c) {
        core.col[c].resize(4);
        double s = 0.0;
        for (int i = 0; i < 4; ++i) {
            core.col[c][i] = a * phi0.entries(i, c);
            s += core.col[c][i];
        }
        core.colsum[c] = s;
    }
    core.times_by_comp.resize(4);
    core.expire.assign(4, 0);
    core.exc_sum.assign(4, 0.0);
    if (k.family == KernelFamily::Tabulated)
        for (std::size_t i = 0; i + 1 < k.tab_phi.size(); ++i)
            if (k.tab_phi[i + 1] > k.tab_phi[i])
                fail(errc::non_integrable, "thinning needs a non-increasing kernel");

    auto mu_fill = [&mu](double t, double* out) {
        const Vec4 v = mu.value(t);
        for (int i = 0; i < 4; ++i) out[i] = v[i];
    };
    return run_thinning(core, mu_fill, a, opt, 4, hawkes_fingerprint(mu, k, phi0, a));
}

EventStream simulate_hawkes_1d(const Baseline1& mu, const KernelSpec& k, double a,
                               const HawkesOptions& opt) {
    if (!(a > 0.0))
        fail(errc::unstable_regime, "kernel multiplier a must be positive");
    if (a * k.l1_norm > 1.0 + 1e-12)
        fail(errc::unstable_regime, "a*|phi|_1 must be <= 1 for simulation");

    ThinningCore core;
    core.dim = 1;
    core.k = &k;
    core.mu_sup = {mu.sup};
    core.col = {{a}};
    core.colsum = {a};
    core.times_by_comp.resize(1);
    core.expire.assign(1, 0);
    core.exc_sum.assign(1, 0.0);
    if (k.family == KernelFamily::Tabulated)
        for (std::size_t i = 0; i + 1 < k.tab_phi.size(); ++i)
            if (k.tab_phi[i + 1] > k.tab_phi[i])
                fail(errc::non_integrable, "thinning needs a non-increasing kernel");

    auto mu_fill = [&mu](double t, double* out) { out[0] = mu.value(t); };
    EventStream es = run_thinning(core, mu_fill, a, opt, 1, hawkes_fingerprint_1d(mu, k, a));
    return es;
}

IntensityEvaluator::IntensityEvaluator(const EventStream& es, const BaselineSpec& mu,
                                       const KernelSpec& k, const Phi0Matrix& phi0, double a)
    : es_(es), mu_(mu), k_(k), phi0_(phi0.entries), a_(a) {
    for (std::size_t i = 0; i < es.times.size(); ++i)
        by_comp_[static_cast<std::size_t>(es.components[i])].push_back(es.times[i]);
}

Vec4 IntensityEvaluator::at(double t) {
    if (t < last_t_) fail(errc::grid_beyond_horizon, "intensity evaluator needs non-decreasing times");
    last_t_ = t;
    Vec4 s{};
    for (int c = 0; c < 4; ++c) {
        auto& tc = by_comp_[c];
        std::size_t& e0 = expire_[c];
        const double oldest = t - k_.support_cutoff;
        while (e0 < tc.size() && tc[e0] < oldest) ++e0;
        double sc = 0.0;
        for (std::size_t i = e0; i < tc.size(); ++i) {
            if (tc[i] >= t) break;
            sc += k_.value(t - tc[i]);
        }
        s[c] = sc;
    }
    Vec4 lam = mu_.value(t);
    for (int i = 0; i < 4; ++i) {
        double acc = lam[i];
        for (int c = 0; c < 4; ++c) acc += a_ * phi0_(i, c) * s[c];
        lam[i] = acc;
    }
    return lam;
}

Vec4 integrated_intensity(const EventStream& es, const BaselineSpec& mu, const KernelSpec& k,
                          const Phi0Matrix& phi0, double a, double t) {
    Vec4 conv{}; // sum over events of F(t - t_k) per component
    for (std::size_t i = 0; i < es.times.size(); ++i) {
        if (es.times[i] >= t) break;
        conv[static_cast<std::size_t>(es.components[i])] += k.integral(t - es.times[i]);
    }
    Vec4 r = mu.integral0t(t);
    for (int i = 0; i < 4; ++i) {
        double acc = r[i];
        for (int c = 0; c < 4; ++c) acc += a * phi0.entries(i, c) * conv[c];
        r[i] = acc;
    }
    return r;
}

void attach_intensity_trace(EventStream& es, const BaselineSpec& mu, const KernelSpec& k,
                            const Phi0Matrix& phi0, double a, double trace_dt) {
    if (!(trace_dt > 0.0)) fail(errc::grid_beyond_horizon, "trace_dt must be positive");
    if (es.params_fingerprint != hawkes_fingerprint(mu, k, phi0, a))
        fail(errc::parameter_mismatch, "stream was not produced with these parameters");
    IntensityEvaluator eval(es, mu, k, phi0, a);
    es.trace_dt = trace_dt;
    es.intensity_trace.clear();
    const auto n = static_cast<std::size_t>(std::floor(es.horizon / trace_dt + 1e-9));
    for (std::size_t g = 0; g <= n; ++g)
        es.intensity_trace.push_back(eval.at(static_cast<double>(g) * trace_dt));
}

MartingalePath compensated_martingale(const EventStream& es, const BaselineSpec& mu,
                                      const KernelSpec& k, const Phi0Matrix& phi0, double a,
                                      double grid_dt) {
    if (es.dim != 4) fail(errc::parameter_mismatch, "stream is not 4-dimensional");
    if (es.params_fingerprint != hawkes_fingerprint(mu, k, phi0, a))
        fail(errc::parameter_mismatch, "stream was not produced with these parameters");

    const std::size_t n = static_cast<std::size_t>(std::floor(es.horizon / grid_dt + 1e-9));
    MartingalePath out;
    out.dt = grid_dt;
    out.m.resize(n + 1);
    out.counts.resize(n + 1);
    out.comp.resize(n + 1);

    Vec4 counts{};
    std::size_t next_ev = 0;
    for (std::size_t g = 0; g <= n; ++g) {
        const double t = static_cast<double>(g) * grid_dt;
        while (next_ev < es.times.size() && es.times[next_ev] <= t) {
            counts[static_cast<std::size_t>(es.components[next_ev])] += 1.0;
            ++next_ev;
        }
        const Vec4 comp = integrated_intensity(es, mu, k, phi0, a, t);
        out.counts[g] = counts;
        out.comp[g] = comp;
        out.m[g] = counts - comp;
    }
    return out;
}

} // namespace roughlob
