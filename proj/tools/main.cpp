// Scenario-driven command line: closed-form verification, simulation
// pipelines, the T-scaling study, and post-run analytics.

#include <chrono>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "roughlob/analytics.hpp"
#include "roughlob/csv.hpp"
#include "roughlob/event_stream.hpp"
#include "roughlob/mean_intensity.hpp"
#include "roughlob/parallel.hpp"
#include "roughlob/quad.hpp"
#include "roughlob/rng.hpp"
#include "roughlob/scaling.hpp"
#include "roughlob/scenario.hpp"
#include "roughlob/special.hpp"

using namespace roughlob;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

#ifndef ROUGHLOB_VERSION
#define ROUGHLOB_VERSION "0.1.0"
#endif
#ifndef ROUGHLOB_GIT_REV
#define ROUGHLOB_GIT_REV "unknown"
#endif

std::string now_iso8601() {
    const std::time_t t = std::time(nullptr);
    char buf[32];
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

// ------------------------------------------------------------------- verify

struct CheckSink {
    std::vector<json> records;
    bool all_pass = true;

    void add(const std::string& name, bool pass, double observed, double expected,
             double tolerance) {
        json j;
        j["check"] = name;
        j["pass"] = pass;
        j["observed"] = observed;
        j["expected"] = expected;
        j["tolerance"] = tolerance;
        records.push_back(j);
        if (!pass) all_pass = false;
    }
};

int cmd_verify(const std::string& inject_fault, const std::string& out_path) {
    CheckSink sink;

    // eigen oracle: residuals of the closed-form system over random draws
    {
        CounterRng rng(1234, 1);
        double worst_res = 0.0, worst_ones = 0.0;
        bool ordered = true;
        for (int trial = 0; trial < 200; ++trial) {
            double b1, b2, b3;
            for (;;) {
                b1 = rng.uniform01();
                b2 = rng.uniform01() * b1;
                b3 = rng.uniform01();
                if (b2 > 0 && b1 < 1 && b1 + b2 * b3 < 1 && b1 + b2 + b2 * b3 > 1) break;
            }
            auto p = build_phi0(validate_betas(b1, b2, b3));
            if (inject_fault == "eigen") p.eigenvalues[0] *= 1.0 + 1e-6;
            for (int i = 0; i < 4; ++i) {
                const Vec4 av = matvec(p.entries.transpose(), p.eigenvectors[i]);
                const Vec4 lv = p.eigenvalues[i] * p.eigenvectors[i];
                worst_res = std::max(worst_res, max_abs(av - lv) / std::max(1e-300, max_abs(lv)));
            }
            ordered = ordered && p.eigenvalues[0] > p.eigenvalues[1] &&
                      p.eigenvalues[1] > p.eigenvalues[2] &&
                      p.eigenvalues[2] > p.eigenvalues[3] && p.eigenvalues[3] > 0.0;
            for (int i = 1; i < 4; ++i)
                worst_ones = std::max(worst_ones, std::fabs(sum(p.eigenvectors[i])));
        }
        sink.add("eigen_residual", worst_res <= 1e-12, worst_res, 0.0, 1e-12);
        sink.add("eigen_ordering", ordered, ordered ? 1.0 : 0.0, 1.0, 0.0);
        sink.add("ones_orthogonality", worst_ones <= 1e-14, worst_ones, 0.0, 1e-14);
    }

    // critical scaling
    {
        const auto b = validate_betas(0.6, 0.3, 0.5);
        const auto p = build_phi0(b);
        double worst = 0.0;
        for (double alpha : {0.55, 0.7, 0.9}) {
            const auto k = critical_kernel(b, alpha);
            worst = std::max(worst, std::fabs(p.eigenvalues[0] * k.l1_norm - 1.0));
        }
        sink.add("critical_scale", worst <= 1e-14, worst, 0.0, 1e-14);
    }

    // Mittag-Leffler identities
    {
        double worst = 0.0;
        for (double z = -5.0; z <= 5.0; z += 0.25)
            worst = std::max(worst, std::fabs(special::mittag_leffler(1.0, 1.0, z) - std::exp(z)) /
                                        std::exp(z));
        sink.add("ml_exp_identity", worst <= 1e-12, worst, 0.0, 1e-12);

        double worst0 = 0.0;
        for (double a : {0.55, 0.7, 0.9})
            for (double bb : {a, 1.0}) {
                const double ref = 1.0 / std::tgamma(bb);
                worst0 = std::max(
                    worst0, std::fabs(special::mittag_leffler(a, bb, 0.0) - ref) / std::fabs(ref));
            }
        sink.add("ml_at_zero", worst0 <= 1e-12, worst0, 0.0, 1e-12);

        const double g_half = std::fabs(special::gamma_fn(0.5) - std::sqrt(M_PI)) / std::sqrt(M_PI);
        const double g_03 =
            std::fabs(special::gamma_fn(0.3) - 2.99156898768759062831093772601) / 2.991568987687591;
        sink.add("gamma_reference", std::max(g_half, g_03) <= 1e-12, std::max(g_half, g_03), 0.0,
                 1e-12);
    }

    // density normalization and Laplace transform
    {
        double worst = 0.0;
        for (const auto& [a, nu] : std::vector<std::pair<double, double>>{
                 {0.7, special::nu_bar(1.0, 1.35, 1.0 / 1.35, 0.7)}, {0.6, 1.0}, {0.85, 0.5}}) {
            const double t_cut = 200.0;
            auto integrand = [&, a = a, nu = nu](double s) {
                const double t = std::pow(s, 1.0 / a);
                return special::ml_density(a, nu, t) * t / (a * s);
            };
            const double head =
                quad::adaptive_simpson(integrand, 1e-14, std::pow(t_cut, a), 1e-10);
            const double tail = special::ml_relax(a, nu * std::pow(t_cut, a));
            worst = std::max(worst, std::fabs(head + tail - 1.0));
        }
        sink.add("ml_density_norm", worst <= 1e-6, worst, 0.0, 1e-6);

        const double a = 0.7, nu = 0.9;
        double worstl = 0.0;
        for (double z : {0.5, 1.0, 2.0}) {
            auto integrand = [&](double s) {
                const double t = std::pow(s, 1.0 / a);
                return std::exp(-z * t) * special::ml_density(a, nu, t) * t / (a * s);
            };
            const double got = quad::adaptive_simpson(integrand, 1e-14, std::pow(400.0, a), 1e-10);
            const double ref = nu / (nu + std::pow(z, a));
            worstl = std::max(worstl, std::fabs(got - ref) / ref);
        }
        sink.add("ml_laplace_identity", worstl <= 1e-6, worstl, 0.0, 1e-6);
    }

    // limit constants, two routes each
    {
        const auto b = validate_betas(0.6, 0.3, 0.5);
        const auto p = build_phi0(b);
        const auto k = critical_kernel(b, 0.7);
        const double nb_formula = special::nu_bar(1.0, p.eigenvalues[0], *k.kappa, 0.7);
        const double nb_reduced = 1.0 / special::gamma_fn(0.3);
        const double d1 = std::fabs(nb_formula - nb_reduced) / nb_reduced;
        sink.add("nu_bar_reduction", d1 <= 1e-12, d1, 0.0, 1e-12);

        const double kb_formula = special::kappa_bar(1.0, 1.0, p.eigenvectors[0]);
        const double kb_direct = std::sqrt(0.65 / 1.6);
        const double d2 = std::fabs(kb_formula - kb_direct) / kb_direct;
        sink.add("kappa_bar_example", d2 <= 1e-12, d2, 0.0, 1e-12);

        const double vf = limit_volume_factor(b, k);
        const double vf_direct = 4.0 / (std::sqrt(0.5 * sum(p.eigenvectors[0])) *
                                        (1.0 - p.eigenvalues[3] * k.l1_norm));
        const double d3 = std::fabs(vf - vf_direct) / vf_direct;
        sink.add("volume_factor", d3 <= 1e-12, d3, 0.0, 1e-12);
    }

    std::ostringstream lines;
    for (const auto& r : sink.records) lines << r.dump() << "\n";
    std::fputs(lines.str().c_str(), stdout);
    if (!out_path.empty()) io::write_text(out_path, lines.str());
    return sink.all_pass ? 0 : 1;
}

// ----------------------------------------------------------------- simulate

json scenario_json(const Scenario& s) { return json::parse(serialize_scenario(s)); }

void write_manifest(const fs::path& dir, const std::string& subcommand, const Scenario& s,
                    double wall_s) {
    json m;
    m["tool"] = "roughlob";
    m["version"] = ROUGHLOB_VERSION;
    m["git_rev"] = ROUGHLOB_GIT_REV;
    m["subcommand"] = subcommand;
    m["scenario"] = scenario_json(s);
    m["created"] = now_iso8601();
    m["wall_time_s"] = wall_s;
    io::write_text((dir / "manifest.json").string(), m.dump(2) + "\n");
}

std::string r_tag(std::size_t r) { return "r" + std::to_string(r); }

int cmd_simulate(const std::string& sub, const Scenario& s, const fs::path& out_dir) {
    fs::create_directories(out_dir);
    const auto t0 = std::chrono::steady_clock::now();
    const std::size_t reps = s.run.replicates;
    const std::uint64_t seed = s.run.master_seed;

    if (sub == "hawkes") {
        const auto phi0 = s.resolved_phi0();
        const auto k = s.resolved_kernel();
        const auto mu = constant_baseline(s.hawkes.mu * ones4());
        std::vector<EventStream> streams(reps);
        par::parallel_for(reps, [&](std::size_t r) {
            HawkesOptions opt;
            opt.horizon = s.hawkes.horizon;
            opt.seed = seed;
            opt.stream = derive_stream("hawkes", r);
            streams[r] = simulate_hawkes(mu, k, phi0, s.hawkes.a, opt);
        });
        for (std::size_t r = 0; r < reps; ++r)
            write_event_stream(streams[r], (out_dir / ("events-" + r_tag(r) + ".ndjson")).string());
    } else if (sub == "volterra") {
        const auto vp = s.resolved_volterra();
        std::vector<VolterraPath> paths(reps);
        par::parallel_for(reps, [&](std::size_t r) {
            const auto stream = derive_stream("volterra", r);
            paths[r] = s.volterra.form == "mittag_leffler"
                           ? solve_y_mittag_leffler(vp, seed, stream)
                           : solve_y_fractional(vp, seed, stream);
        });
        json hdr;
        hdr["alpha"] = vp.alpha;
        hdr["nu_bar"] = vp.nu_bar;
        hdr["kappa_bar"] = vp.kappa_bar;
        hdr["theta"] = vp.theta;
        hdr["n_steps"] = vp.n_steps;
        hdr["horizon"] = vp.horizon;
        hdr["form"] = s.volterra.form;
        hdr["seed"] = seed;
        for (std::size_t r = 0; r < reps; ++r) {
            json h = hdr;
            h["stream"] = derive_stream("volterra", r);
            h["clamp_count"] = paths[r].clamp_count;
            io::write_volterra_csv((out_dir / ("volterra-" + r_tag(r) + ".csv")).string(),
                                   paths[r], h.dump());
        }
    } else if (sub == "book" || sub == "price" || sub == "coupled") {
        const auto vp_params = s.resolved_volterra();
        const auto bp = s.resolved_book_params();
        const auto pp = s.resolved_price_params();
        const auto u0 = s.resolved_initial_book();
        struct RunOut {
            BookSeries book;
            PricePath price;
            std::vector<DepthWarning> warnings;
            VolterraPath y;
        };
        std::vector<RunOut> outs(reps);
        par::parallel_for(reps, [&](std::size_t r) {
            VolterraParams vq = vp_params;
            vq.horizon = std::max(vp_params.horizon, s.run.horizon);
            const auto y = s.volterra.form == "mittag_leffler"
                               ? solve_y_mittag_leffler(vq, seed, derive_stream("volterra", r))
                               : solve_y_fractional(vq, seed, derive_stream("volterra", r));
            if (sub == "book") {
                BookRunOptions opt;
                opt.horizon = s.run.horizon;
                opt.dt = s.run.dt;
                opt.snapshot_stride = s.run.snapshot_stride;
                opt.seed = seed;
                opt.stream = derive_stream("book", r);
                outs[r].book = simulate_book(bp, u0, y, opt);
            } else {
                CoupledOptions opt;
                opt.horizon = s.run.horizon;
                opt.dt = s.run.dt;
                opt.snapshot_stride = s.run.snapshot_stride;
                opt.seed = splitmix64(seed ^ derive_stream("coupled", r));
                opt.decouple_price_noise = !s.price.share_w;
                opt.y_noise_correlation = s.price.w_b1_correlation;
                auto res = simulate_coupled(bp, pp, u0, y, opt);
                outs[r].book = std::move(res.book);
                outs[r].price = std::move(res.price);
                outs[r].warnings = std::move(res.warnings);
            }
            outs[r].y = std::move(y);
        });
        for (std::size_t r = 0; r < reps; ++r) {
            if (sub == "book" || sub == "coupled") {
                io::write_book_csv((out_dir / ("book-" + r_tag(r) + ".csv")).string(),
                                   outs[r].book);
                json meta;
                meta["clamp_mass"] = outs[r].book.clamp_mass;
                meta["initial_abs_mass"] = outs[r].book.initial_abs_mass;
                meta["peclet"] = s.book.beta * (2.0 * s.book.L / s.book.nodes) / s.book.eta;
                meta["truncated_at"] = outs[r].book.truncated_at
                                           ? json(*outs[r].book.truncated_at)
                                           : json(nullptr);
                io::write_text((out_dir / ("book-" + r_tag(r) + ".meta.json")).string(),
                               meta.dump(2) + "\n");
            }
            if (sub == "price" || sub == "coupled") {
                io::write_price_csv((out_dir / ("price-" + r_tag(r) + ".csv")).string(),
                                    outs[r].price);
                io::write_depth_warnings_ndjson(
                    (out_dir / ("warnings-" + r_tag(r) + ".ndjson")).string(), outs[r].warnings);
            }
            if (sub == "coupled") {
                json h;
                h["seed"] = seed;
                h["stream"] = derive_stream("volterra", r);
                io::write_volterra_csv((out_dir / ("y-" + r_tag(r) + ".csv")).string(), outs[r].y,
                                       h.dump());
            }
        }
    } else {
        fail(errc::config_error, "unknown simulate subcommand " + sub);
    }

    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    write_manifest(out_dir, sub, s, wall);
    return 0;
}

// ------------------------------------------------------------ scaling study

int cmd_scaling_study(const Scenario& s, const fs::path& out_dir, std::size_t event_budget) {
    fs::create_directories(out_dir);
    const auto t0 = std::chrono::steady_clock::now();
    const auto b = s.resolved_betas();
    const auto phi0 = s.resolved_phi0();
    const auto k = critical_kernel(b, s.kernel.alpha);

    std::vector<json> report;
    std::ostringstream table;
    table << "T,replicates,mean_abs_v2_lambda,mean_abs_v3_lambda,mean_abs_v4_lambda,"
             "mean_sup_gap,mc_mean_y1,mc_se_y1,det_mean_y1,total_events\n";

    std::size_t events_used = 0;
    for (double T : s.scaling.t_list) {
        const auto sp = make_scaling(T, s.kernel.alpha, s.scaling.a_bar, s.scaling.mu_bar);
        const auto mu = constant_baseline(sp.mu_T * ones4());

        // replicate budget: keep the total event count in check at large T
        const std::size_t reps = s.run.replicates;
        std::vector<double> v2m(reps), v3m(reps), v4m(reps), gap(reps), y1(reps);
        std::vector<std::size_t> counts(reps, 0);
        std::vector<bool> exploded(reps, false);
        par::parallel_for(reps, [&](std::size_t r) {
            HawkesOptions opt;
            opt.horizon = T;
            opt.seed = s.run.master_seed;
            opt.stream = derive_stream("scaling", 1000 * static_cast<std::uint64_t>(T) + r);
            EventStream es;
            try {
                es = simulate_hawkes(mu, k, phi0, sp.a_T, opt);
            } catch (const model_error& e) {
                if (e.code == errc::explosion_guard) {
                    exploded[r] = true;
                    return;
                }
                throw;
            }
            counts[r] = es.size();
            AuxiliaryOptions aopt;
            aopt.grid_points = s.scaling.grid_points;
            const auto aux = auxiliary_paths(es, sp, phi0, k, mu, aopt);
            v2m[r] = std::fabs(dot(phi0.eigenvectors[1], aux.lambda_int.back()));
            v3m[r] = std::fabs(dot(phi0.eigenvectors[2], aux.lambda_int.back()));
            v4m[r] = std::fabs(dot(phi0.eigenvectors[3], aux.lambda_int.back()));
            double g = 0.0;
            for (std::size_t i = 0; i < aux.times.size(); ++i)
                g = std::max(g, max_abs(aux.x[i] - aux.lambda_int[i]));
            gap[r] = g;
            y1[r] = aux.y.back();
        });

        auto mean_of = [&](const std::vector<double>& v) {
            double m = 0.0;
            std::size_t n = 0;
            for (std::size_t r = 0; r < reps; ++r)
                if (!exploded[r]) { m += v[r]; ++n; }
            return n ? m / static_cast<double>(n) : 0.0;
        };
        auto se_of = [&](const std::vector<double>& v, double m) {
            double s2 = 0.0;
            std::size_t n = 0;
            for (std::size_t r = 0; r < reps; ++r)
                if (!exploded[r]) { s2 += (v[r] - m) * (v[r] - m); ++n; }
            return n > 1 ? std::sqrt(s2 / static_cast<double>(n - 1) / static_cast<double>(n)) : 0.0;
        };

        // deterministic E[Y_T(1)] from the projected renewal equation
        const double v1mu = dot(phi0.eigenvectors[0], mu.value(0.0));
        const double det_dt = std::max(T / 20000.0, 0.01);
        const auto m1 = mean_intensity_scalar(constant_baseline_1d(v1mu), k,
                                              sp.a_T * phi0.eigenvalues[0], T, det_dt);
        const double det_y1 = (1.0 - sp.a_T) / sp.mu_T * m1.back();

        std::size_t total = 0;
        for (auto c : counts) total += c;
        events_used += total;

        const double mcy = mean_of(y1);
        json rec;
        rec["T"] = T;
        rec["replicates"] = reps;
        rec["exploded"] = std::count(exploded.begin(), exploded.end(), true);
        rec["mean_abs_v2_lambda"] = mean_of(v2m);
        rec["mean_abs_v3_lambda"] = mean_of(v3m);
        rec["mean_abs_v4_lambda"] = mean_of(v4m);
        rec["mean_sup_gap"] = mean_of(gap);
        rec["mc_mean_y1"] = mcy;
        rec["mc_se_y1"] = se_of(y1, mcy);
        rec["det_mean_y1"] = det_y1;
        rec["total_events"] = total;
        report.push_back(rec);
        table << T << ',' << reps << ',' << mean_of(v2m) << ',' << mean_of(v3m) << ','
              << mean_of(v4m) << ',' << mean_of(gap) << ',' << mcy << ',' << se_of(y1, mcy) << ','
              << det_y1 << ',' << total << "\n";

        if (events_used > event_budget) {
            json guard;
            guard["note"] = "event budget exhausted; remaining T values skipped";
            guard["events_used"] = events_used;
            report.push_back(guard);
            break;
        }
    }

    std::ostringstream lines;
    for (const auto& r : report) lines << r.dump() << "\n";
    io::write_text((out_dir / "scaling-report.ndjson").string(), lines.str());
    io::write_text((out_dir / "scaling-table.csv").string(), table.str());
    std::fputs(lines.str().c_str(), stdout);

    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    write_manifest(out_dir, "scaling-study", s, wall);
    return 0;
}

// ---------------------------------------------------------------- analyze

int cmd_analyze(const std::string& ticks_path, const std::string& depth_path, double window,
                const fs::path& out_dir) {
    fs::create_directories(out_dir);
    std::vector<io::SummaryRecord> summary;

    if (!ticks_path.empty()) {
        const auto ticks = io::read_ticks_csv(ticks_path);
        const auto rv = realized_vol(ticks.t, ticks.s, window);
        double mean_rv = 0.0;
        for (double v : rv.rv) mean_rv += v;
        mean_rv /= static_cast<double>(rv.rv.size());
        double var_rv = 0.0;
        for (double v : rv.rv) var_rv += (v - mean_rv) * (v - mean_rv);
        const double se = rv.rv.size() > 1 ? std::sqrt(var_rv / (rv.rv.size() - 1.0) /
                                                       static_cast<double>(rv.rv.size()))
                                           : 0.0;
        summary.push_back({"rv_mean", mean_rv, mean_rv - 1.96 * se, mean_rv + 1.96 * se,
                           static_cast<long>(rv.rv.size())});
        if (rv.rv.size() >= 512) {
            const double h = roughness(rv);
            summary.push_back({"roughness", h, 0.0, 0.0, static_cast<long>(rv.rv.size())});
        } else {
            std::fprintf(stderr, "note: %zu rv windows < 512, roughness skipped\n", rv.rv.size());
        }
        std::ostringstream rvcsv;
        rvcsv << "t,rv\n";
        for (std::size_t i = 0; i < rv.rv.size(); ++i)
            rvcsv << rv.times[i] << ',' << rv.rv[i] << "\n";
        io::write_text((out_dir / "realized-vol.csv").string(), rvcsv.str());
    }

    if (!depth_path.empty()) {
        const auto recs = io::read_depth_csv(depth_path);
        if (!recs.empty()) {
            // bin records onto a symmetric grid and build one snapshot per stamp
            double span = 0.0;
            for (const auto& r : recs) span = std::max(span, std::fabs(r.x_offset));
            const std::size_t M = 100;
            BookSeries series;
            BookGrid proto = make_book_grid(std::max(span, 1e-9), M);
            series.x = proto.x;
            const double dx = proto.dx();
            double cur_t = recs.front().t;
            std::vector<double> snap(M + 1, 0.0);
            auto flush = [&]() {
                series.times.push_back(cur_t);
                series.snapshots.push_back(snap);
                snap.assign(M + 1, 0.0);
            };
            for (const auto& r : recs) {
                if (r.t != cur_t) {
                    flush();
                    cur_t = r.t;
                }
                auto idx = static_cast<std::ptrdiff_t>(std::llround((r.x_offset + span) / dx));
                idx = std::clamp<std::ptrdiff_t>(idx, 0, static_cast<std::ptrdiff_t>(M));
                snap[static_cast<std::size_t>(idx)] += r.ask ? r.size : -r.size;
            }
            flush();
            const auto prof = depth_profile(series);
            summary.push_back({"depth_peak_location_variance", prof.peak_location_variance, 0.0,
                               0.0, static_cast<long>(series.snapshots.size())});
            std::ostringstream pcsv;
            pcsv << "x,mean_abs_u\n";
            for (std::size_t i = 0; i < prof.x.size(); ++i)
                pcsv << prof.x[i] << ',' << prof.mean_abs_u[i] << "\n";
            io::write_text((out_dir / "depth-profile.csv").string(), pcsv.str());
        }
    }

    io::write_summary_ndjson((out_dir / "summary.ndjson").string(), summary);
    json m;
    m["tool"] = "roughlob";
    m["version"] = ROUGHLOB_VERSION;
    m["git_rev"] = ROUGHLOB_GIT_REV;
    m["subcommand"] = "analyze";
    m["ticks"] = ticks_path;
    m["depth"] = depth_path;
    m["window"] = window;
    m["created"] = now_iso8601();
    io::write_text((out_dir / "manifest.json").string(), m.dump(2) + "\n");
    for (const auto& r : summary)
        std::printf("{\"metric\":\"%s\",\"value\":%.17g,\"n\":%ld}\n", r.metric.c_str(), r.value,
                    r.n);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"roughlob: limit-order-book simulation with rough volatility"};
    app.set_version_flag("--version", std::string(ROUGHLOB_VERSION) + " (" ROUGHLOB_GIT_REV ")");
    app.require_subcommand(1);

    std::string scenario_path, out_dir = "out", from_manifest;
    std::uint64_t seed = 0;
    bool seed_set = false;
    std::size_t replicates = 0;
    int threads = -1;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--scenario", scenario_path, "scenario JSON path");
        cmd->add_option("--out", out_dir, "output directory");
        cmd->add_option("--seed", seed, "master seed override")->each([&](const std::string&) {
            seed_set = true;
        });
        cmd->add_option("--replicates", replicates, "Monte Carlo replicate override");
        cmd->add_option("--threads", threads, "worker threads (0 = hardware)");
    };

    auto* verify = app.add_subcommand("verify", "run the closed-form verification suite");
    std::string inject_fault, verify_out;
    verify->add_option("--inject-fault", inject_fault,
                       "perturb a formula to demonstrate the oracle catches it (eigen)");
    verify->add_option("--out", verify_out, "also write the NDJSON report here");

    auto* simulate = app.add_subcommand("simulate", "run a pipeline stage");
    std::string stage;
    simulate->add_option("stage", stage, "hawkes|volterra|book|price|coupled")->required();
    add_common(simulate);
    simulate->add_option("--from-manifest", from_manifest,
                         "re-run bit-identically from a manifest (ignores --scenario)");

    auto* study = app.add_subcommand("scaling-study", "convergence diagnostics across T");
    add_common(study);
    std::size_t event_budget = 50'000'000;
    study->add_option("--event-budget", event_budget, "stop after this many simulated events");

    auto* analyze = app.add_subcommand("analyze", "analytics over tick/depth CSV files");
    std::string ticks_path, depth_path;
    double window = 60.0;
    analyze->add_option("--ticks", ticks_path, "tick CSV (timestamp, price)");
    analyze->add_option("--depth", depth_path, "depth CSV (timestamp, x_offset, size, side)");
    analyze->add_option("--window", window, "realized-vol window in seconds");
    analyze->add_option("--out", out_dir, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) return cmd_verify(inject_fault, verify_out);

        Scenario s;
        std::string stage_final = stage;
        if (!from_manifest.empty()) {
            std::ifstream in(from_manifest);
            if (!in) fail(errc::io_error, "cannot open manifest " + from_manifest);
            json m = json::parse(in, nullptr, true);
            s = parse_scenario(m.at("scenario").dump());
            if (simulate->parsed()) stage_final = m.at("subcommand").get<std::string>();
        } else if (!scenario_path.empty()) {
            s = load_scenario(scenario_path);
        }
        if (seed_set) s.run.master_seed = seed;
        if (replicates > 0) s.run.replicates = replicates;
        if (threads >= 0)
            par::set_threads(threads);
        else
            par::set_threads(s.run.threads);

        if (simulate->parsed()) return cmd_simulate(stage_final, s, out_dir);
        if (study->parsed()) return cmd_scaling_study(s, out_dir, event_budget);
        if (analyze->parsed()) return cmd_analyze(ticks_path, depth_path, window, out_dir);
    } catch (const model_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return (e.code == errc::config_error || e.code == errc::io_error) ? 2 : 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    }
    return 0;
}
