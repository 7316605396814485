#include "roughlob/scenario.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "roughlob/csv.hpp"

namespace roughlob {

using nlohmann::json;

namespace {

void check_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
    if (!j.is_object()) fail(errc::config_error, where + " must be an object");
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key()))
            fail(errc::config_error, "unknown field '" + it.key() + "' in " + where);
}

template <class T>
void get_to(const json& j, const char* key, T& out) {
    if (j.contains(key)) j.at(key).get_to(out);
}

template <class T>
void get_opt(const json& j, const char* key, std::optional<T>& out) {
    if (j.contains(key) && !j.at(key).is_null()) out = j.at(key).get<T>();
}

} // namespace

Scenario parse_scenario(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const std::exception& e) {
        fail(errc::config_error, std::string("scenario is not valid JSON: ") + e.what());
    }
    Scenario s;
    check_keys(j, {"name", "betas", "kernel", "scaling", "volterra", "book", "price", "hawkes",
                   "run"},
               "scenario");
    get_to(j, "name", s.name);
    if (j.contains("betas")) {
        const auto& b = j["betas"];
        check_keys(b, {"beta1", "beta2", "beta3"}, "betas");
        get_to(b, "beta1", s.betas.beta1);
        get_to(b, "beta2", s.betas.beta2);
        get_to(b, "beta3", s.betas.beta3);
    }
    if (j.contains("kernel")) {
        const auto& k = j["kernel"];
        check_keys(k, {"family", "alpha", "scale", "rate"}, "kernel");
        get_to(k, "family", s.kernel.family);
        get_to(k, "alpha", s.kernel.alpha);
        get_opt(k, "scale", s.kernel.scale);
        get_to(k, "rate", s.kernel.rate);
        if (s.kernel.family != "power_law" && s.kernel.family != "exponential")
            fail(errc::config_error, "kernel.family must be power_law or exponential");
    }
    if (j.contains("scaling")) {
        const auto& v = j["scaling"];
        check_keys(v, {"T_list", "a_bar", "mu_bar", "grid_points"}, "scaling");
        get_to(v, "T_list", s.scaling.t_list);
        get_to(v, "a_bar", s.scaling.a_bar);
        get_to(v, "mu_bar", s.scaling.mu_bar);
        get_to(v, "grid_points", s.scaling.grid_points);
    }
    if (j.contains("volterra")) {
        const auto& v = j["volterra"];
        check_keys(v, {"horizon", "n_steps", "form", "theta", "nu_bar", "kappa_bar"}, "volterra");
        get_to(v, "horizon", s.volterra.horizon);
        get_to(v, "n_steps", s.volterra.n_steps);
        get_to(v, "form", s.volterra.form);
        get_opt(v, "theta", s.volterra.theta);
        get_opt(v, "nu_bar", s.volterra.nu_bar);
        get_opt(v, "kappa_bar", s.volterra.kappa_bar);
        if (s.volterra.form != "fractional" && s.volterra.form != "mittag_leffler")
            fail(errc::config_error, "volterra.form must be fractional or mittag_leffler");
    }
    if (j.contains("book")) {
        const auto& b = j["book"];
        check_keys(b,
                   {"eta", "beta", "zeta", "L", "iota", "q0", "c", "j0", "x_j", "g_gain",
                    "w_scale", "nodes", "u0_amplitude", "u0_csv", "y_cap", "pin_zero"},
                   "book");
        get_to(b, "eta", s.book.eta);
        get_to(b, "beta", s.book.beta);
        get_to(b, "zeta", s.book.zeta);
        get_to(b, "L", s.book.L);
        get_to(b, "iota", s.book.iota);
        get_to(b, "q0", s.book.q0);
        get_to(b, "c", s.book.c);
        get_to(b, "j0", s.book.j0);
        get_to(b, "x_j", s.book.x_j);
        get_to(b, "g_gain", s.book.g_gain);
        get_to(b, "w_scale", s.book.w_scale);
        get_to(b, "nodes", s.book.nodes);
        get_to(b, "u0_amplitude", s.book.u0_amplitude);
        get_opt(b, "u0_csv", s.book.u0_csv);
        get_to(b, "y_cap", s.book.y_cap);
        get_to(b, "pin_zero", s.book.pin_zero);
    }
    if (j.contains("price")) {
        const auto& p = j["price"];
        check_keys(p, {"delta", "C_a", "C_b", "S0", "share_w", "w_b1_correlation"}, "price");
        get_to(p, "delta", s.price.delta);
        get_to(p, "C_a", s.price.c_a);
        get_to(p, "C_b", s.price.c_b);
        get_to(p, "S0", s.price.s0);
        get_to(p, "share_w", s.price.share_w);
        get_to(p, "w_b1_correlation", s.price.w_b1_correlation);
    }
    if (j.contains("hawkes")) {
        const auto& h = j["hawkes"];
        check_keys(h, {"horizon", "a", "mu"}, "hawkes");
        get_to(h, "horizon", s.hawkes.horizon);
        get_to(h, "a", s.hawkes.a);
        get_to(h, "mu", s.hawkes.mu);
    }
    if (j.contains("run")) {
        const auto& r = j["run"];
        check_keys(r, {"master_seed", "replicates", "horizon", "dt", "snapshot_stride", "threads"},
                   "run");
        get_to(r, "master_seed", s.run.master_seed);
        get_to(r, "replicates", s.run.replicates);
        get_to(r, "horizon", s.run.horizon);
        get_to(r, "dt", s.run.dt);
        get_to(r, "snapshot_stride", s.run.snapshot_stride);
        get_to(r, "threads", s.run.threads);
    }
    return s;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::io_error, "cannot open scenario " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_scenario(ss.str());
}

std::string serialize_scenario(const Scenario& s) {
    json j;
    j["name"] = s.name;
    j["betas"] = {{"beta1", s.betas.beta1}, {"beta2", s.betas.beta2}, {"beta3", s.betas.beta3}};
    j["kernel"] = {{"family", s.kernel.family}, {"alpha", s.kernel.alpha}, {"rate", s.kernel.rate}};
    if (s.kernel.scale) j["kernel"]["scale"] = *s.kernel.scale;
    j["scaling"] = {{"T_list", s.scaling.t_list},
                    {"a_bar", s.scaling.a_bar},
                    {"mu_bar", s.scaling.mu_bar},
                    {"grid_points", s.scaling.grid_points}};
    j["volterra"] = {{"horizon", s.volterra.horizon},
                     {"n_steps", s.volterra.n_steps},
                     {"form", s.volterra.form}};
    if (s.volterra.theta) j["volterra"]["theta"] = *s.volterra.theta;
    if (s.volterra.nu_bar) j["volterra"]["nu_bar"] = *s.volterra.nu_bar;
    if (s.volterra.kappa_bar) j["volterra"]["kappa_bar"] = *s.volterra.kappa_bar;
    j["book"] = {{"eta", s.book.eta},       {"beta", s.book.beta},
                 {"zeta", s.book.zeta},     {"L", s.book.L},
                 {"iota", s.book.iota},     {"q0", s.book.q0},
                 {"c", s.book.c},           {"j0", s.book.j0},
                 {"x_j", s.book.x_j},       {"g_gain", s.book.g_gain},
                 {"w_scale", s.book.w_scale}, {"nodes", s.book.nodes},
                 {"u0_amplitude", s.book.u0_amplitude}, {"y_cap", s.book.y_cap},
                 {"pin_zero", s.book.pin_zero}};
    if (s.book.u0_csv) j["book"]["u0_csv"] = *s.book.u0_csv;
    j["price"] = {{"delta", s.price.delta},
                  {"C_a", s.price.c_a},
                  {"C_b", s.price.c_b},
                  {"S0", s.price.s0},
                  {"share_w", s.price.share_w},
                  {"w_b1_correlation", s.price.w_b1_correlation}};
    j["hawkes"] = {{"horizon", s.hawkes.horizon}, {"a", s.hawkes.a}, {"mu", s.hawkes.mu}};
    j["run"] = {{"master_seed", s.run.master_seed},
                {"replicates", s.run.replicates},
                {"horizon", s.run.horizon},
                {"dt", s.run.dt},
                {"snapshot_stride", s.run.snapshot_stride},
                {"threads", s.run.threads}};
    return j.dump(2) + "\n";
}

BetaParams Scenario::resolved_betas() const {
    return validate_betas(betas.beta1, betas.beta2, betas.beta3);
}

Phi0Matrix Scenario::resolved_phi0() const { return build_phi0(resolved_betas()); }

KernelSpec Scenario::resolved_kernel() const {
    if (kernel.family == "exponential")
        return make_exponential_kernel(kernel.scale.value_or(1.0), kernel.rate);
    if (kernel.scale) return make_power_law_kernel(*kernel.scale, kernel.alpha);
    return critical_kernel(resolved_betas(), kernel.alpha);
}

VolterraParams Scenario::resolved_volterra() const {
    const Phi0Matrix p = resolved_phi0();
    VolterraParams vp;
    if (volterra.theta && volterra.nu_bar && volterra.kappa_bar) {
        vp.alpha = kernel.alpha;
        vp.theta = *volterra.theta;
        vp.nu_bar = *volterra.nu_bar;
        vp.kappa_bar = *volterra.kappa_bar;
    } else {
        vp = volterra_from_model(p, resolved_kernel(), scaling.a_bar, scaling.mu_bar,
                                 volterra.horizon, volterra.n_steps);
        if (volterra.theta) vp.theta = *volterra.theta;
        if (volterra.nu_bar) vp.nu_bar = *volterra.nu_bar;
        if (volterra.kappa_bar) vp.kappa_bar = *volterra.kappa_bar;
    }
    vp.horizon = volterra.horizon;
    vp.n_steps = volterra.n_steps;
    return vp;
}

BookParams Scenario::resolved_book_params() const {
    BookParams p;
    p.eta = book.eta;
    p.beta = book.beta;
    p.zeta = book.zeta;
    p.L = book.L;
    p.iota = book.iota;
    p.q0 = book.q0;
    p.c = book.c;
    p.y_cap = book.y_cap;
    p.pin_zero = book.pin_zero;
    set_default_terms(p, book.j0, book.x_j, book.g_gain, book.w_scale);
    return p;
}

BookGrid Scenario::resolved_initial_book() const {
    if (book.u0_csv) {
        const auto pts = io::read_profile_csv(*book.u0_csv);
        BookGrid g = make_book_grid(book.L, book.nodes);
        // linear interpolation onto the grid, zero outside the sample range
        for (std::size_t i = 1; i + 1 < g.x.size(); ++i) {
            const double x = g.x[i];
            double u = 0.0;
            for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
                if (x >= pts[k].first && x <= pts[k + 1].first) {
                    const double w = (x - pts[k].first) / (pts[k + 1].first - pts[k].first);
                    u = pts[k].second + w * (pts[k + 1].second - pts[k].second);
                    break;
                }
            }
            g.u[i] = u;
        }
        return g;
    }
    const double L = book.L, amp = book.u0_amplitude;
    return make_book_grid(book.L, book.nodes, [L, amp](double x) {
        return amp * x * (L - std::fabs(x)) / (L * L);
    });
}

PriceParams Scenario::resolved_price_params() const {
    PriceParams p;
    p.delta = price.delta;
    p.C_a = price.c_a;
    p.C_b = price.c_b;
    p.S0 = price.s0;
    return p;
}

} // namespace roughlob
