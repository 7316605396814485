#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "roughlob/book.hpp"
#include "roughlob/price.hpp"
#include "roughlob/scaling.hpp"
#include "roughlob/volterra_y.hpp"

namespace roughlob {

// One experiment definition. Parsing is strict: unknown fields are rejected
// with the offending path, and parse(serialize(x)) == x.
struct Scenario {
    std::string name = "default";

    struct Betas {
        double beta1 = 0.6, beta2 = 0.3, beta3 = 0.5;
        bool operator==(const Betas&) const = default;
    } betas;

    struct Kernel {
        std::string family = "power_law"; // power_law | exponential
        double alpha = 0.7;
        std::optional<double> scale;      // absent -> critical scale alpha/lambda1
        double rate = 1.0;                // exponential only
        bool operator==(const Kernel&) const = default;
    } kernel;

    struct Scaling {
        std::vector<double> t_list = {100.0, 1000.0, 10000.0};
        double a_bar = 1.0;
        double mu_bar = 0.2;
        std::size_t grid_points = 32;
        bool operator==(const Scaling&) const = default;
    } scaling;

    struct Volterra {
        double horizon = 1.0;
        std::size_t n_steps = 4096;
        std::string form = "fractional"; // fractional | mittag_leffler
        std::optional<double> theta;     // absent -> ones'v1
        std::optional<double> nu_bar;    // absent -> from (a_bar, kernel)
        std::optional<double> kappa_bar; // absent -> from (a_bar, mu_bar, v1)
        bool operator==(const Volterra&) const = default;
    } volterra;

    struct Book {
        double eta = 0.1, beta = 0.3, zeta = 0.5;
        double L = 1.0, iota = 0.1, q0 = 0.7, c = 1.0;
        double j0 = 1.0, x_j = 0.3, g_gain = 1.0, w_scale = 0.25;
        std::size_t nodes = 400; // grid cells M
        double u0_amplitude = 4.0;
        std::optional<std::string> u0_csv;
        double y_cap = 0.0; // 0 disables the tau_k split
        bool pin_zero = false;
        bool operator==(const Book&) const = default;
    } book;

    struct Price {
        double delta = 0.01, c_a = 1.0, c_b = 1.0, s0 = 100.0;
        bool share_w = true;            // price consumes the book's dW
        double w_b1_correlation = 0.0;  // correlation between W and B1
        bool operator==(const Price&) const = default;
    } price;

    struct Hawkes {
        double horizon = 100.0;
        double a = 1.0;   // kernel multiplier
        double mu = 0.5;  // constant baseline per component
        bool operator==(const Hawkes&) const = default;
    } hawkes;

    struct Run {
        std::uint64_t master_seed = 1;
        std::size_t replicates = 4;
        double horizon = 1.0;
        double dt = 0.0005;
        std::size_t snapshot_stride = 64;
        int threads = 0;
        bool operator==(const Run&) const = default;
    } run;

    bool operator==(const Scenario&) const = default;

    // resolved model objects
    BetaParams resolved_betas() const;
    Phi0Matrix resolved_phi0() const;
    KernelSpec resolved_kernel() const;
    VolterraParams resolved_volterra() const;
    BookParams resolved_book_params() const;
    BookGrid resolved_initial_book() const;
    PriceParams resolved_price_params() const;
};

Scenario parse_scenario(const std::string& json_text);
Scenario load_scenario(const std::string& path);
std::string serialize_scenario(const Scenario& s);

} // namespace roughlob
