// Copyright 2026 The allpass Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include <fmt/core.h>

#include "allpass/cmt.h"
#include "allpass/commands.h"
#include "allpass/config.h"
#include "allpass/device.h"
#include "allpass/metrics.h"
#include "allpass/netphys.h"
#include "allpass/transmon.h"
#include "allpass/yieldmc.h"

namespace {

using namespace allpass;
using Clock = std::chrono::steady_clock;
constexpr double kPi = std::numbers::pi;

struct Outcome {
    bool pass;
    std::string detail;
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

bool within_rel(double value, double target, double rel) { return std::abs(value - target) <= rel * std::abs(target); }

std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        v[static_cast<size_t>(i)] = a + (b - a) * i / (n - 1);
    }
    return v;
}

Outcome spread_ratio() {
    const double s = spread_intentional_mismatch(std::pow(10.0, -16.0 / 20.0));
    return {std::abs(s - 1.895) <= 0.005, fmt::format("spread at -16 dB = {:.5f} (1.895 +/- 0.005)", s)};
}

Outcome spread_identity() {
    const auto grid = linspace(-30.0, 0.0, 121);
    double worst = 0.0;
    bool ok = grid.size() == 121;
    for (const SpreadRow &row : spread_curves(grid)) {
        const double sq = row.spread_matched * row.spread_matched;
        if (row.spread_intentional == sq) {
            continue;
        }
        const double err = std::abs(row.spread_intentional - sq);
        worst = std::max(worst, err);
        ok = ok && err <= 1e-12;
    }
    return {ok, fmt::format("max |eq1 - eq2^2| over 121 dB points = {:.3g} (<= 1e-12)", worst)};
}

Outcome yield_crossing() {
    const auto start = Clock::now();
    YieldConfig cfg;
    cfg.sigma_rel = 0.015;
    cfg.tolerance_rel = 0.30;
    cfg.resonators_per_half_lambda = 2;
    cfg.trials = 100000;
    std::vector<int> ns(29);
    std::iota(ns.begin(), ns.end(), 2);
    const std::vector<double> tol{0.30};
    const auto curve = yield_curve(cfg, ns, tol, 1);
    const double elapsed = seconds_since(start);
    int first_below = -1;
    for (const YieldPoint &p : curve) {
        if (p.probability < 0.5) {
            first_below = p.n_resonators;
            break;
        }
    }
    const bool ok = first_below >= 10 && first_below <= 20 && elapsed < 60.0;
    return {ok, fmt::format("p < 0.5 first at n = {} (10..20), {:.1f} s single-threaded (< 60 s)", first_below, elapsed)};
}

Outcome chi_value() {
    const double chi = dispersive_chi(93.4, -1670.4, 201.0);
    return {within_rel(chi, -0.55, 0.05), fmt::format("chi01 = {:.4f} MHz (-0.55 +/- 5%)", chi)};
}

Outcome purcell() {
    const double t1 = purcell_t1(17.1, 93.4, -1670.4);
    const double product = 1.5 * 47.0;
    const bool ok = within_rel(t1, 1.5, 0.10) && within_rel(product, 70.0, 0.05);
    return {ok, fmt::format("T1 = {:.4f} us (1.5 +/- 10%); 1.5 us x 47 = {:.1f} us (70 +/- 5%)", t1, product)};
}

Outcome operating_point() {
    const OperatingPoint op = s21_at_operating_point(0.038, 1.0);
    const double sq = op.s21_mag * op.s21_mag;
    return {std::abs(sq - 0.977) <= 0.002, fmt::format("|S21|^2 at chi/kappa = 0.038 is {:.5f} (0.977 +/- 0.002)", sq)};
}

Outcome table_two() {
    const auto start = Clock::now();
    AllPassModel model = fitted_device();
    model.package_loss_db = 0.0;
    const auto grid = linspace(7700.0, 7820.0, 12001);
    const double target_min[3] = {-0.85, -1.13, -1.53};
    const double target_phase[3] = {202.0, 188.0, 179.0};
    bool ok = true;
    std::string detail;
    for (int s = 0; s < 3; ++s) {
        const SParamTrace trace = s21_trace(model, s, grid);
        double min_db = 0.0;
        for (auto z : trace.s21) {
            min_db = std::min(min_db, 20.0 * std::log10(std::abs(z)));
        }
        const auto ro = s21_trace(model, s, std::vector<double>{7760.2}).s21[0];
        double phase = std::arg(ro) * 180.0 / kPi;
        if (phase < 0.0) {
            phase += 360.0;
        }
        const bool min_ok = std::abs(min_db - target_min[s]) <= 0.2;
        const bool phase_ok = std::abs(phase - target_phase[s]) <= 6.0;
        ok = ok && min_ok && phase_ok;
        detail += fmt::format(
            "state {}: min {:.2f} dB ({:.2f}){} phase {:.1f} deg ({:.0f}){}; ", s, min_db, target_min[s],
            min_ok ? "" : " X", phase, target_phase[s], phase_ok ? "" : " X");
    }
    const double elapsed = seconds_since(start);
    ok = ok && elapsed < 10.0;
    detail += fmt::format("{:.2f} s (< 10 s)", elapsed);
    return {ok, detail};
}

Outcome dispersive_table() {
    const DispersivePulls pulls = dispersive_pulls(fitted_device());
    const double s01 = pulls.resonator_shift_01_mhz();
    const double s02 = pulls.resonator_shift_02_mhz();
    const bool ok = within_rel(s01, -1.10, 0.10) && within_rel(s02, -1.86, 0.10) &&
                    std::abs(pulls.odd_shift_01_mhz) < 0.05 && std::abs(pulls.odd_shift_02_mhz) < 0.05;
    return {ok, fmt::format(
                    "2chi01 = {:.3f} (-1.10 +/- 10%), 2chi02 = {:.3f} (-1.86 +/- 10%), odd pulls {:.2e}, {:.2e} (< 0.05)",
                    s01, s02, pulls.odd_shift_01_mhz, pulls.odd_shift_02_mhz)};
}

Outcome unitarity() {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> freq(7600.0, 7900.0);
    std::uniform_real_distribution<double> width(0.0, 40.0);
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const ModePair modes{freq(rng), freq(rng), width(rng), width(rng)};
        const double w = freq(rng);
        const double sum = std::norm(s21_two_mode(w, modes)) + std::norm(s11_two_mode(w, modes));
        worst = std::max(worst, std::abs(sum - 1.0));
    }
    return {worst <= 1e-9, fmt::format("max ||S11|^2 + |S21|^2 - 1| over 1e4 samples = {:.3g} (<= 1e-9)", worst)};
}

Outcome degeneracy() {
    const double w_deg = 7756.4;
    const ModeLinewidths widths = mode_linewidths(14.5, 1.5 * kPi);
    const ModePair modes{w_deg, w_deg, widths.kappa_e_mhz, widths.kappa_o_mhz};
    const double s21 = std::abs(s21_two_mode(w_deg, modes));
    const double s11 = std::abs(s11_two_mode(w_deg, modes));
    const bool ok = std::abs(s21 - 1.0) <= 1e-12 && s11 <= 1e-12;
    return {ok, fmt::format("|S21| - 1 = {:.3g}, |S11| = {:.3g} (both <= 1e-12)", s21 - 1.0, s11)};
}

Outcome perturbation() {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        AllPassModel m;
        m.omega_r_mhz = 6000.0 + 2000.0 * u(rng);
        const double delta = -3000.0 + 2200.0 * u(rng);
        m.transmon.e_c_mhz = 150.0 + 150.0 * u(rng);
        m.transmon.omega_01_mhz = m.omega_r_mhz + delta;
        m.g_mhz = (0.01 + 0.04 * u(rng)) * std::abs(delta);
        m.g_total_mhz = 0.0;
        const double numeric = dispersive_pulls(m).chi01_mhz();
        const double analytic = dispersive_chi(m.g_mhz, delta, m.transmon.e_c_mhz);
        worst = std::max(worst, std::abs(numeric / analytic - 1.0));
    }
    return {worst <= 0.02, fmt::format("max relative chi error over 100 sets = {:.4f} (<= 0.02)", worst)};
}

SParamTrace synthetic_trace(const AllPassModel &truth, const std::vector<double> &grid, double sigma, std::uint64_t seed) {
    SParamTrace trace = s21_trace(truth, 0, grid);
    trace.s11.reset();
    if (sigma > 0.0) {
        std::mt19937_64 rng(seed);
        std::normal_distribution<double> noise(0.0, sigma);
        for (auto &z : trace.s21) {
            z += std::complex<double>(noise(rng), noise(rng));
        }
    }
    return trace;
}

Outcome fit_recovery() {
    AllPassModel truth = fitted_device();
    truth.package_loss_db = 0.0;
    const auto grid = RunConfig{}.s21_grid.values();
    const FitBounds bounds = default_fit_bounds(truth);
    const FitInit init{1.5 * kPi, 0.0, 0.0};

    auto rel_err = [&](const FitResult &r) {
        return std::max(std::abs(r.phi_rad / truth.phi_rad - 1.0), std::abs(r.g_total_mhz / truth.g_total_mhz - 1.0));
    };
    const double clean = rel_err(fit_model(synthetic_trace(truth, grid, 0.0, 0), truth, bounds, init));
    double noisy = 0.0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        noisy = std::max(noisy, rel_err(fit_model(synthetic_trace(truth, grid, 0.01, seed), truth, bounds, init)));
    }
    const bool ok = clean <= 1e-3 && noisy <= 1e-2;
    return {ok, fmt::format("noiseless error {:.2e} (<= 1e-3), worst of 20 noisy seeds {:.2e} (<= 1e-2)", clean, noisy)};
}

Outcome flux_point() {
    const double flux = allpass_flux_point(fitted_device(), fitted_squid());
    return {flux >= 0.25 && flux <= 0.33, fmt::format("all-pass flux = {:.4f} (in [0.25, 0.33])", flux)};
}

Outcome fidelity() {
    const double f1 = assignment_fidelity(0.030, 0.008);
    const double f2 = assignment_fidelity(0.012, 0.007);
    const bool ok = std::abs(f1 - 0.981) <= 1e-12 && std::abs(f2 - 0.9905) <= 1e-12;
    return {ok, fmt::format("F = {:.12g} (0.981), {:.12g} (0.9905)", f1, f2)};
}

Outcome determinism() {
    RunConfig one;
    one.yield.trials = 20000;
    RunConfig many = one;
    many.threads = 4;
    const Fig2Output a = cmd_fig2(one);
    const Fig2Output b = cmd_fig2(one);
    const Fig2Output c = cmd_fig2(many);
    const bool fig2_ok = a.histogram_csv == b.histogram_csv && a.yield_csv == b.yield_csv &&
                         a.histogram_csv == c.histogram_csv && a.yield_csv == c.yield_csv;

    AllPassModel truth = fitted_device();
    truth.package_loss_db = 0.0;
    const SParamTrace trace = synthetic_trace(truth, linspace(7720.0, 7800.0, 401), 0.01, 77);
    const std::string f1 = cmd_fit(trace, one).dump();
    const std::string f2 = cmd_fit(trace, one).dump();
    const std::string f3 = cmd_fit(trace, many).dump();
    const bool fit_ok = f1 == f2 && f1 == f3;
    return {fig2_ok && fit_ok, fmt::format("fig2 identical: {}, fit identical: {} (repeat and 1 vs 4 threads)",
                                           fig2_ok ? "yes" : "no", fit_ok ? "yes" : "no")};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char *, std::function<Outcome()>>> criteria{
        {"spread ratio", spread_ratio},
        {"spread identity", spread_identity},
        {"yield crossing", yield_crossing},
        {"dispersive shift", chi_value},
        {"purcell lifetime", purcell},
        {"operating point", operating_point},
        {"state traces", table_two},
        {"dispersive table", dispersive_table},
        {"unitarity", unitarity},
        {"all-pass degeneracy", degeneracy},
        {"perturbation cross-check", perturbation},
        {"fit recovery", fit_recovery},
        {"flux point", flux_point},
        {"fidelity arithmetic", fidelity},
        {"determinism", determinism},
    };
    int failures = 0;
    int index = 0;
    for (const auto &[name, run] : criteria) {
        ++index;
        Outcome out;
        try {
            out = run();
        } catch (const std::exception &e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        failures += out.pass ? 0 : 1;
        fmt::print("{} {:2d} {}: {}\n", out.pass ? "PASS" : "FAIL", index, name, out.detail);
        std::fflush(stdout);
    }
    fmt::print("{} of {} criteria passed\n", index - failures, index);
    return failures == 0 ? 0 : 1;
}
