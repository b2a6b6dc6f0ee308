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

#include "allpass/commands.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "allpass/csv.h"
#include "allpass/metrics.h"
#include "allpass/netphys.h"
#include "allpass/parallel.h"
#include "allpass/transmon.h"
#include "allpass/yieldmc.h"

namespace allpass {

namespace {

double phase_deg_0_360(std::complex<double> z) {
    double deg = std::arg(z) * 180.0 / std::numbers::pi;
    if (deg < 0.0) {
        deg += 360.0;
    }
    // arg of a value just below the positive real axis rounds to exactly 360.
    return deg >= 360.0 ? 0.0 : deg;
}

double to_db(std::complex<double> z) { return 20.0 * std::log10(std::abs(z)); }

}  // namespace

std::string cmd_fig1b(const RunConfig &cfg) {
    cfg.validate();
    const auto grid = cfg.gamma_db_grid.values();
    std::string out = "gamma_out_db,spread_eq1,spread_eq2\n";
    for (const SpreadRow &row : spread_curves(grid)) {
        out += csv_row({row.gamma_out_db, row.spread_intentional, row.spread_matched});
    }
    return out;
}

Fig2Output cmd_fig2(const RunConfig &cfg) {
    cfg.validate();
    Fig2Output out;

    out.histogram_csv = "position,kappa_over_kappa0,count\n";
    const int bins = cfg.histogram_bins;
    for (double x : cfg.histogram_positions) {
        const auto samples =
            kappa_samples_at_position(x, cfg.yield.sigma_rel, cfg.yield.trials, cfg.yield.seed, cfg.threads);
        const auto [lo_it, hi_it] = std::minmax_element(samples.begin(), samples.end());
        double lo = *lo_it;
        double hi = *hi_it;
        if (hi - lo < 1e-12) {
            lo -= 0.5e-6;
            hi += 0.5e-6;
        }
        const double width = (hi - lo) / bins;
        std::vector<std::int64_t> counts(static_cast<size_t>(bins), 0);
        for (double v : samples) {
            const int b = std::min(bins - 1, static_cast<int>((v - lo) / width));
            ++counts[static_cast<size_t>(b)];
        }
        for (int b = 0; b < bins; ++b) {
            out.histogram_csv +=
                csv_row({x, lo + (b + 0.5) * width, static_cast<double>(counts[static_cast<size_t>(b)])});
        }
    }

    std::vector<int> n_values(static_cast<size_t>(cfg.yield_max_resonators));
    std::iota(n_values.begin(), n_values.end(), 1);
    out.yield_csv = "n_resonators,tolerance,probability\n";
    for (const YieldPoint &p : yield_curve(cfg.yield, n_values, cfg.yield_tolerances, cfg.threads)) {
        out.yield_csv += csv_row({static_cast<double>(p.n_resonators), p.tolerance_rel, p.probability});
    }
    return out;
}

std::string cmd_s21(const RunConfig &cfg, int qubit_state) {
    cfg.validate();
    const auto grid = cfg.s21_grid.values();
    const SParamTrace trace = s21_trace(cfg.effective_device(), qubit_state, grid);
    std::string out = "freq_mhz,s21_re,s21_im,s21_db,s21_phase_deg\n";
    for (size_t i = 0; i < trace.freq_mhz.size(); ++i) {
        const auto s = trace.s21[i];
        out += csv_row({trace.freq_mhz[i], s.real(), s.imag(), to_db(s), phase_deg_0_360(s)});
    }
    return out;
}

std::string cmd_fluxmap(const RunConfig &cfg) {
    cfg.validate();
    const auto fluxes = cfg.flux_grid.values();
    const auto freqs = cfg.fluxmap_freq_grid.values();
    const AllPassModel base = cfg.effective_device();

    std::vector<std::string> rows(fluxes.size());
    parallel_for(static_cast<std::int64_t>(fluxes.size()), cfg.threads, [&](std::int64_t begin, std::int64_t end) {
        for (std::int64_t i = begin; i < end; ++i) {
            SquidSpec squid = cfg.squid;
            squid.flux = fluxes[static_cast<size_t>(i)];
            AllPassModel model = base;
            model.transmon.omega_01_mhz = qubit_freq_from_flux(squid);
            model.transmon.e_c_mhz = squid.e_c_mhz;
            const SParamTrace trace = s21_trace(model, 0, freqs);
            std::string block;
            for (size_t k = 0; k < freqs.size(); ++k) {
                block += csv_row({squid.flux, freqs[k], to_db(trace.s21[k])});
            }
            rows[static_cast<size_t>(i)] = std::move(block);
        }
    });

    std::string out = "flux,freq_mhz,s21_db\n";
    for (const auto &block : rows) {
        out += block;
    }
    return out;
}

std::string cmd_chikappa(const RunConfig &cfg) {
    cfg.validate();
    std::vector<std::pair<double, bool>> points;
    for (double x : cfg.chikappa_grid.values()) {
        points.emplace_back(x, false);
    }
    points.emplace_back(cfg.chikappa_marker, true);
    std::stable_sort(points.begin(), points.end(), [](const auto &a, const auto &b) { return a.first < b.first; });

    std::string out = "chi_over_kappa,s21_mag,s21_mag_sq,marker\n";
    for (const auto &[x, marker] : points) {
        const OperatingPoint op = s21_at_operating_point(x, 1.0);
        out += csv_row({x, op.s21_mag, op.s21_mag * op.s21_mag, marker ? 1.0 : 0.0});
    }
    return out;
}

nlohmann::json cmd_fit(const SParamTrace &trace, const RunConfig &cfg) {
    cfg.validate();
    FitOptions options;
    options.qubit_state = cfg.fit_qubit_state;
    options.threads = cfg.threads;
    const FitResult fit = fit_model(trace, cfg.device, cfg.fit_bounds, cfg.fit_init, options);
    return nlohmann::json{
        {"phi_rad", fit.phi_rad},
        {"g_total_mhz", fit.g_total_mhz},
        {"loss_db", fit.loss_db},
        {"residual", fit.residual},
    };
}

nlohmann::json cmd_yield(const RunConfig &cfg) {
    cfg.validate();
    const YieldResult r = yield_probability(cfg.yield, cfg.threads);
    return nlohmann::json{
        {"n_resonators", cfg.yield.n_resonators},
        {"tolerance_rel", cfg.yield.tolerance_rel},
        {"sigma_rel", cfg.yield.sigma_rel},
        {"trials", cfg.yield.trials},
        {"seed", cfg.yield.seed},
        {"trials_within", r.trials_within},
        {"p_all_within", r.p_all_within},
    };
}

}  // namespace allpass
