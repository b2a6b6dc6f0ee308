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

#include "allpass/metrics.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <vector>

#include "allpass/error.h"
#include "allpass/parallel.h"

namespace allpass {

OperatingPoint s21_at_operating_point(double chi01_mhz, double kappa_r_mhz) {
    if (!(kappa_r_mhz > 0.0)) {
        throw DomainError("kappa_r must be positive");
    }
    const double ratio = 4.0 * chi01_mhz / kappa_r_mhz;
    if (std::isinf(ratio)) {
        return {0.0, std::copysign(std::numbers::pi, ratio)};
    }
    return {1.0 / std::hypot(1.0, ratio), 2.0 * std::atan(ratio)};
}

double purcell_t1(double kappa_e_mhz, double g_mhz, double delta_mhz) {
    if (delta_mhz == 0.0) {
        throw DomainError("zero detuning: Purcell formula diverges");
    }
    const double rate_mhz = kappa_e_mhz * 2.0 * g_mhz * g_mhz / (delta_mhz * delta_mhz);
    if (rate_mhz == 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    // 1 / (2 pi rate[MHz]) is already in microseconds.
    return 1.0 / (2.0 * std::numbers::pi * rate_mhz);
}

double assignment_fidelity(double p0_given_1, double p1_given_0) {
    for (double p : {p0_given_1, p1_given_0}) {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw DomainError("assignment error probabilities must lie in [0, 1]");
        }
    }
    return 1.0 - 0.5 * (p0_given_1 + p1_given_0);
}

FitBounds default_fit_bounds(const AllPassModel &fixed) {
    // phi and 3 pi - phi swap kappa_e and kappa_o; with g_total adjusted the
    // two branches give the same single-state trace to well below any
    // realistic noise floor, so the default keeps the kappa_e >= kappa_o one.
    return {
        .phi_min_rad = 1.5 * std::numbers::pi,
        .phi_max_rad = 1.95 * std::numbers::pi,
        .g_total_min_mhz = -0.9 * fixed.kappa_r_mhz,
        .g_total_max_mhz = 0.9 * fixed.kappa_r_mhz,
    };
}

namespace {

void check_bounds(const FitBounds &b, const FitInit &init, const AllPassModel &fixed) {
    const double pi = std::numbers::pi;
    if (!(b.phi_min_rad > pi && b.phi_min_rad < b.phi_max_rad && b.phi_max_rad < 2.0 * pi)) {
        throw DomainError("phi bounds must satisfy pi < min < max < 2 pi");
    }
    if (!(b.g_total_min_mhz > -fixed.kappa_r_mhz && b.g_total_min_mhz < b.g_total_max_mhz &&
          b.g_total_max_mhz < fixed.kappa_r_mhz)) {
        throw DomainError("g_total bounds must satisfy -kappa_r < min < max < kappa_r");
    }
    if (!(b.loss_min_db < b.loss_max_db)) {
        throw DomainError("loss bounds are empty");
    }
    if (init.phi_rad < b.phi_min_rad || init.phi_rad > b.phi_max_rad || init.g_total_mhz < b.g_total_min_mhz ||
        init.g_total_mhz > b.g_total_max_mhz || init.loss_db < b.loss_min_db || init.loss_db > b.loss_max_db) {
        throw DomainError("initial fit point lies outside the bounds");
    }
}

double rms(const std::vector<std::complex<double>> &a, const std::vector<std::complex<double>> &b) {
    double sum = 0.0;
    for (size_t i = 0; i < a.size(); ++i) {
        sum += std::norm(a[i] - b[i]);
    }
    return std::sqrt(sum / (2.0 * static_cast<double>(a.size())));
}

}  // namespace

double fit_residual(
    const SParamTrace &trace, const AllPassModel &fixed, int qubit_state, double phi_rad, double g_total_mhz,
    double loss_db) {
    AllPassModel model = fixed;
    model.phi_rad = phi_rad;
    model.g_total_mhz = g_total_mhz;
    const SParamTrace predicted = trace_for_modes(mode_pair_for_state(model, qubit_state), trace.freq_mhz, loss_db);
    return rms(predicted.s21, trace.s21);
}

FitResult fit_model(
    const SParamTrace &trace, const AllPassModel &fixed, const FitBounds &bounds, const FitInit &init,
    const FitOptions &options) {
    trace.validate();
    if (trace.freq_mhz.size() < 10) {
        throw DomainError("fit needs at least 10 trace points");
    }
    fixed.validate();
    check_bounds(bounds, init, fixed);
    if (options.grid < 1) {
        throw DomainError("multi-start grid must be >= 1");
    }

    const std::array<double, 3> lower{bounds.phi_min_rad, bounds.g_total_min_mhz, bounds.loss_min_db};
    const std::array<double, 3> upper{bounds.phi_max_rad, bounds.g_total_max_mhz, bounds.loss_max_db};
    auto objective = [&](std::span<const double> x) {
        for (size_t i = 0; i < 3; ++i) {
            if (x[i] < lower[i] || x[i] > upper[i]) {
                return HUGE_VAL;
            }
        }
        try {
            return fit_residual(trace, fixed, options.qubit_state, x[0], x[1], x[2]);
        } catch (const LabelingError &) {
            return HUGE_VAL;
        }
    };

    std::vector<std::array<double, 3>> starts{{init.phi_rad, init.g_total_mhz, init.loss_db}};
    for (int i = 0; i < options.grid; ++i) {
        for (int j = 0; j < options.grid; ++j) {
            const double fi = (i + 0.5) / options.grid;
            const double fj = (j + 0.5) / options.grid;
            starts.push_back({lower[0] + fi * (upper[0] - lower[0]), lower[1] + fj * (upper[1] - lower[1]), init.loss_db});
        }
    }

    std::vector<SimplexResult> runs(starts.size());
    parallel_for(static_cast<std::int64_t>(starts.size()), options.threads, [&](std::int64_t begin, std::int64_t end) {
        for (std::int64_t s = begin; s < end; ++s) {
            const auto &x0 = starts[static_cast<size_t>(s)];
            std::array<double, 3> step{};
            for (size_t i = 0; i < 3; ++i) {
                step[i] = 0.1 * (upper[i] - lower[i]);
                if (x0[i] + step[i] > upper[i]) {
                    step[i] = -step[i];
                }
            }
            runs[static_cast<size_t>(s)] =
                nelder_mead(objective, std::vector<double>(x0.begin(), x0.end()), step, options.simplex);
        }
    });

    std::optional<size_t> best;
    int evaluations = 0;
    for (size_t s = 0; s < runs.size(); ++s) {
        evaluations += runs[s].evaluations;
        if (!runs[s].converged || !std::isfinite(runs[s].value)) {
            continue;
        }
        if (!best || runs[s].value < runs[*best].value ||
            (runs[s].value == runs[*best].value && runs[s].x[0] < runs[*best].x[0])) {
            best = s;
        }
    }
    if (!best) {
        throw ConvergenceError("no simplex start converged within the evaluation cap");
    }
    const SimplexResult &winner = runs[*best];

    // A resonance-free trace is fit about as well by a constant.
    std::complex<double> mean{0.0, 0.0};
    for (const auto &s : trace.s21) {
        mean += s;
    }
    mean /= static_cast<double>(trace.s21.size());
    const double constant_residual = rms(trace.s21, std::vector<std::complex<double>>(trace.s21.size(), mean));
    if (!(winner.value < 0.5 * constant_residual)) {
        throw ConvergenceError("trace shows no resonance: model does not beat a constant fit");
    }

    bool sensitive = false;
    for (size_t i = 0; i < 2 && !sensitive; ++i) {
        for (double sign : {-1.0, 1.0}) {
            std::vector<double> probe = winner.x;
            probe[i] = std::clamp(probe[i] + sign * 1e-3 * (upper[i] - lower[i]), lower[i], upper[i]);
            const double f = objective(probe);
            if (std::abs(f - winner.value) > 1e-12 * (1.0 + winner.value)) {
                sensitive = true;
                break;
            }
        }
    }
    if (!sensitive) {
        throw ConvergenceError("fit objective is flat in (phi, g_total); parameters are unidentifiable");
    }

    return {
        .phi_rad = winner.x[0],
        .g_total_mhz = winner.x[1],
        .loss_db = winner.x[2],
        .residual = winner.value,
        .evaluations = evaluations,
    };
}

}  // namespace allpass
