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

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "allpass/cmt.h"
#include "allpass/device.h"
#include "allpass/error.h"
#include "allpass/metrics.h"
#include "allpass/simplex.h"

namespace allpass {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(OperatingPoint, Examples) {
    const OperatingPoint op = s21_at_operating_point(0.038, 1.0);
    EXPECT_NEAR(op.s21_mag * op.s21_mag, 0.977, 0.002);
    EXPECT_NEAR(op.s21_mag * op.s21_mag, 1.0 / (1.0 + 0.152 * 0.152), 1e-12);
    const OperatingPoint zero = s21_at_operating_point(0.0, 14.5);
    EXPECT_EQ(zero.s21_mag, 1.0);
    EXPECT_EQ(zero.phase_diff_rad, 0.0);
    EXPECT_LT(s21_at_operating_point(1e9, 1.0).s21_mag, 1e-8);
    EXPECT_THROW(s21_at_operating_point(0.1, 0.0), DomainError);
}

TEST(OperatingPoint, Parity) {
    for (double chi : {0.01, 0.3, 2.0}) {
        const auto p = s21_at_operating_point(chi, 14.5);
        const auto m = s21_at_operating_point(-chi, 14.5);
        EXPECT_EQ(p.s21_mag, m.s21_mag);
        EXPECT_EQ(p.phase_diff_rad, -m.phase_diff_rad);
    }
}

// Cross-check against the two-mode scattering model: matched linewidths, the
// odd mode at the probe and the even mode 2 chi below (ground) or above
// (excited) it.
TEST(OperatingPoint, AgreesWithTwoModeModel) {
    const double kappa = 14.5;
    const double chi = -0.55;
    const double w = 7756.4;
    const ModeLinewidths widths = mode_linewidths(kappa, 1.5 * kPi);
    const auto ground = s21_two_mode(w, {w - 2.0 * chi, w, widths.kappa_e_mhz, widths.kappa_o_mhz});
    const auto excited = s21_two_mode(w, {w + 2.0 * chi, w, widths.kappa_e_mhz, widths.kappa_o_mhz});
    const OperatingPoint op = s21_at_operating_point(chi, kappa);
    EXPECT_NEAR(std::abs(ground), op.s21_mag, 1e-12);
    EXPECT_NEAR(std::abs(excited), op.s21_mag, 1e-12);
    EXPECT_NEAR(std::arg(excited / ground), op.phase_diff_rad, 1e-12);
}

TEST(Purcell, Examples) {
    EXPECT_NEAR(purcell_t1(17.1, 93.4, -1670.4), 1.5, 0.15);
    EXPECT_NEAR(purcell_t1(17.1, 93.4, -2.0 * 1670.4), 4.0 * purcell_t1(17.1, 93.4, -1670.4), 1e-9);
    EXPECT_EQ(purcell_t1(17.1, 0.0, -1670.4), std::numeric_limits<double>::infinity());
    EXPECT_THROW(purcell_t1(17.1, 93.4, 0.0), DomainError);
    EXPECT_NEAR(1.5 * 47.0, 70.0, 3.5);
}

TEST(Purcell, ConsistentWithModuleOutputs) {
    const AllPassModel m = fitted_device();
    const double kappa_e = mode_linewidths(m.kappa_r_mhz, m.phi_rad).kappa_e_mhz;
    const double delta = m.transmon.omega_01_mhz - m.omega_r_mhz;
    const double gamma_per_us = 2.0 * kPi * kappa_e * 2.0 * m.g_mhz * m.g_mhz / (delta * delta);
    EXPECT_NEAR(purcell_t1(kappa_e, m.g_mhz, delta), 1.0 / gamma_per_us, 1e-9);
}

TEST(Fidelity, Examples) {
    EXPECT_NEAR(assignment_fidelity(0.030, 0.008), 0.981, 1e-12);
    EXPECT_NEAR(assignment_fidelity(0.012, 0.007), 0.9905, 1e-12);
    EXPECT_EQ(assignment_fidelity(0.0, 0.0), 1.0);
    EXPECT_THROW(assignment_fidelity(1.2, 0.0), DomainError);
}

TEST(NelderMead, Rosenbrock) {
    auto f = [](std::span<const double> x) {
        return 100.0 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1.0 - x[0], 2);
    };
    const std::vector<double> step{0.5, 0.5};
    const SimplexResult r = nelder_mead(f, {-1.2, 1.0}, step);
    EXPECT_TRUE(r.converged);
    EXPECT_NEAR(r.x[0], 1.0, 1e-4);
    EXPECT_NEAR(r.x[1], 1.0, 1e-4);
    EXPECT_LT(r.value, 1e-8);
}

TEST(NelderMead, BarrierAndNan) {
    auto f = [](std::span<const double> x) {
        if (x[0] < 2.0) {
            return std::numeric_limits<double>::quiet_NaN();
        }
        return (x[0] - 3.0) * (x[0] - 3.0);
    };
    const std::vector<double> step{0.5};
    const SimplexResult r = nelder_mead(f, {2.5}, step);
    EXPECT_NEAR(r.x[0], 3.0, 1e-4);
}

TEST(NelderMead, EvaluationCap) {
    auto f = [](std::span<const double> x) { return -x[0]; };
    SimplexOptions opt;
    opt.max_evaluations = 50;
    const std::vector<double> step{1.0};
    const SimplexResult r = nelder_mead(f, {0.0}, step, opt);
    EXPECT_FALSE(r.converged);
    EXPECT_LE(r.evaluations, 50);
}

std::vector<double> fit_grid() {
    std::vector<double> g;
    for (int i = 0; i < 401; ++i) {
        g.push_back(7720.0 + 0.2 * i);
    }
    return g;
}

SParamTrace truth_trace(const AllPassModel &truth) {
    SParamTrace t = s21_trace(truth, 0, fit_grid());
    t.s11.reset();
    return t;
}

AllPassModel truth_model() {
    AllPassModel m = fitted_device();
    m.package_loss_db = 0.0;
    return m;
}

TEST(Fit, ResidualNonNegativeAndZeroAtTruth) {
    const AllPassModel truth = truth_model();
    const SParamTrace t = truth_trace(truth);
    EXPECT_LT(fit_residual(t, truth, 0, truth.phi_rad, truth.g_total_mhz, 0.0), 1e-14);
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> phi(1.3 * kPi, 1.7 * kPi);
    std::uniform_real_distribution<double> gt(-10.0, 10.0);
    for (int i = 0; i < 20; ++i) {
        const double r = fit_residual(t, truth, 0, phi(rng), gt(rng), 0.1);
        EXPECT_GT(r, 0.0);
    }
}

TEST(Fit, NoiselessRecovery) {
    const AllPassModel truth = truth_model();
    const FitResult r = fit_model(truth_trace(truth), truth, default_fit_bounds(truth), {1.5 * kPi, 0.0, 0.0});
    EXPECT_NEAR(r.phi_rad, truth.phi_rad, 1e-3 * truth.phi_rad);
    EXPECT_NEAR(r.g_total_mhz, truth.g_total_mhz, 1e-3 * std::abs(truth.g_total_mhz));
    EXPECT_NEAR(r.loss_db, 0.0, 1e-4);
    EXPECT_LT(r.residual, 1e-8);
}

TEST(Fit, RecoversPackageLoss) {
    AllPassModel truth = truth_model();
    truth.package_loss_db = 0.28;
    const FitResult r = fit_model(truth_trace(truth), truth, default_fit_bounds(truth), {1.5 * kPi, 0.0, 0.0});
    EXPECT_NEAR(r.loss_db, 0.28, 1e-4);
}

TEST(Fit, MirrorBranchNeedsExplicitBounds) {
    AllPassModel truth = truth_model();
    truth.phi_rad = 1.45 * kPi;
    FitBounds bounds = default_fit_bounds(truth);
    bounds.phi_min_rad = 1.05 * kPi;
    bounds.phi_max_rad = 1.5 * kPi;
    const FitResult r = fit_model(truth_trace(truth), truth, bounds, {1.4 * kPi, 0.0, 0.0});
    EXPECT_NEAR(r.phi_rad, truth.phi_rad, 1e-3 * truth.phi_rad);
}

TEST(Fit, FlatTraceIsRejected) {
    SParamTrace flat;
    flat.freq_mhz = fit_grid();
    flat.s21.assign(flat.freq_mhz.size(), {1.0, 0.0});
    const AllPassModel m = truth_model();
    EXPECT_THROW(fit_model(flat, m, default_fit_bounds(m), {1.5 * kPi, 0.0, 0.0}), ConvergenceError);
}

TEST(Fit, InputErrors) {
    const AllPassModel m = truth_model();
    SParamTrace tiny = truth_trace(m);
    tiny.freq_mhz.resize(5);
    tiny.s21.resize(5);
    EXPECT_THROW(fit_model(tiny, m, default_fit_bounds(m), {1.5 * kPi, 0.0, 0.0}), DomainError);

    const SParamTrace t = truth_trace(m);
    FitBounds b = default_fit_bounds(m);
    b.g_total_max_mhz = 2.0 * m.kappa_r_mhz;
    EXPECT_THROW(fit_model(t, m, b, {1.5 * kPi, 0.0, 0.0}), DomainError);
    b = default_fit_bounds(m);
    b.phi_min_rad = 0.5 * kPi;
    EXPECT_THROW(fit_model(t, m, b, {1.5 * kPi, 0.0, 0.0}), DomainError);
    EXPECT_THROW(fit_model(t, m, default_fit_bounds(m), {1.2 * kPi, 0.0, 0.0}), DomainError);
}

TEST(Fit, ThreadCountDoesNotChangeResult) {
    const AllPassModel truth = truth_model();
    SParamTrace t = truth_trace(truth);
    std::mt19937_64 rng(4);
    std::normal_distribution<double> noise(0.0, 0.01);
    for (auto &z : t.s21) {
        z += std::complex<double>(noise(rng), noise(rng));
    }
    FitOptions one;
    FitOptions four;
    four.threads = 4;
    const FitResult a = fit_model(t, truth, default_fit_bounds(truth), {1.5 * kPi, 0.0, 0.0}, one);
    const FitResult b = fit_model(t, truth, default_fit_bounds(truth), {1.5 * kPi, 0.0, 0.0}, four);
    EXPECT_EQ(a.phi_rad, b.phi_rad);
    EXPECT_EQ(a.g_total_mhz, b.g_total_mhz);
    EXPECT_EQ(a.loss_db, b.loss_db);
    EXPECT_EQ(a.residual, b.residual);
}

}  // namespace
}  // namespace allpass
