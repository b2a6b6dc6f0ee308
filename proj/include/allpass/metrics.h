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

#ifndef ALLPASS_METRICS_H
#define ALLPASS_METRICS_H

#include "allpass/cmt.h"
#include "allpass/device.h"
#include "allpass/simplex.h"

namespace allpass {

struct OperatingPoint {
    /// |S21| at the dressed resonance, identical for both qubit states.
    double s21_mag;
    /// arg S21(|1>) - arg S21(|0>), radians; same sign as chi.
    double phase_diff_rad;
};

/// Transmission of a linewidth-matched all-pass pair probed at the dressed
/// resonance, where the even mode sits 2 chi01 away on either side.
OperatingPoint s21_at_operating_point(double chi01_mhz, double kappa_r_mhz);

/// Purcell-limited T1 in microseconds for a qubit coupled to the even mode
/// only: Gamma = kappa_e (2 g^2 / Delta^2). Returns +inf for g = 0.
double purcell_t1(double kappa_e_mhz, double g_mhz, double delta_mhz);

/// F = 1 - (P(0|1) + P(1|0)) / 2.
double assignment_fidelity(double p0_given_1, double p1_given_0);

struct FitBounds {
    double phi_min_rad;
    double phi_max_rad;
    double g_total_min_mhz;
    double g_total_max_mhz;
    double loss_min_db = -1.0;
    double loss_max_db = 3.0;
};

struct FitInit {
    double phi_rad;
    double g_total_mhz;
    double loss_db = 0.0;
};

struct FitOptions {
    int qubit_state = 0;
    /// Multi-start grid size per axis over (phi, g_total).
    int grid = 5;
    SimplexOptions simplex;
    int threads = 1;
};

struct FitResult {
    double phi_rad;
    double g_total_mhz;
    double loss_db;
    /// rms over real and imaginary parts of (model - data).
    double residual;
    int evaluations;
};

/// phi in [1.5 pi, 1.95 pi] (the kappa_e >= kappa_o branch; a single-state
/// trace cannot tell it from its mirror 3 pi - phi), |g_total| <= 0.9 kappa_r.
FitBounds default_fit_bounds(const AllPassModel &fixed);

/// Root-mean-square complex residual of the model against a trace.
double fit_residual(
    const SParamTrace &trace, const AllPassModel &fixed, int qubit_state, double phi_rad, double g_total_mhz,
    double loss_db);

/// Least-squares estimate of (phi, g_total, package loss) from a measured S21
/// trace; every other parameter comes from `fixed`. Runs Nelder-Mead from
/// `init` and from a grid over the bounds and keeps the lowest residual (ties
/// to the lower phi).
///
/// Throws DomainError for malformed traces or bounds, ConvergenceError when no
/// start converges or when the data carries no resonance the model can lock on
/// to (model does not beat a constant fit by 2x, or the objective is flat).
FitResult fit_model(
    const SParamTrace &trace, const AllPassModel &fixed, const FitBounds &bounds, const FitInit &init,
    const FitOptions &options = {});

}  // namespace allpass

#endif
