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

#ifndef ALLPASS_CMT_H
#define ALLPASS_CMT_H

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "allpass/device.h"
#include "allpass/transmon.h"

// Coupled-mode (input-output) scattering of an even and an odd resonator
// mode hanging off a single feedline.

namespace allpass {

struct ModePair {
    double omega_e_mhz;
    double omega_o_mhz;
    double kappa_e_mhz;
    double kappa_o_mhz;
};

struct ModeLinewidths {
    double kappa_e_mhz;
    double kappa_o_mhz;
};

/// Transmission past the mode pair, probe at omega.
std::complex<double> s21_two_mode(double omega_mhz, const ModePair &modes);

/// Reflection back toward the source (no drive from the far end).
std::complex<double> s11_two_mode(double omega_mhz, const ModePair &modes);

/// kappa_e = kappa_r (1 + cos phi), kappa_o = kappa_r (1 - cos phi).
ModeLinewidths mode_linewidths(double kappa_r_mhz, double phi_rad);

/// Waveguide-mediated resonator-resonator coupling (kappa_r / 2) sin phi.
double waveguide_coupling(double kappa_r_mhz, double phi_rad);

struct SParamTrace {
    std::vector<double> freq_mhz;
    std::vector<std::complex<double>> s21;
    std::optional<std::vector<std::complex<double>>> s11;

    /// Throws DomainError unless frequencies strictly increase and lengths match.
    void validate() const;
};

/// Mode pair of the device with the transmon in qubit_state: frequencies from
/// eigenmodes_for_state, linewidths from the phase delay.
ModePair mode_pair_for_state(const AllPassModel &model, int qubit_state, const TruncationPolicy &policy = {});

/// Transmission and reflection of a fixed mode pair over a frequency grid,
/// scaled by the amplitude 10^(-loss_db/20).
SParamTrace trace_for_modes(const ModePair &modes, std::span<const double> freq_grid_mhz, double loss_db);

/// Full device trace; package loss taken from model.package_loss_db (set it
/// to zero to exclude the package).
SParamTrace s21_trace(
    const AllPassModel &model, int qubit_state, std::span<const double> freq_grid_mhz,
    const TruncationPolicy &policy = {});

}  // namespace allpass

#endif
