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

#ifndef ALLPASS_DEVICE_H
#define ALLPASS_DEVICE_H

#include <numbers>

// Parameter bundles describing the two-resonator all-pass readout block and
// its flux-tunable transmon. Frequencies are linear (MHz) unless noted.

namespace allpass {

struct TransmonSpec {
    /// Bare 0-1 transition.
    double omega_01_mhz = 6096.5;
    double e_c_mhz = 201.0;
    /// Starting Fock truncation; eigenmode extraction grows these until the
    /// mode frequencies converge.
    int n_levels_qubit = 4;
    int n_levels_res = 4;

    void validate() const;
};

/// Symmetric SQUID: E_J(flux) = 2 e_j_max |cos(pi flux)|.
struct SquidSpec {
    double e_j_max_ghz = 19.3;
    double e_c_mhz = 201.0;
    /// Phi / Phi_0.
    double flux = 0.291;

    void validate() const;
};

/// Which interaction terms of the three-mode Hamiltonian are kept.
enum class CouplingForm {
    /// Excitation-conserving terms only (a1^dag a2 + h.c., ...).
    kRotatingWave,
    /// (a1 + a1^dag)(a2 + a2^dag) etc., counter-rotating terms included.
    kFull,
};

struct AllPassModel {
    double omega_r_mhz = 7756.4;
    double kappa_r_mhz = 14.5;
    /// Feedline phase delay between the two coupling points, radians.
    double phi_rad = 1.55 * std::numbers::pi;
    /// Net resonator-resonator coupling (direct plus waveguide-mediated).
    double g_total_mhz = -5.1;
    /// Qubit-resonator coupling, each resonator.
    double g_mhz = 93.4;
    TransmonSpec transmon;
    double package_loss_db = 0.28;
    CouplingForm coupling = CouplingForm::kRotatingWave;

    void validate() const;
};

/// Inverts the dressed-qubit relation omega~ = omega_01 + 2 g^2 / (omega_01 - omega_r)
/// for the bare omega_01, choosing the branch continuous with g -> 0.
double bare_qubit_from_dressed(double dressed_01_mhz, double omega_r_mhz, double g_mhz);

/// Device parameters fitted to the measured all-pass resonator
/// (dressed qubit 6086 MHz, anharmonicity 201 MHz).
AllPassModel fitted_device();

SquidSpec fitted_squid();

}  // namespace allpass

#endif
