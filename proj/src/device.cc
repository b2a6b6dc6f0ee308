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

#include "allpass/device.h"

#include <cmath>
#include <numbers>

#include "allpass/error.h"

namespace allpass {

void TransmonSpec::validate() const {
    if (!(e_c_mhz > 0.0)) {
        throw DomainError("transmon E_C must be positive");
    }
    if (!std::isfinite(omega_01_mhz)) {
        throw DomainError("transmon omega_01 must be finite");
    }
    if (n_levels_qubit < 2 || n_levels_res < 2) {
        throw DomainError("Fock truncation needs at least 2 levels per mode");
    }
}

void SquidSpec::validate() const {
    if (!(e_j_max_ghz > 0.0)) {
        throw DomainError("SQUID E_J must be positive");
    }
    if (!(e_c_mhz > 0.0)) {
        throw DomainError("SQUID E_C must be positive");
    }
    if (!(std::abs(flux) <= 0.5)) {
        throw DomainError("flux must lie in [-0.5, 0.5] flux quanta");
    }
}

void AllPassModel::validate() const {
    if (!(kappa_r_mhz > 0.0)) {
        throw DomainError("kappa_r must be positive");
    }
    if (!(phi_rad > 0.0 && phi_rad <= 2.0 * std::numbers::pi)) {
        throw DomainError("phase delay phi must lie in (0, 2pi]");
    }
    if (!(package_loss_db >= 0.0)) {
        throw DomainError("package loss must be non-negative");
    }
    if (!std::isfinite(omega_r_mhz) || !std::isfinite(g_total_mhz) || !std::isfinite(g_mhz)) {
        throw DomainError("device frequencies must be finite");
    }
    transmon.validate();
}

double bare_qubit_from_dressed(double dressed_01_mhz, double omega_r_mhz, double g_mhz) {
    // Delta^2 - a Delta + 2 g^2 = 0 with a = dressed - omega_r.
    const double a = dressed_01_mhz - omega_r_mhz;
    const double disc = a * a - 8.0 * g_mhz * g_mhz;
    if (disc < 0.0) {
        throw DomainError("dressed qubit frequency too close to the resonator for a dispersive inversion");
    }
    const double delta = 0.5 * (a + std::copysign(std::sqrt(disc), a));
    return omega_r_mhz + delta;
}

AllPassModel fitted_device() {
    AllPassModel model;
    model.omega_r_mhz = 7756.4;
    model.kappa_r_mhz = 14.5;
    model.phi_rad = 1.55 * std::numbers::pi;
    model.g_total_mhz = -5.1;
    model.g_mhz = 93.4;
    model.package_loss_db = 0.28;
    model.transmon.e_c_mhz = 6086.0 - 5885.0;
    model.transmon.omega_01_mhz = bare_qubit_from_dressed(6086.0, model.omega_r_mhz, model.g_mhz);
    return model;
}

SquidSpec fitted_squid() {
    return SquidSpec{.e_j_max_ghz = 19.3, .e_c_mhz = 201.0, .flux = 0.291};
}

}  // namespace allpass
