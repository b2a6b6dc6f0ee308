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

#include "allpass/cmt.h"

#include <cmath>

#include "allpass/error.h"
#include "allpass/netphys.h"

namespace allpass {

namespace {

// (kappa/2) / (j (omega - omega_m) + kappa/2); a dark mode contributes nothing.
std::complex<double> lorentzian(double omega, double omega_mode, double kappa) {
    if (kappa == 0.0) {
        return {0.0, 0.0};
    }
    const double half = 0.5 * kappa;
    return half / std::complex<double>(half, omega - omega_mode);
}

void check_linewidths(const ModePair &modes) {
    if (!(modes.kappa_e_mhz >= 0.0) || !(modes.kappa_o_mhz >= 0.0)) {
        throw DomainError("mode linewidths must be non-negative");
    }
}

}  // namespace

std::complex<double> s21_two_mode(double omega_mhz, const ModePair &modes) {
    check_linewidths(modes);
    return 1.0 - lorentzian(omega_mhz, modes.omega_e_mhz, modes.kappa_e_mhz) -
           lorentzian(omega_mhz, modes.omega_o_mhz, modes.kappa_o_mhz);
}

std::complex<double> s11_two_mode(double omega_mhz, const ModePair &modes) {
    check_linewidths(modes);
    return -lorentzian(omega_mhz, modes.omega_e_mhz, modes.kappa_e_mhz) +
           lorentzian(omega_mhz, modes.omega_o_mhz, modes.kappa_o_mhz);
}

ModeLinewidths mode_linewidths(double kappa_r_mhz, double phi_rad) {
    const double c = std::cos(phi_rad);
    return {kappa_r_mhz * (1.0 + c), kappa_r_mhz * (1.0 - c)};
}

double waveguide_coupling(double kappa_r_mhz, double phi_rad) {
    return 0.5 * kappa_r_mhz * std::sin(phi_rad);
}

void SParamTrace::validate() const {
    if (s21.size() != freq_mhz.size() || (s11 && s11->size() != freq_mhz.size())) {
        throw DomainError("trace columns have different lengths");
    }
    for (size_t i = 1; i < freq_mhz.size(); ++i) {
        if (!(freq_mhz[i] > freq_mhz[i - 1])) {
            throw DomainError("trace frequencies must be strictly increasing");
        }
    }
}

ModePair mode_pair_for_state(const AllPassModel &model, int qubit_state, const TruncationPolicy &policy) {
    const ModeFrequencies freqs = eigenmodes_for_state(model, qubit_state, policy);
    const ModeLinewidths widths = mode_linewidths(model.kappa_r_mhz, model.phi_rad);
    return {freqs.omega_e_mhz, freqs.omega_o_mhz, widths.kappa_e_mhz, widths.kappa_o_mhz};
}

SParamTrace trace_for_modes(const ModePair &modes, std::span<const double> freq_grid_mhz, double loss_db) {
    SParamTrace trace;
    trace.freq_mhz.assign(freq_grid_mhz.begin(), freq_grid_mhz.end());
    trace.s21.reserve(freq_grid_mhz.size());
    std::vector<std::complex<double>> s11;
    s11.reserve(freq_grid_mhz.size());
    const double amplitude = db_to_magnitude(-loss_db);
    for (double f : freq_grid_mhz) {
        trace.s21.push_back(amplitude * s21_two_mode(f, modes));
        s11.push_back(s11_two_mode(f, modes));
    }
    trace.s11 = std::move(s11);
    trace.validate();
    return trace;
}

SParamTrace s21_trace(
    const AllPassModel &model, int qubit_state, std::span<const double> freq_grid_mhz, const TruncationPolicy &policy) {
    if (freq_grid_mhz.empty()) {
        throw DomainError("frequency grid is empty");
    }
    return trace_for_modes(mode_pair_for_state(model, qubit_state, policy), freq_grid_mhz, model.package_loss_db);
}

}  // namespace allpass
