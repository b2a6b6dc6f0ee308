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

#ifndef ALLPASS_COMMANDS_H
#define ALLPASS_COMMANDS_H

#include <string>

#include <nlohmann/json.hpp>

#include "allpass/cmt.h"
#include "allpass/config.h"

// Dataset generators behind the command-line tool. Each returns the file
// content so that callers and tests can compare outputs byte for byte.

namespace allpass {

/// gamma_out_db, spread_eq1, spread_eq2.
std::string cmd_fig1b(const RunConfig &cfg);

struct Fig2Output {
    /// position, kappa_over_kappa0, count.
    std::string histogram_csv;
    /// n_resonators, tolerance, probability.
    std::string yield_csv;
};

Fig2Output cmd_fig2(const RunConfig &cfg);

/// freq_mhz, s21_re, s21_im, s21_db, s21_phase_deg with phase in [0, 360).
std::string cmd_s21(const RunConfig &cfg, int qubit_state);

/// Long format flux, freq_mhz, s21_db with the qubit in its ground state.
std::string cmd_fluxmap(const RunConfig &cfg);

/// chi_over_kappa, s21_mag, s21_mag_sq, marker. The marker row is merged
/// into the grid in sorted order and flagged with marker = 1.
std::string cmd_chikappa(const RunConfig &cfg);

/// {phi_rad, g_total_mhz, loss_db, residual}. Throws ConvergenceError when
/// the fit fails.
nlohmann::json cmd_fit(const SParamTrace &trace, const RunConfig &cfg);

nlohmann::json cmd_yield(const RunConfig &cfg);

}  // namespace allpass

#endif
