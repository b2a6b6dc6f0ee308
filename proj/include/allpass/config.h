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

#ifndef ALLPASS_CONFIG_H
#define ALLPASS_CONFIG_H

#include <filesystem>
#include <numbers>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "allpass/device.h"
#include "allpass/metrics.h"
#include "allpass/yieldmc.h"

namespace allpass {

/// Evenly spaced grid including both endpoints.
struct GridSpec {
    double start;
    double stop;
    int points;

    std::vector<double> values() const;
    void validate(const std::string &name) const;
};

/// Everything a CLI run needs. Defaults reproduce the fitted device.
struct RunConfig {
    AllPassModel device = fitted_device();
    SquidSpec squid = fitted_squid();

    YieldConfig yield;
    std::vector<double> yield_tolerances{0.1, 0.2, 0.3};
    int yield_max_resonators = 30;
    std::vector<double> histogram_positions{1.0, 2.0, 5.0, 10.0};
    int histogram_bins = 50;

    GridSpec gamma_db_grid{-30.0, 0.0, 121};
    GridSpec s21_grid{7720.0, 7800.0, 801};
    GridSpec flux_grid{-0.45, 0.45, 91};
    GridSpec fluxmap_freq_grid{7720.0, 7800.0, 161};
    GridSpec chikappa_grid{0.0, 0.5, 101};
    double chikappa_marker = 0.038;

    FitBounds fit_bounds = default_fit_bounds(fitted_device());
    FitInit fit_init{.phi_rad = 1.5 * std::numbers::pi, .g_total_mhz = 0.0, .loss_db = 0.0};
    int fit_qubit_state = 0;

    bool include_package_loss = false;
    int threads = 1;
    std::string output_path;

    /// Device with the package loss dropped unless include_package_loss.
    AllPassModel effective_device() const;

    /// Checks every sub-config; throws DomainError naming the first problem.
    void validate() const;
};

/// Builds a config from JSON. Unknown keys are rejected with ParseError.
RunConfig config_from_json(const nlohmann::json &doc);

RunConfig load_config(const std::filesystem::path &path);

nlohmann::json config_to_json(const RunConfig &cfg);

}  // namespace allpass

#endif
