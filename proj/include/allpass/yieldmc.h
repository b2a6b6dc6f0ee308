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

#ifndef ALLPASS_YIELDMC_H
#define ALLPASS_YIELDMC_H

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

// Monte Carlo spread of fabricated linewidths for resonators placed along a
// feedline with a fully reflecting input, under random permittivity error.

namespace allpass {

struct YieldConfig {
    /// Standard deviation of sqrt(eps_feed / eps_res) around 1.
    double sigma_rel = 0.015;
    /// Accepted band |kappa - mu| <= tolerance_rel * mu.
    double tolerance_rel = 0.30;
    int n_resonators = 16;
    int resonators_per_half_lambda = 2;
    std::int64_t trials = 100000;
    std::uint64_t seed = 20240601;
    /// Keep the trials x n matrix of kappa / kappa_r0.
    bool keep_samples = false;

    void validate() const;
};

struct YieldResult {
    double p_all_within;
    std::int64_t trials_within;
    /// Row-major trials x n_resonators when requested.
    std::optional<std::vector<double>> samples;
};

/// Position x / (lambda_r / 2) of resonator i (1-based).
int resonator_slot(int index_1based, int per_half_lambda);

/// kappa / kappa_r0 at a fixed position, one draw per trial. Trial t uses
/// its own random stream derived from (seed, t).
std::vector<double> kappa_samples_at_position(
    double x_over_half_lambda, double sigma_rel, std::int64_t trials, std::uint64_t seed, int threads = 1);

/// Target linewidth mu / kappa_r0 at a position: Monte Carlo mean over 10^6
/// draws from a fixed calibration stream. Cached; thread-safe.
double calibrated_mean_kappa(double x_over_half_lambda, double sigma_rel);

/// Probability that every resonator lands inside the tolerance band around
/// its position's target. Bitwise reproducible for any thread count.
YieldResult yield_probability(const YieldConfig &cfg, int threads = 1);

struct YieldPoint {
    int n_resonators;
    double tolerance_rel;
    double probability;
};

/// yield_probability for every (n, tolerance) pair, sharing the random draws.
/// Each point equals the corresponding single call with the same seed.
std::vector<YieldPoint> yield_curve(
    const YieldConfig &cfg, std::span<const int> n_values, std::span<const double> tolerances, int threads = 1);

struct SpreadRow {
    double gamma_out_db;
    double spread_intentional;
    double spread_matched;
};

std::vector<SpreadRow> spread_curves(std::span<const double> gamma_out_db_grid);

}  // namespace allpass

#endif
