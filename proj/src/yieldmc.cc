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

#include "allpass/yieldmc.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <random>
#include <string>
#include <utility>

#include <boost/random/normal_distribution.hpp>

#include "allpass/error.h"
#include "allpass/netphys.h"
#include "allpass/parallel.h"

namespace allpass {

namespace {

constexpr std::uint64_t kCalibrationSeed = 0x5eed'ca1b'0000'0001ULL;
constexpr std::int64_t kCalibrationDraws = 1'000'000;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Independent stream for trial t; depends only on (seed, t).
std::mt19937_64 trial_stream(std::uint64_t seed, std::int64_t trial) {
    return std::mt19937_64(splitmix64(splitmix64(seed) + static_cast<std::uint64_t>(trial)));
}

double normalized_kappa(double x, double ratio) {
    return kappa_vs_position(1.0, PositionSpec{.x_over_half_lambda = x, .eps_ratio_sqrt = ratio});
}

std::vector<double> slot_targets(int n, int per_half_lambda, double sigma) {
    std::vector<double> mu(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        mu[static_cast<size_t>(i)] = calibrated_mean_kappa(resonator_slot(i + 1, per_half_lambda), sigma);
    }
    return mu;
}

}  // namespace

void YieldConfig::validate() const {
    if (!(sigma_rel >= 0.0)) {
        throw DomainError("sigma_rel must be non-negative");
    }
    if (!(tolerance_rel > 0.0 && tolerance_rel < 1.0)) {
        throw DomainError("tolerance_rel must lie in (0, 1)");
    }
    if (n_resonators < 1 || resonators_per_half_lambda < 1) {
        throw DomainError("need at least one resonator and one resonator per slot");
    }
    if (trials < 1) {
        throw DomainError("trials must be >= 1");
    }
}

int resonator_slot(int index_1based, int per_half_lambda) {
    return (index_1based + per_half_lambda - 1) / per_half_lambda;
}

std::vector<double> kappa_samples_at_position(
    double x_over_half_lambda, double sigma_rel, std::int64_t trials, std::uint64_t seed, int threads) {
    if (trials < 1) {
        throw DomainError("trials must be >= 1");
    }
    if (!(sigma_rel >= 0.0)) {
        throw DomainError("sigma_rel must be non-negative");
    }
    std::vector<double> out(static_cast<size_t>(trials));
    parallel_for(trials, threads, [&](std::int64_t begin, std::int64_t end) {
        for (std::int64_t t = begin; t < end; ++t) {
            auto rng = trial_stream(seed, t);
            boost::random::normal_distribution<double> ratio(1.0, sigma_rel);
            out[static_cast<size_t>(t)] = normalized_kappa(x_over_half_lambda, ratio(rng));
        }
    });
    return out;
}

double calibrated_mean_kappa(double x_over_half_lambda, double sigma_rel) {
    static std::mutex mutex;
    static std::map<std::pair<double, double>, double> cache;
    const auto key = std::make_pair(x_over_half_lambda, sigma_rel);
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) {
            return it->second;
        }
    }
    std::mt19937_64 rng(kCalibrationSeed);
    boost::random::normal_distribution<double> ratio(1.0, sigma_rel);
    long double sum = 0.0L;
    for (std::int64_t i = 0; i < kCalibrationDraws; ++i) {
        sum += normalized_kappa(x_over_half_lambda, ratio(rng));
    }
    const double mean = static_cast<double>(sum / kCalibrationDraws);
    std::lock_guard lock(mutex);
    cache.emplace(key, mean);
    return mean;
}

YieldResult yield_probability(const YieldConfig &cfg, int threads) {
    cfg.validate();
    const int n = cfg.n_resonators;
    const std::vector<double> mu = slot_targets(n, cfg.resonators_per_half_lambda, cfg.sigma_rel);

    std::vector<unsigned char> within(static_cast<size_t>(cfg.trials));
    std::optional<std::vector<double>> samples;
    if (cfg.keep_samples) {
        samples.emplace(static_cast<size_t>(cfg.trials) * static_cast<size_t>(n));
    }
    parallel_for(cfg.trials, threads, [&](std::int64_t begin, std::int64_t end) {
        for (std::int64_t t = begin; t < end; ++t) {
            auto rng = trial_stream(cfg.seed, t);
            boost::random::normal_distribution<double> ratio(1.0, cfg.sigma_rel);
            bool ok = true;
            for (int i = 0; i < n; ++i) {
                const double kappa = normalized_kappa(resonator_slot(i + 1, cfg.resonators_per_half_lambda), ratio(rng));
                const double target = mu[static_cast<size_t>(i)];
                ok = ok && std::abs(kappa - target) <= cfg.tolerance_rel * target;
                if (samples) {
                    (*samples)[static_cast<size_t>(t) * static_cast<size_t>(n) + static_cast<size_t>(i)] = kappa;
                }
            }
            within[static_cast<size_t>(t)] = ok ? 1 : 0;
        }
    });
    const auto count = static_cast<std::int64_t>(std::count(within.begin(), within.end(), 1));
    return {
        .p_all_within = static_cast<double>(count) / static_cast<double>(cfg.trials),
        .trials_within = count,
        .samples = std::move(samples),
    };
}

std::vector<YieldPoint> yield_curve(
    const YieldConfig &cfg, std::span<const int> n_values, std::span<const double> tolerances, int threads) {
    cfg.validate();
    if (n_values.empty() || tolerances.empty()) {
        return {};
    }
    for (double tol : tolerances) {
        if (!(tol > 0.0 && tol < 1.0)) {
            throw DomainError("tolerance must lie in (0, 1)");
        }
    }
    const int n_max = *std::max_element(n_values.begin(), n_values.end());
    if (*std::min_element(n_values.begin(), n_values.end()) < 1) {
        throw DomainError("resonator counts must be >= 1");
    }
    const std::vector<double> mu = slot_targets(n_max, cfg.resonators_per_half_lambda, cfg.sigma_rel);

    // first_failure[t * n_tol + k]: number of leading resonators inside tolerance k.
    const size_t n_tol = tolerances.size();
    std::vector<int> first_failure(static_cast<size_t>(cfg.trials) * n_tol);
    parallel_for(cfg.trials, threads, [&](std::int64_t begin, std::int64_t end) {
        std::vector<double> kappa(static_cast<size_t>(n_max));
        for (std::int64_t t = begin; t < end; ++t) {
            auto rng = trial_stream(cfg.seed, t);
            boost::random::normal_distribution<double> ratio(1.0, cfg.sigma_rel);
            for (int i = 0; i < n_max; ++i) {
                kappa[static_cast<size_t>(i)] =
                    normalized_kappa(resonator_slot(i + 1, cfg.resonators_per_half_lambda), ratio(rng));
            }
            for (size_t k = 0; k < n_tol; ++k) {
                int good = 0;
                while (good < n_max &&
                       std::abs(kappa[static_cast<size_t>(good)] - mu[static_cast<size_t>(good)]) <=
                           tolerances[k] * mu[static_cast<size_t>(good)]) {
                    ++good;
                }
                first_failure[static_cast<size_t>(t) * n_tol + k] = good;
            }
        }
    });

    std::vector<YieldPoint> out;
    out.reserve(n_values.size() * n_tol);
    for (int n : n_values) {
        for (size_t k = 0; k < n_tol; ++k) {
            std::int64_t count = 0;
            for (std::int64_t t = 0; t < cfg.trials; ++t) {
                count += first_failure[static_cast<size_t>(t) * n_tol + k] >= n ? 1 : 0;
            }
            out.push_back({n, tolerances[k], static_cast<double>(count) / static_cast<double>(cfg.trials)});
        }
    }
    return out;
}

std::vector<SpreadRow> spread_curves(std::span<const double> gamma_out_db_grid) {
    std::vector<SpreadRow> rows;
    rows.reserve(gamma_out_db_grid.size());
    for (double db : gamma_out_db_grid) {
        const double mag = db_to_magnitude(db);
        if (mag == 1.0) {
            // A fully reflecting output makes both ratios unbounded.
            const double inf = std::numeric_limits<double>::infinity();
            rows.push_back({db, inf, inf});
            continue;
        }
        rows.push_back({db, spread_intentional_mismatch(mag), spread_no_mismatch(mag)});
    }
    return rows;
}

}  // namespace allpass
