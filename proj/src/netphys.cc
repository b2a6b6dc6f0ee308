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

#include "allpass/netphys.h"

#include <cmath>
#include <numbers>
#include <string>

#include "allpass/error.h"

namespace allpass {

namespace {

constexpr double kSingularGuard = 1e-12;
// Tolerance on |Gamma| <= 1 so that values built from dB round trips pass.
constexpr double kPassiveSlack = 1e-12;

double vswr(double gamma_out_mag) {
    if (!(gamma_out_mag >= 0.0) || gamma_out_mag >= 1.0) {
        throw DomainError("reflection magnitude must lie in [0, 1), got " + std::to_string(gamma_out_mag));
    }
    return (1.0 + gamma_out_mag) / (1.0 - gamma_out_mag);
}

}  // namespace

ReflectionCoefficient::ReflectionCoefficient(std::complex<double> value) : value_(value) {
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag()) || std::abs(value) > 1.0 + kPassiveSlack) {
        throw DomainError("reflection coefficient must be passive (|Gamma| <= 1)");
    }
}

ReflectionCoefficient ReflectionCoefficient::from_db(double magnitude_db, double phase_rad) {
    return ReflectionCoefficient(std::polar(db_to_magnitude(magnitude_db), phase_rad));
}

double ReflectionCoefficient::magnitude_db() const {
    return 20.0 * std::log10(std::abs(value_));
}

void PositionSpec::validate() const {
    if (!(x_over_half_lambda >= 0.0)) {
        throw DomainError("position x/(lambda/2) must be non-negative");
    }
    if (!(eps_ratio_sqrt > 0.0)) {
        throw DomainError("permittivity ratio must be positive");
    }
}

LinewidthResult effective_linewidth(
    double kappa_r_mhz, double omega_r_mhz, ReflectionCoefficient gamma1, ReflectionCoefficient gamma2) {
    if (!(kappa_r_mhz > 0.0)) {
        throw DomainError("kappa_r must be positive");
    }
    const std::complex<double> g1 = gamma1.value();
    const std::complex<double> g2 = gamma2.value();
    const std::complex<double> denom = 1.0 - g1 * g2;
    if (std::abs(denom) < kSingularGuard) {
        throw SingularError("|1 - Gamma1 Gamma2| vanishes; the feedline forms a lossless cavity");
    }
    const std::complex<double> coupling = (1.0 + g1) * (1.0 + g2) / denom;
    const std::complex<double> pull = (1.0 - g1 - g2 - 3.0 * g1 * g2) / denom;
    return {
        .kappa_eff_mhz = 0.5 * kappa_r_mhz * coupling.real(),
        .omega_eff_mhz = omega_r_mhz + 0.25 * kappa_r_mhz * pull.imag(),
    };
}

double spread_intentional_mismatch(double gamma_out_mag) {
    const double v = vswr(gamma_out_mag);
    return v * v;
}

double spread_no_mismatch(double gamma_out_mag) {
    return vswr(gamma_out_mag);
}

double kappa_vs_position(double kappa_r0_mhz, const PositionSpec &pos) {
    if (!(kappa_r0_mhz > 0.0)) {
        throw DomainError("kappa_r0 must be positive");
    }
    pos.validate();
    const double arg = 2.0 * std::numbers::pi * pos.x_over_half_lambda * pos.eps_ratio_sqrt;
    return kappa_r0_mhz * (0.5 * std::cos(arg) + 0.5);
}

double db_to_magnitude(double db) {
    return std::pow(10.0, db / 20.0);
}

}  // namespace allpass
