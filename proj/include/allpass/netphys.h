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

#ifndef ALLPASS_NETPHYS_H
#define ALLPASS_NETPHYS_H

#include <complex>

// Linewidth of a single resonator hanging off a feedline whose two ends are
// terminated in arbitrary passive reflections. All frequencies in MHz
// (linear, i.e. omega / 2pi).

namespace allpass {

/// Reflection seen by the resonator looking toward one end of the feedline.
/// Passive only: construction rejects |value| > 1.
class ReflectionCoefficient {
   public:
    ReflectionCoefficient() = default;
    explicit ReflectionCoefficient(std::complex<double> value);

    /// Magnitude in dB (20 log10 |Gamma|) and phase in radians.
    static ReflectionCoefficient from_db(double magnitude_db, double phase_rad = 0.0);

    std::complex<double> value() const { return value_; }
    double magnitude() const { return std::abs(value_); }
    double magnitude_db() const;

   private:
    std::complex<double> value_{0.0, 0.0};
};

struct LinewidthResult {
    double kappa_eff_mhz;
    double omega_eff_mhz;
};

/// Resonator position along a feedline with an ideal open/short at x = 0.
struct PositionSpec {
    double x_over_half_lambda = 0.0;
    /// sqrt(eps_eff,feed / eps_eff,res); 1 means no permittivity error.
    double eps_ratio_sqrt = 1.0;

    void validate() const;
};

/// Effective linewidth and frequency of a resonator with nominal coupling
/// kappa_r when the feedline ends reflect gamma1 (left) and gamma2 (right).
/// Throws SingularError when |1 - gamma1 gamma2| < 1e-12.
LinewidthResult effective_linewidth(
    double kappa_r_mhz, double omega_r_mhz, ReflectionCoefficient gamma1, ReflectionCoefficient gamma2);

/// kappa_max / kappa_min with a fully reflecting input: VSWR^2.
double spread_intentional_mismatch(double gamma_out_mag);

/// kappa_max / kappa_min with a matched input: VSWR.
double spread_no_mismatch(double gamma_out_mag);

/// Fabricated linewidth of a resonator placed a distance x from a fully
/// reflecting input, given the permittivity error in pos.
double kappa_vs_position(double kappa_r0_mhz, const PositionSpec &pos);

/// 10^(db/20).
double db_to_magnitude(double db);

}  // namespace allpass

#endif
