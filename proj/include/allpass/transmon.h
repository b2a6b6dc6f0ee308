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

#ifndef ALLPASS_TRANSMON_H
#define ALLPASS_TRANSMON_H

#include <Eigen/Dense>

#include "allpass/device.h"

namespace allpass {

/// Controls Fock-space growth during eigenmode extraction.
struct TruncationPolicy {
    /// Levels per mode are raised one at a time up to this cap.
    int max_levels = 12;
    /// Successive truncations must agree to this tolerance (1 kHz).
    double tolerance_mhz = 1e-3;
    /// Cap on n_res^2 * n_qubit for any matrix we build.
    long max_dimension = 10000;
};

/// Real symmetric Hamiltonian (MHz) in the product Fock basis |n1, n2, nq>,
/// nq fastest. Uses the truncation stored in model.transmon and the coupling
/// form selected in model.coupling.
Eigen::MatrixXd build_hamiltonian(const AllPassModel &model, const TruncationPolicy &policy = {});

/// Index of |n1, n2, nq> in the basis used by build_hamiltonian.
long fock_index(int n1, int n2, int nq, int n_levels_res, int n_levels_qubit);

/// Dressed single-photon frequencies of the even and odd resonator modes with
/// the transmon in a given (dressed) level.
struct ModeFrequencies {
    double omega_e_mhz;
    double omega_o_mhz;
    /// Energy of the dressed |0, 0, state> reference level.
    double reference_energy_mhz;
    /// Truncation at which the result converged.
    int n_levels_res;
    int n_levels_qubit;
};

/// Diagonalizes the model and returns the even/odd photon frequencies for
/// qubit_state. Eigenstates are identified by maximum overlap with
/// |0,0,s>, (|1,0,s> + |0,1,s>)/sqrt2 and (|1,0,s> - |0,1,s>)/sqrt2; the
/// truncation is raised until both frequencies move by less than
/// policy.tolerance_mhz.
///
/// Throws ConvergenceError when the truncation cap is hit, LabelingError when
/// the best overlap beats the runner-up by less than 0.1, DimensionError when
/// the cap on the Hilbert-space size is exceeded.
ModeFrequencies eigenmodes_for_state(const AllPassModel &model, int qubit_state, const TruncationPolicy &policy = {});

/// Dressed qubit transition E(|0,0,to>) - E(|0,0,from>), converged like
/// eigenmodes_for_state.
double dressed_qubit_transition(
    const AllPassModel &model, int from_state, int to_state, const TruncationPolicy &policy = {});

/// Qubit-state-dependent pulls of the dressed modes, from full diagonalization.
/// With the even mode carrying 2 chi01 sigma_z, the 0->1 even shift is 4 chi01
/// and the resonance of the degenerate pair moves by half of that.
struct DispersivePulls {
    double even_shift_01_mhz;
    double even_shift_02_mhz;
    double odd_shift_01_mhz;
    double odd_shift_02_mhz;

    double chi01_mhz() const { return even_shift_01_mhz / 4.0; }
    double chi02_mhz() const { return even_shift_02_mhz / 4.0; }
    /// Effective resonator pull 2 chi0n quoted for the all-pass pair.
    double resonator_shift_01_mhz() const { return even_shift_01_mhz / 2.0; }
    double resonator_shift_02_mhz() const { return even_shift_02_mhz / 2.0; }
};

DispersivePulls dispersive_pulls(const AllPassModel &model, const TruncationPolicy &policy = {});

/// chi01 = -g^2 E_C / (Delta (Delta - E_C)), Delta = omega_01 - omega_r.
/// Throws DomainError when Delta or Delta - E_C is within 1 MHz of zero.
double dispersive_chi(double g_mhz, double delta_mhz, double e_c_mhz);

/// g_total at which the even and odd modes are degenerate (dispersive pull
/// neglected): g^2 / (Delta - E_C).
double degeneracy_gtotal(double g_mhz, double delta_mhz, double e_c_mhz);

/// Second-order dressed qubit frequency omega_01 + 2 g^2 / Delta.
double dressed_qubit_estimate(double omega_01_mhz, double g_mhz, double delta_mhz);

/// Bare omega_01 = sqrt(8 E_J(flux) E_C) - E_C, E_J(flux) = 2 E_J |cos(pi flux)|.
/// Throws DomainError at |flux| = 0.5.
double qubit_freq_from_flux(const SquidSpec &squid);

/// Flux in (0, 0.5) at which degeneracy_gtotal(g, Delta(flux), E_C) equals
/// model.g_total_mhz, to 1e-4 flux quanta. Throws NoRootError without a sign
/// change over the bracket.
double allpass_flux_point(const AllPassModel &model, const SquidSpec &squid);

}  // namespace allpass

#endif
