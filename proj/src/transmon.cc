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

#include "allpass/transmon.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include <boost/math/tools/roots.hpp>

#include "allpass/error.h"

namespace allpass {

namespace {

using FockState = std::array<int, 3>;  // n1, n2, nq
constexpr int kQubit = 2;

struct Truncation {
    int res;
    int qubit;

    int levels(int mode) const { return mode == kQubit ? qubit : res; }
    long dimension() const { return static_cast<long>(res) * res * qubit; }
};

void check_dimension(const Truncation &trunc, const TruncationPolicy &policy) {
    if (trunc.dimension() > policy.max_dimension) {
        throw DimensionError(
            "Fock space of dimension " + std::to_string(trunc.dimension()) + " exceeds cap " +
            std::to_string(policy.max_dimension));
    }
}

// sqrt(n+1) for a raising step, sqrt(n) for lowering; zero when the target
// level falls outside the truncation.
double ladder(int n, int step, int levels) {
    const int target = n + step;
    if (target < 0 || target >= levels) {
        return 0.0;
    }
    return std::sqrt(static_cast<double>(step > 0 ? target : n));
}

// Uncoupled energy of s minus that of ref, formed from integer level
// differences so that nearby states do not lose digits to a large common
// offset.
double bare_energy(const AllPassModel &model, const FockState &s, const FockState &ref = {0, 0, 0}) {
    const int photons = s[0] + s[1] - ref[0] - ref[1];
    const int quanta = s[kQubit] - ref[kQubit];
    const int pairs = s[kQubit] * (s[kQubit] - 1) - ref[kQubit] * (ref[kQubit] - 1);
    return model.omega_r_mhz * photons + model.transmon.omega_01_mhz * quanta - 0.5 * model.transmon.e_c_mhz * pairs;
}

// Calls emit(bra, amplitude) for every nonzero <bra|H - E_ref|ket>, where
// E_ref is the uncoupled energy of `ref`.
template <typename Emit>
void apply_hamiltonian(
    const AllPassModel &model, const Truncation &trunc, const FockState &ket, const FockState &ref, Emit &&emit) {
    emit(ket, bare_energy(model, ket, ref));

    const bool rwa = model.coupling == CouplingForm::kRotatingWave;
    auto exchange = [&](double coupling, int a, int b) {
        if (coupling == 0.0) {
            return;
        }
        for (int da : {+1, -1}) {
            for (int db : {+1, -1}) {
                if (rwa && da == db) {
                    continue;
                }
                const double amp = coupling * ladder(ket[a], da, trunc.levels(a)) * ladder(ket[b], db, trunc.levels(b));
                if (amp == 0.0) {
                    continue;
                }
                FockState bra = ket;
                bra[a] += da;
                bra[b] += db;
                emit(bra, amp);
            }
        }
    };
    exchange(model.g_total_mhz, 0, 1);
    exchange(model.g_mhz, 0, kQubit);
    exchange(model.g_mhz, 1, kQubit);
}

// Quantity conserved by H: total excitations under RWA, their parity otherwise.
int sector_key(const AllPassModel &model, const FockState &s) {
    const int total = s[0] + s[1] + s[2];
    return model.coupling == CouplingForm::kRotatingWave ? total : total % 2;
}

// Eigen-decomposition of one symmetry block: fixed conserved key and fixed
// parity under exchange of the two resonators. Energies are relative to the
// uncoupled energy of `ref`, the state the caller wants to track.
struct SectorSolution {
    Eigen::VectorXd energies;
    Eigen::MatrixXd vectors;  // columns are eigenvectors in the (anti)symmetrized basis
    std::vector<FockState> orbits;  // representative with n1 >= n2 for each basis column
};

SectorSolution solve_sector(
    const AllPassModel &model, const Truncation &trunc, int key, bool symmetric, const FockState &ref) {
    std::vector<FockState> states;
    std::vector<long> position(static_cast<size_t>(trunc.dimension()), -1);
    for (int n1 = 0; n1 < trunc.res; ++n1) {
        for (int n2 = 0; n2 < trunc.res; ++n2) {
            for (int q = 0; q < trunc.qubit; ++q) {
                FockState s{n1, n2, q};
                if (sector_key(model, s) == key) {
                    position[fock_index(n1, n2, q, trunc.res, trunc.qubit)] = static_cast<long>(states.size());
                    states.push_back(s);
                }
            }
        }
    }

    const auto n = static_cast<Eigen::Index>(states.size());
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index col = 0; col < n; ++col) {
        apply_hamiltonian(model, trunc, states[col], ref, [&](const FockState &bra, double amp) {
            const long row = position[fock_index(bra[0], bra[1], bra[2], trunc.res, trunc.qubit)];
            h(row, col) += amp;
        });
    }

    SectorSolution out;
    std::vector<std::pair<long, long>> columns;  // (index of s, index of swapped s)
    for (const FockState &s : states) {
        if (s[0] < s[1] || (!symmetric && s[0] == s[1])) {
            continue;
        }
        const long i = position[fock_index(s[0], s[1], s[2], trunc.res, trunc.qubit)];
        const long j = position[fock_index(s[1], s[0], s[2], trunc.res, trunc.qubit)];
        columns.emplace_back(i, j);
        out.orbits.push_back(s);
    }
    const auto m = static_cast<Eigen::Index>(columns.size());
    Eigen::MatrixXd basis = Eigen::MatrixXd::Zero(n, m);
    for (Eigen::Index c = 0; c < m; ++c) {
        const auto [i, j] = columns[c];
        if (i == j) {
            basis(i, c) = 1.0;
        } else {
            basis(i, c) = std::numbers::sqrt2 / 2.0;
            basis(j, c) = symmetric ? std::numbers::sqrt2 / 2.0 : -std::numbers::sqrt2 / 2.0;
        }
    }
    const Eigen::MatrixXd block = basis.transpose() * h * basis;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(block);
    if (solver.info() != Eigen::Success) {
        throw ConvergenceError("symmetric eigensolver failed");
    }
    out.energies = solver.eigenvalues();
    out.vectors = solver.eigenvectors();
    return out;
}

// Energy of the eigenstate with the largest weight on the basis column
// representing `target`. Eigenvalues are ascending, so strict > keeps the
// lowest-energy state on ties.
double labeled_energy(const SectorSolution &sector, const FockState &target) {
    const auto it = std::find(sector.orbits.begin(), sector.orbits.end(), target);
    if (it == sector.orbits.end()) {
        throw LabelingError("reference state is not representable at this truncation");
    }
    const auto col = static_cast<Eigen::Index>(it - sector.orbits.begin());
    double best = -1.0;
    double runner_up = -1.0;
    Eigen::Index best_k = 0;
    for (Eigen::Index k = 0; k < sector.vectors.cols(); ++k) {
        const double w = sector.vectors(col, k) * sector.vectors(col, k);
        if (w > best + 1e-12) {
            runner_up = best;
            best = w;
            best_k = k;
        } else if (w > runner_up) {
            runner_up = w;
        }
    }
    if (best - std::max(runner_up, 0.0) < 0.1) {
        throw LabelingError(
            "cannot identify dressed state of |" + std::to_string(target[0]) + "," + std::to_string(target[1]) + "," +
            std::to_string(target[2]) + ">: overlaps " + std::to_string(best) + " vs " + std::to_string(runner_up));
    }
    return sector.energies(best_k);
}

struct Levels {
    double reference;
    double even;
    double odd;
};

// Dressed reference energy and the even/odd single-photon transitions.
Levels solve_levels(const AllPassModel &model, const Truncation &trunc, int state) {
    const FockState vacuum{0, 0, state};
    const FockState photon{1, 0, state};
    const SectorSolution ground = solve_sector(model, trunc, sector_key(model, vacuum), true, vacuum);
    const SectorSolution even = solve_sector(model, trunc, sector_key(model, photon), true, photon);
    const SectorSolution odd = solve_sector(model, trunc, sector_key(model, photon), false, photon);
    const double shift = labeled_energy(ground, vacuum);
    return {
        .reference = bare_energy(model, vacuum) + shift,
        .even = model.omega_r_mhz + (labeled_energy(even, photon) - shift),
        .odd = model.omega_r_mhz + (labeled_energy(odd, photon) - shift),
    };
}

// Grows the truncation until `extract` changes by less than the tolerance in
// every component.
template <typename Extract>
auto converge(const AllPassModel &model, int min_qubit_levels, const TruncationPolicy &policy, Extract &&extract) {
    model.validate();
    Truncation trunc{model.transmon.n_levels_res, std::max(model.transmon.n_levels_qubit, min_qubit_levels)};
    check_dimension(trunc, policy);
    auto previous = extract(trunc);
    while (std::max(trunc.res, trunc.qubit) < policy.max_levels) {
        const Truncation next{trunc.res + 1, trunc.qubit + 1};
        check_dimension(next, policy);
        auto current = extract(next);
        trunc = next;
        if (current.max_change(previous) < policy.tolerance_mhz) {
            return std::make_pair(current, trunc);
        }
        previous = current;
    }
    throw ConvergenceError(
        "eigenfrequencies did not settle to " + std::to_string(policy.tolerance_mhz) + " MHz within " +
        std::to_string(policy.max_levels) + " levels");
}

struct ModeSample {
    double reference;
    double even;
    double odd;

    double max_change(const ModeSample &o) const {
        return std::max(std::abs(even - o.even), std::abs(odd - o.odd));
    }
};

struct TransitionSample {
    double value;

    double max_change(const TransitionSample &o) const { return std::abs(value - o.value); }
};

}  // namespace

long fock_index(int n1, int n2, int nq, int n_levels_res, int n_levels_qubit) {
    return (static_cast<long>(n1) * n_levels_res + n2) * n_levels_qubit + nq;
}

Eigen::MatrixXd build_hamiltonian(const AllPassModel &model, const TruncationPolicy &policy) {
    model.validate();
    const Truncation trunc{model.transmon.n_levels_res, model.transmon.n_levels_qubit};
    check_dimension(trunc, policy);
    const auto dim = static_cast<Eigen::Index>(trunc.dimension());
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
    for (int n1 = 0; n1 < trunc.res; ++n1) {
        for (int n2 = 0; n2 < trunc.res; ++n2) {
            for (int q = 0; q < trunc.qubit; ++q) {
                const long col = fock_index(n1, n2, q, trunc.res, trunc.qubit);
                apply_hamiltonian(model, trunc, FockState{n1, n2, q}, FockState{0, 0, 0}, [&](const FockState &bra, double amp) {
                    h(fock_index(bra[0], bra[1], bra[2], trunc.res, trunc.qubit), col) += amp;
                });
            }
        }
    }
    return h;
}

ModeFrequencies eigenmodes_for_state(const AllPassModel &model, int qubit_state, const TruncationPolicy &policy) {
    if (qubit_state < 0 || qubit_state >= model.transmon.n_levels_qubit) {
        throw DomainError("qubit state " + std::to_string(qubit_state) + " outside the qubit truncation");
    }
    const auto [sample, trunc] = converge(model, qubit_state + 2, policy, [&](const Truncation &t) {
        const Levels lv = solve_levels(model, t, qubit_state);
        return ModeSample{lv.reference, lv.even, lv.odd};
    });
    return {
        .omega_e_mhz = sample.even,
        .omega_o_mhz = sample.odd,
        .reference_energy_mhz = sample.reference,
        .n_levels_res = trunc.res,
        .n_levels_qubit = trunc.qubit,
    };
}

double dressed_qubit_transition(
    const AllPassModel &model, int from_state, int to_state, const TruncationPolicy &policy) {
    if (from_state < 0 || to_state < 0) {
        throw DomainError("qubit states must be non-negative");
    }
    const int top = std::max(from_state, to_state);
    const auto [sample, trunc] = converge(model, top + 2, policy, [&](const Truncation &t) {
        auto shift = [&](int s) {
            const FockState vacuum{0, 0, s};
            return labeled_energy(solve_sector(model, t, sector_key(model, vacuum), true, vacuum), vacuum);
        };
        const double bare = bare_energy(model, {0, 0, to_state}, {0, 0, from_state});
        return TransitionSample{bare + (shift(to_state) - shift(from_state))};
    });
    (void)trunc;
    return sample.value;
}

DispersivePulls dispersive_pulls(const AllPassModel &model, const TruncationPolicy &policy) {
    const ModeFrequencies s0 = eigenmodes_for_state(model, 0, policy);
    const ModeFrequencies s1 = eigenmodes_for_state(model, 1, policy);
    const ModeFrequencies s2 = eigenmodes_for_state(model, 2, policy);
    return {
        .even_shift_01_mhz = s1.omega_e_mhz - s0.omega_e_mhz,
        .even_shift_02_mhz = s2.omega_e_mhz - s0.omega_e_mhz,
        .odd_shift_01_mhz = s1.omega_o_mhz - s0.omega_o_mhz,
        .odd_shift_02_mhz = s2.omega_o_mhz - s0.omega_o_mhz,
    };
}

double dispersive_chi(double g_mhz, double delta_mhz, double e_c_mhz) {
    if (std::abs(delta_mhz) < 1.0 || std::abs(delta_mhz - e_c_mhz) < 1.0) {
        throw DomainError("qubit straddles a resonator transition; dispersive formula invalid");
    }
    return -g_mhz * g_mhz * e_c_mhz / (delta_mhz * (delta_mhz - e_c_mhz));
}

double degeneracy_gtotal(double g_mhz, double delta_mhz, double e_c_mhz) {
    const double denom = delta_mhz - e_c_mhz;
    if (std::abs(denom) < 1e-9) {
        throw DomainError("Delta - E_C vanishes; qubit-mediated coupling diverges");
    }
    return g_mhz * g_mhz / denom;
}

double dressed_qubit_estimate(double omega_01_mhz, double g_mhz, double delta_mhz) {
    if (delta_mhz == 0.0) {
        throw DomainError("zero qubit-resonator detuning");
    }
    return omega_01_mhz + 2.0 * g_mhz * g_mhz / delta_mhz;
}

double qubit_freq_from_flux(const SquidSpec &squid) {
    squid.validate();
    const double c = std::abs(std::cos(std::numbers::pi * squid.flux));
    if (c < 1e-12) {
        throw DomainError("E_J vanishes at half a flux quantum");
    }
    const double e_j_mhz = 2.0 * squid.e_j_max_ghz * 1e3 * c;
    return std::sqrt(8.0 * e_j_mhz * squid.e_c_mhz) - squid.e_c_mhz;
}

double allpass_flux_point(const AllPassModel &model, const SquidSpec &squid) {
    model.validate();
    squid.validate();
    auto residual = [&](double flux) {
        SquidSpec s = squid;
        s.flux = flux;
        const double delta = qubit_freq_from_flux(s) - model.omega_r_mhz;
        return degeneracy_gtotal(model.g_mhz, delta, squid.e_c_mhz) - model.g_total_mhz;
    };
    constexpr double lo = 0.0;
    constexpr double hi = 0.5 - 1e-6;
    const double f_lo = residual(lo);
    const double f_hi = residual(hi);
    if (f_lo == 0.0) {
        return lo;
    }
    if (std::signbit(f_lo) == std::signbit(f_hi)) {
        throw NoRootError("degeneracy residual does not change sign on flux in (0, 0.5)");
    }
    const auto [a, b] =
        boost::math::tools::bisect(residual, lo, hi, [](double x, double y) { return std::abs(y - x) < 1e-7; });
    const double root = 0.5 * (a + b);
    // A sign change across the Delta = E_C pole is not a root.
    if (std::abs(residual(root)) > 1e-2) {
        throw NoRootError("sign change of the degeneracy residual is a pole, not a root");
    }
    return root;
}

}  // namespace allpass
