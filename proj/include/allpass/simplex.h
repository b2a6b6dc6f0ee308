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

#ifndef ALLPASS_SIMPLEX_H
#define ALLPASS_SIMPLEX_H

#include <functional>
#include <span>
#include <vector>

namespace allpass {

struct SimplexOptions {
    int max_evaluations = 10000;
    /// Stop once the spread of objective values across the simplex is below this.
    double f_tolerance = 1e-10;
    /// ...and every vertex lies within this distance of the best one.
    double x_tolerance = 1e-9;
};

struct SimplexResult {
    std::vector<double> x;
    double value;
    int evaluations;
    bool converged;
};

/// Nelder-Mead minimization (standard reflection / expansion / contraction /
/// shrink coefficients 1, 2, 1/2, 1/2). The initial simplex is start plus
/// step[i] along each axis. Objectives may return +inf to reject a point.
SimplexResult nelder_mead(
    const std::function<double(std::span<const double>)> &objective, std::vector<double> start,
    std::span<const double> step, const SimplexOptions &options = {});

}  // namespace allpass

#endif
