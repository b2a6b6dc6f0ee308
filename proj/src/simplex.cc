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

#include "allpass/simplex.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "allpass/error.h"

namespace allpass {

SimplexResult nelder_mead(
    const std::function<double(std::span<const double>)> &objective, std::vector<double> start,
    std::span<const double> step, const SimplexOptions &options) {
    const size_t n = start.size();
    if (n == 0 || step.size() != n) {
        throw DomainError("simplex start and step must have the same nonzero size");
    }

    int evaluations = 0;
    auto eval = [&](const std::vector<double> &x) {
        ++evaluations;
        const double v = objective(x);
        return std::isnan(v) ? HUGE_VAL : v;
    };

    std::vector<std::vector<double>> vertex(n + 1, start);
    for (size_t i = 0; i < n; ++i) {
        vertex[i + 1][i] += step[i];
    }
    std::vector<double> value(n + 1);
    for (size_t i = 0; i <= n; ++i) {
        value[i] = eval(vertex[i]);
    }

    std::vector<size_t> order(n + 1);
    std::vector<double> centroid(n);
    auto along = [&](double t, const std::vector<double> &worst) {
        std::vector<double> p(n);
        for (size_t j = 0; j < n; ++j) {
            p[j] = centroid[j] + t * (worst[j] - centroid[j]);
        }
        return p;
    };

    bool converged = false;
    while (true) {
        std::iota(order.begin(), order.end(), size_t{0});
        // Stable so that ties keep vertex order and the search is reproducible.
        std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) { return value[a] < value[b]; });
        const size_t best = order.front();
        const size_t worst = order.back();
        const size_t second_worst = order[n - 1];

        double diameter = 0.0;
        for (size_t i = 0; i <= n; ++i) {
            for (size_t j = 0; j < n; ++j) {
                diameter = std::max(diameter, std::abs(vertex[i][j] - vertex[best][j]));
            }
        }
        if (value[worst] - value[best] <= options.f_tolerance && diameter <= options.x_tolerance) {
            converged = true;
            break;
        }
        if (evaluations >= options.max_evaluations) {
            break;
        }

        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (size_t i = 0; i <= n; ++i) {
            if (i == worst) {
                continue;
            }
            for (size_t j = 0; j < n; ++j) {
                centroid[j] += vertex[i][j] / static_cast<double>(n);
            }
        }

        const std::vector<double> reflected = along(-1.0, vertex[worst]);
        const double f_reflected = eval(reflected);
        if (f_reflected < value[best]) {
            const std::vector<double> expanded = along(-2.0, vertex[worst]);
            const double f_expanded = eval(expanded);
            if (f_expanded < f_reflected) {
                vertex[worst] = expanded;
                value[worst] = f_expanded;
            } else {
                vertex[worst] = reflected;
                value[worst] = f_reflected;
            }
            continue;
        }
        if (f_reflected < value[second_worst]) {
            vertex[worst] = reflected;
            value[worst] = f_reflected;
            continue;
        }
        const bool outside = f_reflected < value[worst];
        const std::vector<double> contracted = along(outside ? -0.5 : 0.5, vertex[worst]);
        const double f_contracted = eval(contracted);
        if (f_contracted <= (outside ? f_reflected : value[worst])) {
            vertex[worst] = contracted;
            value[worst] = f_contracted;
            continue;
        }
        for (size_t i = 0; i <= n; ++i) {
            if (i == best) {
                continue;
            }
            for (size_t j = 0; j < n; ++j) {
                vertex[i][j] = vertex[best][j] + 0.5 * (vertex[i][j] - vertex[best][j]);
            }
            value[i] = eval(vertex[i]);
        }
    }

    const auto best = static_cast<size_t>(std::min_element(value.begin(), value.end()) - value.begin());
    return {vertex[best], value[best], evaluations, converged};
}

}  // namespace allpass
