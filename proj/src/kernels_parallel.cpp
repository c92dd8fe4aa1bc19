// Copyright 2026 The dj Authors
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

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "dj/kernels.hpp"

namespace dj::kernels::parallel {

GridScan scan_grid(double step) {
    GridScan scan;
    scan.step = step;
    scan.tolerance = 2.0 * step;
    scan.points_per_axis = grid_points_per_axis(step);
    const std::uint64_t n = scan.points_per_axis;
    scan.points_scanned = n * n * n * n;
    const auto total = static_cast<std::int64_t>(scan.points_scanned);

    std::vector<std::vector<GridPoint>> per_thread(static_cast<std::size_t>(omp_get_max_threads()));
#pragma omp parallel
    {
        auto& local = per_thread[static_cast<std::size_t>(omp_get_thread_num())];
        GridPoint p;
#pragma omp for schedule(static)
        for (std::int64_t i = 0; i < total; ++i) {
            if (detail::evaluate_grid_point(static_cast<std::uint64_t>(i), scan.points_per_axis, step,
                                            scan.tolerance, p)) {
                local.push_back(p);
            }
        }
    }
    for (auto& local : per_thread) {
        scan.survivors.insert(scan.survivors.end(), local.begin(), local.end());
    }
    std::sort(scan.survivors.begin(), scan.survivors.end(),
              [](const GridPoint& a, const GridPoint& b) { return a.index < b.index; });
    return scan;
}

SweepMinimum min_joint_violation(std::span<const CandidateState> states) {
    SweepMinimum best{std::numeric_limits<double>::infinity(), 0};
    const auto total = static_cast<std::int64_t>(states.size());
#pragma omp parallel
    {
        SweepMinimum local{std::numeric_limits<double>::infinity(), 0};
#pragma omp for schedule(static) nowait
        for (std::int64_t i = 0; i < total; ++i) {
            const auto idx = static_cast<std::size_t>(i);
            const double v = residuals(states[idx]).joint_violation();
            if (v < local.value) local = {v, idx};
        }
#pragma omp critical(dj_sweep_min)
        {
            // (value, index) ordering keeps the result independent of thread timing.
            if (local.value < best.value || (local.value == best.value && local.index < best.index)) {
                best = local;
            }
        }
    }
    return best;
}

ReductionErrors reduction_errors(std::span<const CandidateState> states) {
    ReductionErrors acc;
    const auto total = static_cast<std::int64_t>(states.size());
#pragma omp parallel
    {
        ReductionErrors local;
#pragma omp for schedule(static) nowait
        for (std::int64_t i = 0; i < total; ++i) {
            detail::merge_into(local, detail::reduction_errors_one(states[static_cast<std::size_t>(i)]));
        }
#pragma omp critical(dj_reduction_errors)
        detail::merge_into(acc, local);
    }
    return acc;
}

double identity_error(std::span<const CandidateState> states) {
    double worst = 0.0;
    const auto total = static_cast<std::int64_t>(states.size());
#pragma omp parallel for schedule(static) reduction(max : worst)
    for (std::int64_t i = 0; i < total; ++i) {
        worst = std::max(worst, detail::identity_error_one(states[static_cast<std::size_t>(i)]));
    }
    return worst;
}

}  // namespace dj::kernels::parallel
