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

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "dj/kernels.hpp"

namespace dj::kernels {

double GridPoint::max_residual() const {
    return std::max({std::abs(first), std::abs(second), std::abs(norm)});
}

double ReductionErrors::max() const {
    return std::max({first_vs_closed_form, second_vs_closed_form, third_vs_second, fourth_vs_first,
                     sixth_vs_fifth});
}

std::size_t grid_points_per_axis(double step) {
    // Guard against 2/0.05 landing a hair under 40.
    return static_cast<std::size_t>(std::floor(2.0 / step + 1e-9)) + 1;
}

std::vector<CandidateState> sample_candidates(std::size_t n, std::uint64_t seed, bool normalize) {
    std::mt19937_64 engine{seed};
    std::normal_distribution<double> normal{0.0, 1.0};
    std::vector<CandidateState> out(n);
    for (auto& psi : out) {
        for (auto& z : psi.c) {
            const double re = normal(engine);
            const double im = normal(engine);
            z = {re, im};
        }
        if (normalize) {
            const double scale = 1.0 / std::sqrt(psi.norm_squared());
            for (auto& z : psi.c) z *= scale;
        }
    }
    return out;
}

namespace detail {

bool evaluate_grid_point(std::uint64_t index, std::size_t per_axis, double step, double tolerance,
                         GridPoint& out) {
    const std::uint64_t n = per_axis;
    std::uint64_t rest = index;
    std::array<double, 4> c{};
    for (int k = 3; k >= 0; --k) {
        c[static_cast<std::size_t>(k)] = grid_value(static_cast<std::size_t>(rest % n), step);
        rest /= n;
    }
    const double norm = c[0] * c[0] + c[1] * c[1] + c[2] * c[2] + c[3] * c[3] - 1.0;
    if (std::abs(norm) > tolerance) return false;
    const double first = 2.0 * c[0] * c[1] + c[2] * c[2] + c[3] * c[3];
    if (std::abs(first) > tolerance) return false;
    const double second = 2.0 * c[2] * c[3] + c[0] * c[0] + c[1] * c[1];
    if (std::abs(second) > tolerance) return false;
    out = GridPoint{index, c, first, second, norm};
    return true;
}

ReductionErrors reduction_errors_one(const CandidateState& psi) {
    const auto r = residuals(psi);
    const Complex via_matrix_first = pairing(FunctionId::CI, FunctionId::BI, psi);
    const Complex via_matrix_second = pairing(FunctionId::CI, FunctionId::BII, psi);
    ReductionErrors e;
    e.first_vs_closed_form = std::abs(via_matrix_first - r.first);
    e.second_vs_closed_form = std::abs(via_matrix_second - r.second);
    e.third_vs_second = std::abs(r.third - r.second);
    e.fourth_vs_first = std::abs(r.fourth - r.first);
    e.sixth_vs_fifth = std::abs(r.sixth - r.fifth);
    return e;
}

double identity_error_one(const CandidateState& psi) {
    const Complex first = pairing(FunctionId::CI, FunctionId::BI, psi);
    const Complex second = pairing(FunctionId::CI, FunctionId::BII, psi);
    const double lhs = 2.0 * pairing_sum(psi);
    return std::abs(Complex{lhs} - (first + second - psi.norm_squared()));
}

void merge_into(ReductionErrors& acc, const ReductionErrors& other) {
    acc.first_vs_closed_form = std::max(acc.first_vs_closed_form, other.first_vs_closed_form);
    acc.second_vs_closed_form = std::max(acc.second_vs_closed_form, other.second_vs_closed_form);
    acc.third_vs_second = std::max(acc.third_vs_second, other.third_vs_second);
    acc.fourth_vs_first = std::max(acc.fourth_vs_first, other.fourth_vs_first);
    acc.sixth_vs_fifth = std::max(acc.sixth_vs_fifth, other.sixth_vs_fifth);
}

}  // namespace detail

namespace serial {

GridScan scan_grid(double step) {
    GridScan scan;
    scan.step = step;
    scan.tolerance = 2.0 * step;
    scan.points_per_axis = grid_points_per_axis(step);
    const std::uint64_t n = scan.points_per_axis;
    scan.points_scanned = n * n * n * n;
    GridPoint p;
    for (std::uint64_t i = 0; i < scan.points_scanned; ++i) {
        if (detail::evaluate_grid_point(i, scan.points_per_axis, step, scan.tolerance, p)) {
            scan.survivors.push_back(p);
        }
    }
    return scan;
}

SweepMinimum min_joint_violation(std::span<const CandidateState> states) {
    SweepMinimum best{std::numeric_limits<double>::infinity(), 0};
    for (std::size_t i = 0; i < states.size(); ++i) {
        const double v = residuals(states[i]).joint_violation();
        if (v < best.value) best = {v, i};
    }
    return best;
}

ReductionErrors reduction_errors(std::span<const CandidateState> states) {
    ReductionErrors acc;
    for (const auto& psi : states) detail::merge_into(acc, detail::reduction_errors_one(psi));
    return acc;
}

double identity_error(std::span<const CandidateState> states) {
    double worst = 0.0;
    for (const auto& psi : states) worst = std::max(worst, detail::identity_error_one(psi));
    return worst;
}

}  // namespace serial

GridScan scan_grid(double step, Execution exec) {
    return exec == Execution::Serial ? serial::scan_grid(step) : parallel::scan_grid(step);
}

SweepMinimum min_joint_violation(std::span<const CandidateState> states, Execution exec) {
    return exec == Execution::Serial ? serial::min_joint_violation(states)
                                     : parallel::min_joint_violation(states);
}

ReductionErrors reduction_errors(std::span<const CandidateState> states, Execution exec) {
    return exec == Execution::Serial ? serial::reduction_errors(states) : parallel::reduction_errors(states);
}

double identity_error(std::span<const CandidateState> states, Execution exec) {
    return exec == Execution::Serial ? serial::identity_error(states) : parallel::identity_error(states);
}

}  // namespace dj::kernels
