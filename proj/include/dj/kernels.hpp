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

#pragma once

// Data-parallel sweeps used by the solver. Each kernel has a serial reference
// in dj::kernels::serial and an OpenMP version in dj::kernels::parallel with
// identical results; tests compare the two and dj_bench times them.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "dj/constraints.hpp"

namespace dj::kernels {

enum class Execution { Serial, Parallel };

/// A real grid point that passed the near-feasibility filter.
struct GridPoint {
    std::uint64_t index = 0;  // flattened, first coordinate most significant
    std::array<double, 4> c{};
    double first = 0.0;
    double second = 0.0;
    double norm = 0.0;

    double max_residual() const;
};

struct GridScan {
    double step = 0.0;
    double tolerance = 0.0;
    std::size_t points_per_axis = 0;
    std::uint64_t points_scanned = 0;
    /// Sorted by index.
    std::vector<GridPoint> survivors;
};

/// Number of values -1, -1 + step, ... that do not exceed 1.
std::size_t grid_points_per_axis(double step);

inline double grid_value(std::size_t i, double step) { return -1.0 + static_cast<double>(i) * step; }

/// Lowest joint violation and the first sample attaining it.
struct SweepMinimum {
    double value = 0.0;
    std::size_t index = 0;
};

struct ReductionErrors {
    /// |<F_CI psi|F_BI psi> - closed form first|
    double first_vs_closed_form = 0.0;
    /// |<F_CI psi|F_BII psi> - closed form second|
    double second_vs_closed_form = 0.0;
    /// |third - second|
    double third_vs_second = 0.0;
    /// |fourth - first|
    double fourth_vs_first = 0.0;
    /// |sixth - fifth|
    double sixth_vs_fifth = 0.0;

    double max() const;
};

/// n complex candidates with all 8 real components standard normal. When
/// `normalize` is set each is scaled to unit norm, which is uniform on the
/// sphere. Engine: std::mt19937_64 seeded with `seed`.
std::vector<CandidateState> sample_candidates(std::size_t n, std::uint64_t seed, bool normalize);

namespace serial {

/// Keeps points with |norm|, |first|, |second| all <= 2 * step.
GridScan scan_grid(double step);
SweepMinimum min_joint_violation(std::span<const CandidateState> states);
ReductionErrors reduction_errors(std::span<const CandidateState> states);
/// max |2 [Re(c1 conj c2) + Re(conj c3 c4)] - (first + second - sum |c|^2)|
/// with first and second taken from the matrix pairings.
double identity_error(std::span<const CandidateState> states);

}  // namespace serial

namespace parallel {

GridScan scan_grid(double step);
SweepMinimum min_joint_violation(std::span<const CandidateState> states);
ReductionErrors reduction_errors(std::span<const CandidateState> states);
double identity_error(std::span<const CandidateState> states);

}  // namespace parallel

GridScan scan_grid(double step, Execution exec);
SweepMinimum min_joint_violation(std::span<const CandidateState> states, Execution exec);
ReductionErrors reduction_errors(std::span<const CandidateState> states, Execution exec);
double identity_error(std::span<const CandidateState> states, Execution exec);

namespace detail {

// Shared per-element bodies; both execution paths call exactly these.
bool evaluate_grid_point(std::uint64_t index, std::size_t per_axis, double step, double tolerance,
                         GridPoint& out);
ReductionErrors reduction_errors_one(const CandidateState& psi);
double identity_error_one(const CandidateState& psi);
void merge_into(ReductionErrors& acc, const ReductionErrors& other);

}  // namespace detail

}  // namespace dj::kernels
