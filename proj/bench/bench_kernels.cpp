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

// Serial reference vs OpenMP kernels on the workloads the solver runs.

#include <benchmark/benchmark.h>

#include <cmath>

#include "dj/kernels.hpp"

namespace {

using namespace dj::kernels;

const std::vector<dj::CandidateState>& sphere_samples() {
    static const auto s = sample_candidates(100'000, 0, true);
    return s;
}

const std::vector<dj::CandidateState>& raw_samples() {
    static const auto s = sample_candidates(10'000, 1, false);
    return s;
}

template <Execution E>
void BM_ScanGrid(benchmark::State& state) {
    const double step = 1.0 / static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(scan_grid(step, E));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(std::pow(grid_points_per_axis(step), 4)));
}

template <Execution E>
void BM_MinJointViolation(benchmark::State& state) {
    const auto& s = sphere_samples();
    for (auto _ : state) benchmark::DoNotOptimize(min_joint_violation(s, E));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(s.size()));
}

template <Execution E>
void BM_ReductionErrors(benchmark::State& state) {
    const auto& s = raw_samples();
    for (auto _ : state) benchmark::DoNotOptimize(reduction_errors(s, E));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(s.size()));
}

template <Execution E>
void BM_IdentityError(benchmark::State& state) {
    const auto& s = raw_samples();
    for (auto _ : state) benchmark::DoNotOptimize(identity_error(s, E));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(s.size()));
}

// Argument is 1/step: 20 -> 0.05, 10 -> 0.1.
BENCHMARK(BM_ScanGrid<Execution::Serial>)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanGrid<Execution::Parallel>)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinJointViolation<Execution::Serial>)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinJointViolation<Execution::Parallel>)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ReductionErrors<Execution::Serial>)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_ReductionErrors<Execution::Parallel>)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_IdentityError<Execution::Serial>)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_IdentityError<Execution::Parallel>)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
