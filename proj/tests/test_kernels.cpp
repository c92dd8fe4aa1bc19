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

#include <gtest/gtest.h>

#include <cmath>

#include "dj/kernels.hpp"

namespace dj::kernels {
namespace {

void expect_same_scan(const GridScan& a, const GridScan& b) {
    EXPECT_EQ(a.points_per_axis, b.points_per_axis);
    EXPECT_EQ(a.points_scanned, b.points_scanned);
    ASSERT_EQ(a.survivors.size(), b.survivors.size());
    for (std::size_t i = 0; i < a.survivors.size(); ++i) {
        EXPECT_EQ(a.survivors[i].index, b.survivors[i].index);
        EXPECT_EQ(a.survivors[i].c, b.survivors[i].c);
        EXPECT_EQ(a.survivors[i].first, b.survivors[i].first);
        EXPECT_EQ(a.survivors[i].second, b.survivors[i].second);
        EXPECT_EQ(a.survivors[i].norm, b.survivors[i].norm);
    }
}

TEST(Grid, PointsPerAxis) {
    EXPECT_EQ(grid_points_per_axis(0.05), 41u);
    EXPECT_EQ(grid_points_per_axis(0.1), 21u);
    EXPECT_EQ(grid_points_per_axis(0.25), 9u);
    EXPECT_EQ(grid_points_per_axis(0.3), 7u);
    EXPECT_EQ(grid_points_per_axis(0.5), 5u);
    EXPECT_DOUBLE_EQ(grid_value(0, 0.05), -1.0);
    EXPECT_NEAR(grid_value(40, 0.05), 1.0, 1e-12);
}

// Survivor counts produced by an independent brute-force NumPy scan.
struct FrozenCount {
    double step;
    std::uint64_t scanned;
    std::size_t survivors;
};

class GridCounts : public ::testing::TestWithParam<FrozenCount> {};

TEST_P(GridCounts, SerialAndParallelMatchReference) {
    const auto p = GetParam();
    const auto s = serial::scan_grid(p.step);
    const auto q = parallel::scan_grid(p.step);
    EXPECT_EQ(s.points_scanned, p.scanned);
    EXPECT_EQ(s.survivors.size(), p.survivors);
    expect_same_scan(s, q);
    for (std::size_t i = 1; i < q.survivors.size(); ++i) EXPECT_LT(q.survivors[i - 1].index, q.survivors[i].index);
    for (const auto& g : q.survivors) EXPECT_LE(g.max_residual(), 2.0 * p.step + 1e-12);
}

INSTANTIATE_TEST_SUITE_P(Frozen, GridCounts,
                         ::testing::Values(FrozenCount{0.05, 2825761, 1092}, FrozenCount{0.1, 194481, 604},
                                           FrozenCount{0.25, 6561, 388}, FrozenCount{0.3, 2401, 322},
                                           FrozenCount{0.5, 625, 169}));

TEST(SampleCandidates, DeterministicAndNormalized) {
    const auto a = sample_candidates(100, 5, true);
    const auto b = sample_candidates(100, 5, true);
    const auto c = sample_candidates(100, 6, true);
    ASSERT_EQ(a.size(), 100u);
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].c, b[i].c);
        EXPECT_NEAR(a[i].norm_squared(), 1.0, 1e-12);
    }
    EXPECT_NE(a[0].c, c[0].c);
    const auto raw = sample_candidates(100, 5, false);
    double worst = 0.0;
    for (const auto& s : raw) worst = std::max(worst, std::abs(s.norm_squared() - 1.0));
    EXPECT_GT(worst, 0.1);
}

TEST(Sweeps, SerialAndParallelAgree) {
    const auto states = sample_candidates(20000, 0, true);
    const auto ms = serial::min_joint_violation(states);
    const auto mp = parallel::min_joint_violation(states);
    EXPECT_EQ(ms.value, mp.value);
    EXPECT_EQ(ms.index, mp.index);

    const auto raw = sample_candidates(5000, 1, false);
    const auto es = serial::reduction_errors(raw);
    const auto ep = parallel::reduction_errors(raw);
    EXPECT_EQ(es.first_vs_closed_form, ep.first_vs_closed_form);
    EXPECT_EQ(es.second_vs_closed_form, ep.second_vs_closed_form);
    EXPECT_EQ(es.third_vs_second, ep.third_vs_second);
    EXPECT_EQ(es.fourth_vs_first, ep.fourth_vs_first);
    EXPECT_EQ(es.sixth_vs_fifth, ep.sixth_vs_fifth);
    EXPECT_LE(es.max(), 1e-12);

    EXPECT_EQ(serial::identity_error(raw), parallel::identity_error(raw));
    EXPECT_LE(serial::identity_error(raw), 1e-12);
}

TEST(Sweeps, DispatchMatchesNamespaces) {
    const auto states = sample_candidates(1000, 3, true);
    EXPECT_EQ(min_joint_violation(states, Execution::Serial).value, serial::min_joint_violation(states).value);
    EXPECT_EQ(min_joint_violation(states, Execution::Parallel).index, parallel::min_joint_violation(states).index);
    EXPECT_EQ(identity_error(states, Execution::Parallel), serial::identity_error(states));
    EXPECT_EQ(scan_grid(0.5, Execution::Serial).survivors.size(), 169u);
}

TEST(Sweeps, MinimumStaysAwayFromZero) {
    // The joint violation cannot go below 1/3 on the unit sphere.
    const auto states = sample_candidates(100000, 0, true);
    const auto m = parallel::min_joint_violation(states);
    EXPECT_GE(m.value, 1.0 / 3.0 - 1e-12);
    EXPECT_LT(m.value, 0.4);
}

TEST(Sweeps, EmptyInput) {
    const std::vector<CandidateState> none;
    EXPECT_EQ(serial::identity_error(none), 0.0);
    EXPECT_EQ(parallel::identity_error(none), 0.0);
    EXPECT_EQ(parallel::reduction_errors(none).max(), 0.0);
}

}  // namespace
}  // namespace dj::kernels
