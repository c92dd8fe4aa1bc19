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
#include <limits>
#include <numbers>

#include "dj/protocol.hpp"

namespace dj {
namespace {

constexpr double kTol = 1e-12;
constexpr double kPi = std::numbers::pi;

std::vector<double> theta_grid() {
    std::vector<double> out;
    for (int k = 0; k < 64; ++k) out.push_back(2.0 * kPi * k / 64.0);
    return out;
}

TEST(PrepareInput, Examples) {
    const auto s0 = prepare_input(0.0).state();
    const auto spi = prepare_input(kPi).state();
    const auto shalf = prepare_input(kPi / 2).state();
    const TwoQubitState::Amplitudes want0{0.5, -0.5, 0.5, -0.5};
    const TwoQubitState::Amplitudes wantpi{0.5, -0.5, -0.5, 0.5};
    const TwoQubitState::Amplitudes wanthalf{0.5, -0.5, Complex{0, 0.5}, Complex{0, -0.5}};
    EXPECT_LE(max_abs_diff(s0, TwoQubitState::raw(want0)), kTol);
    EXPECT_LE(max_abs_diff(spi, TwoQubitState::raw(wantpi)), kTol);
    EXPECT_LE(max_abs_diff(shalf, TwoQubitState::raw(wanthalf)), kTol);
}

TEST(PrepareInput, RejectsNonFiniteTheta) {
    EXPECT_THROW(prepare_input(std::numeric_limits<double>::quiet_NaN()), InvalidAngle);
    EXPECT_THROW(prepare_input(std::numeric_limits<double>::infinity()), InvalidAngle);
    EXPECT_THROW(prepare_input(-std::numeric_limits<double>::infinity()), InvalidAngle);
}

TEST(PrepareInput, MatchesFamilyFormula) {
    const double r = 1.0 / std::sqrt(2.0);
    for (double theta : theta_grid()) {
        const Complex e = std::polar(1.0, theta);
        const TwoQubitState::Amplitudes want{r * r, -r * r, r * r * e, -r * r * e};
        EXPECT_LE(max_abs_diff(prepare_input(theta).state(), TwoQubitState::raw(want)), kTol);
    }
}

TEST(Run, Examples) {
    const auto in0 = prepare_input(0.0);
    auto ci = run(FunctionId::CI, in0);
    EXPECT_NEAR(ci.projection_magnitude, 1.0, kTol);
    EXPECT_EQ(ci.verdict, Verdict::Constant);
    auto bi = run(FunctionId::BI, in0);
    EXPECT_NEAR(bi.projection_magnitude, 0.0, kTol);
    EXPECT_EQ(bi.verdict, Verdict::Balanced);
    auto cii = run(FunctionId::CII, prepare_input(kPi / 3));
    EXPECT_NEAR(cii.projection_magnitude, 1.0, kTol);
    EXPECT_EQ(cii.verdict, Verdict::Constant);
}

TEST(Run, CorrectOnEveryThetaAndCallsOracleOnce) {
    for (double theta : theta_grid()) {
        const auto in = prepare_input(theta);
        for (FunctionId id : kAllFunctions) {
            const auto out = run(id, in);
            const bool constant = OneBitFunction::from_id(id).is_constant();
            EXPECT_NEAR(out.projection_magnitude, constant ? 1.0 : 0.0, kTol) << theta;
            EXPECT_EQ(out.verdict, constant ? Verdict::Constant : Verdict::Balanced);
            EXPECT_EQ(out.oracle_calls, 1);
        }
    }
}

TEST(Run, CannotSeparateWithinAClass) {
    for (double theta : theta_grid()) {
        const auto in = prepare_input(theta);
        const auto a = run(FunctionId::CI, in);
        const auto b = run(FunctionId::CII, in);
        const auto c = run(FunctionId::BI, in);
        const auto d = run(FunctionId::BII, in);
        EXPECT_EQ(a.verdict, b.verdict);
        EXPECT_NEAR(a.projection_magnitude, b.projection_magnitude, kTol);
        EXPECT_EQ(c.verdict, d.verdict);
        EXPECT_NEAR(c.projection_magnitude, d.projection_magnitude, kTol);
    }
}

TEST(Run, OnlyTouchesTheOracleThroughTheCallback) {
    int external_calls = 0;
    QuantumOracle spy = [&](const TwoQubitState& psi) {
        ++external_calls;
        return apply_oracle(FunctionId::BII, psi);
    };
    const auto out = run(spy, prepare_input(1.0));
    EXPECT_EQ(external_calls, 1);
    EXPECT_EQ(out.oracle_calls, 1);
    EXPECT_EQ(out.verdict, Verdict::Balanced);
}

TEST(ProjectionMagnitude, InsensitiveToGlobalPhase) {
    for (double theta : {0.0, 0.7, 2.0, 5.5}) {
        const auto psi = prepare_input(theta).state();
        for (double phi : {0.3, 1.0, kPi, 4.0}) {
            const auto rotated = psi.scaled(std::polar(1.0, phi));
            for (FunctionId id : kAllFunctions) {
                CountingOracle a{make_quantum_oracle(id)};
                CountingOracle b{make_quantum_oracle(id)};
                EXPECT_NEAR(projection_magnitude(a, psi), projection_magnitude(b, rotated), kTol);
            }
        }
    }
}

TEST(ClassifyProjection, RejectsMidRangeValues) {
    EXPECT_EQ(classify_projection(1.0), Verdict::Constant);
    EXPECT_EQ(classify_projection(1.0 - 5e-10), Verdict::Constant);
    EXPECT_EQ(classify_projection(0.0), Verdict::Balanced);
    EXPECT_EQ(classify_projection(5e-10), Verdict::Balanced);
    EXPECT_THROW(classify_projection(0.5), ProtocolViolation);
    EXPECT_THROW(classify_projection(0.99), ProtocolViolation);
    EXPECT_THROW(classify_projection(1e-6), ProtocolViolation);
}

TEST(Run, BrokenInputRaisesProtocolViolation) {
    // A basis-state oracle that is not one of the four: maps everything to |00>.
    QuantumOracle bogus = [](const TwoQubitState&) { return TwoQubitState::basis({Bit{0}, Bit{0}}); };
    EXPECT_THROW(run(bogus, prepare_input(0.0)), ProtocolViolation);
}

}  // namespace
}  // namespace dj
