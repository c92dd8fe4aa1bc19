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

#include <functional>
#include <stdexcept>

#include "dj/quantum.hpp"

namespace dj {

class InvalidAngle : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a projection lands away from both 0 and 1, which means the
/// input was not a member of the phase family.
class ProtocolViolation : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Distance from {0, 1} tolerated before a projection is rejected.
inline constexpr double kProjectionTolerance = 1e-9;

/// ((|0> + e^{i theta}|1>)/sqrt2) (x) ((|0> - |1>)/sqrt2).
class DJInput {
  public:
    /// Throws InvalidAngle for NaN or infinite theta.
    static DJInput prepare(double theta);

    double theta() const { return theta_; }
    const TwoQubitState& state() const { return state_; }

  private:
    DJInput(double theta, TwoQubitState state) : theta_(theta), state_(state) {}

    double theta_;
    TwoQubitState state_;
};

inline DJInput prepare_input(double theta) { return DJInput::prepare(theta); }

/// A black box the protocol may only call. It never sees which function is
/// behind it.
using QuantumOracle = std::function<TwoQubitState(const TwoQubitState&)>;

QuantumOracle make_quantum_oracle(FunctionId id);

/// Wraps an oracle and counts how many times it was applied.
class CountingOracle {
  public:
    explicit CountingOracle(QuantumOracle inner) : inner_(std::move(inner)) {}

    TwoQubitState operator()(const TwoQubitState& psi) {
        ++calls_;
        return inner_(psi);
    }
    int calls() const { return calls_; }

  private:
    QuantumOracle inner_;
    int calls_ = 0;
};

struct DJOutcome {
    double projection_magnitude = 0.0;
    Verdict verdict = Verdict::Constant;
    int oracle_calls = 0;
};

/// |<psi|O psi>| for an arbitrary state. One oracle call.
double projection_magnitude(CountingOracle& oracle, const TwoQubitState& psi);

/// Constant above 1/2, Balanced below. Throws ProtocolViolation unless the
/// magnitude is within kProjectionTolerance of 0 or 1.
Verdict classify_projection(double magnitude);

DJOutcome run(const QuantumOracle& oracle, const DJInput& input);
DJOutcome run(FunctionId id, const DJInput& input);

}  // namespace dj
