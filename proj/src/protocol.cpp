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

#include "dj/protocol.hpp"

#include <cmath>
#include <string>

namespace dj {

DJInput DJInput::prepare(double theta) {
    if (!std::isfinite(theta)) {
        throw InvalidAngle("theta must be a finite number of radians");
    }
    const auto state = tensor(Qubit::phase_plus(theta), Qubit::minus());
    return DJInput{theta, TwoQubitState::normalized(state.amplitudes())};
}

QuantumOracle make_quantum_oracle(FunctionId id) {
    return [id](const TwoQubitState& psi) { return apply_oracle(id, psi); };
}

double projection_magnitude(CountingOracle& oracle, const TwoQubitState& psi) {
    return std::abs(inner(psi, oracle(psi)));
}

Verdict classify_projection(double magnitude) {
    const bool near_one = std::abs(magnitude - 1.0) <= kProjectionTolerance;
    const bool near_zero = std::abs(magnitude) <= kProjectionTolerance;
    if (!near_one && !near_zero) {
        throw ProtocolViolation("projection magnitude " + std::to_string(magnitude) +
                                " is neither 0 nor 1");
    }
    return magnitude > 0.5 ? Verdict::Constant : Verdict::Balanced;
}

DJOutcome run(const QuantumOracle& oracle, const DJInput& input) {
    CountingOracle counted{oracle};
    DJOutcome out;
    out.projection_magnitude = projection_magnitude(counted, input.state());
    out.verdict = classify_projection(out.projection_magnitude);
    out.oracle_calls = counted.calls();
    return out;
}

DJOutcome run(FunctionId id, const DJInput& input) { return run(make_quantum_oracle(id), input); }

}  // namespace dj
