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

#include "dj/constraints.hpp"

#include <algorithm>
#include <cmath>

namespace dj {

double CandidateState::norm_squared() const {
    return std::norm(c[0]) + std::norm(c[1]) + std::norm(c[2]) + std::norm(c[3]);
}

double ConstraintResiduals::max_feasibility() const {
    return std::max({std::abs(first), std::abs(second), std::abs(norm)});
}

double ConstraintResiduals::joint_violation() const {
    return std::max({std::abs(first), std::abs(second), std::abs(fifth)});
}

Complex pairing(FunctionId bra, FunctionId ket, const CandidateState& psi) {
    const auto state = psi.as_state();
    return inner(apply_oracle(bra, state), apply_oracle(ket, state));
}

Complex closed_form_first(const CandidateState& psi) {
    const auto& c = psi.c;
    return 2.0 * (c[0] * std::conj(c[1])).real() + std::norm(c[2]) + std::norm(c[3]);
}

Complex closed_form_second(const CandidateState& psi) {
    const auto& c = psi.c;
    return 2.0 * (std::conj(c[2]) * c[3]).real() + std::norm(c[0]) + std::norm(c[1]);
}

Complex closed_form_fifth(const CandidateState& psi) {
    const auto& c = psi.c;
    return std::conj(c[0]) * c[1] + std::conj(c[1]) * c[0] + std::conj(c[2]) * c[3] +
           std::conj(c[3]) * c[2];
}

ConstraintResiduals residuals(const CandidateState& psi) {
    ConstraintResiduals r;
    r.first = closed_form_first(psi);
    r.second = closed_form_second(psi);
    r.third = pairing(FunctionId::CII, FunctionId::BI, psi);
    r.fourth = pairing(FunctionId::CII, FunctionId::BII, psi);
    r.fifth = closed_form_fifth(psi);
    r.sixth = pairing(FunctionId::BI, FunctionId::BII, psi);
    r.norm = psi.norm_squared() - 1.0;
    return r;
}

double pairing_sum(const CandidateState& psi) {
    const auto& c = psi.c;
    return (std::conj(c[0]) * c[1]).real() + (std::conj(c[2]) * c[3]).real();
}

}  // namespace dj
