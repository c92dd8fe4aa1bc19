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

#include <array>

#include "dj/quantum.hpp"

namespace dj {

/// Four amplitudes c1..c4 in the |00>, |01>, |10>, |11> order. Not required
/// to be normalized.
struct CandidateState {
    std::array<Complex, 4> c{};

    TwoQubitState as_state() const { return TwoQubitState::raw(c); }
    double norm_squared() const;
};

/// How far a candidate is from each orthogonality condition.
///
/// `first`..`fourth` are <F_C psi | F_B psi> for (C_I,B_I), (C_I,B_II),
/// (C_II,B_I), (C_II,B_II). `first` and `second` use the reduced closed forms
///   first  = 2 Re(c1 conj c2) + |c3|^2 + |c4|^2
///   second = 2 Re(conj c3 c4) + |c1|^2 + |c2|^2
/// while `third` and `fourth` are computed from the oracle matrices. The
/// matrix route gives third == second and fourth == first.
///
/// `fifth` = <F_CI psi | F_CII psi> in closed form, `sixth` = <F_BI psi | F_BII psi>
/// through the matrices; both equal 2 [Re(conj c1 c2) + Re(conj c3 c4)].
struct ConstraintResiduals {
    Complex first;
    Complex second;
    Complex third;
    Complex fourth;
    Complex fifth;
    Complex sixth;
    double norm = 0.0;  // sum |c_i|^2 - 1

    /// max(|first|, |second|, |norm|): zero exactly for a valid input state.
    double max_feasibility() const;
    /// max(|first|, |second|, |fifth|): zero only if all four functions
    /// could be told apart in one query.
    double joint_violation() const;
};

/// <F_bra psi | F_ket psi> through the explicit oracle matrices.
Complex pairing(FunctionId bra, FunctionId ket, const CandidateState& psi);

Complex closed_form_first(const CandidateState& psi);
Complex closed_form_second(const CandidateState& psi);
Complex closed_form_fifth(const CandidateState& psi);

ConstraintResiduals residuals(const CandidateState& psi);

/// Re(conj c1 c2) + Re(conj c3 c4). Forced to -1/2 by first = second = 0 on a
/// normalized state; single-query identification would need it to be 0.
double pairing_sum(const CandidateState& psi);

}  // namespace dj
