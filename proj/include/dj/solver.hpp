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

// Recovers the optimal input state from the orthogonality conditions alone.
//
// Real case analysis: with real amplitudes, first = 0 plus normalization gives
// (c1 - c2)^2 = 1 and second = 0 plus normalization gives (c3 - c4)^2 = 1, so
// c1 = c2 + s1 and c3 = c4 + s3 with s1, s3 in {+1, -1}. Substituting into the
// normalization leaves a quadratic in c2,
//
//     2 c2^2 + 2 s1 c2 + (2 c4^2 + 2 s3 c4 + 1) = 0,
//
// which has a real root iff D(c4) = -4 c4^2 - 4 s3 c4 - 1 >= 0. D opens
// downward and touches zero at a single point, so each branch pins c4 and then
// c2 exactly. All of this runs in exact rational arithmetic.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "dj/constraints.hpp"
#include "dj/kernels.hpp"

namespace dj {

using Rational = boost::rational<std::int64_t>;

enum class CaseLabel { Case1, Case2, Case3, Case4 };

std::string_view case_name(CaseLabel label);

/// c1 = c2 + c1_shift, c3 = c4 + c3_shift.
struct CaseBranch {
    CaseLabel label;
    int c1_shift;
    int c3_shift;
};

/// Case1 (+1,+1), Case2 (+1,-1), Case3 (-1,+1), Case4 (-1,-1).
const std::array<CaseBranch, 4>& case_branches();

/// One branch of the case tree, solved exactly.
struct CaseAnalysis {
    CaseBranch branch;
    /// Coefficients (a, b, c) of D(c4) = a c4^2 + b c4 + c.
    std::array<Rational, 3> discriminant_poly;
    /// b^2 - 4ac of D; zero means the parabola's apex sits on the axis.
    Rational apex_discriminant;
    /// Exact amplitudes c1..c4 when the branch has an isolated real solution.
    std::optional<std::array<Rational, 4>> exact;
};

CaseAnalysis analyze_case(const CaseBranch& branch);

struct DerivationSolution {
    TwoQubitState state;
    CaseLabel case_label = CaseLabel::Case1;
    std::array<Rational, 4> exact{};
    double max_residual = 0.0;  // max(|first|, |second|, |norm|)
    /// Set when this state equals an earlier case's state up to a global phase.
    std::optional<CaseLabel> duplicate_of;
    /// <earlier | this>, meaningful only for duplicates (-1 for all real cases).
    double relative_sign = 1.0;
};

/// Two states are the same up to global phase when | |<u|v>| - 1 | <= this.
inline constexpr double kPhaseEquivalenceTolerance = 1e-9;

bool equivalent_up_to_phase(const TwoQubitState& u, const TwoQubitState& v);

/// Runs the four branches in order and tags later branches that repeat an
/// earlier state. Expect two distinct classes: Case1 and Case2.
std::vector<DerivationSolution> solve_real_cases();

/// Solutions with no duplicate_of.
std::vector<DerivationSolution> distinct_solutions(const std::vector<DerivationSolution>& all);

class InvalidStep : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr double kMaxGridStep = 0.5;

/// Grid survivors that share a sign pattern.
struct GridCluster {
    std::array<int, 4> sign_pattern{};  // -1, 0 or +1 per amplitude
    std::size_t size = 0;
    /// Lowest max residual in the cluster, earliest index on ties.
    CandidateState representative;
    double representative_residual = 0.0;
    std::array<double, 4> centroid{};
};

struct GridSearchResult {
    kernels::GridScan scan;
    std::vector<GridCluster> clusters;  // ordered by sign pattern
};

/// Throws InvalidStep unless 0 < step <= kMaxGridStep.
void validate_grid_step(double step);

GridSearchResult grid_search(double step, kernels::Execution exec = kernels::Execution::Parallel);

struct ClusterMatch {
    std::optional<CaseLabel> solution;  // distinct solution within tolerance, if any
    double sign = 1.0;                  // +1 or -1 relative to that solution
    double distance = 0.0;              // l-infinity distance to sign * solution
};

struct GridAgreement {
    std::vector<ClusterMatch> matches;  // one per cluster
    bool every_cluster_matched = false;
    bool every_solution_found = false;
    bool agrees() const { return every_cluster_matched && every_solution_found; }
};

/// Each representative must lie within `tolerance` (l-infinity) of plus or
/// minus a distinct solution, and each distinct solution must be hit.
GridAgreement compare_with_grid(const std::vector<DerivationSolution>& solutions,
                                const std::vector<GridCluster>& clusters, double tolerance);

struct ThetaFamilyCheck {
    double theta = 0.0;
    ConstraintResiduals residuals;
};

struct BasisCheck {
    std::size_t index = 0;
    ConstraintResiduals residuals;
};

/// Evidence that no single-query input separates all four functions.
struct InfeasibilityReport {
    std::uint64_t seed = 0;

    /// Matrix-route identity 2[Re(c1 conj c2) + Re(conj c3 c4)] = first + second - sum|c|^2
    /// on raw complex candidates drawn with seed + 1.
    std::size_t identity_candidates = 0;
    double identity_max_error = 0.0;

    /// Members of the phase family: first = second = 0 and |fifth| = 1.
    std::vector<ThetaFamilyCheck> theta_family;
    double theta_family_max_feasibility = 0.0;
    double theta_family_max_fifth_deviation = 0.0;  // max | |fifth| - 1 |
    double theta_family_pairing_sum = 0.0;          // at theta = 0, -1/2

    /// Basis vectors satisfy fifth = 0 but miss first or second by 1.
    std::vector<BasisCheck> basis;

    /// Uniform-on-sphere sweep drawn with `seed`.
    std::size_t sweep_samples = 0;
    double sweep_min_joint_violation = 0.0;
    CandidateState sweep_best_state;
    ConstraintResiduals sweep_best_residuals;
};

inline constexpr std::size_t kIdentityCandidates = 10'000;

/// Throws std::invalid_argument when samples == 0.
InfeasibilityReport identification_infeasibility(std::size_t samples = 100'000, std::uint64_t seed = 0,
                                                 kernels::Execution exec = kernels::Execution::Parallel);

/// The phase-family grid used by the infeasibility report and the CLI.
std::vector<double> theta_test_grid();

}  // namespace dj
