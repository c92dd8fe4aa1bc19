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

#include "dj/solver.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <limits>
#include <map>
#include <numbers>
#include <string>

namespace dj {
namespace {

// Comparisons against bare int literals recurse under C++20 rewritten operators.
const Rational kZero{0};
const Rational kOne{1};

double to_double(const Rational& r) { return boost::rational_cast<double>(r); }

TwoQubitState state_from_exact(const std::array<Rational, 4>& c) {
    return TwoQubitState::raw({to_double(c[0]), to_double(c[1]), to_double(c[2]), to_double(c[3])});
}

int sign_of(double x, double dead_zone) {
    if (x > dead_zone) return 1;
    if (x < -dead_zone) return -1;
    return 0;
}

}  // namespace

std::string_view case_name(CaseLabel label) {
    switch (label) {
        case CaseLabel::Case1:
            return "Case1";
        case CaseLabel::Case2:
            return "Case2";
        case CaseLabel::Case3:
            return "Case3";
        case CaseLabel::Case4:
            return "Case4";
    }
    throw std::logic_error("unknown CaseLabel");
}

const std::array<CaseBranch, 4>& case_branches() {
    static const std::array<CaseBranch, 4> kBranches{CaseBranch{CaseLabel::Case1, +1, +1},
                                                     CaseBranch{CaseLabel::Case2, +1, -1},
                                                     CaseBranch{CaseLabel::Case3, -1, +1},
                                                     CaseBranch{CaseLabel::Case4, -1, -1}};
    return kBranches;
}

CaseAnalysis analyze_case(const CaseBranch& branch) {
    const Rational s1{branch.c1_shift};
    const Rational s3{branch.c3_shift};

    // Normalization after substitution: qa c2^2 + qb c2 + (ka c4^2 + kb c4 + kc) = 0.
    const Rational qa{2};
    const Rational qb = 2 * s1;
    const Rational ka{2};
    const Rational kb = 2 * s3;
    const Rational kc = s1 * s1 + s3 * s3 - 1;

    // Quarter of qb^2 - 4 qa (ka c4^2 + kb c4 + kc), as a polynomial in c4.
    const Rational quarter{1, 4};
    const Rational a = -4 * qa * ka * quarter;
    const Rational b = -4 * qa * kb * quarter;
    const Rational c = (qb * qb - 4 * qa * kc) * quarter;

    CaseAnalysis out{branch, {a, b, c}, b * b - 4 * a * c, std::nullopt};
    if (a >= kZero) {
        throw std::logic_error("discriminant polynomial is expected to open downward");
    }
    if (out.apex_discriminant < kZero) {
        return out;  // D < 0 everywhere: c2 is never real
    }
    if (out.apex_discriminant > kZero) {
        throw std::logic_error(std::string(case_name(branch.label)) +
                               ": real solutions form a continuum, not isolated points");
    }

    // D touches zero only at its apex, where the c2 quadratic has a double root.
    const Rational c4 = -b / (2 * a);
    const Rational c2 = -qb / (2 * qa);
    const Rational c1 = c2 + s1;
    const Rational c3 = c4 + s3;

    const bool first_ok = 2 * c1 * c2 + c3 * c3 + c4 * c4 == kZero;
    const bool second_ok = 2 * c3 * c4 + c1 * c1 + c2 * c2 == kZero;
    const bool norm_ok = c1 * c1 + c2 * c2 + c3 * c3 + c4 * c4 == kOne;
    if (first_ok && second_ok && norm_ok) {
        out.exact = std::array<Rational, 4>{c1, c2, c3, c4};
    }
    return out;
}

bool equivalent_up_to_phase(const TwoQubitState& u, const TwoQubitState& v) {
    return std::abs(std::abs(inner(u, v)) - 1.0) <= kPhaseEquivalenceTolerance;
}

std::vector<DerivationSolution> solve_real_cases() {
    std::vector<DerivationSolution> out;
    for (const auto& branch : case_branches()) {
        const auto analysis = analyze_case(branch);
        if (!analysis.exact) continue;

        DerivationSolution sol;
        sol.case_label = branch.label;
        sol.exact = *analysis.exact;
        sol.state = state_from_exact(sol.exact);
        sol.max_residual = residuals(CandidateState{sol.state.amplitudes()}).max_feasibility();
        for (const auto& earlier : out) {
            if (!earlier.duplicate_of && equivalent_up_to_phase(earlier.state, sol.state)) {
                sol.duplicate_of = earlier.case_label;
                sol.relative_sign = inner(earlier.state, sol.state).real() < 0 ? -1.0 : 1.0;
                break;
            }
        }
        out.push_back(sol);
    }
    return out;
}

std::vector<DerivationSolution> distinct_solutions(const std::vector<DerivationSolution>& all) {
    std::vector<DerivationSolution> out;
    std::copy_if(all.begin(), all.end(), std::back_inserter(out),
                 [](const DerivationSolution& s) { return !s.duplicate_of; });
    return out;
}

void validate_grid_step(double step) {
    if (!(step > 0.0 && step <= kMaxGridStep)) {
        throw InvalidStep("grid step must satisfy 0 < step <= 0.5, got " + std::to_string(step));
    }
}

GridSearchResult grid_search(double step, kernels::Execution exec) {
    validate_grid_step(step);
    GridSearchResult result{kernels::scan_grid(step, exec), {}};

    std::map<std::array<int, 4>, GridCluster> by_pattern;
    std::map<std::array<int, 4>, std::array<double, 4>> sums;
    for (const auto& p : result.scan.survivors) {
        std::array<int, 4> pattern{};
        for (std::size_t i = 0; i < 4; ++i) pattern[i] = sign_of(p.c[i], step / 2.0);

        auto [it, inserted] = by_pattern.try_emplace(pattern);
        auto& cluster = it->second;
        auto& sum = sums[pattern];
        if (inserted || p.max_residual() < cluster.representative_residual) {
            cluster.sign_pattern = pattern;
            cluster.representative = CandidateState{{p.c[0], p.c[1], p.c[2], p.c[3]}};
            cluster.representative_residual = p.max_residual();
        }
        ++cluster.size;
        for (std::size_t i = 0; i < 4; ++i) sum[i] += p.c[i];
    }
    for (auto& [pattern, cluster] : by_pattern) {
        for (std::size_t i = 0; i < 4; ++i) {
            cluster.centroid[i] = sums[pattern][i] / static_cast<double>(cluster.size);
        }
        result.clusters.push_back(cluster);
    }
    return result;
}

GridAgreement compare_with_grid(const std::vector<DerivationSolution>& solutions,
                                const std::vector<GridCluster>& clusters, double tolerance) {
    const auto distinct = distinct_solutions(solutions);
    GridAgreement agreement;
    agreement.every_cluster_matched = !clusters.empty();
    std::vector<bool> found(distinct.size(), false);

    for (const auto& cluster : clusters) {
        ClusterMatch best;
        best.distance = std::numeric_limits<double>::infinity();
        for (std::size_t s = 0; s < distinct.size(); ++s) {
            for (double sign : {1.0, -1.0}) {
                double d = 0.0;
                for (std::size_t i = 0; i < 4; ++i) {
                    d = std::max(d, std::abs(cluster.representative.c[i] - sign * distinct[s].state[i]));
                }
                if (d < best.distance) {
                    best.distance = d;
                    best.sign = sign;
                    best.solution = distinct[s].case_label;
                }
            }
        }
        if (best.distance <= tolerance) {
            for (std::size_t s = 0; s < distinct.size(); ++s) {
                if (distinct[s].case_label == best.solution) found[s] = true;
            }
        } else {
            best.solution.reset();
            agreement.every_cluster_matched = false;
        }
        agreement.matches.push_back(best);
    }
    agreement.every_solution_found =
        !distinct.empty() && std::all_of(found.begin(), found.end(), [](bool b) { return b; });
    return agreement;
}

std::vector<double> theta_test_grid() {
    std::vector<double> thetas;
    constexpr int kSlices = 12;
    for (int k = 0; k < kSlices; ++k) thetas.push_back(2.0 * std::numbers::pi * k / kSlices);
    for (double t : {std::numbers::pi / 3.0, std::numbers::pi / 2.0, std::numbers::pi, 2.0, 5.5}) {
        thetas.push_back(t);
    }
    std::sort(thetas.begin(), thetas.end());
    thetas.erase(std::unique(thetas.begin(), thetas.end(),
                             [](double a, double b) { return std::abs(a - b) < 1e-15; }),
                 thetas.end());
    return thetas;
}

InfeasibilityReport identification_infeasibility(std::size_t samples, std::uint64_t seed,
                                                 kernels::Execution exec) {
    if (samples == 0) {
        throw std::invalid_argument("samples must be at least 1");
    }
    InfeasibilityReport report;
    report.seed = seed;

    const auto raw = kernels::sample_candidates(kIdentityCandidates, seed + 1, false);
    report.identity_candidates = raw.size();
    report.identity_max_error = kernels::identity_error(raw, exec);

    for (double theta : theta_test_grid()) {
        const auto state = tensor(Qubit::phase_plus(theta), Qubit::minus());
        const CandidateState psi{state.amplitudes()};
        const auto r = residuals(psi);
        report.theta_family.push_back({theta, r});
        report.theta_family_max_feasibility = std::max(report.theta_family_max_feasibility, r.max_feasibility());
        report.theta_family_max_fifth_deviation =
            std::max(report.theta_family_max_fifth_deviation, std::abs(std::abs(r.fifth) - 1.0));
        if (theta == 0.0) report.theta_family_pairing_sum = pairing_sum(psi);
    }

    for (BitPair p : all_bit_pairs()) {
        const auto e = TwoQubitState::basis(p);
        report.basis.push_back({basis_index(p), residuals(CandidateState{e.amplitudes()})});
    }

    const auto sphere = kernels::sample_candidates(samples, seed, true);
    const auto best = kernels::min_joint_violation(sphere, exec);
    report.sweep_samples = sphere.size();
    report.sweep_min_joint_violation = best.value;
    report.sweep_best_state = sphere[best.index];
    report.sweep_best_residuals = residuals(sphere[best.index]);
    return report;
}

}  // namespace dj
