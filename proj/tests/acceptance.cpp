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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Each check recomputes its quantities through the public API.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include <fmt/core.h>

#include "dj/classical.hpp"
#include "dj/constraints.hpp"
#include "dj/kernels.hpp"
#include "dj/protocol.hpp"
#include "dj/quantum.hpp"
#include "dj/solver.hpp"

namespace {

using namespace dj;
using Clock = std::chrono::steady_clock;

constexpr double kTol = 1e-12;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

int g_failures = 0;

void report(const char* id, bool pass, const std::string& detail) {
    if (!pass) ++g_failures;
    fmt::print("[{}] {} {}\n", pass ? "PASS" : "FAIL", id, detail);
    std::fflush(stdout);
}

void info(const std::string& detail) { fmt::print("       info: {}\n", detail); }

const std::vector<double>& thetas() {
    static const std::vector<double> t{0.0, std::numbers::pi / 3, std::numbers::pi / 2, std::numbers::pi, 2.0, 5.5};
    return t;
}

void ac1_oracle_tables() {
    const auto t0 = Clock::now();
    bool ok = true;
    for (FunctionId id : kAllFunctions) {
        const auto m = oracle_matrix(id);
        ok = ok && m.entries() == printed_oracle_table(id) && m.is_permutation() && m.is_involution();
    }
    const double elapsed = seconds_since(t0);
    report("AC1", ok && elapsed < 1e-3,
           fmt::format("oracle tables exact, permutation, involution; {:.3f} ms (limit 1 ms)", elapsed * 1e3));
}

void ac2_classical_quantum_consistency() {
    int agree = 0;
    for (FunctionId id : kAllFunctions) {
        const auto f = OneBitFunction::from_id(id);
        for (BitPair p : all_bit_pairs()) {
            const auto got = apply_oracle(id, TwoQubitState::basis(p));
            const auto want = TwoQubitState::basis(apply_f_operator(f, p));
            if (got.amplitudes() == want.amplitudes()) ++agree;
        }
    }
    report("AC2", agree == 16, fmt::format("{}/16 basis actions match the classical operator exactly", agree));
}

void ac3_phase_kickback() {
    double worst = 0.0;
    int count = 0;
    for (FunctionId id : kAllFunctions) {
        const auto f = OneBitFunction::from_id(id);
        for (Bit x : kBits) {
            const auto in = tensor(x.value() == 0 ? Qubit::zero() : Qubit::one(), Qubit::minus());
            const double sign = f(x).value() == 0 ? 1.0 : -1.0;
            worst = std::max(worst, max_abs_diff(apply_oracle(id, in), in.scaled(sign)));
            ++count;
        }
    }
    report("AC3", count == 8 && worst <= kTol,
           fmt::format("{} (f, x) kickback checks, max entrywise error {:.3g} (tol 1e-12)", count, worst));
}

void ac4_single_query() {
    double worst = 0.0;
    bool verdicts = true;
    bool calls = true;
    for (double theta : thetas()) {
        const auto in = prepare_input(theta);
        for (FunctionId id : kAllFunctions) {
            const bool constant = OneBitFunction::from_id(id).is_constant();
            const auto out = run(id, in);
            worst = std::max(worst, std::abs(out.projection_magnitude - (constant ? 1.0 : 0.0)));
            verdicts = verdicts && out.verdict == (constant ? Verdict::Constant : Verdict::Balanced);
            calls = calls && out.oracle_calls == 1;
        }
    }
    report("AC4", worst <= kTol && verdicts && calls,
           fmt::format("6 angles x 4 oracles: max |projection - target| {:.3g}, verdicts {}, one call each {}", worst,
                       verdicts ? "correct" : "WRONG", calls ? "yes" : "NO"));
}

void ac5_derivation() {
    const auto all = solve_real_cases();
    const auto distinct = distinct_solutions(all);
    const auto s1 = TwoQubitState::raw({0.5, -0.5, 0.5, -0.5});
    const auto s2 = TwoQubitState::raw({0.5, -0.5, -0.5, 0.5});
    bool shape = distinct.size() == 2;
    double residual = 0.0;
    for (const auto& s : all) residual = std::max(residual, s.max_residual);
    if (shape) {
        shape = max_abs_diff(distinct[0].state, s1) <= kTol && max_abs_diff(distinct[1].state, s2) <= kTol;
    }

    const auto t0 = Clock::now();
    const auto grid = grid_search(0.05);
    const double elapsed = seconds_since(t0);
    const auto agreement = compare_with_grid(all, grid.clusters, 0.05);
    double distance = 0.0;
    for (const auto& m : agreement.matches) distance = std::max(distance, m.distance);

    const bool ok = shape && residual <= kTol && agreement.agrees() && elapsed < 2.0;
    report("AC5", ok,
           fmt::format("{} distinct solutions, max residual {:.3g}; grid 0.05: {} clusters, max l-inf distance {:.3g} "
                       "(tol 0.05), {:.3f} s (limit 2 s)",
                       distinct.size(), residual, grid.clusters.size(), distance, elapsed));
}

void ac6_constraint_reduction() {
    const auto candidates = kernels::sample_candidates(10'000, 0, false);
    const auto e = kernels::reduction_errors(candidates, kernels::Execution::Parallel);
    report("AC6", e.max() <= kTol,
           fmt::format("10^4 candidates: closed forms {:.3g}/{:.3g}, third=second {:.3g}, fourth=first {:.3g}, "
                       "sixth=fifth {:.3g} (tol 1e-12)",
                       e.first_vs_closed_form, e.second_vs_closed_form, e.third_vs_second, e.fourth_vs_first,
                       e.sixth_vs_fifth));

    // The opposite pairing (third=first, fourth=second) does not hold for generic states.
    double third_vs_first = 0.0;
    double fourth_vs_second = 0.0;
    for (const auto& psi : candidates) {
        const auto r = residuals(psi);
        third_vs_first = std::max(third_vs_first, std::abs(r.third - r.first));
        fourth_vs_second = std::max(fourth_vs_second, std::abs(r.fourth - r.second));
    }
    info(fmt::format("swapped pairing third=first max error {:.3g}, fourth=second max error {:.3g}", third_vs_first,
                     fourth_vs_second));
}

void ac7_classical_bound() {
    const auto bound = min_classical_queries();
    bool all_fail = bound.one_query.size() == 16;
    for (const auto& e : bound.one_query) all_fail = all_fail && !e.misclassified.empty();
    const auto witness = run_two_query_witness();
    report("AC7", all_fail && !bound.any_one_query_strategy_succeeds && witness.correct_count == 4,
           fmt::format("{} one-query strategies all misclassify: {}; two-query strategy scores {}/4",
                       bound.one_query.size(), all_fail ? "yes" : "NO", witness.correct_count));
}

void ac8_infeasibility() {
    const auto r = identification_infeasibility(100'000, 0);
    const bool ok = r.identity_candidates == 10'000 && r.identity_max_error <= kTol &&
                    r.theta_family_max_feasibility <= kTol && r.theta_family_max_fifth_deviation <= kTol &&
                    r.sweep_samples == 100'000 && r.sweep_min_joint_violation >= 0.1;
    report("AC8", ok,
           fmt::format("identity max error {:.3g} on {} candidates; theta family max |first|,|second| {:.3g}, "
                       "max ||fifth|-1| {:.3g}; sweep of {} states (seed 0) min joint violation {:.6f} (>= 0.1)",
                       r.identity_max_error, r.identity_candidates, r.theta_family_max_feasibility,
                       r.theta_family_max_fifth_deviation, r.sweep_samples, r.sweep_min_joint_violation));
}

void ac9_non_identification() {
    bool same = true;
    for (double theta : thetas()) {
        const auto in = prepare_input(theta);
        const auto ci = run(FunctionId::CI, in);
        const auto cii = run(FunctionId::CII, in);
        const auto bi = run(FunctionId::BI, in);
        const auto bii = run(FunctionId::BII, in);
        same = same && ci.verdict == cii.verdict && bi.verdict == bii.verdict &&
               std::abs(ci.projection_magnitude - cii.projection_magnitude) <= kTol &&
               std::abs(bi.projection_magnitude - bii.projection_magnitude) <= kTol;
    }
    report("AC9", same, "C_I vs C_II and B_I vs B_II give identical outcomes at all 6 angles");
}

}  // namespace

int main() {
    const auto t0 = Clock::now();
    ac1_oracle_tables();
    ac2_classical_quantum_consistency();
    ac3_phase_kickback();
    ac4_single_query();
    ac5_derivation();
    ac6_constraint_reduction();
    ac7_classical_bound();
    ac8_infeasibility();
    ac9_non_identification();
    const double elapsed = seconds_since(t0);
    report("AC10", elapsed < 5.0, fmt::format("acceptance suite wall-clock {:.3f} s (limit 5 s)", elapsed));
    fmt::print("{} failure(s)\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
