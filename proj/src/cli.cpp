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

#include "dj/cli.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <ostream>

#include <fmt/format.h>

#include "CLI11.hpp"

#include "dj/classical.hpp"
#include "dj/solver.hpp"

namespace dj::cli {
namespace {

using nlohmann::json;

std::string num(double x) {
    if (x == 0.0) x = 0.0;  // no "-0"
    return fmt::format("{:.12g}", x);
}

std::string cnum(Complex z) {
    const double re = z.real() == 0.0 ? 0.0 : z.real();
    const double im = z.imag() == 0.0 ? 0.0 : z.imag();
    if (im == 0.0) return num(re);
    return fmt::format("{}{}{}i", num(re), im < 0 ? "-" : "+", num(std::abs(im)));
}

std::string rat(const Rational& r) {
    if (r.denominator() == 1) return fmt::format("{}", r.numerator());
    return fmt::format("{}/{}", r.numerator(), r.denominator());
}

json cjson(Complex z) { return json::array({z.real(), z.imag()}); }

json state_json(const std::array<Complex, 4>& c) {
    json out = json::array();
    for (const auto& z : c) out.push_back(cjson(z));
    return out;
}

std::string state_text(const std::array<Complex, 4>& c) {
    return fmt::format("({}, {}, {}, {})", cnum(c[0]), cnum(c[1]), cnum(c[2]), cnum(c[3]));
}

json residuals_json(const ConstraintResiduals& r) {
    return {{"first", cjson(r.first)},   {"second", cjson(r.second)}, {"third", cjson(r.third)},
            {"fourth", cjson(r.fourth)}, {"fifth", cjson(r.fifth)},   {"sixth", cjson(r.sixth)},
            {"norm", r.norm}};
}

const char* pass_word(bool ok) { return ok ? "PASS" : "FAIL"; }

std::string fname(FunctionId id) { return std::string(function_name(id)); }
std::string vname(Verdict v) { return std::string(verdict_name(v)); }

std::optional<double> parse_real(const std::string& text) {
    if (text.empty()) return std::nullopt;
    errno = 0;
    char* end = nullptr;
    const double value = std::strtod(text.c_str(), &end);
    if (end != text.c_str() + text.size() || errno == ERANGE) return std::nullopt;
    return value;
}

}  // namespace

json CommandReport::document() const {
    return {{"command", command}, {"inputs", inputs}, {"results", results}, {"pass", pass}};
}

std::string render(const CommandReport& report, OutputFormat format) {
    if (format == OutputFormat::Json) return report.document().dump(2) + "\n";
    return report.text + fmt::format("pass: {}\n", report.pass ? "true" : "false");
}

// ---------------------------------------------------------------------------
// matrices

CommandReport cmd_matrices() {
    CommandReport rep;
    rep.command = "matrices";
    rep.pass = true;

    json matrices = json::object();
    json checks = json::object();
    std::string text = "basis order: |00> |01> |10> |11>\n";
    for (FunctionId id : kAllFunctions) {
        const auto m = oracle_matrix(id);
        json rows = json::array();
        text += fmt::format("\nF_{}\n", function_name(id));
        for (std::size_t r = 0; r < 4; ++r) {
            rows.push_back(json::array({m(r, 0), m(r, 1), m(r, 2), m(r, 3)}));
            text += fmt::format("  {} {} {} {}\n", m(r, 0), m(r, 1), m(r, 2), m(r, 3));
        }
        matrices[fname(id)] = rows;
        const bool perm = m.is_permutation();
        const bool inv = m.is_involution();
        checks[fname(id)] = {{"permutation", perm}, {"involution", inv}};
        text += fmt::format("  permutation: {}  involution: {}\n", perm ? "yes" : "no", inv ? "yes" : "no");
        rep.pass = rep.pass && perm && inv;
    }
    rep.results = {{"basis", json::array({"|00>", "|01>", "|10>", "|11>"})},
                   {"order", json::array({"C_I", "C_II", "B_I", "B_II"})},
                   {"matrices", matrices},
                   {"checks", checks}};
    rep.text = text;
    return rep;
}

// ---------------------------------------------------------------------------
// derive

CommandReport cmd_derive(std::optional<double> grid_step) {
    if (grid_step) validate_grid_step(*grid_step);

    CommandReport rep;
    rep.command = "derive";
    rep.inputs["grid_step"] = grid_step ? json(*grid_step) : json(nullptr);

    const auto solutions = solve_real_cases();
    const auto distinct = distinct_solutions(solutions);

    json sols = json::array();
    std::string text = "real case analysis (c1 = c2 + s1, c3 = c4 + s3)\n";
    bool residuals_ok = true;
    for (const auto& branch : case_branches()) {
        const auto analysis = analyze_case(branch);
        const auto& d = analysis.discriminant_poly;
        text += fmt::format("{}: s1={:+d} s3={:+d}  D(c4) = ({}) c4^2 + ({}) c4 + ({})  apex discriminant {}\n",
                            case_name(branch.label), branch.c1_shift, branch.c3_shift, rat(d[0]), rat(d[1]),
                            rat(d[2]), rat(analysis.apex_discriminant));
    }
    for (const auto& s : solutions) {
        json entry = {{"case", std::string(case_name(s.case_label))},
                      {"amplitudes", state_json(s.state.amplitudes())},
                      {"exact", json::array({rat(s.exact[0]), rat(s.exact[1]), rat(s.exact[2]), rat(s.exact[3])})},
                      {"max_residual", s.max_residual},
                      {"duplicate_of", s.duplicate_of ? json(std::string(case_name(*s.duplicate_of))) : json(nullptr)},
                      {"relative_sign", s.relative_sign}};
        sols.push_back(entry);
        residuals_ok = residuals_ok && s.max_residual <= kNormTolerance;
        text += fmt::format("{}: c = ({}, {}, {}, {})  max residual {}", case_name(s.case_label), rat(s.exact[0]),
                            rat(s.exact[1]), rat(s.exact[2]), rat(s.exact[3]), num(s.max_residual));
        if (s.duplicate_of) {
            text += fmt::format("  duplicate of {} (sign {})", case_name(*s.duplicate_of), num(s.relative_sign));
        }
        text += "\n";
    }
    text += fmt::format("distinct solutions up to global sign: {}\n", distinct.size());
    rep.results["solutions"] = sols;
    rep.results["distinct_count"] = distinct.size();
    rep.pass = residuals_ok && distinct.size() == 2;

    if (grid_step) {
        const auto grid = grid_search(*grid_step);
        const auto agreement = compare_with_grid(solutions, grid.clusters, *grid_step);
        json clusters = json::array();
        text += fmt::format("grid search: step {}  {} points per axis  {} points  {} survivors  {} clusters\n",
                            num(*grid_step), grid.scan.points_per_axis, grid.scan.points_scanned,
                            grid.scan.survivors.size(), grid.clusters.size());
        for (std::size_t i = 0; i < grid.clusters.size(); ++i) {
            const auto& c = grid.clusters[i];
            const auto& m = agreement.matches[i];
            const std::array<Complex, 4> rep_state = c.representative.c;
            clusters.push_back({{"sign_pattern", c.sign_pattern},
                                {"size", c.size},
                                {"representative", state_json(rep_state)},
                                {"representative_residual", c.representative_residual},
                                {"centroid", c.centroid},
                                {"matches", m.solution ? json(std::string(case_name(*m.solution))) : json(nullptr)},
                                {"sign", m.sign},
                                {"distance", m.distance}});
            text += fmt::format("  [{:+d} {:+d} {:+d} {:+d}] size {}  representative {}  residual {}  ",
                                c.sign_pattern[0], c.sign_pattern[1], c.sign_pattern[2], c.sign_pattern[3],
                                c.size, state_text(rep_state), num(c.representative_residual));
            if (m.solution) {
                text += fmt::format("matches {}{} at distance {}\n", m.sign < 0 ? "-" : "+",
                                    case_name(*m.solution), num(m.distance));
            } else {
                text += "no match\n";
            }
        }
        text += fmt::format("agreement: {}\n", agreement.agrees() ? "true" : "false");
        rep.results["grid"] = {{"step", *grid_step},
                               {"points_per_axis", grid.scan.points_per_axis},
                               {"points_scanned", grid.scan.points_scanned},
                               {"survivors", grid.scan.survivors.size()},
                               {"clusters", clusters},
                               {"agreement", agreement.agrees()}};
        rep.pass = rep.pass && agreement.agrees();
    }
    rep.text = text;
    return rep;
}

// ---------------------------------------------------------------------------
// verify

VerificationReport verify_all(double theta) {
    const auto input = prepare_input(theta);
    VerificationReport rep;
    rep.theta = theta;
    rep.pass = true;

    for (FunctionId id : kAllFunctions) {
        const Verdict expected = OneBitFunction::from_id(id).kind();
        OracleOutcome o{id, expected, {}, false};
        try {
            o.outcome = run(id, input);
            o.pass = o.outcome.verdict == expected && o.outcome.oracle_calls == 1;
        } catch (const ProtocolViolation&) {
            o.pass = false;
        }
        rep.outcomes.push_back(o);
        rep.pass = rep.pass && o.pass;
    }

    for (FunctionId id : kAllFunctions) {
        const auto f = OneBitFunction::from_id(id);
        for (Bit x : kBits) {
            const auto control = x.value() == 0 ? Qubit::zero() : Qubit::one();
            const auto in = tensor(control, Qubit::minus());
            const double phase = f(x).value() == 0 ? 1.0 : -1.0;
            const double err = max_abs_diff(apply_oracle(id, in), in.scaled(phase));
            const bool ok = err <= kExactTolerance;
            rep.kickback.push_back({id, x.value(), err, ok});
            rep.pass = rep.pass && ok;
        }
    }

    for (FunctionId id : kAllFunctions) {
        const auto m = oracle_matrix(id);
        const auto& psi = input.state();
        const auto once = m.apply(psi);
        OracleCheck c{id, m.is_permutation(), m.is_involution(), max_abs_diff(m.apply(once), psi),
                      std::abs(std::sqrt(once.norm_squared()) - std::sqrt(psi.norm_squared())), false};
        c.pass = c.permutation && c.involution && c.state_involution_error <= kExactTolerance &&
                 c.norm_error <= kExactTolerance;
        rep.oracles.push_back(c);
        rep.pass = rep.pass && c.pass;
    }
    return rep;
}

CommandReport cmd_verify(double theta) {
    const auto v = verify_all(theta);
    CommandReport rep;
    rep.command = "verify";
    rep.inputs["theta"] = theta;
    rep.pass = v.pass;

    std::string text = fmt::format("theta: {}\n", num(theta));
    json outcomes = json::array();
    for (const auto& o : v.outcomes) {
        outcomes.push_back({{"function", fname(o.function)},
                            {"expected", vname(o.expected)},
                            {"projection_magnitude", o.outcome.projection_magnitude},
                            {"verdict", vname(o.outcome.verdict)},
                            {"oracle_calls", o.outcome.oracle_calls},
                            {"pass", o.pass}});
        text += fmt::format("{:<5} projection {:<16} verdict {:<9} oracle calls {}  {}\n", function_name(o.function),
                            num(o.outcome.projection_magnitude), verdict_name(o.outcome.verdict),
                            o.outcome.oracle_calls, pass_word(o.pass));
    }
    json kickback = json::array();
    for (const auto& k : v.kickback) {
        kickback.push_back(
            {{"function", fname(k.function)}, {"control", k.control}, {"max_error", k.max_error}, {"pass", k.pass}});
        text += fmt::format("kickback {:<5} x={}  max error {}  {}\n", function_name(k.function), k.control,
                            num(k.max_error), pass_word(k.pass));
    }
    json oracles = json::array();
    for (const auto& c : v.oracles) {
        oracles.push_back({{"function", fname(c.function)},
                           {"permutation", c.permutation},
                           {"involution", c.involution},
                           {"state_involution_error", c.state_involution_error},
                           {"norm_error", c.norm_error},
                           {"pass", c.pass}});
        text += fmt::format("oracle {:<5} permutation {}  involution {}  O(O psi) error {}  norm error {}  {}\n",
                            function_name(c.function), c.permutation ? "yes" : "no", c.involution ? "yes" : "no",
                            num(c.state_involution_error), num(c.norm_error), pass_word(c.pass));
    }
    rep.results = {{"outcomes", outcomes}, {"kickback", kickback}, {"oracles", oracles}};
    rep.text = text;
    return rep;
}

// ---------------------------------------------------------------------------
// classical

CommandReport cmd_classical() {
    const auto report = min_classical_queries();
    CommandReport rep;
    rep.command = "classical";

    std::string text = "one-query strategies (deterministic, non-adaptive): 16\n";
    json strategies = json::array();
    for (const auto& e : report.one_query) {
        const auto& s = e.strategy;
        json missed = json::array();
        for (auto id : e.misclassified) missed.push_back(fname(id));
        strategies.push_back({{"query", {{"x", s.query.x.value()}, {"y", s.query.y.value()}}},
                              {"decision", {{"0", vname(s.decision[0])}, {"1", vname(s.decision[1])}}},
                              {"misclassified", missed},
                              {"failing_witness", e.misclassified.empty() ? json(nullptr) : json(missed[0])}});
        std::string missed_text;
        for (auto id : e.misclassified) missed_text += fmt::format(" {}", function_name(id));
        text += fmt::format("  query ({},{})  0->{:<8} 1->{:<8} misclassifies:{}\n", s.query.x.value(),
                            s.query.y.value(), verdict_name(s.decision[0]), verdict_name(s.decision[1]),
                            missed_text.empty() ? " none" : missed_text);
    }

    const auto& w = report.two_query;
    json runs = json::array();
    text += fmt::format("two-query witness: query ({},{}) then ({},{}), verdict Balanced iff outputs differ\n",
                        w.queries[0].x.value(), w.queries[0].y.value(), w.queries[1].x.value(), w.queries[1].y.value());
    for (const auto& r : w.runs) {
        runs.push_back({{"function", fname(r.function)},
                        {"outputs", json::array({r.first_output.value(), r.second_output.value()})},
                        {"verdict", vname(r.verdict)},
                        {"correct", r.correct}});
        text += fmt::format("  {:<5} outputs {} {}  verdict {:<8}  {}\n", function_name(r.function),
                            r.first_output.value(), r.second_output.value(), verdict_name(r.verdict),
                            r.correct ? "correct" : "wrong");
    }
    text += fmt::format("two-query score: {}/4 with {} oracle calls\n", w.correct_count, w.oracle_calls_per_function);
    text += fmt::format("lower bound: {}\n", report.lower_bound);

    rep.results = {{"strategy_space", "deterministic non-adaptive single-query"},
                   {"strategies", strategies},
                   {"any_one_query_strategy_succeeds", report.any_one_query_strategy_succeeds},
                   {"two_query",
                    {{"queries", json::array({json::array({w.queries[0].x.value(), w.queries[0].y.value()}),
                                              json::array({w.queries[1].x.value(), w.queries[1].y.value()})})},
                     {"runs", runs},
                     {"correct", w.correct_count},
                     {"oracle_calls", w.oracle_calls_per_function}}},
                   {"lower_bound", report.lower_bound}};
    rep.pass = report.lower_bound == 2 && w.correct_count == 4;
    rep.text = text;
    return rep;
}

// ---------------------------------------------------------------------------
// impossible

CommandReport cmd_impossible(std::int64_t samples, std::uint64_t seed) {
    if (samples < 1) {
        throw std::invalid_argument("--samples must be at least 1");
    }
    const auto r = identification_infeasibility(static_cast<std::size_t>(samples), seed);
    CommandReport rep;
    rep.command = "impossible";
    rep.inputs = {{"samples", samples}, {"seed", seed}};

    const bool identity_ok = r.identity_max_error <= kExactTolerance;
    const bool family_ok =
        r.theta_family_max_feasibility <= kExactTolerance && r.theta_family_max_fifth_deviation <= kExactTolerance;
    const bool sweep_ok = r.sweep_min_joint_violation >= kSweepBoundThreshold;
    rep.pass = identity_ok && sweep_ok;

    std::string text;
    text += fmt::format("identity 2[Re(c1 c2*) + Re(c3* c4)] = first + second - |c|^2 on {} candidates: "
                        "max error {}  {}\n",
                        r.identity_candidates, num(r.identity_max_error), pass_word(identity_ok));
    text += fmt::format("phase family ({} angles): max |first|,|second| {}  max ||fifth| - 1| {}  {}\n",
                        r.theta_family.size(), num(r.theta_family_max_feasibility),
                        num(r.theta_family_max_fifth_deviation), pass_word(family_ok));
    text += fmt::format("phase family at theta=0: Re(c1* c2) + Re(c3* c4) = {} (identification needs 0)\n",
                        num(r.theta_family_pairing_sum));
    json family = json::array();
    for (const auto& t : r.theta_family) {
        family.push_back({{"theta", t.theta}, {"residuals", residuals_json(t.residuals)}});
    }
    json basis = json::array();
    for (const auto& b : r.basis) {
        basis.push_back({{"index", b.index}, {"residuals", residuals_json(b.residuals)}});
        text += fmt::format("basis e{}: first {}  second {}  fifth {}\n", b.index + 1, cnum(b.residuals.first),
                            cnum(b.residuals.second), cnum(b.residuals.fifth));
    }
    text += fmt::format("sweep: {} uniform states, seed {}: min max(|first|,|second|,|fifth|) = {}  "
                        "(threshold {})  {}\n",
                        r.sweep_samples, seed, num(r.sweep_min_joint_violation), num(kSweepBoundThreshold),
                        pass_word(sweep_ok));
    text += fmt::format("sweep best state {}\n", state_text(r.sweep_best_state.c));

    rep.results = {
        {"identity",
         {{"candidates", r.identity_candidates},
          {"max_error", r.identity_max_error},
          {"tolerance", kExactTolerance},
          {"holds", identity_ok}}},
        {"theta_family",
         {{"checks", family},
          {"max_feasibility", r.theta_family_max_feasibility},
          {"max_fifth_deviation", r.theta_family_max_fifth_deviation},
          {"pairing_sum_theta0", r.theta_family_pairing_sum},
          {"holds", family_ok}}},
        {"basis", basis},
        {"sweep",
         {{"samples", r.sweep_samples},
          {"seed", seed},
          {"min_joint_violation", r.sweep_min_joint_violation},
          {"threshold", kSweepBoundThreshold},
          {"best_state", state_json(r.sweep_best_state.c)},
          {"best_residuals", residuals_json(r.sweep_best_residuals)},
          {"holds", sweep_ok}}},
    };
    rep.text = text;
    return rep;
}

// ---------------------------------------------------------------------------
// argument handling

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Deutsch-Jozsa single-qubit toolkit: oracle tables, derivation, verification"};
    app.name("dj");
    app.require_subcommand(1);

    std::string format = "text";
    auto add_format = [&format](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    };

    auto* matrices = app.add_subcommand("matrices", "Print the four oracle matrices");
    add_format(matrices);

    std::string grid_step_text;
    auto* derive = app.add_subcommand("derive", "Solve the real constraint system, optionally cross-check on a grid");
    derive->add_option("--grid-step", grid_step_text, "Grid spacing in (0, 0.5]");
    add_format(derive);

    std::string theta_text = "0";
    auto* verify = app.add_subcommand("verify", "Run the single-query protocol against all four oracles");
    verify->add_option("--theta", theta_text, "Control-qubit relative phase in radians");
    add_format(verify);

    auto* classical = app.add_subcommand("classical", "Enumerate one-query classical strategies");
    add_format(classical);

    std::int64_t samples = 100000;
    std::uint64_t seed = 0;
    auto* impossible = app.add_subcommand("impossible", "Show that one query cannot identify the function");
    impossible->add_option("--samples", samples, "Random states in the sweep");
    impossible->add_option("--seed", seed, "Sweep seed");
    add_format(impossible);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    const OutputFormat fmt_kind = format == "json" ? OutputFormat::Json : OutputFormat::Text;
    try {
        CommandReport rep;
        if (*matrices) {
            rep = cmd_matrices();
        } else if (*derive) {
            std::optional<double> step;
            if (derive->count("--grid-step") > 0) {
                step = parse_real(grid_step_text);
                if (!step) throw InvalidStep("--grid-step is not a number: " + grid_step_text);
            }
            rep = cmd_derive(step);
        } else if (*verify) {
            const auto theta = parse_real(theta_text);
            if (!theta) throw InvalidAngle("--theta is not a number: " + theta_text);
            rep = cmd_verify(*theta);
        } else if (*classical) {
            rep = cmd_classical();
        } else {
            rep = cmd_impossible(samples, seed);
        }
        out << render(rep, fmt_kind);
        return rep.exit_code();
    } catch (const std::invalid_argument& e) {
        // InvalidStep, InvalidAngle and bad sample counts.
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run_cli(args, out, err);
}

}  // namespace dj::cli
