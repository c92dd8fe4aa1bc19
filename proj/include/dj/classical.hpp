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
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace dj {

/// A classical bit. Construction from anything other than 0 or 1 throws.
class Bit {
  public:
    constexpr Bit() = default;
    constexpr explicit Bit(int value) : value_(static_cast<std::uint8_t>(value)) {
        if (value != 0 && value != 1) {
            throw std::invalid_argument("Bit must be 0 or 1");
        }
    }

    constexpr int value() const { return value_; }
    constexpr bool operator==(const Bit&) const = default;

  private:
    std::uint8_t value_ = 0;
};

inline constexpr std::array<Bit, 2> kBits{Bit{0}, Bit{1}};

/// Addition modulo 2.
constexpr Bit bit_xor(Bit a, Bit b) { return Bit{(a.value() + b.value()) % 2}; }

enum class FunctionId { CI, CII, BI, BII };

inline constexpr std::array<FunctionId, 4> kAllFunctions{FunctionId::CI, FunctionId::CII,
                                                         FunctionId::BI, FunctionId::BII};

std::string_view function_name(FunctionId id);

enum class Verdict { Constant, Balanced };

std::string_view verdict_name(Verdict v);

/// One of the four maps {0,1} -> {0,1}, stored as its truth table.
class OneBitFunction {
  public:
    static OneBitFunction from_id(FunctionId id);
    /// Every truth table names exactly one of the four functions.
    static OneBitFunction from_table(Bit f_of_0, Bit f_of_1);

    FunctionId id() const { return id_; }
    Bit f_of_0() const { return f_of_0_; }
    Bit f_of_1() const { return f_of_1_; }
    Bit operator()(Bit x) const { return x.value() == 0 ? f_of_0_ : f_of_1_; }
    bool is_constant() const { return f_of_0_ == f_of_1_; }
    Verdict kind() const { return is_constant() ? Verdict::Constant : Verdict::Balanced; }
    std::string_view name() const { return function_name(id_); }

    bool operator==(const OneBitFunction&) const = default;

  private:
    OneBitFunction(FunctionId id, Bit f0, Bit f1) : id_(id), f_of_0_(f0), f_of_1_(f1) {}

    FunctionId id_;
    Bit f_of_0_;
    Bit f_of_1_;
};

/// (control, target).
struct BitPair {
    Bit x;
    Bit y;
    bool operator==(const BitPair&) const = default;
};

/// All four pairs in the order (0,0), (0,1), (1,0), (1,1).
std::array<BitPair, 4> all_bit_pairs();

/// (x, y) -> (x, f(x) xor y). Every such operator is its own inverse.
BitPair apply_f_operator(const OneBitFunction& f, BitPair input);

/// Opaque classical oracle: only the input/output pairs are visible.
using ClassicalOracle = std::function<BitPair(BitPair)>;

ClassicalOracle make_classical_oracle(const OneBitFunction& f);

/// The functions consistent with observing `observed` as the target bit after
/// feeding `query` to the oracle.
std::vector<FunctionId> consistent_functions(BitPair query, Bit observed);

/// Deterministic one-query plan: feed `query`, then map the observed target
/// bit to a verdict.
struct ClassicalStrategy {
    BitPair query;
    std::array<Verdict, 2> decision;

    Verdict decide(Bit observed) const { return decision[static_cast<std::size_t>(observed.value())]; }
};

struct StrategyEvaluation {
    ClassicalStrategy strategy;
    /// Functions this strategy gets wrong, in kAllFunctions order.
    std::vector<FunctionId> misclassified;
};

struct WitnessRun {
    FunctionId function;
    Bit first_output;
    Bit second_output;
    Verdict verdict;
    bool correct;
};

/// Query x = 0 then x = 1, both with y = 0, and xor the two target outputs.
struct TwoQueryWitness {
    std::array<BitPair, 2> queries;
    std::vector<WitnessRun> runs;
    int oracle_calls_per_function = 0;
    int correct_count = 0;
};

struct QueryBoundReport {
    /// Only deterministic non-adaptive one-query strategies are enumerated;
    /// with a single query adaptivity has nothing to act on.
    std::vector<StrategyEvaluation> one_query;
    TwoQueryWitness two_query;
    int lower_bound = 0;
    bool any_one_query_strategy_succeeds = false;
};

std::vector<ClassicalStrategy> enumerate_one_query_strategies();
StrategyEvaluation evaluate_strategy(const ClassicalStrategy& strategy);
TwoQueryWitness run_two_query_witness();
QueryBoundReport min_classical_queries();

}  // namespace dj
