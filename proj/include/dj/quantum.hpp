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
#include <complex>
#include <span>
#include <stdexcept>

#include "dj/classical.hpp"

namespace dj {

using Complex = std::complex<double>;

/// Tolerance for accepting caller-supplied amplitudes as normalized.
inline constexpr double kNormTolerance = 1e-9;

/// Tolerance for identities on exactly representable values (0, +-1/2, 1/sqrt2).
inline constexpr double kExactTolerance = 1e-12;

class NormalizationError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// a0|0> + a1|1>.
class Qubit {
  public:
    static Qubit raw(Complex a0, Complex a1) { return Qubit{a0, a1}; }
    /// Throws NormalizationError when | |a0|^2 + |a1|^2 - 1 | > kNormTolerance.
    static Qubit normalized(Complex a0, Complex a1);

    static Qubit zero() { return Qubit{1.0, 0.0}; }
    static Qubit one() { return Qubit{0.0, 1.0}; }
    /// (|0> - |1>)/sqrt2, the target qubit that turns the oracle into a phase.
    static Qubit minus();
    /// (|0> + e^{i theta}|1>)/sqrt2.
    static Qubit phase_plus(double theta);

    Complex a0() const { return a0_; }
    Complex a1() const { return a1_; }
    double norm_squared() const { return std::norm(a0_) + std::norm(a1_); }

  private:
    Qubit(Complex a0, Complex a1) : a0_(a0), a1_(a1) {}

    Complex a0_;
    Complex a1_;
};

/// Two-qubit amplitudes in the fixed basis order |00>, |01>, |10>, |11>,
/// i.e. index = 2*control + target.
class TwoQubitState {
  public:
    using Amplitudes = std::array<Complex, 4>;

    TwoQubitState() = default;
    static TwoQubitState raw(const Amplitudes& c) { return TwoQubitState{c}; }
    /// Throws NormalizationError when | sum |c_i|^2 - 1 | > kNormTolerance.
    static TwoQubitState normalized(const Amplitudes& c);
    static TwoQubitState basis(BitPair p);

    const Complex& operator[](std::size_t i) const { return c_[i]; }
    const Amplitudes& amplitudes() const { return c_; }
    std::span<const Complex, 4> view() const { return c_; }
    double norm_squared() const;

    TwoQubitState scaled(Complex factor) const;

    /// c00*c11 - c01*c10; zero exactly for product states.
    Complex product_determinant() const { return c_[0] * c_[3] - c_[1] * c_[2]; }

  private:
    explicit TwoQubitState(const Amplitudes& c) : c_(c) {}

    Amplitudes c_{};
};

constexpr std::size_t basis_index(BitPair p) {
    return static_cast<std::size_t>(2 * p.x.value() + p.y.value());
}

TwoQubitState tensor(const Qubit& control, const Qubit& target);

/// sum_i conj(u_i) v_i.
Complex inner(const TwoQubitState& u, const TwoQubitState& v);

/// Largest entrywise |u_i - v_i|.
double max_abs_diff(const TwoQubitState& u, const TwoQubitState& v);

/// The oracle for f as an exact 0/1 permutation matrix. Entry (r, c) is 1 iff
/// the oracle maps basis state c to basis state r.
class OracleMatrix {
  public:
    using Entries = std::array<std::array<int, 4>, 4>;

    /// Builds the matrix from the printed table and cross-checks it against
    /// the basis action (x, y) -> (x, f(x) xor y). Throws std::logic_error on
    /// any disagreement.
    static OracleMatrix for_function(FunctionId id);

    FunctionId function() const { return id_; }
    int operator()(std::size_t row, std::size_t col) const { return m_[row][col]; }
    const Entries& entries() const { return m_; }

    bool is_permutation() const;
    bool is_involution() const;
    TwoQubitState apply(const TwoQubitState& psi) const;

  private:
    OracleMatrix(FunctionId id, const Entries& m) : id_(id), m_(m) {}

    FunctionId id_;
    Entries m_;
};

/// The hand-written 0/1 table for f, without any cross-check.
const OracleMatrix::Entries& printed_oracle_table(FunctionId id);

OracleMatrix oracle_matrix(FunctionId id);

TwoQubitState apply_oracle(FunctionId id, const TwoQubitState& psi);

}  // namespace dj
