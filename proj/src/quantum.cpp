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

#include "dj/quantum.hpp"

#include <cmath>
#include <string>

namespace dj {
namespace {

void require_normalized(double norm_squared) {
    if (!(std::abs(norm_squared - 1.0) <= kNormTolerance)) {
        throw NormalizationError("amplitudes are not normalized: sum |c|^2 = " + std::to_string(norm_squared));
    }
}

// Rows and columns follow |00>, |01>, |10>, |11>.
constexpr OracleMatrix::Entries kIdentity{{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}};
constexpr OracleMatrix::Entries kSwapBoth{{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}};
constexpr OracleMatrix::Entries kSwapLow{{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}};
constexpr OracleMatrix::Entries kSwapHigh{{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}};

}  // namespace

Qubit Qubit::normalized(Complex a0, Complex a1) {
    Qubit q{a0, a1};
    require_normalized(q.norm_squared());
    return q;
}

Qubit Qubit::minus() {
    const double s = 1.0 / std::sqrt(2.0);
    return Qubit{s, -s};
}

Qubit Qubit::phase_plus(double theta) {
    const double s = 1.0 / std::sqrt(2.0);
    return Qubit{s, s * std::polar(1.0, theta)};
}

TwoQubitState TwoQubitState::normalized(const Amplitudes& c) {
    TwoQubitState s{c};
    require_normalized(s.norm_squared());
    return s;
}

TwoQubitState TwoQubitState::basis(BitPair p) {
    Amplitudes c{};
    c[basis_index(p)] = 1.0;
    return TwoQubitState{c};
}

double TwoQubitState::norm_squared() const {
    double n = 0.0;
    for (const auto& z : c_) n += std::norm(z);
    return n;
}

TwoQubitState TwoQubitState::scaled(Complex factor) const {
    Amplitudes out = c_;
    for (auto& z : out) z *= factor;
    return TwoQubitState{out};
}

TwoQubitState tensor(const Qubit& control, const Qubit& target) {
    return TwoQubitState::raw({control.a0() * target.a0(), control.a0() * target.a1(),
                               control.a1() * target.a0(), control.a1() * target.a1()});
}

Complex inner(const TwoQubitState& u, const TwoQubitState& v) {
    Complex acc{};
    for (std::size_t i = 0; i < 4; ++i) acc += std::conj(u[i]) * v[i];
    return acc;
}

double max_abs_diff(const TwoQubitState& u, const TwoQubitState& v) {
    double m = 0.0;
    for (std::size_t i = 0; i < 4; ++i) m = std::max(m, std::abs(u[i] - v[i]));
    return m;
}

const OracleMatrix::Entries& printed_oracle_table(FunctionId id) {
    switch (id) {
        case FunctionId::CI:
            return kIdentity;
        case FunctionId::CII:
            return kSwapBoth;
        case FunctionId::BI:
            return kSwapLow;
        case FunctionId::BII:
            return kSwapHigh;
    }
    throw std::logic_error("unknown FunctionId");
}

OracleMatrix OracleMatrix::for_function(FunctionId id) {
    OracleMatrix m{id, printed_oracle_table(id)};

    const auto f = OneBitFunction::from_id(id);
    for (BitPair in : all_bit_pairs()) {
        const std::size_t col = basis_index(in);
        const std::size_t image = basis_index(apply_f_operator(f, in));
        for (std::size_t row = 0; row < 4; ++row) {
            if (m(row, col) != (row == image ? 1 : 0)) {
                throw std::logic_error("oracle table for " + std::string(function_name(id)) +
                                       " disagrees with its basis action");
            }
        }
    }
    return m;
}

bool OracleMatrix::is_permutation() const {
    for (std::size_t i = 0; i < 4; ++i) {
        int row_sum = 0;
        int col_sum = 0;
        for (std::size_t j = 0; j < 4; ++j) {
            if (m_[i][j] != 0 && m_[i][j] != 1) return false;
            row_sum += m_[i][j];
            col_sum += m_[j][i];
        }
        if (row_sum != 1 || col_sum != 1) return false;
    }
    return true;
}

bool OracleMatrix::is_involution() const {
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            int acc = 0;
            for (std::size_t k = 0; k < 4; ++k) acc += m_[i][k] * m_[k][j];
            if (acc != (i == j ? 1 : 0)) return false;
        }
    }
    return true;
}

TwoQubitState OracleMatrix::apply(const TwoQubitState& psi) const {
    TwoQubitState::Amplitudes out{};
    for (std::size_t row = 0; row < 4; ++row) {
        for (std::size_t col = 0; col < 4; ++col) {
            if (m_[row][col] != 0) out[row] += psi[col];
        }
    }
    return TwoQubitState::raw(out);
}

OracleMatrix oracle_matrix(FunctionId id) { return OracleMatrix::for_function(id); }

TwoQubitState apply_oracle(FunctionId id, const TwoQubitState& psi) {
    static const std::array<OracleMatrix, 4> kOracles{
        OracleMatrix::for_function(FunctionId::CI), OracleMatrix::for_function(FunctionId::CII),
        OracleMatrix::for_function(FunctionId::BI), OracleMatrix::for_function(FunctionId::BII)};
    return kOracles[static_cast<std::size_t>(id)].apply(psi);
}

}  // namespace dj
