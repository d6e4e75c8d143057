// Copyright 2026 The tdepth Authors
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

#ifndef TDEPTH_CLIFFORD_H
#define TDEPTH_CLIFFORD_H

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "tdepth/exactnum.h"
#include "tdepth/pauli.h"

namespace tdepth {

/// One gate of a Clifford gate word.
struct GateToken {
    enum class Kind { H, S, X, Z, CX, CZ, SWAP };
    Kind kind;
    size_t q0 = 0;
    size_t q1 = 0;

    bool is_two_qubit() const {
        return kind == Kind::CX || kind == Kind::CZ || kind == Kind::SWAP;
    }
    std::string str() const;
};

/// Parses tokens separated by ';' or newlines, e.g. "H 0; CX 0 1". Empty input is the empty word.
/// Throws ParseError (unknown gate or malformed index) or Error(IndexOutOfRange).
std::vector<GateToken> parse_gate_word(std::string_view text, size_t num_qubits);
std::string render_gate_word(const std::vector<GateToken> &word);

/// A Clifford unitary up to global phase, stored as the images C G C^dagger of the generators
/// X_0..X_{n-1} and Z_0..Z_{n-1}. Each image is Hermitian (phase 0 or 2).
class CliffordTableau {
   public:
    CliffordTableau() = default;
    explicit CliffordTableau(size_t num_qubits);

    static CliffordTableau identity(size_t num_qubits) {
        return CliffordTableau(num_qubits);
    }
    /// Throws InvalidArgument unless the images are Hermitian and symplectic.
    static CliffordTableau from_images(std::vector<PauliOperator> x_images, std::vector<PauliOperator> z_images);
    static CliffordTableau from_gate(size_t num_qubits, const GateToken &gate);
    /// The word is a matrix product: the leftmost gate is applied last.
    static CliffordTableau from_gate_word(size_t num_qubits, const std::vector<GateToken> &word);
    static CliffordTableau from_gate_word(size_t num_qubits, std::string_view text);
    /// exp(-i pi P / 4) when `sign` is +1 and exp(+i pi P / 4) when it is -1. P must be Hermitian.
    static CliffordTableau pauli_quarter_rotation(const PauliOperator &p, int sign);

    size_t num_qubits() const {
        return n_;
    }
    const std::vector<PauliOperator> &x_images() const {
        return xs_;
    }
    const std::vector<PauliOperator> &z_images() const {
        return zs_;
    }

    /// C P C^dagger with the exact phase.
    PauliOperator conjugate(const PauliOperator &p) const;
    CliffordTableau inverse() const;
    bool is_identity() const;
    bool is_symplectic() const;
    /// C Z_k C^dagger == +Z_k for every k.
    bool is_z_diagonal() const;

    bool operator==(const CliffordTableau &other) const = default;

    /// 2n signed Pauli strings, X images then Z images, comma separated.
    std::string str() const;
    /// Inverse of str(); also accepts "id" when `num_qubits_hint` is given.
    static CliffordTableau from_str(std::string_view text, size_t num_qubits_hint = 0);

   private:
    size_t n_ = 0;
    std::vector<PauliOperator> xs_;
    std::vector<PauliOperator> zs_;
};

std::ostream &operator<<(std::ostream &out, const CliffordTableau &c);

/// The product a * b, so conjugating by it applies b first.
CliffordTableau compose(const CliffordTableau &a, const CliffordTableau &b);
CliffordTableau inverse(const CliffordTableau &c);
PauliOperator conjugate_pauli(const CliffordTableau &c, const PauliOperator &p);

/// A Clifford C with C P_k C^dagger == +Z_k for the k-th element of s (ascending order).
/// Throws InvalidSet when s is empty or has more elements than qubits.
CliffordTableau synthesize_mapping(const PauliSet &s);

/// Uniformly random tableau (uniform over symplectic matrices and sign bits).
CliffordTableau random_clifford(size_t num_qubits, std::mt19937_64 &rng);
CliffordTableau random_clifford(size_t num_qubits, uint64_t seed);

/// Number of Clifford unitaries modulo global phase: 2^{n^2 + 2n} prod_{j=1..n} (4^j - 1).
BigInt group_order(size_t num_qubits);

bool is_z_diagonal(const CliffordTableau &c);

}  // namespace tdepth

#endif
