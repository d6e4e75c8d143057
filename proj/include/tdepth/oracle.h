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

#ifndef TDEPTH_ORACLE_H
#define TDEPTH_ORACLE_H

#include <cstdint>
#include <map>
#include <vector>

#include "tdepth/canonical.h"
#include "tdepth/channel.h"
#include "tdepth/clifford.h"
#include "tdepth/exactnum.h"
#include "tdepth/pauli.h"

// Dense exact reference matrices. Nothing here reuses the structured kernels of the channel
// module: channels are computed from traces of explicit 2^n x 2^n matrices.

namespace tdepth::oracle {

constexpr size_t DEFAULT_MAX_QUBITS = 3;

/// Size guard shared by every constructor below. n = 4 needs `allow_large`.
struct SizeGuard {
    size_t max_qubits = DEFAULT_MAX_QUBITS;
    bool allow_large = false;
};

/// A 2^n x 2^n matrix over Z[1/2, zeta_16]; basis index bit (n - 1 - j) is qubit j.
class DenseMatrix {
   public:
    DenseMatrix() = default;
    /// Zero matrix. Throws SizeRefusal beyond the guard.
    explicit DenseMatrix(size_t num_qubits, SizeGuard guard = {});
    static DenseMatrix identity(size_t num_qubits, SizeGuard guard = {});

    size_t num_qubits() const {
        return n_;
    }
    size_t dim() const {
        return dim_;
    }
    const Cyclotomic16Scalar &at(size_t r, size_t c) const {
        return entries_[r * dim_ + c];
    }
    Cyclotomic16Scalar &at(size_t r, size_t c) {
        return entries_[r * dim_ + c];
    }

    DenseMatrix operator*(const DenseMatrix &other) const;
    DenseMatrix operator+(const DenseMatrix &other) const;
    DenseMatrix scaled(const Cyclotomic16Scalar &s) const;
    DenseMatrix adjoint() const;
    Cyclotomic16Scalar trace() const;
    bool is_unitary() const;
    bool operator==(const DenseMatrix &other) const = default;

   private:
    size_t n_ = 0;
    size_t dim_ = 0;
    std::vector<Cyclotomic16Scalar> entries_;
};

DenseMatrix dense_of_pauli(const PauliOperator &p, SizeGuard guard = {});
DenseMatrix dense_of_gate(size_t num_qubits, const GateToken &gate, SizeGuard guard = {});
/// Matrix product of the word, leftmost gate last.
DenseMatrix dense_of_gate_word(size_t num_qubits, const std::vector<GateToken> &word, SizeGuard guard = {});
/// cos(pi/8) I + i sin(pi/8) P, with cos(pi/8) = (zeta + zeta^-1)/2 and i sin(pi/8) = (zeta - zeta^-1)/2.
DenseMatrix dense_of_exponential(const PauliOperator &p, SizeGuard guard = {});
/// diag(1, zeta^2) on marked T qubits, diag(1, zeta^-2) on T^dagger qubits.
DenseMatrix dense_of_layer(const TLayer &layer, SizeGuard guard = {});
/// The whole circuit; requires the gate words.
DenseMatrix dense_of_circuit(const TLayerCircuit &circuit, SizeGuard guard = {});

/// m_P = Tr(P M) / 2^n over unsigned labels P (Paulis with phase 0 are Hermitian). Zero
/// coefficients are omitted.
std::map<uint64_t, Cyclotomic16Scalar> pauli_expand(const DenseMatrix &m);
DenseMatrix pauli_reconstruct(size_t num_qubits, const std::map<uint64_t, Cyclotomic16Scalar> &coefficients, SizeGuard guard = {});

/// Entry (P, Q) = Tr(P U Q U^dagger) / 2^n by explicit traces. Throws NonRealEntry if a trace is
/// not in Z[1/2, sqrt2].
ChannelRep channel_bruteforce(const DenseMatrix &u);

/// v == lambda u for a unit scalar lambda, tested by cross-multiplying against the first
/// nonzero entry of u.
bool equal_up_to_phase(const DenseMatrix &u, const DenseMatrix &v);
/// The same question answered by comparing brute-force channels.
bool equal_up_to_phase_via_channel(const DenseMatrix &u, const DenseMatrix &v);

}  // namespace tdepth::oracle

#endif
