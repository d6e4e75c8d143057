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

#include "tdepth/oracle.h"

#include <iostream>

#include "tdepth/error.h"

namespace tdepth::oracle {

namespace {

void check_size(size_t n, const SizeGuard &guard) {
    size_t limit = guard.allow_large ? std::max<size_t>(guard.max_qubits, 4) : guard.max_qubits;
    if (n == 0 || n > limit) {
        throw Error(ErrorKind::SizeRefusal, "dense oracle refuses " + std::to_string(n) + " qubits (limit " +
                                                std::to_string(limit) + ")");
    }
    if (n > DEFAULT_MAX_QUBITS) {
        static bool warned = false;
        if (!warned) {
            std::cerr << "warning: dense oracle running on " << n << " qubits; this is slow\n";
            warned = true;
        }
    }
}

size_t bit_of(size_t n, size_t qubit) {
    return size_t{1} << (n - 1 - qubit);
}

// Matrix of a single-qubit operator lifted to qubit q.
DenseMatrix lift_1q(size_t n, size_t q, const Cyclotomic16Scalar (&m)[2][2], SizeGuard guard) {
    DenseMatrix out(n, guard);
    size_t b = bit_of(n, q);
    for (size_t col = 0; col < out.dim(); col++) {
        size_t in = (col & b) ? 1 : 0;
        for (size_t o = 0; o < 2; o++) {
            if (m[o][in].is_zero()) {
                continue;
            }
            size_t row = o ? (col | b) : (col & ~b);
            out.at(row, col) = m[o][in];
        }
    }
    return out;
}

}  // namespace

DenseMatrix::DenseMatrix(size_t num_qubits, SizeGuard guard) : n_(num_qubits), dim_(size_t{1} << num_qubits) {
    check_size(num_qubits, guard);
    entries_.resize(dim_ * dim_);
}

DenseMatrix DenseMatrix::identity(size_t num_qubits, SizeGuard guard) {
    DenseMatrix m(num_qubits, guard);
    for (size_t k = 0; k < m.dim_; k++) {
        m.at(k, k) = Cyclotomic16Scalar::one();
    }
    return m;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix &other) const {
    DenseMatrix out = *this;
    for (auto &e : out.entries_) {
        e = {};
    }
    for (size_t i = 0; i < dim_; i++) {
        for (size_t k = 0; k < dim_; k++) {
            const auto &a = at(i, k);
            if (a.is_zero()) {
                continue;
            }
            for (size_t j = 0; j < dim_; j++) {
                const auto &b = other.at(k, j);
                if (!b.is_zero()) {
                    out.at(i, j) += a * b;
                }
            }
        }
    }
    return out;
}

DenseMatrix DenseMatrix::operator+(const DenseMatrix &other) const {
    DenseMatrix out = *this;
    for (size_t k = 0; k < entries_.size(); k++) {
        out.entries_[k] += other.entries_[k];
    }
    return out;
}

DenseMatrix DenseMatrix::scaled(const Cyclotomic16Scalar &s) const {
    DenseMatrix out = *this;
    for (auto &e : out.entries_) {
        e = e * s;
    }
    return out;
}

DenseMatrix DenseMatrix::adjoint() const {
    DenseMatrix out = *this;
    for (size_t r = 0; r < dim_; r++) {
        for (size_t c = 0; c < dim_; c++) {
            out.at(c, r) = at(r, c).conj();
        }
    }
    return out;
}

Cyclotomic16Scalar DenseMatrix::trace() const {
    Cyclotomic16Scalar t;
    for (size_t k = 0; k < dim_; k++) {
        t += at(k, k);
    }
    return t;
}

bool DenseMatrix::is_unitary() const {
    DenseMatrix p = *this * adjoint();
    for (size_t r = 0; r < dim_; r++) {
        for (size_t c = 0; c < dim_; c++) {
            if (p.at(r, c) != (r == c ? Cyclotomic16Scalar::one() : Cyclotomic16Scalar())) {
                return false;
            }
        }
    }
    return true;
}

DenseMatrix dense_of_pauli(const PauliOperator &p, SizeGuard guard) {
    size_t n = p.num_qubits();
    DenseMatrix out = DenseMatrix::identity(n, guard);
    const Cyclotomic16Scalar one = Cyclotomic16Scalar::one();
    const Cyclotomic16Scalar zero;
    const Cyclotomic16Scalar i = Cyclotomic16Scalar::i();
    for (size_t q = 0; q < n; q++) {
        Cyclotomic16Scalar m[2][2];
        switch (p.letter(q)) {
            case 'I':
                continue;
            case 'X':
                m[0][0] = zero, m[0][1] = one, m[1][0] = one, m[1][1] = zero;
                break;
            case 'Y':
                m[0][0] = zero, m[0][1] = -i, m[1][0] = i, m[1][1] = zero;
                break;
            default:
                m[0][0] = one, m[0][1] = zero, m[1][0] = zero, m[1][1] = -one;
                break;
        }
        out = lift_1q(n, q, m, guard) * out;
    }
    return out.scaled(Cyclotomic16Scalar::zeta(4 * p.phase()));
}

DenseMatrix dense_of_gate(size_t n, const GateToken &g, SizeGuard guard) {
    const Cyclotomic16Scalar one = Cyclotomic16Scalar::one();
    const Cyclotomic16Scalar zero;
    if (!g.is_two_qubit()) {
        Cyclotomic16Scalar m[2][2];
        switch (g.kind) {
            case GateToken::Kind::H: {
                Cyclotomic16Scalar h = Cyclotomic16Scalar::sqrt2().div_pow2(1);
                m[0][0] = h, m[0][1] = h, m[1][0] = h, m[1][1] = -h;
                break;
            }
            case GateToken::Kind::S:
                m[0][0] = one, m[0][1] = zero, m[1][0] = zero, m[1][1] = Cyclotomic16Scalar::i();
                break;
            case GateToken::Kind::X:
                m[0][0] = zero, m[0][1] = one, m[1][0] = one, m[1][1] = zero;
                break;
            default:
                m[0][0] = one, m[0][1] = zero, m[1][0] = zero, m[1][1] = -one;
                break;
        }
        if (g.q0 >= n) {
            throw Error(ErrorKind::IndexOutOfRange, g.str());
        }
        return lift_1q(n, g.q0, m, guard);
    }
    if (g.q0 >= n || g.q1 >= n) {
        throw Error(ErrorKind::IndexOutOfRange, g.str());
    }
    DenseMatrix out(n, guard);
    size_t a = bit_of(n, g.q0), b = bit_of(n, g.q1);
    for (size_t col = 0; col < out.dim(); col++) {
        switch (g.kind) {
            case GateToken::Kind::CX:
                out.at((col & a) ? (col ^ b) : col, col) = one;
                break;
            case GateToken::Kind::CZ:
                out.at(col, col) = ((col & a) && (col & b)) ? -one : one;
                break;
            default: {
                size_t row = col & ~(a | b);
                if (col & a) row |= b;
                if (col & b) row |= a;
                out.at(row, col) = one;
                break;
            }
        }
    }
    return out;
}

DenseMatrix dense_of_gate_word(size_t n, const std::vector<GateToken> &word, SizeGuard guard) {
    DenseMatrix out = DenseMatrix::identity(n, guard);
    for (const auto &g : word) {
        out = out * dense_of_gate(n, g, guard);
    }
    return out;
}

DenseMatrix dense_of_exponential(const PauliOperator &p, SizeGuard guard) {
    Cyclotomic16Scalar cos_part = (Cyclotomic16Scalar::zeta(1) + Cyclotomic16Scalar::zeta(-1)).div_pow2(1);
    Cyclotomic16Scalar i_sin_part = (Cyclotomic16Scalar::zeta(1) - Cyclotomic16Scalar::zeta(-1)).div_pow2(1);
    size_t n = p.num_qubits();
    return DenseMatrix::identity(n, guard).scaled(cos_part) + dense_of_pauli(p, guard).scaled(i_sin_part);
}

DenseMatrix dense_of_layer(const TLayer &layer, SizeGuard guard) {
    size_t n = layer.num_qubits();
    DenseMatrix out = DenseMatrix::identity(n, guard);
    for (size_t col = 0; col < out.dim(); col++) {
        int power = 0;
        for (size_t q = 0; q < n; q++) {
            if (col & bit_of(n, q)) {
                power += layer[q] == TMark::T ? 2 : layer[q] == TMark::Tdg ? -2 : 0;
            }
        }
        out.at(col, col) = Cyclotomic16Scalar::zeta(power);
    }
    return out;
}

DenseMatrix dense_of_circuit(const TLayerCircuit &circuit, SizeGuard guard) {
    circuit.validate();
    if (circuit.words.size() != circuit.cliffords.size()) {
        throw Error(ErrorKind::InvalidArgument, "dense_of_circuit needs the gate words of every Clifford");
    }
    DenseMatrix out = dense_of_gate_word(circuit.num_qubits, circuit.words[0], guard);
    for (size_t k = 0; k < circuit.depth(); k++) {
        out = out * dense_of_layer(circuit.layers[k], guard);
        out = out * dense_of_gate_word(circuit.num_qubits, circuit.words[k + 1], guard);
    }
    return out;
}

namespace {

// Tr(A B) without forming the product.
Cyclotomic16Scalar trace_of_product(const DenseMatrix &a, const DenseMatrix &b) {
    Cyclotomic16Scalar t;
    for (size_t i = 0; i < a.dim(); i++) {
        for (size_t j = 0; j < a.dim(); j++) {
            const auto &x = a.at(i, j);
            if (x.is_zero()) {
                continue;
            }
            const auto &y = b.at(j, i);
            if (!y.is_zero()) {
                t += x * y;
            }
        }
    }
    return t;
}

}  // namespace

std::map<uint64_t, Cyclotomic16Scalar> pauli_expand(const DenseMatrix &m) {
    size_t n = m.num_qubits();
    std::map<uint64_t, Cyclotomic16Scalar> out;
    uint64_t total = uint64_t{1} << (2 * n);
    SizeGuard guard{std::max(n, DEFAULT_MAX_QUBITS), true};
    for (uint64_t label = 0; label < total; label++) {
        DenseMatrix p = dense_of_pauli(PauliOperator::from_label(n, label), guard);
        Cyclotomic16Scalar c = trace_of_product(p, m).div_pow2(static_cast<uint32_t>(n));
        if (!c.is_zero()) {
            out.emplace(label, std::move(c));
        }
    }
    return out;
}

DenseMatrix pauli_reconstruct(size_t n, const std::map<uint64_t, Cyclotomic16Scalar> &coefficients, SizeGuard guard) {
    DenseMatrix out(n, guard);
    for (const auto &[label, c] : coefficients) {
        out = out + dense_of_pauli(PauliOperator::from_label(n, label), guard).scaled(c);
    }
    return out;
}

ChannelRep channel_bruteforce(const DenseMatrix &u) {
    size_t n = u.num_qubits();
    SizeGuard guard{std::max(n, DEFAULT_MAX_QUBITS), true};
    uint64_t total = uint64_t{1} << (2 * n);
    std::vector<DenseMatrix> paulis;
    paulis.reserve(total);
    for (uint64_t label = 0; label < total; label++) {
        paulis.push_back(dense_of_pauli(PauliOperator::from_label(n, label), guard));
    }
    DenseMatrix u_dag = u.adjoint();
    ChannelRep out(n);
    for (uint64_t q = 0; q < total; q++) {
        DenseMatrix conjugated = u * paulis[q] * u_dag;
        for (uint64_t p = 0; p < total; p++) {
            Cyclotomic16Scalar t = trace_of_product(paulis[p], conjugated).div_pow2(static_cast<uint32_t>(n));
            auto real = t.to_dyadic();
            if (!real) {
                throw Error(ErrorKind::NonRealEntry, "channel entry " + t.str() + " is not in Z[1/2, sqrt2]");
            }
            out.at(p, q) = std::move(*real);
        }
    }
    return out;
}

bool equal_up_to_phase(const DenseMatrix &u, const DenseMatrix &v) {
    if (u.num_qubits() != v.num_qubits()) {
        return false;
    }
    size_t pivot = 0;
    size_t cells = u.dim() * u.dim();
    while (pivot < cells && u.at(pivot / u.dim(), pivot % u.dim()).is_zero()) {
        pivot++;
    }
    if (pivot == cells) {
        return false;
    }
    const auto &up = u.at(pivot / u.dim(), pivot % u.dim());
    const auto &vp = v.at(pivot / u.dim(), pivot % u.dim());
    // The ratio vp / up must be a phase: |vp| == |up|.
    if (vp.is_zero() || vp * vp.conj() != up * up.conj()) {
        return false;
    }
    // v = (vp / up) u  <=>  v_ij up == u_ij vp for every entry.
    for (size_t r = 0; r < u.dim(); r++) {
        for (size_t c = 0; c < u.dim(); c++) {
            if (v.at(r, c) * up != u.at(r, c) * vp) {
                return false;
            }
        }
    }
    return true;
}

bool equal_up_to_phase_via_channel(const DenseMatrix &u, const DenseMatrix &v) {
    return u.num_qubits() == v.num_qubits() && channel_bruteforce(u) == channel_bruteforce(v);
}

}  // namespace tdepth::oracle
