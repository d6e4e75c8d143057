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

#ifndef TDEPTH_PAULI_H
#define TDEPTH_PAULI_H

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tdepth {

constexpr size_t MAX_QUBITS = 64;
/// Above this width a Pauli label no longer fits in a 64 bit word.
constexpr size_t MAX_LABEL_QUBITS = 32;

/// An n-qubit Pauli operator i^phase * W_0 (x) ... (x) W_{n-1}.
///
/// Each W_j is fixed by its (x_j, z_j) bits: I=(0,0), X=(1,0), Z=(0,1), Y=(1,1), with the
/// convention Y = iXZ. Qubit j lives at bit (n - 1 - j) of the x and z words, so that the label
/// x||z read as an integer has qubit 0 in the highest bit of each half.
class PauliOperator {
   public:
    PauliOperator() = default;
    PauliOperator(size_t num_qubits, uint64_t xs, uint64_t zs, uint8_t phase = 0);

    static PauliOperator identity(size_t num_qubits);
    static PauliOperator x(size_t num_qubits, size_t qubit);
    static PauliOperator y(size_t num_qubits, size_t qubit);
    static PauliOperator z(size_t num_qubits, size_t qubit);
    /// Inverse of label().
    static PauliOperator from_label(size_t num_qubits, uint64_t label);
    /// Parses "+ZIZ", "-iXY", "XX" (unsigned means +). Sign prefixes: +, -, +i, -i.
    static PauliOperator from_str(std::string_view text);

    size_t num_qubits() const {
        return n_;
    }
    uint64_t xs() const {
        return xs_;
    }
    uint64_t zs() const {
        return zs_;
    }
    uint8_t phase() const {
        return phase_;
    }
    bool x_bit(size_t qubit) const {
        return (xs_ >> (n_ - 1 - qubit)) & 1;
    }
    bool z_bit(size_t qubit) const {
        return (zs_ >> (n_ - 1 - qubit)) & 1;
    }
    /// 'I', 'X', 'Y' or 'Z'.
    char letter(size_t qubit) const;

    /// x||z as an integer. Requires n <= 32.
    uint64_t label() const;
    bool is_hermitian() const {
        return (phase_ & 1) == 0;
    }
    bool is_positive() const {
        return phase_ == 0;
    }
    bool is_identity_up_to_phase() const {
        return xs_ == 0 && zs_ == 0;
    }
    size_t weight() const;

    PauliOperator unsigned_part() const {
        return PauliOperator(n_, xs_, zs_, 0);
    }
    PauliOperator with_phase(uint8_t phase) const {
        return PauliOperator(n_, xs_, zs_, phase);
    }
    PauliOperator times_i_power(int power) const;
    PauliOperator operator-() const {
        return times_i_power(2);
    }
    PauliOperator operator*(const PauliOperator &other) const;

    bool operator==(const PauliOperator &other) const = default;
    /// Label order on the unsigned part, ties broken by phase.
    bool operator<(const PauliOperator &other) const;

    std::string str() const;
    /// Letters only, no sign.
    std::string letters() const;

   private:
    size_t n_ = 0;
    uint64_t xs_ = 0;
    uint64_t zs_ = 0;
    uint8_t phase_ = 0;
};

std::ostream &operator<<(std::ostream &out, const PauliOperator &p);

PauliOperator multiply(const PauliOperator &p, const PauliOperator &q);
/// Symplectic form test; phases play no role.
bool commutes(const PauliOperator &p, const PauliOperator &q);
/// Positive diagonal Pauli Z^a. `bits[j]` is the exponent on qubit j.
PauliOperator z_power(const std::vector<bool> &bits);
/// Same, from a bit-string such as "101".
PauliOperator z_power(std::string_view bits);

/// Label-level commutation test for n <= 32.
inline bool labels_commute(size_t num_qubits, uint64_t a, uint64_t b) {
    uint64_t mask = num_qubits == 64 ? ~uint64_t{0} : ((uint64_t{1} << num_qubits) - 1);
    uint64_t ax = a >> num_qubits, az = a & mask;
    uint64_t bx = b >> num_qubits, bz = b & mask;
    return (__builtin_popcountll((ax & bz) ^ (az & bx)) & 1) == 0;
}

/// Incremental F2 span tracker over 2n-bit symplectic vectors (n <= 64).
class F2Basis {
   public:
    /// True when v lies in the span of the inserted vectors (zero always does).
    bool contains(const PauliOperator &p) const;
    /// Inserts v; returns false (and changes nothing) when v was already in the span.
    bool insert(const PauliOperator &p);
    size_t rank() const {
        return pivots_.size();
    }

   private:
    unsigned __int128 reduce(unsigned __int128 v) const;
    std::vector<unsigned __int128> pivots_;  // leading bits strictly decreasing
};

/// A set of positive, pairwise commuting, F2-independent Paulis, ascending by label.
class PauliSet {
   public:
    PauliSet() = default;
    /// The empty set on n qubits.
    explicit PauliSet(size_t num_qubits) : n_(num_qubits) {
    }

    /// Validates and sorts. Signs of Hermitian inputs are dropped.
    /// Throws DependentSet, NonCommutingSet, NonHermitianInput, MismatchedQubits, InvalidSet.
    static PauliSet validate(std::span<const PauliOperator> candidates);
    /// Skips validation; the caller guarantees the invariants and ascending order.
    static PauliSet from_sorted_unchecked(size_t num_qubits, std::vector<PauliOperator> elements);

    size_t num_qubits() const {
        return n_;
    }
    size_t size() const {
        return elements_.size();
    }
    bool empty() const {
        return elements_.empty();
    }
    const std::vector<PauliOperator> &elements() const {
        return elements_;
    }
    const PauliOperator &operator[](size_t k) const {
        return elements_[k];
    }
    std::vector<uint64_t> labels() const;

    bool operator==(const PauliSet &other) const = default;
    bool operator<(const PauliSet &other) const;

    /// Comma separated signed Pauli strings, e.g. "+ZI,+IZ".
    std::string str() const;

   private:
    size_t n_ = 0;
    std::vector<PauliOperator> elements_;
};

PauliSet validate_set(std::span<const PauliOperator> candidates);

/// All unsigned Pauli labels commuting with every element of s, ascending. Requires n <= 8.
std::vector<uint64_t> commutant(const PauliSet &s);

}  // namespace tdepth

#endif
