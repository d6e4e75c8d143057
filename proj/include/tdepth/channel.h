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

#ifndef TDEPTH_CHANNEL_H
#define TDEPTH_CHANNEL_H

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tdepth/canonical.h"
#include "tdepth/clifford.h"
#include "tdepth/exactnum.h"
#include "tdepth/pauli.h"

namespace tdepth {

constexpr size_t MAX_CHANNEL_QUBITS = 5;

/// The channel representation of a unitary U: the 4^n x 4^n real matrix with entry
/// (P, Q) = Tr(P U Q U^dagger) / 2^n, rows and columns indexed by unsigned Pauli labels.
/// Column Q holds the Pauli expansion of U Q U^dagger.
class ChannelRep {
   public:
    ChannelRep() = default;
    /// The zero matrix. Throws SizeRefusal above MAX_CHANNEL_QUBITS.
    explicit ChannelRep(size_t num_qubits);
    static ChannelRep identity(size_t num_qubits);

    size_t num_qubits() const {
        return n_;
    }
    size_t dim() const {
        return dim_;
    }
    const DyadicSqrt2Scalar &at(uint64_t row, uint64_t col) const {
        return entries_[row * dim_ + col];
    }
    DyadicSqrt2Scalar &at(uint64_t row, uint64_t col) {
        return entries_[row * dim_ + col];
    }

    /// M <- M * R where R is the channel of exp(i pi P / 8): a rank-2 update per anticommuting column pair.
    void right_multiply_exponential(const PauliOperator &p);
    /// M <- R * M, the row analogue.
    void left_multiply_exponential(const PauliOperator &p);
    /// M <- M * channel(c), a signed column permutation.
    void right_multiply_clifford(const CliffordTableau &c);
    /// M <- channel(c) * M, a signed row permutation.
    void left_multiply_clifford(const CliffordTableau &c);

    ChannelRep transpose() const;
    /// M * M^T == I, exactly.
    bool is_orthogonal() const;
    bool operator==(const ChannelRep &other) const = default;

    /// TSV with Pauli-string headers; entries rendered as "(a+b√2)/2^k".
    std::string to_tsv() const;

   private:
    size_t n_ = 0;
    uint64_t dim_ = 0;
    std::vector<DyadicSqrt2Scalar> entries_;
};

ChannelRep channel_of_clifford(const CliffordTableau &c);
/// Channel of exp(i pi P / 8). Throws IdentityPauli or NonPositivePauli.
ChannelRep channel_of_exponential(const PauliOperator &p);
ChannelRep multiply(const ChannelRep &a, const ChannelRep &b);
ChannelRep channel_of_canonical(const CanonicalForm &f);
/// Exponentials of each layer's set in order, then the Clifford.
ChannelRep channel_of_layered(const LayeredForm &f);

/// Labels of rows containing an entry equal to +1 or -1, ascending.
std::vector<uint64_t> unit_rows(const ChannelRep &r);
bool is_signed_permutation(const ChannelRep &r);

struct SpectrumEntry {
    DyadicSqrt2Scalar magnitude;
    uint64_t count = 0;
    bool operator==(const SpectrumEntry &other) const = default;
};
/// Multiset of absolute values of the entries, ascending by value.
using PauliSpectrum = std::vector<SpectrumEntry>;

PauliSpectrum pauli_spectrum(const ChannelRep &r);
/// The spectrum of exp(i pi Z_1/8) ... exp(i pi Z_m/8) on n qubits, computed by counting
/// entries of R^{(x)m} (x) I directly.
PauliSpectrum reference_spectrum(size_t num_qubits, size_t m);
/// -2 log2 of the smallest nonzero magnitude, after checking that the whole spectrum matches
/// reference_spectrum. Throws SpectrumMismatch otherwise.
size_t infer_t_count(const ChannelRep &r);

/// Whether a^T b is a signed permutation, i.e. some signed permutation S has b = a S.
/// Decided column by column (each column of b must be +- a column of a), which is equivalent
/// for orthogonal a.
bool reconcilable_by_signed_permutation(const ChannelRep &a, const ChannelRep &b);

/// The columns of a channel with signs normalized (first nonzero entry positive), stored sparsely
/// and sorted.
/// Built once per channel so repeated reconciliation queries skip the per-pair sort.
class SignedColumnIndex {
   public:
    explicit SignedColumnIndex(const ChannelRep &r);
    size_t num_qubits() const {
        return n_;
    }
    /// Every column of `other` is +- a column of the indexed channel.
    bool covers(const SignedColumnIndex &other) const;

   private:
    using SparseColumn = std::vector<std::pair<uint64_t, DyadicSqrt2Scalar>>;
    static bool less(const SparseColumn &a, const SparseColumn &b);

    size_t n_ = 0;
    std::vector<SparseColumn> columns_;
};

}  // namespace tdepth

#endif
