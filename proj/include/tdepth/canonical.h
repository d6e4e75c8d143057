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

#ifndef TDEPTH_CANONICAL_H
#define TDEPTH_CANONICAL_H

#include <string>
#include <string_view>
#include <vector>

#include "tdepth/clifford.h"
#include "tdepth/pauli.h"

namespace tdepth {

enum class TMark : uint8_t { None, T, Tdg };

/// One layer of parallel T / T^dagger gates. At least one qubit is marked.
class TLayer {
   public:
    /// Throws InvalidArgument when no qubit is marked.
    explicit TLayer(std::vector<TMark> marks);
    /// Marks T on `t_qubits` and T^dagger on `tdg_qubits`; the two lists must be disjoint.
    static TLayer from_qubits(size_t num_qubits, const std::vector<size_t> &t_qubits, const std::vector<size_t> &tdg_qubits);

    size_t num_qubits() const {
        return marks_.size();
    }
    TMark operator[](size_t q) const {
        return marks_[q];
    }
    const std::vector<TMark> &marks() const {
        return marks_;
    }
    size_t count() const;
    bool operator==(const TLayer &other) const = default;
    /// "t=0,2 tdg=1"
    std::string str() const;

   private:
    std::vector<TMark> marks_;
};

/// C_0 L_1 C_1 ... L_d C_d, read as a matrix product (C_d acts first).
struct TLayerCircuit {
    size_t num_qubits = 0;
    std::vector<CliffordTableau> cliffords;  // d + 1 entries
    std::vector<TLayer> layers;              // d entries
    /// Gate words the Clifford tableaux came from, when known. Used to build dense references.
    std::vector<std::vector<GateToken>> words;

    size_t depth() const {
        return layers.size();
    }
    /// Throws WidthMismatch or InvalidArgument.
    void validate() const;
};

/// exp(i pi P_1/8) ... exp(i pi P_m/8) C with {P_k} positive, commuting and independent.
struct CanonicalForm {
    PauliSet set;
    CliffordTableau clifford;

    size_t num_qubits() const {
        return clifford.num_qubits();
    }
    size_t t_count() const {
        return set.size();
    }
    bool operator==(const CanonicalForm &other) const = default;
};

/// The depth-d normal form U_1 ... U_d C with each U_k an exponential product over layer k's set.
struct LayeredForm {
    std::vector<PauliSet> layers;
    CliffordTableau clifford;
};

CanonicalForm canonicalize_depth_one(const CliffordTableau &c1, const TLayer &layer, const CliffordTableau &c2);
LayeredForm canonicalize_depth_d(const TLayerCircuit &circuit);
bool equals(const CanonicalForm &a, const CanonicalForm &b);

/// "P: +ZZ,+XX | C: id". The empty set renders as "none"; an identity Clifford as "id".
std::string render(const CanonicalForm &f);
/// Inverse of render. `num_qubits_hint` resolves "P: none | C: id".
CanonicalForm parse_canonical(std::string_view text, size_t num_qubits_hint = 0);

/// Line format: `QUBITS: n` (optional), `CLIFFORD: <gate word>`, `TLAYER: t=<q,...> tdg=<q,...>`,
/// `#` comments. Clifford and layer lines alternate; a missing leading or trailing Clifford is
/// the identity. Without a QUBITS line the width is one more than the largest index used.
TLayerCircuit parse_circuit(std::string_view text);
std::string render_circuit(const TLayerCircuit &circuit);

}  // namespace tdepth

#endif
