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

#ifndef TDEPTH_CENSUS_H
#define TDEPTH_CENSUS_H

#include <cstdint>
#include <functional>
#include <ostream>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "tdepth/canonical.h"
#include "tdepth/exactnum.h"
#include "tdepth/pauli.h"
#include "tdepth/report.h"

namespace tdepth {

constexpr uint64_t DEFAULT_SEED = 20230519;

/// prod_{k=0}^{m-1} (2^{2n-k} - 2^k): ordered m-tuples of unsigned, commuting, independent Paulis.
/// Throws InvalidArgument unless 1 <= m <= n.
BigInt count_tuples(size_t n, size_t m);
/// count_tuples(n, m) / m!, the size of G_{n,m}.
BigInt count_sets(size_t n, size_t m);

struct TDepthOneCount {
    BigInt g_n;    // sum_{m=1}^{n} count_sets(n, m)
    BigInt total;  // g_n * group_order(n)
};
TDepthOneCount count_tdepth_one(size_t n);

struct CensusRow {
    size_t n = 0;
    size_t m = 0;
    BigInt tuple_count;
    BigInt set_count;
    BigInt clifford_order;
    BigInt unitary_count;
};
CensusRow census_row(size_t n, size_t m);

struct EnumerationOptions {
    /// Largest n enumerated without `allow_large`.
    size_t max_qubits = 4;
    bool allow_large = false;
    size_t workers = 1;
};

/// Receives the ascending labels of one set. Must not retain the span.
using SetVisitor = std::function<void(std::span<const uint64_t>)>;

/// Every PauliSet of size m on n qubits exactly once, in lexicographic label order, by
/// backtracking over label-ascending extensions that commute with and are independent of the
/// prefix. Single-threaded. Returns the number of sets. Throws FeasibilityRefusal above the
/// configured width.
uint64_t enumerate_sets(size_t n, size_t m, const SetVisitor &visit, const EnumerationOptions &options = {});
/// Only the sets whose smallest element has label `first_label`.
uint64_t enumerate_partition(size_t n, size_t m, uint64_t first_label, const SetVisitor &visit);
/// Partitioned over `options.workers` threads on the first element. When `out` is non-null,
/// writes one set per line (PauliSet::str format) in the same order as enumerate_sets.
uint64_t enumerate_sets_parallel(size_t n, size_t m, std::ostream *out, const EnumerationOptions &options = {});
std::vector<PauliSet> collect_sets(size_t n, size_t m, const EnumerationOptions &options = {});
/// All of G_n as forms with identity Clifford, ordered by m then label.
std::vector<CanonicalForm> all_forms(size_t n);

/// Uniform over G_{n,m}: a uniformly random ordered tuple, sorted.
PauliSet random_pauli_set(size_t n, size_t m, std::mt19937_64 &rng);
/// A uniformly random m in 1..n, then random_pauli_set, then a random Clifford.
CanonicalForm random_form(size_t n, std::mt19937_64 &rng, bool identity_clifford = false);

enum class DistinctnessMode { Exhaustive, Sampled };

/// Pairs of distinct forms with identity Clifford must never be reconciled by a Clifford,
/// i.e. channel(a)^T channel(b) is never a signed permutation. Exhaustive needs n <= 2.
VerificationReport verify_distinctness(size_t n, DistinctnessMode mode, uint64_t trials, uint64_t seed);
/// unit_rows(channel of form) == commutant(set) for random (set, Clifford) pairs, plus m = 0.
VerificationReport verify_unit_rows(size_t n, uint64_t trials, uint64_t seed);
/// Pauli-basis support of U X_j U^dagger is 2^w for every independent family of diagonal
/// exponentials with at most k_max members and every qubit j. Uses the dense oracle.
VerificationReport verify_hamming_weight(size_t n, size_t k_max);
/// infer_t_count == m, and the spectrum equals that of ({Z_1..Z_m}, id). Exhaustive over G_n
/// (each set once with the identity and once with a random Clifford) or `trials` random forms.
VerificationReport verify_spectrum(size_t n, bool exhaustive, uint64_t trials, uint64_t seed);
/// Structured channels versus brute-force traces: every single gate and exponential, then
/// `trials` random forms whose Clifford comes from a random gate word.
VerificationReport verify_oracle(size_t n, uint64_t trials, uint64_t seed);
/// Orthogonality of every constructed channel, signed-permutation status of Clifford channels and
/// of forms with m >= 1.
VerificationReport verify_orthogonality(size_t n, uint64_t trials, uint64_t seed);

/// Tab separated census table for n = 1..n_max.
std::string emit_table(size_t n_max);
/// log2(g_n) >= n^2 for n = 1..n_max, by exact comparison g_n >= 2^{n^2}.
VerificationReport growth_check(size_t n_max);

}  // namespace tdepth

#endif
