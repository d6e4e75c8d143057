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

#include "tdepth/census.h"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

#include "tdepth/channel.h"
#include "tdepth/clifford.h"
#include "tdepth/error.h"
#include "tdepth/oracle.h"

namespace tdepth {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void check_counting_range(size_t n, size_t m) {
    if (n == 0 || m == 0 || m > n) {
        throw Error(ErrorKind::InvalidArgument,
                    "need 1 <= m <= n, got n=" + std::to_string(n) + " m=" + std::to_string(m));
    }
}

// Backtracking state for one enumeration run. Labels are x||z words (n <= 8 in practice).
class SetEnumerator {
   public:
    SetEnumerator(size_t n, size_t m, const SetVisitor &visit)
        : n_(n), m_(m), total_(uint64_t{1} << (2 * n)), visit_(visit), labels_(m), pivots_(m) {
    }

    uint64_t run_from(uint64_t first) {
        if (first == 0 || first >= total_) {
            return 0;
        }
        labels_[0] = first;
        pivots_[0] = first;
        recurse(1);
        return count_;
    }

   private:
    uint64_t reduce(uint64_t v, size_t depth) const {
        for (size_t k = 0; k < depth; k++) {
            uint64_t p = pivots_[k];
            if ((v >> (63 - std::countl_zero(p))) & 1) {
                v ^= p;
            }
        }
        return v;
    }

    void recurse(size_t depth) {
        if (depth == m_) {
            visit_(std::span<const uint64_t>(labels_.data(), m_));
            count_++;
            return;
        }
        for (uint64_t q = labels_[depth - 1] + 1; q < total_; q++) {
            bool ok = true;
            for (size_t k = 0; k < depth && ok; k++) {
                ok = labels_commute(n_, labels_[k], q);
            }
            if (!ok) {
                continue;
            }
            uint64_t reduced = reduce(q, depth);
            if (reduced == 0) {
                continue;
            }
            // Keep pivots ordered by decreasing leading bit so a single pass reduces.
            labels_[depth] = q;
            std::vector<uint64_t> saved(pivots_.begin(), pivots_.begin() + static_cast<std::ptrdiff_t>(depth));
            size_t pos = 0;
            while (pos < depth && std::countl_zero(pivots_[pos]) < std::countl_zero(reduced)) {
                pos++;
            }
            for (size_t k = depth; k > pos; k--) {
                pivots_[k] = pivots_[k - 1];
            }
            pivots_[pos] = reduced;
            recurse(depth + 1);
            std::copy(saved.begin(), saved.end(), pivots_.begin());
        }
    }

    size_t n_, m_;
    uint64_t total_;
    const SetVisitor &visit_;
    std::vector<uint64_t> labels_;
    std::vector<uint64_t> pivots_;
    uint64_t count_ = 0;
};

void check_feasible(size_t n, size_t m, const EnumerationOptions &options) {
    check_counting_range(n, m);
    if (n > MAX_LABEL_QUBITS / 4) {
        throw Error(ErrorKind::FeasibilityRefusal, "enumeration scans 4^n labels; n <= 8 is the hard limit");
    }
    if (n > options.max_qubits && !options.allow_large) {
        std::ostringstream msg;
        msg << "enumerating G_{" << n << "," << m << "} would emit " << count_sets(n, m)
            << " sets; pass the override to proceed";
        throw Error(ErrorKind::FeasibilityRefusal, msg.str());
    }
}

PauliSet set_from_labels(size_t n, std::span<const uint64_t> labels) {
    std::vector<PauliOperator> elements;
    elements.reserve(labels.size());
    for (uint64_t l : labels) {
        elements.push_back(PauliOperator::from_label(n, l));
    }
    return PauliSet::from_sorted_unchecked(n, std::move(elements));
}

std::string describe(const CanonicalForm &f) {
    return render(f);
}

}  // namespace

////////////////////////////////////////////////////////////////////////////////
// Counting

BigInt count_tuples(size_t n, size_t m) {
    check_counting_range(n, m);
    BigInt result = 1;
    for (size_t k = 0; k < m; k++) {
        result *= (BigInt(1) << (2 * n - k)) - (BigInt(1) << k);
    }
    return result;
}

BigInt count_sets(size_t n, size_t m) {
    BigInt tuples = count_tuples(n, m);
    BigInt factorial = 1;
    for (size_t k = 2; k <= m; k++) {
        factorial *= k;
    }
    if (tuples % factorial != 0) {
        throw std::logic_error("count_tuples is not divisible by m!");
    }
    return tuples / factorial;
}

TDepthOneCount count_tdepth_one(size_t n) {
    if (n == 0) {
        throw Error(ErrorKind::InvalidArgument, "need n >= 1");
    }
    TDepthOneCount out;
    for (size_t m = 1; m <= n; m++) {
        out.g_n += count_sets(n, m);
    }
    out.total = out.g_n * group_order(n);
    return out;
}

CensusRow census_row(size_t n, size_t m) {
    CensusRow row;
    row.n = n;
    row.m = m;
    row.tuple_count = count_tuples(n, m);
    row.set_count = count_sets(n, m);
    row.clifford_order = group_order(n);
    row.unitary_count = row.set_count * row.clifford_order;
    return row;
}

////////////////////////////////////////////////////////////////////////////////
// Enumeration

uint64_t enumerate_partition(size_t n, size_t m, uint64_t first_label, const SetVisitor &visit) {
    check_counting_range(n, m);
    SetEnumerator e(n, m, visit);
    return e.run_from(first_label);
}

uint64_t enumerate_sets(size_t n, size_t m, const SetVisitor &visit, const EnumerationOptions &options) {
    check_feasible(n, m, options);
    uint64_t total = uint64_t{1} << (2 * n);
    uint64_t count = 0;
    for (uint64_t first = 1; first < total; first++) {
        count += enumerate_partition(n, m, first, visit);
    }
    return count;
}

uint64_t enumerate_sets_parallel(size_t n, size_t m, std::ostream *out, const EnumerationOptions &options) {
    check_feasible(n, m, options);
    uint64_t total = uint64_t{1} << (2 * n);
    auto render_line = [n](std::span<const uint64_t> labels, std::string &dst) {
        for (size_t k = 0; k < labels.size(); k++) {
            if (k) {
                dst += ',';
            }
            dst += PauliOperator::from_label(n, labels[k]).str();
        }
        dst += '\n';
    };
    if (options.workers <= 1) {
        std::string buffer;
        SetVisitor visit = [&](std::span<const uint64_t> labels) {
            if (out != nullptr) {
                render_line(labels, buffer);
                if (buffer.size() > (1 << 16)) {
                    *out << buffer;
                    buffer.clear();
                }
            }
        };
        uint64_t count = enumerate_sets(n, m, visit, options);
        if (out != nullptr) {
            *out << buffer;
        }
        return count;
    }

    std::vector<std::string> chunks(out != nullptr ? total : 0);
    std::vector<uint64_t> counts(total, 0);
    std::atomic<uint64_t> next{1};
    auto worker = [&]() {
        while (true) {
            uint64_t first = next.fetch_add(1);
            if (first >= total) {
                return;
            }
            SetVisitor visit = [&](std::span<const uint64_t> labels) {
                if (out != nullptr) {
                    render_line(labels, chunks[first]);
                }
            };
            counts[first] = enumerate_partition(n, m, first, visit);
        }
    };
    std::vector<std::thread> threads;
    for (size_t w = 0; w < options.workers; w++) {
        threads.emplace_back(worker);
    }
    for (auto &t : threads) {
        t.join();
    }
    uint64_t count = 0;
    for (uint64_t first = 1; first < total; first++) {
        count += counts[first];
        if (out != nullptr) {
            *out << chunks[first];
        }
    }
    return count;
}

std::vector<PauliSet> collect_sets(size_t n, size_t m, const EnumerationOptions &options) {
    std::vector<PauliSet> out;
    enumerate_sets(n, m, [&](std::span<const uint64_t> labels) { out.push_back(set_from_labels(n, labels)); }, options);
    return out;
}

std::vector<CanonicalForm> all_forms(size_t n) {
    std::vector<CanonicalForm> out;
    for (size_t m = 1; m <= n; m++) {
        for (auto &s : collect_sets(n, m)) {
            out.push_back(CanonicalForm{std::move(s), CliffordTableau::identity(n)});
        }
    }
    return out;
}

PauliSet random_pauli_set(size_t n, size_t m, std::mt19937_64 &rng) {
    check_counting_range(n, m);
    if (n > MAX_LABEL_QUBITS / 2) {
        throw Error(ErrorKind::InvalidArgument, "random_pauli_set needs n <= 16");
    }
    std::uniform_int_distribution<uint64_t> pick(1, (uint64_t{1} << (2 * n)) - 1);
    std::vector<PauliOperator> chosen;
    F2Basis basis;
    while (chosen.size() < m) {
        PauliOperator p = PauliOperator::from_label(n, pick(rng));
        bool ok = std::all_of(chosen.begin(), chosen.end(), [&](const PauliOperator &q) { return commutes(p, q); });
        if (ok && basis.insert(p)) {
            chosen.push_back(p);
        }
    }
    return PauliSet::validate(chosen);
}

CanonicalForm random_form(size_t n, std::mt19937_64 &rng, bool identity_clifford) {
    std::uniform_int_distribution<size_t> pick_m(1, n);
    PauliSet set = random_pauli_set(n, pick_m(rng), rng);
    CliffordTableau c = identity_clifford ? CliffordTableau::identity(n) : random_clifford(n, rng);
    return CanonicalForm{std::move(set), std::move(c)};
}

////////////////////////////////////////////////////////////////////////////////
// Verification

VerificationReport verify_distinctness(size_t n, DistinctnessMode mode, uint64_t trials, uint64_t seed) {
    auto start = Clock::now();
    VerificationReport report;
    report.check = "distinctness";
    if (mode == DistinctnessMode::Exhaustive) {
        if (n > 2) {
            throw Error(ErrorKind::FeasibilityRefusal, "exhaustive distinctness is limited to n <= 2");
        }
        std::vector<CanonicalForm> forms = all_forms(n);
        std::vector<ChannelRep> channels;
        std::vector<ChannelRep> transposed;
        for (const auto &f : forms) {
            channels.push_back(channel_of_canonical(f));
            transposed.push_back(channels.back().transpose());
        }
        for (size_t i = 0; i < forms.size(); i++) {
            if (!is_signed_permutation(multiply(transposed[i], channels[i]))) {
                report.failures.push_back("sanity: " + describe(forms[i]) + " is not reconciled with itself");
            }
            for (size_t j = i + 1; j < forms.size(); j++) {
                if (is_signed_permutation(multiply(transposed[i], channels[j]))) {
                    report.failures.push_back("collision: " + describe(forms[i]) + " ~ " + describe(forms[j]));
                }
                report.counts["pairs"]++;
            }
        }
        report.counts["forms"] = forms.size();
        report.elapsed_seconds = seconds_since(start);
        return report;
    }

    report.seed = seed;
    std::mt19937_64 rng(seed);
    std::vector<CanonicalForm> pool;
    std::optional<ChannelRep> first_channel;
    std::vector<SignedColumnIndex> indices;
    std::set<PauliSet> seen;
    uint64_t checked = 0;
    size_t next_partner = 0;
    size_t newest = 0;
    // A growing pool: each new form is compared against every earlier distinct form, until the
    // requested number of pairs has been checked.
    while (checked < trials) {
        CanonicalForm f = random_form(n, rng, /*identity_clifford=*/true);
        if (!seen.insert(f.set).second) {
            report.counts["duplicate_draws"]++;
            continue;
        }
        pool.push_back(std::move(f));
        ChannelRep channel = channel_of_canonical(pool.back());
        indices.emplace_back(channel);
        if (!first_channel) {
            first_channel = std::move(channel);
        }
        newest = pool.size() - 1;
        for (next_partner = 0; next_partner < newest && checked < trials; next_partner++) {
            if (indices[next_partner].covers(indices[newest])) {
                report.failures.push_back("collision: " + describe(pool[next_partner]) + " ~ " + describe(pool[newest]));
            }
            checked++;
        }
    }
    // Sanity arm: a form is reconciled with itself and with itself times any Clifford.
    ChannelRep shifted = *first_channel;
    shifted.right_multiply_clifford(random_clifford(n, rng));
    if (!reconcilable_by_signed_permutation(*first_channel, *first_channel) ||
        !reconcilable_by_signed_permutation(*first_channel, shifted)) {
        report.failures.push_back("sanity: reconciliation detector missed a Clifford-related pair");
    }
    report.counts["pairs"] = checked;
    report.counts["forms"] = pool.size();
    report.elapsed_seconds = seconds_since(start);
    return report;
}

VerificationReport verify_unit_rows(size_t n, uint64_t trials, uint64_t seed) {
    auto start = Clock::now();
    VerificationReport report;
    report.check = "unit-rows";
    report.seed = seed;
    std::mt19937_64 rng(seed);

    CliffordTableau pure = random_clifford(n, rng);
    if (unit_rows(channel_of_clifford(pure)).size() != (uint64_t{1} << (2 * n))) {
        report.failures.push_back("pure Clifford " + pure.str() + " has a row without a unit entry");
    }
    report.counts["forms"]++;

    for (uint64_t t = 0; t < trials; t++) {
        CanonicalForm f = random_form(n, rng);
        std::vector<uint64_t> rows = unit_rows(channel_of_canonical(f));
        std::vector<uint64_t> expected = commutant(f.set);
        if (rows != expected) {
            report.failures.push_back("unit rows differ from the commutant for " + describe(f));
        } else if (rows.size() != (uint64_t{1} << (2 * n - f.set.size()))) {
            report.failures.push_back("commutant size is not 2^(2n-m) for " + describe(f));
        }
        report.counts["forms"]++;
    }
    report.elapsed_seconds = seconds_since(start);
    return report;
}

VerificationReport verify_hamming_weight(size_t n, size_t k_max) {
    auto start = Clock::now();
    VerificationReport report;
    report.check = "hamming-weight";
    if (n == 0 || n > oracle::DEFAULT_MAX_QUBITS) {
        throw Error(ErrorKind::FeasibilityRefusal, "hamming-weight check runs the dense oracle; need 1 <= n <= 3");
    }
    size_t k_top = std::min(k_max, n);
    uint64_t strings = uint64_t{1} << n;

    // Families {a_1 < ... < a_k} of linearly independent nonzero bit-strings.
    std::vector<uint64_t> family;
    std::function<void(uint64_t)> extend = [&](uint64_t from) {
        if (!family.empty()) {
            oracle::DenseMatrix u = oracle::DenseMatrix::identity(n);
            for (uint64_t a : family) {
                u = u * oracle::dense_of_exponential(PauliOperator(n, 0, a, 0));
            }
            oracle::DenseMatrix u_dag = u.adjoint();
            for (size_t j = 0; j < n; j++) {
                oracle::DenseMatrix m = u * oracle::dense_of_pauli(PauliOperator::x(n, j)) * u_dag;
                size_t support = oracle::pauli_expand(m).size();
                size_t w = 0;
                for (uint64_t a : family) {
                    w += (a >> (n - 1 - j)) & 1;
                }
                if (support != (size_t{1} << w)) {
                    std::ostringstream msg;
                    msg << "family {";
                    for (uint64_t a : family) {
                        msg << ' ' << PauliOperator(n, 0, a, 0).letters();
                    }
                    msg << " } qubit " << j << ": support " << support << ", expected 2^" << w;
                    report.failures.push_back(msg.str());
                }
                report.counts["instances"]++;
            }
            report.counts["families"]++;
        }
        if (family.size() == k_top) {
            return;
        }
        for (uint64_t a = from; a < strings; a++) {
            F2Basis basis;
            for (uint64_t b : family) {
                basis.insert(PauliOperator(n, 0, b, 0));
            }
            if (!basis.insert(PauliOperator(n, 0, a, 0))) {
                continue;
            }
            family.push_back(a);
            extend(a + 1);
            family.pop_back();
        }
    };
    extend(1);
    report.elapsed_seconds = seconds_since(start);
    return report;
}

VerificationReport verify_spectrum(size_t n, bool exhaustive, uint64_t trials, uint64_t seed) {
    auto start = Clock::now();
    VerificationReport report;
    report.check = "spectrum";
    report.seed = seed;
    std::mt19937_64 rng(seed);

    std::vector<PauliSpectrum> references;
    for (size_t m = 0; m <= n; m++) {
        std::vector<PauliOperator> zs;
        for (size_t q = 0; q < m; q++) {
            zs.push_back(PauliOperator::z(n, q));
        }
        CanonicalForm ref{m ? PauliSet::validate(zs) : PauliSet(n), CliffordTableau::identity(n)};
        references.push_back(pauli_spectrum(channel_of_canonical(ref)));
    }

    auto check = [&](const CanonicalForm &f) {
        ChannelRep r = channel_of_canonical(f);
        try {
            size_t inferred = infer_t_count(r);
            if (inferred != f.set.size()) {
                report.failures.push_back("inferred T-count " + std::to_string(inferred) + " for " + describe(f));
            }
        } catch (const Error &e) {
            report.failures.push_back(std::string(e.what()) + " for " + describe(f));
        }
        if (pauli_spectrum(r) != references[f.set.size()]) {
            report.failures.push_back("spectrum differs from the reference form for " + describe(f));
        }
        report.counts["forms"]++;
    };

    if (exhaustive) {
        if (n > 2) {
            throw Error(ErrorKind::FeasibilityRefusal, "exhaustive spectrum check is limited to n <= 2");
        }
        for (auto &f : all_forms(n)) {
            check(f);
            f.clifford = random_clifford(n, rng);
            check(f);
        }
    } else {
        for (uint64_t t = 0; t < trials; t++) {
            check(random_form(n, rng));
        }
    }
    report.elapsed_seconds = seconds_since(start);
    return report;
}

VerificationReport verify_oracle(size_t n, uint64_t trials, uint64_t seed) {
    auto start = Clock::now();
    VerificationReport report;
    report.check = "oracle";
    report.seed = seed;
    std::mt19937_64 rng(seed);

    std::vector<GateToken> gates;
    for (size_t a = 0; a < n; a++) {
        for (auto kind : {GateToken::Kind::H, GateToken::Kind::S, GateToken::Kind::X, GateToken::Kind::Z}) {
            gates.push_back({kind, a, 0});
        }
        for (size_t b = 0; b < n; b++) {
            if (a != b) {
                gates.push_back({GateToken::Kind::CX, a, b});
                if (a < b) {
                    gates.push_back({GateToken::Kind::CZ, a, b});
                    gates.push_back({GateToken::Kind::SWAP, a, b});
                }
            }
        }
    }
    for (const auto &g : gates) {
        if (channel_of_clifford(CliffordTableau::from_gate(n, g)) !=
            oracle::channel_bruteforce(oracle::dense_of_gate(n, g))) {
            report.failures.push_back("gate " + g.str() + ": structured and brute-force channels differ");
        }
        report.counts["gates"]++;
    }
    for (uint64_t label = 1; label < (uint64_t{1} << (2 * n)); label++) {
        PauliOperator p = PauliOperator::from_label(n, label);
        if (channel_of_exponential(p) != oracle::channel_bruteforce(oracle::dense_of_exponential(p))) {
            report.failures.push_back("exp(i pi " + p.str() + "/8): structured and brute-force channels differ");
        }
        report.counts["exponentials"]++;
    }

    std::uniform_int_distribution<size_t> pick_gate(0, gates.size() - 1);
    for (uint64_t t = 0; t < trials; t++) {
        CanonicalForm f = random_form(n, rng, /*identity_clifford=*/true);
        std::vector<GateToken> word;
        for (size_t k = 0; k < 4 * n + 2; k++) {
            word.push_back(gates[pick_gate(rng)]);
        }
        f.clifford = CliffordTableau::from_gate_word(n, word);
        oracle::DenseMatrix u = oracle::DenseMatrix::identity(n);
        for (const auto &p : f.set.elements()) {
            u = u * oracle::dense_of_exponential(p);
        }
        u = u * oracle::dense_of_gate_word(n, word);
        if (channel_of_canonical(f) != oracle::channel_bruteforce(u)) {
            report.failures.push_back("form " + describe(f) + " (word " + render_gate_word(word) +
                                      "): structured and brute-force channels differ");
        }
        report.counts["forms"]++;
    }
    report.elapsed_seconds = seconds_since(start);
    return report;
}

VerificationReport verify_orthogonality(size_t n, uint64_t trials, uint64_t seed) {
    auto start = Clock::now();
    VerificationReport report;
    report.check = "orthogonality";
    report.seed = seed;
    std::mt19937_64 rng(seed);
    for (uint64_t t = 0; t < trials; t++) {
        CliffordTableau c = random_clifford(n, rng);
        ChannelRep rc = channel_of_clifford(c);
        if (!rc.is_orthogonal()) {
            report.failures.push_back("Clifford channel not orthogonal: " + c.str());
        }
        if (!is_signed_permutation(rc)) {
            report.failures.push_back("Clifford channel not a signed permutation: " + c.str());
        }
        CanonicalForm f = random_form(n, rng);
        ChannelRep rf = channel_of_canonical(f);
        if (!rf.is_orthogonal()) {
            report.failures.push_back("form channel not orthogonal: " + describe(f));
        }
        if (is_signed_permutation(rf)) {
            report.failures.push_back("form channel with m >= 1 is a signed permutation: " + describe(f));
        }
        ChannelRep product = multiply(rf, rc);
        if (!product.is_orthogonal()) {
            report.failures.push_back("product channel not orthogonal: " + describe(f) + " * " + c.str());
        }
        report.counts["samples"]++;
    }
    report.elapsed_seconds = seconds_since(start);
    return report;
}

std::string emit_table(size_t n_max) {
    if (n_max == 0) {
        throw Error(ErrorKind::InvalidArgument, "need at least one row");
    }
    std::ostringstream out;
    out << "qubits\ttdepth_one\tclifford_order";
    for (size_t m = 1; m <= n_max; m++) {
        out << "\ttcount_" << m;
    }
    out << '\n';
    for (size_t n = 1; n <= n_max; n++) {
        out << n << '\t' << count_tdepth_one(n).g_n << '\t' << group_order(n);
        for (size_t m = 1; m <= n_max; m++) {
            out << '\t';
            if (m <= n) {
                out << count_sets(n, m);
            } else {
                out << '-';
            }
        }
        out << '\n';
    }
    return out.str();
}

VerificationReport growth_check(size_t n_max) {
    auto start = Clock::now();
    VerificationReport report;
    report.check = "growth";
    if (n_max == 0 || n_max > 64) {
        throw Error(ErrorKind::InvalidArgument, "growth check needs 1 <= n_max <= 64");
    }
    for (size_t n = 1; n <= n_max; n++) {
        BigInt g = count_tdepth_one(n).g_n;
        if (g < (BigInt(1) << (n * n))) {
            std::ostringstream msg;
            msg << "n=" << n << ": g_n has " << (boost::multiprecision::msb(g) + 1) << " bits, below 2^" << n * n;
            report.failures.push_back(msg.str());
        }
        report.counts["qubits_checked"]++;
    }
    report.elapsed_seconds = seconds_since(start);
    return report;
}

}  // namespace tdepth
