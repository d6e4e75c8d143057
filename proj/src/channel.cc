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

#include "tdepth/channel.h"

#include <algorithm>
#include <map>
#include <sstream>

#include "tdepth/error.h"

namespace tdepth {

namespace {

void require_same_width(size_t a, size_t b) {
    if (a != b) {
        throw Error(ErrorKind::MismatchedQubits, std::to_string(a) + " vs " + std::to_string(b) + " qubits");
    }
}

// Sign of i P Q as a Hermitian Pauli, for anticommuting P and Q.
int sign_of_i_pq(const PauliOperator &p, const PauliOperator &q) {
    return (p * q).times_i_power(1).phase() == 0 ? 1 : -1;
}

void check_exponential_input(const PauliOperator &p) {
    if (p.is_identity_up_to_phase()) {
        throw Error(ErrorKind::IdentityPauli, "exp(i pi I / 8) is a global phase");
    }
    if (!p.is_positive()) {
        throw Error(ErrorKind::NonPositivePauli, p.str() + " must carry a + sign");
    }
}

}  // namespace

ChannelRep::ChannelRep(size_t num_qubits) : n_(num_qubits), dim_(uint64_t{1} << (2 * num_qubits)) {
    if (num_qubits > MAX_CHANNEL_QUBITS) {
        throw Error(ErrorKind::SizeRefusal, "channel representations are limited to " +
                                                std::to_string(MAX_CHANNEL_QUBITS) + " qubits");
    }
    entries_.resize(dim_ * dim_);
}

ChannelRep ChannelRep::identity(size_t num_qubits) {
    ChannelRep r(num_qubits);
    for (uint64_t k = 0; k < r.dim_; k++) {
        r.at(k, k) = DyadicSqrt2Scalar::one();
    }
    return r;
}

void ChannelRep::right_multiply_exponential(const PauliOperator &p) {
    check_exponential_input(p);
    require_same_width(n_, p.num_qubits());
    uint64_t pl = p.label();
    for (uint64_t q = 0; q < dim_; q++) {
        uint64_t partner = q ^ pl;
        if (partner < q || labels_commute(n_, pl, q)) {
            continue;
        }
        PauliOperator qp = PauliOperator::from_label(n_, q);
        PauliOperator pp = PauliOperator::from_label(n_, partner);
        // Column Q of R is (e_Q + s_Q e_{PQ}) / sqrt2 with s_Q the sign of iPQ.
        int sq = sign_of_i_pq(p, qp);
        int sp = sign_of_i_pq(p, pp);
        for (uint64_t r = 0; r < dim_; r++) {
            DyadicSqrt2Scalar &a = at(r, q);
            DyadicSqrt2Scalar &b = at(r, partner);
            if (a.is_zero() && b.is_zero()) {
                continue;
            }
            DyadicSqrt2Scalar na = (sq > 0 ? a + b : a - b).div_sqrt2();
            DyadicSqrt2Scalar nb = (sp > 0 ? b + a : b - a).div_sqrt2();
            a = std::move(na);
            b = std::move(nb);
        }
    }
}

void ChannelRep::left_multiply_exponential(const PauliOperator &p) {
    check_exponential_input(p);
    require_same_width(n_, p.num_qubits());
    uint64_t pl = p.label();
    for (uint64_t k = 0; k < dim_; k++) {
        uint64_t partner = k ^ pl;
        if (partner < k || labels_commute(n_, pl, k)) {
            continue;
        }
        // Row K of R has 1/sqrt2 at K and s_L/sqrt2 at L = PK, with s_L the sign of iPL.
        int s_from_partner = sign_of_i_pq(p, PauliOperator::from_label(n_, partner));
        int s_from_k = sign_of_i_pq(p, PauliOperator::from_label(n_, k));
        for (uint64_t c = 0; c < dim_; c++) {
            DyadicSqrt2Scalar &a = at(k, c);
            DyadicSqrt2Scalar &b = at(partner, c);
            if (a.is_zero() && b.is_zero()) {
                continue;
            }
            DyadicSqrt2Scalar na = (s_from_partner > 0 ? a + b : a - b).div_sqrt2();
            DyadicSqrt2Scalar nb = (s_from_k > 0 ? b + a : b - a).div_sqrt2();
            a = std::move(na);
            b = std::move(nb);
        }
    }
}

void ChannelRep::right_multiply_clifford(const CliffordTableau &c) {
    require_same_width(n_, c.num_qubits());
    std::vector<DyadicSqrt2Scalar> out(entries_.size());
    for (uint64_t q = 0; q < dim_; q++) {
        PauliOperator image = c.conjugate(PauliOperator::from_label(n_, q));
        uint64_t src = image.label();
        bool negate = image.phase() == 2;
        for (uint64_t r = 0; r < dim_; r++) {
            const auto &v = at(r, src);
            out[r * dim_ + q] = negate ? -v : v;
        }
    }
    entries_ = std::move(out);
}

void ChannelRep::left_multiply_clifford(const CliffordTableau &c) {
    require_same_width(n_, c.num_qubits());
    std::vector<DyadicSqrt2Scalar> out(entries_.size());
    for (uint64_t l = 0; l < dim_; l++) {
        PauliOperator image = c.conjugate(PauliOperator::from_label(n_, l));
        uint64_t dst = image.label();
        bool negate = image.phase() == 2;
        for (uint64_t col = 0; col < dim_; col++) {
            const auto &v = at(l, col);
            out[dst * dim_ + col] = negate ? -v : v;
        }
    }
    entries_ = std::move(out);
}

ChannelRep ChannelRep::transpose() const {
    ChannelRep t(n_);
    for (uint64_t r = 0; r < dim_; r++) {
        for (uint64_t c = 0; c < dim_; c++) {
            t.at(c, r) = at(r, c);
        }
    }
    return t;
}

bool ChannelRep::is_orthogonal() const {
    std::vector<std::vector<uint64_t>> support(dim_);
    for (uint64_t r = 0; r < dim_; r++) {
        for (uint64_t c = 0; c < dim_; c++) {
            if (!at(r, c).is_zero()) {
                support[r].push_back(c);
            }
        }
    }
    for (uint64_t i = 0; i < dim_; i++) {
        for (uint64_t j = i; j < dim_; j++) {
            DyadicSqrt2Scalar dot;
            for (uint64_t c : support[i]) {
                const auto &v = at(j, c);
                if (!v.is_zero()) {
                    dot += at(i, c) * v;
                }
            }
            if (i == j ? !dot.is_one() : !dot.is_zero()) {
                return false;
            }
        }
    }
    return true;
}

std::string ChannelRep::to_tsv() const {
    std::ostringstream out;
    for (uint64_t c = 0; c < dim_; c++) {
        out << '\t' << PauliOperator::from_label(n_, c).letters();
    }
    out << '\n';
    for (uint64_t r = 0; r < dim_; r++) {
        out << PauliOperator::from_label(n_, r).letters();
        for (uint64_t c = 0; c < dim_; c++) {
            out << '\t' << at(r, c).compact_str();
        }
        out << '\n';
    }
    return out.str();
}

ChannelRep channel_of_clifford(const CliffordTableau &c) {
    ChannelRep r(c.num_qubits());
    for (uint64_t q = 0; q < r.dim(); q++) {
        PauliOperator image = c.conjugate(PauliOperator::from_label(c.num_qubits(), q));
        r.at(image.label(), q) = DyadicSqrt2Scalar::from_int(image.phase() == 2 ? -1 : 1);
    }
    return r;
}

ChannelRep channel_of_exponential(const PauliOperator &p) {
    check_exponential_input(p);
    ChannelRep r = ChannelRep::identity(p.num_qubits());
    r.right_multiply_exponential(p);
    return r;
}

ChannelRep multiply(const ChannelRep &a, const ChannelRep &b) {
    require_same_width(a.num_qubits(), b.num_qubits());
    ChannelRep out(a.num_qubits());
    uint64_t d = a.dim();
    for (uint64_t i = 0; i < d; i++) {
        for (uint64_t k = 0; k < d; k++) {
            const auto &aik = a.at(i, k);
            if (aik.is_zero()) {
                continue;
            }
            for (uint64_t j = 0; j < d; j++) {
                const auto &bkj = b.at(k, j);
                if (!bkj.is_zero()) {
                    out.at(i, j) += aik * bkj;
                }
            }
        }
    }
    return out;
}

ChannelRep channel_of_canonical(const CanonicalForm &f) {
    ChannelRep r = ChannelRep::identity(f.num_qubits());
    for (const auto &p : f.set.elements()) {
        r.right_multiply_exponential(p);
    }
    r.right_multiply_clifford(f.clifford);
    return r;
}

ChannelRep channel_of_layered(const LayeredForm &f) {
    ChannelRep r = ChannelRep::identity(f.clifford.num_qubits());
    for (const auto &layer : f.layers) {
        for (const auto &p : layer.elements()) {
            r.right_multiply_exponential(p);
        }
    }
    r.right_multiply_clifford(f.clifford);
    return r;
}

std::vector<uint64_t> unit_rows(const ChannelRep &r) {
    std::vector<uint64_t> out;
    for (uint64_t row = 0; row < r.dim(); row++) {
        for (uint64_t c = 0; c < r.dim(); c++) {
            const auto &v = r.at(row, c);
            if (v.k() == 0 && v.b().is_zero() && (v.a() == 1 || v.a() == -1)) {
                out.push_back(row);
                break;
            }
        }
    }
    return out;
}

bool is_signed_permutation(const ChannelRep &r) {
    std::vector<int> col_count(r.dim(), 0);
    for (uint64_t row = 0; row < r.dim(); row++) {
        int row_count = 0;
        for (uint64_t c = 0; c < r.dim(); c++) {
            const auto &v = r.at(row, c);
            if (v.is_zero()) {
                continue;
            }
            if (v.abs() != DyadicSqrt2Scalar::one()) {
                return false;
            }
            row_count++;
            col_count[c]++;
        }
        if (row_count != 1) {
            return false;
        }
    }
    return std::all_of(col_count.begin(), col_count.end(), [](int c) { return c == 1; });
}

PauliSpectrum pauli_spectrum(const ChannelRep &r) {
    std::map<DyadicSqrt2Scalar, uint64_t, DyadicStructuralLess> counts;
    for (uint64_t row = 0; row < r.dim(); row++) {
        for (uint64_t c = 0; c < r.dim(); c++) {
            counts[r.at(row, c).abs()]++;
        }
    }
    PauliSpectrum out;
    for (auto &[m, c] : counts) {
        out.push_back({m, c});
    }
    std::sort(out.begin(), out.end(), [](const SpectrumEntry &a, const SpectrumEntry &b) {
        return compare_real(a.magnitude, b.magnitude) < 0;
    });
    return out;
}

PauliSpectrum reference_spectrum(size_t n, size_t m) {
    if (m > n) {
        throw Error(ErrorKind::InvalidArgument, "reference spectrum needs m <= n");
    }
    // One factor of R has 2 entries of magnitude 1, 4 of magnitude 1/sqrt2 and 10 zeros; the
    // identity factor has 4 ones. Entries of the tensor product with j factors of 1/sqrt2:
    // C(m, j) 2^{m-j} 4^j 4^{n-m}.
    PauliSpectrum out;
    uint64_t total = uint64_t{1} << (4 * n);
    uint64_t nonzero = 0;
    uint64_t binom = 1;
    std::vector<SpectrumEntry> by_j;
    for (size_t j = 0; j <= m; j++) {
        uint64_t count = binom * (uint64_t{1} << (m - j)) * (uint64_t{1} << (2 * j)) * (uint64_t{1} << (2 * (n - m)));
        nonzero += count;
        DyadicSqrt2Scalar mag = j % 2 == 0 ? DyadicSqrt2Scalar(1, 0, static_cast<uint32_t>(j / 2))
                                           : DyadicSqrt2Scalar(0, 1, static_cast<uint32_t>((j + 1) / 2));
        by_j.push_back({mag, count});
        binom = binom * (m - j) / (j + 1);
    }
    out.push_back({DyadicSqrt2Scalar(), total - nonzero});
    for (size_t j = by_j.size(); j-- > 0;) {
        out.push_back(by_j[j]);
    }
    return out;
}

size_t infer_t_count(const ChannelRep &r) {
    PauliSpectrum spectrum = pauli_spectrum(r);
    const DyadicSqrt2Scalar *smallest = nullptr;
    for (const auto &e : spectrum) {
        if (!e.magnitude.is_zero()) {
            smallest = &e.magnitude;
            break;
        }
    }
    if (smallest == nullptr) {
        throw Error(ErrorKind::SpectrumMismatch, "matrix is zero");
    }
    size_t m;
    if (smallest->b().is_zero() && smallest->a() == 1) {
        m = 2 * smallest->k();
    } else if (smallest->a().is_zero() && smallest->b() == 1 && smallest->k() >= 1) {
        m = 2 * smallest->k() - 1;
    } else {
        throw Error(ErrorKind::SpectrumMismatch, "smallest magnitude " + smallest->str() + " is not a power of 1/sqrt2");
    }
    if (m > r.num_qubits()) {
        throw Error(ErrorKind::SpectrumMismatch, "inferred T-count exceeds the qubit count");
    }
    if (spectrum != reference_spectrum(r.num_qubits(), m)) {
        throw Error(ErrorKind::SpectrumMismatch, "spectrum does not match the T-count " + std::to_string(m) + " pattern");
    }
    return m;
}

bool reconcilable_by_signed_permutation(const ChannelRep &a, const ChannelRep &b) {
    require_same_width(a.num_qubits(), b.num_qubits());
    return SignedColumnIndex(a).covers(SignedColumnIndex(b));
}

SignedColumnIndex::SignedColumnIndex(const ChannelRep &r) : n_(r.num_qubits()) {
    columns_.resize(r.dim());
    for (uint64_t c = 0; c < r.dim(); c++) {
        int flip = 0;
        for (uint64_t row = 0; row < r.dim(); row++) {
            const auto &v = r.at(row, c);
            if (v.is_zero()) {
                continue;
            }
            if (flip == 0) {
                flip = v.sign();
            }
            columns_[c].emplace_back(row, flip < 0 ? -v : v);
        }
    }
    std::sort(columns_.begin(), columns_.end(), less);
}

bool SignedColumnIndex::less(const SparseColumn &a, const SparseColumn &b) {
    DyadicStructuralLess value_less;
    size_t common = std::min(a.size(), b.size());
    for (size_t k = 0; k < common; k++) {
        if (a[k].first != b[k].first) {
            return a[k].first < b[k].first;
        }
        if (value_less(a[k].second, b[k].second)) {
            return true;
        }
        if (value_less(b[k].second, a[k].second)) {
            return false;
        }
    }
    return a.size() < b.size();
}

bool SignedColumnIndex::covers(const SignedColumnIndex &other) const {
    require_same_width(n_, other.n_);
    return std::includes(columns_.begin(), columns_.end(), other.columns_.begin(), other.columns_.end(), less);
}

}  // namespace tdepth
