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

#include "tdepth/pauli.h"

#include <algorithm>
#include <bit>

#include "tdepth/error.h"

namespace tdepth {

namespace {

uint64_t width_mask(size_t n) {
    return n >= 64 ? ~uint64_t{0} : ((uint64_t{1} << n) - 1);
}

void require_same_width(const PauliOperator &p, const PauliOperator &q) {
    if (p.num_qubits() != q.num_qubits()) {
        throw Error(
            ErrorKind::MismatchedQubits,
            "Pauli widths differ: " + std::to_string(p.num_qubits()) + " vs " + std::to_string(q.num_qubits()));
    }
}

unsigned __int128 symplectic_vector(const PauliOperator &p) {
    return (static_cast<unsigned __int128>(p.xs()) << 64) | p.zs();
}

int leading_bit(unsigned __int128 v) {
    uint64_t hi = static_cast<uint64_t>(v >> 64);
    if (hi) {
        return 127 - std::countl_zero(hi);
    }
    return 63 - std::countl_zero(static_cast<uint64_t>(v));
}

}  // namespace

PauliOperator::PauliOperator(size_t num_qubits, uint64_t xs, uint64_t zs, uint8_t phase)
    : n_(num_qubits), xs_(xs), zs_(zs), phase_(phase & 3) {
    if (num_qubits > MAX_QUBITS) {
        throw Error(ErrorKind::InvalidArgument, "at most 64 qubits are supported");
    }
    if (((xs | zs) & ~width_mask(num_qubits)) != 0) {
        throw Error(ErrorKind::IndexOutOfRange, "Pauli bits outside the qubit range");
    }
}

PauliOperator PauliOperator::identity(size_t num_qubits) {
    return PauliOperator(num_qubits, 0, 0, 0);
}

PauliOperator PauliOperator::x(size_t num_qubits, size_t qubit) {
    if (qubit >= num_qubits) {
        throw Error(ErrorKind::IndexOutOfRange, "qubit " + std::to_string(qubit));
    }
    return PauliOperator(num_qubits, uint64_t{1} << (num_qubits - 1 - qubit), 0, 0);
}

PauliOperator PauliOperator::z(size_t num_qubits, size_t qubit) {
    if (qubit >= num_qubits) {
        throw Error(ErrorKind::IndexOutOfRange, "qubit " + std::to_string(qubit));
    }
    return PauliOperator(num_qubits, 0, uint64_t{1} << (num_qubits - 1 - qubit), 0);
}

PauliOperator PauliOperator::y(size_t num_qubits, size_t qubit) {
    PauliOperator p = x(num_qubits, qubit);
    p.zs_ = p.xs_;
    return p;
}

PauliOperator PauliOperator::from_label(size_t num_qubits, uint64_t label) {
    if (num_qubits > MAX_LABEL_QUBITS) {
        throw Error(ErrorKind::InvalidArgument, "labels require at most 32 qubits");
    }
    uint64_t mask = width_mask(num_qubits);
    if (num_qubits < 32 && (label >> (2 * num_qubits)) != 0) {
        throw Error(ErrorKind::IndexOutOfRange, "label out of range");
    }
    return PauliOperator(num_qubits, label >> num_qubits, label & mask, 0);
}

PauliOperator PauliOperator::from_str(std::string_view text) {
    size_t pos = 0;
    uint8_t phase = 0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        phase = text[pos] == '-' ? 2 : 0;
        pos++;
        if (pos < text.size() && text[pos] == 'i') {
            phase += 1;
            pos++;
        }
    }
    size_t n = text.size() - pos;
    if (n == 0) {
        throw ParseError(pos, "expected at least one Pauli letter");
    }
    if (n > MAX_QUBITS) {
        throw ParseError(pos, "more than 64 qubits");
    }
    uint64_t xs = 0, zs = 0;
    for (size_t q = 0; q < n; q++) {
        char c = text[pos + q];
        uint64_t bit = uint64_t{1} << (n - 1 - q);
        switch (c) {
            case 'I':
                break;
            case 'X':
                xs |= bit;
                break;
            case 'Z':
                zs |= bit;
                break;
            case 'Y':
                xs |= bit;
                zs |= bit;
                break;
            default:
                throw ParseError(pos + q, std::string("unexpected character '") + c + "'");
        }
    }
    return PauliOperator(n, xs, zs, phase);
}

char PauliOperator::letter(size_t qubit) const {
    return "IZXY"[(x_bit(qubit) << 1) | static_cast<int>(z_bit(qubit))];
}

uint64_t PauliOperator::label() const {
    if (n_ > MAX_LABEL_QUBITS) {
        throw Error(ErrorKind::InvalidArgument, "labels require at most 32 qubits");
    }
    return (xs_ << n_) | zs_;
}

size_t PauliOperator::weight() const {
    return std::popcount(xs_ | zs_);
}

PauliOperator PauliOperator::times_i_power(int power) const {
    PauliOperator r = *this;
    r.phase_ = static_cast<uint8_t>((r.phase_ + (power % 4) + 4) & 3);
    return r;
}

PauliOperator PauliOperator::operator*(const PauliOperator &other) const {
    require_same_width(*this, other);
    // W = i^{|x&z|} X^x Z^z; moving Z^{z1} past X^{x2} costs (-1)^{|z1&x2|}.
    uint64_t xs = xs_ ^ other.xs_;
    uint64_t zs = zs_ ^ other.zs_;
    int e = phase_ + other.phase_ + std::popcount(xs_ & zs_) + std::popcount(other.xs_ & other.zs_) +
            2 * std::popcount(zs_ & other.xs_) - std::popcount(xs & zs);
    return PauliOperator(n_, xs, zs, static_cast<uint8_t>(((e % 4) + 4) & 3));
}

bool PauliOperator::operator<(const PauliOperator &other) const {
    if (n_ != other.n_) {
        return n_ < other.n_;
    }
    if (xs_ != other.xs_) {
        return xs_ < other.xs_;
    }
    if (zs_ != other.zs_) {
        return zs_ < other.zs_;
    }
    return phase_ < other.phase_;
}

std::string PauliOperator::letters() const {
    std::string out;
    out.reserve(n_);
    for (size_t q = 0; q < n_; q++) {
        out.push_back(letter(q));
    }
    return out;
}

std::string PauliOperator::str() const {
    static const char *const prefixes[] = {"+", "+i", "-", "-i"};
    return prefixes[phase_] + letters();
}

std::ostream &operator<<(std::ostream &out, const PauliOperator &p) {
    return out << p.str();
}

PauliOperator multiply(const PauliOperator &p, const PauliOperator &q) {
    return p * q;
}

bool commutes(const PauliOperator &p, const PauliOperator &q) {
    require_same_width(p, q);
    return (std::popcount((p.xs() & q.zs()) ^ (p.zs() & q.xs())) & 1) == 0;
}

PauliOperator z_power(const std::vector<bool> &bits) {
    size_t n = bits.size();
    uint64_t zs = 0;
    for (size_t q = 0; q < n; q++) {
        if (bits[q]) {
            zs |= uint64_t{1} << (n - 1 - q);
        }
    }
    return PauliOperator(n, 0, zs, 0);
}

PauliOperator z_power(std::string_view bits) {
    std::vector<bool> v;
    for (size_t k = 0; k < bits.size(); k++) {
        if (bits[k] != '0' && bits[k] != '1') {
            throw ParseError(k, "bit-strings contain only 0 and 1");
        }
        v.push_back(bits[k] == '1');
    }
    return z_power(v);
}

////////////////////////////////////////////////////////////////////////////////
// F2Basis

unsigned __int128 F2Basis::reduce(unsigned __int128 v) const {
    for (const auto &p : pivots_) {
        if ((v >> leading_bit(p)) & 1) {
            v ^= p;
        }
    }
    return v;
}

bool F2Basis::contains(const PauliOperator &p) const {
    return reduce(symplectic_vector(p)) == 0;
}

bool F2Basis::insert(const PauliOperator &p) {
    unsigned __int128 v = reduce(symplectic_vector(p));
    if (v == 0) {
        return false;
    }
    int lead = leading_bit(v);
    auto it = std::find_if(pivots_.begin(), pivots_.end(), [&](unsigned __int128 q) { return leading_bit(q) < lead; });
    pivots_.insert(it, v);
    return true;
}

////////////////////////////////////////////////////////////////////////////////
// PauliSet

PauliSet PauliSet::validate(std::span<const PauliOperator> candidates) {
    if (candidates.empty()) {
        throw Error(ErrorKind::InvalidSet, "a Pauli set needs at least one element");
    }
    size_t n = candidates[0].num_qubits();
    std::vector<PauliOperator> elements;
    elements.reserve(candidates.size());
    for (const auto &p : candidates) {
        require_same_width(candidates[0], p);
        if (!p.is_hermitian()) {
            throw Error(ErrorKind::NonHermitianInput, p.str() + " is not Hermitian");
        }
        elements.push_back(p.unsigned_part());
    }
    for (size_t i = 0; i < elements.size(); i++) {
        for (size_t j = i + 1; j < elements.size(); j++) {
            if (!commutes(elements[i], elements[j])) {
                throw Error(
                    ErrorKind::NonCommutingSet, elements[i].str() + " anticommutes with " + elements[j].str());
            }
        }
    }
    F2Basis basis;
    for (const auto &p : elements) {
        if (!basis.insert(p)) {
            throw Error(ErrorKind::DependentSet, p.str() + " is a product of other elements");
        }
    }
    std::sort(elements.begin(), elements.end());
    PauliSet out(n);
    out.elements_ = std::move(elements);
    return out;
}

PauliSet PauliSet::from_sorted_unchecked(size_t num_qubits, std::vector<PauliOperator> elements) {
    PauliSet out(num_qubits);
    out.elements_ = std::move(elements);
    return out;
}

std::vector<uint64_t> PauliSet::labels() const {
    std::vector<uint64_t> out;
    out.reserve(elements_.size());
    for (const auto &p : elements_) {
        out.push_back(p.label());
    }
    return out;
}

bool PauliSet::operator<(const PauliSet &other) const {
    if (n_ != other.n_) {
        return n_ < other.n_;
    }
    return std::lexicographical_compare(
        elements_.begin(), elements_.end(), other.elements_.begin(), other.elements_.end());
}

std::string PauliSet::str() const {
    std::string out;
    for (size_t k = 0; k < elements_.size(); k++) {
        if (k) {
            out += ',';
        }
        out += elements_[k].str();
    }
    return out;
}

PauliSet validate_set(std::span<const PauliOperator> candidates) {
    return PauliSet::validate(candidates);
}

std::vector<uint64_t> commutant(const PauliSet &s) {
    size_t n = s.num_qubits();
    if (n > 8) {
        throw Error(ErrorKind::SizeRefusal, "commutant scans 4^n labels; n <= 8 required");
    }
    std::vector<uint64_t> labels = s.labels();
    std::vector<uint64_t> out;
    uint64_t total = uint64_t{1} << (2 * n);
    for (uint64_t q = 0; q < total; q++) {
        bool ok = std::all_of(labels.begin(), labels.end(), [&](uint64_t p) { return labels_commute(n, p, q); });
        if (ok) {
            out.push_back(q);
        }
    }
    return out;
}

}  // namespace tdepth
