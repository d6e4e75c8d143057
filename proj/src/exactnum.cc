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

#include "tdepth/exactnum.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tdepth/error.h"

namespace tdepth {

namespace {

uint32_t trailing_zeros(const BigInt &v) {
    return static_cast<uint32_t>(boost::multiprecision::lsb(boost::multiprecision::abs(v)));
}

// Exact division by 2^s; the caller guarantees divisibility.
void shift_down(BigInt &v, uint32_t s) {
    if (s == 0 || v.is_zero()) {
        return;
    }
    if (v.sign() < 0) {
        v = -v;
        v >>= s;
        v = -v;
    } else {
        v >>= s;
    }
}

}  // namespace

const char *error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::MismatchedQubits:
            return "MismatchedQubits";
        case ErrorKind::DependentSet:
            return "DependentSet";
        case ErrorKind::NonCommutingSet:
            return "NonCommutingSet";
        case ErrorKind::NonHermitianInput:
            return "NonHermitianInput";
        case ErrorKind::InvalidSet:
            return "InvalidSet";
        case ErrorKind::BadToken:
            return "BadToken";
        case ErrorKind::IndexOutOfRange:
            return "IndexOutOfRange";
        case ErrorKind::IdentityPauli:
            return "IdentityPauli";
        case ErrorKind::NonPositivePauli:
            return "NonPositivePauli";
        case ErrorKind::SpectrumMismatch:
            return "SpectrumMismatch";
        case ErrorKind::WidthMismatch:
            return "WidthMismatch";
        case ErrorKind::ParseError:
            return "ParseError";
        case ErrorKind::FeasibilityRefusal:
            return "FeasibilityRefusal";
        case ErrorKind::SizeRefusal:
            return "SizeRefusal";
        case ErrorKind::NonRealEntry:
            return "NonRealEntry";
        case ErrorKind::InvalidArgument:
            return "InvalidArgument";
    }
    return "Unknown";
}

////////////////////////////////////////////////////////////////////////////////
// DyadicSqrt2Scalar

DyadicSqrt2Scalar::DyadicSqrt2Scalar(BigInt a, BigInt b, uint32_t k) : a_(std::move(a)), b_(std::move(b)), k_(k) {
    normalize();
}

void DyadicSqrt2Scalar::normalize() {
    if (a_.is_zero() && b_.is_zero()) {
        k_ = 0;
        return;
    }
    if (k_ == 0) {
        return;
    }
    uint32_t s = k_;
    if (!a_.is_zero()) {
        s = std::min(s, trailing_zeros(a_));
    }
    if (!b_.is_zero()) {
        s = std::min(s, trailing_zeros(b_));
    }
    shift_down(a_, s);
    shift_down(b_, s);
    k_ -= s;
}

int DyadicSqrt2Scalar::sign() const {
    int sa = a_.sign();
    int sb = b_.sign();
    if (sa >= 0 && sb >= 0) {
        return (sa | sb) ? 1 : 0;
    }
    if (sa <= 0 && sb <= 0) {
        return -1;
    }
    // Mixed signs: |a| versus |b| sqrt2, compared via a^2 against 2 b^2.
    BigInt a2 = a_ * a_;
    BigInt b2 = 2 * b_ * b_;
    if (sa > 0) {
        return a2 > b2 ? 1 : -1;
    }
    return b2 > a2 ? 1 : -1;
}

DyadicSqrt2Scalar DyadicSqrt2Scalar::abs() const {
    return sign() < 0 ? -*this : *this;
}

DyadicSqrt2Scalar DyadicSqrt2Scalar::operator-() const {
    DyadicSqrt2Scalar r = *this;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

DyadicSqrt2Scalar DyadicSqrt2Scalar::operator+(const DyadicSqrt2Scalar &other) const {
    DyadicSqrt2Scalar r = *this;
    r += other;
    return r;
}

DyadicSqrt2Scalar DyadicSqrt2Scalar::operator-(const DyadicSqrt2Scalar &other) const {
    DyadicSqrt2Scalar r = *this;
    r -= other;
    return r;
}

DyadicSqrt2Scalar &DyadicSqrt2Scalar::operator+=(const DyadicSqrt2Scalar &other) {
    if (other.is_zero()) {
        return *this;
    }
    if (is_zero()) {
        *this = other;
        return *this;
    }
    if (k_ == other.k_) {
        a_ += other.a_;
        b_ += other.b_;
    } else if (k_ > other.k_) {
        uint32_t d = k_ - other.k_;
        a_ += other.a_ << d;
        b_ += other.b_ << d;
    } else {
        uint32_t d = other.k_ - k_;
        a_ <<= d;
        b_ <<= d;
        a_ += other.a_;
        b_ += other.b_;
        k_ = other.k_;
    }
    normalize();
    return *this;
}

DyadicSqrt2Scalar &DyadicSqrt2Scalar::operator-=(const DyadicSqrt2Scalar &other) {
    return *this += -other;
}

DyadicSqrt2Scalar DyadicSqrt2Scalar::operator*(const DyadicSqrt2Scalar &other) const {
    if (is_zero() || other.is_zero()) {
        return {};
    }
    BigInt a = a_ * other.a_ + 2 * b_ * other.b_;
    BigInt b = a_ * other.b_ + b_ * other.a_;
    return DyadicSqrt2Scalar(std::move(a), std::move(b), k_ + other.k_);
}

DyadicSqrt2Scalar DyadicSqrt2Scalar::div_sqrt2() const {
    // (a + b sqrt2) / sqrt2 = (2b + a sqrt2) / 2
    if (is_zero()) {
        return {};
    }
    return DyadicSqrt2Scalar(2 * b_, a_, k_ + 1);
}

double DyadicSqrt2Scalar::to_double() const {
    return (a_.convert_to<double>() + b_.convert_to<double>() * std::sqrt(2.0)) / std::ldexp(1.0, (int)k_);
}

std::string DyadicSqrt2Scalar::str() const {
    std::ostringstream out;
    out << '(' << a_ << (b_.sign() < 0 ? " - " : " + ") << boost::multiprecision::abs(b_) << "*sqrt2)/2^" << k_;
    return out.str();
}

std::string DyadicSqrt2Scalar::compact_str() const {
    std::ostringstream out;
    out << '(' << a_ << (b_.sign() < 0 ? "-" : "+") << boost::multiprecision::abs(b_) << "√2)/2^" << k_;
    return out.str();
}

std::ostream &operator<<(std::ostream &out, const DyadicSqrt2Scalar &v) {
    return out << v.str();
}

std::strong_ordering compare_real(const DyadicSqrt2Scalar &x, const DyadicSqrt2Scalar &y) {
    int s = (x - y).sign();
    if (s < 0) {
        return std::strong_ordering::less;
    }
    if (s > 0) {
        return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

bool DyadicStructuralLess::operator()(const DyadicSqrt2Scalar &x, const DyadicSqrt2Scalar &y) const {
    if (x.k() != y.k()) {
        return x.k() < y.k();
    }
    if (x.a() != y.a()) {
        return x.a() < y.a();
    }
    return x.b() < y.b();
}

////////////////////////////////////////////////////////////////////////////////
// Cyclotomic16Scalar

Cyclotomic16Scalar::Cyclotomic16Scalar(Coefficients c, uint32_t k) : c_(std::move(c)), k_(k) {
    normalize();
}

Cyclotomic16Scalar Cyclotomic16Scalar::from_int(int64_t v) {
    Coefficients c{};
    c[0] = v;
    return Cyclotomic16Scalar(std::move(c));
}

Cyclotomic16Scalar Cyclotomic16Scalar::zeta(int power) {
    int p = ((power % 16) + 16) % 16;
    Coefficients c{};
    if (p < 8) {
        c[p] = 1;
    } else {
        c[p - 8] = -1;
    }
    return Cyclotomic16Scalar(std::move(c));
}

Cyclotomic16Scalar Cyclotomic16Scalar::sqrt2() {
    return zeta(2) - zeta(6);
}

void Cyclotomic16Scalar::normalize() {
    if (is_zero()) {
        k_ = 0;
        return;
    }
    if (k_ == 0) {
        return;
    }
    uint32_t s = k_;
    for (const auto &v : c_) {
        if (!v.is_zero()) {
            s = std::min(s, trailing_zeros(v));
        }
    }
    for (auto &v : c_) {
        shift_down(v, s);
    }
    k_ -= s;
}

bool Cyclotomic16Scalar::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const BigInt &v) { return v.is_zero(); });
}

Cyclotomic16Scalar Cyclotomic16Scalar::operator-() const {
    Cyclotomic16Scalar r = *this;
    for (auto &v : r.c_) {
        v = -v;
    }
    return r;
}

Cyclotomic16Scalar &Cyclotomic16Scalar::operator+=(const Cyclotomic16Scalar &other) {
    if (other.is_zero()) {
        return *this;
    }
    uint32_t k = std::max(k_, other.k_);
    for (size_t j = 0; j < 8; j++) {
        c_[j] <<= (k - k_);
        c_[j] += other.c_[j] << (k - other.k_);
    }
    k_ = k;
    normalize();
    return *this;
}

Cyclotomic16Scalar Cyclotomic16Scalar::operator+(const Cyclotomic16Scalar &other) const {
    Cyclotomic16Scalar r = *this;
    r += other;
    return r;
}

Cyclotomic16Scalar Cyclotomic16Scalar::operator-(const Cyclotomic16Scalar &other) const {
    return *this + (-other);
}

Cyclotomic16Scalar Cyclotomic16Scalar::operator*(const Cyclotomic16Scalar &other) const {
    if (is_zero() || other.is_zero()) {
        return {};
    }
    Coefficients r{};
    for (size_t i = 0; i < 8; i++) {
        if (c_[i].is_zero()) {
            continue;
        }
        for (size_t j = 0; j < 8; j++) {
            if (other.c_[j].is_zero()) {
                continue;
            }
            size_t p = i + j;
            if (p < 8) {
                r[p] += c_[i] * other.c_[j];
            } else {
                r[p - 8] -= c_[i] * other.c_[j];
            }
        }
    }
    return Cyclotomic16Scalar(std::move(r), k_ + other.k_);
}

Cyclotomic16Scalar Cyclotomic16Scalar::div_pow2(uint32_t e) const {
    Cyclotomic16Scalar r = *this;
    r.k_ += e;
    r.normalize();
    return r;
}

Cyclotomic16Scalar Cyclotomic16Scalar::conj() const {
    Coefficients r{};
    r[0] = c_[0];
    for (size_t j = 1; j < 8; j++) {
        r[8 - j] = -c_[j];
    }
    return Cyclotomic16Scalar(std::move(r), k_);
}

std::optional<DyadicSqrt2Scalar> Cyclotomic16Scalar::to_dyadic() const {
    for (size_t j : {1, 3, 4, 5, 7}) {
        if (!c_[j].is_zero()) {
            return std::nullopt;
        }
    }
    if (c_[6] != -c_[2]) {
        return std::nullopt;
    }
    return DyadicSqrt2Scalar(c_[0], c_[2], k_);
}

std::string Cyclotomic16Scalar::str() const {
    std::ostringstream out;
    out << '(';
    bool first = true;
    for (size_t j = 0; j < 8; j++) {
        if (c_[j].is_zero()) {
            continue;
        }
        if (!first) {
            out << (c_[j].sign() < 0 ? " - " : " + ");
        } else if (c_[j].sign() < 0) {
            out << '-';
        }
        out << boost::multiprecision::abs(c_[j]) << "*z^" << j;
        first = false;
    }
    if (first) {
        out << '0';
    }
    out << ")/2^" << k_;
    return out.str();
}

std::ostream &operator<<(std::ostream &out, const Cyclotomic16Scalar &v) {
    return out << v.str();
}

Cyclotomic16Scalar embed_dyadic_in_cyclotomic(const DyadicSqrt2Scalar &x) {
    Cyclotomic16Scalar::Coefficients c{};
    c[0] = x.a();
    c[2] = x.b();
    c[6] = -x.b();
    return Cyclotomic16Scalar(std::move(c), x.k());
}

}  // namespace tdepth
