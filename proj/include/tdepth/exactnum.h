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

#ifndef TDEPTH_EXACTNUM_H
#define TDEPTH_EXACTNUM_H

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace tdepth {

using BigInt = boost::multiprecision::cpp_int;

/// An element (a + b*sqrt2) / 2^k of the ring Z[1/2, sqrt2].
///
/// Values are kept normalized: either k == 0 or a and b are not both even. Zero is (0, 0, 0).
/// Since the representation is unique, equality is member-wise.
class DyadicSqrt2Scalar {
   public:
    DyadicSqrt2Scalar() = default;
    DyadicSqrt2Scalar(BigInt a, BigInt b = 0, uint32_t k = 0);
    static DyadicSqrt2Scalar from_int(int64_t v) {
        return DyadicSqrt2Scalar(BigInt(v));
    }
    static DyadicSqrt2Scalar one() {
        return from_int(1);
    }
    static DyadicSqrt2Scalar sqrt2() {
        return DyadicSqrt2Scalar(0, 1, 0);
    }
    /// 1/sqrt2 == sqrt2/2.
    static DyadicSqrt2Scalar inv_sqrt2() {
        return DyadicSqrt2Scalar(0, 1, 1);
    }

    const BigInt &a() const {
        return a_;
    }
    const BigInt &b() const {
        return b_;
    }
    uint32_t k() const {
        return k_;
    }

    bool is_zero() const {
        return a_.is_zero() && b_.is_zero();
    }
    bool is_one() const {
        return k_ == 0 && b_.is_zero() && a_ == 1;
    }
    /// -1, 0 or +1, decided exactly.
    int sign() const;
    DyadicSqrt2Scalar abs() const;

    DyadicSqrt2Scalar operator-() const;
    DyadicSqrt2Scalar operator+(const DyadicSqrt2Scalar &other) const;
    DyadicSqrt2Scalar operator-(const DyadicSqrt2Scalar &other) const;
    DyadicSqrt2Scalar operator*(const DyadicSqrt2Scalar &other) const;
    DyadicSqrt2Scalar &operator+=(const DyadicSqrt2Scalar &other);
    DyadicSqrt2Scalar &operator-=(const DyadicSqrt2Scalar &other);
    /// Division by sqrt2, which is exact in this ring.
    DyadicSqrt2Scalar div_sqrt2() const;
    /// The ring has no non-trivial automorphism we need; conjugation is the identity on reals.
    DyadicSqrt2Scalar conj() const {
        return *this;
    }

    bool operator==(const DyadicSqrt2Scalar &other) const = default;

    /// Display only.
    double to_double() const;
    /// "(a + b*sqrt2)/2^k"
    std::string str() const;
    /// "(a+b√2)/2^k", used in matrix dumps.
    std::string compact_str() const;

   private:
    void normalize();

    BigInt a_ = 0;
    BigInt b_ = 0;
    uint32_t k_ = 0;
};

/// Exact total order on the real values.
std::strong_ordering compare_real(const DyadicSqrt2Scalar &x, const DyadicSqrt2Scalar &y);

/// Structural (not numeric) order, usable as a map key.
struct DyadicStructuralLess {
    bool operator()(const DyadicSqrt2Scalar &x, const DyadicSqrt2Scalar &y) const;
};

std::ostream &operator<<(std::ostream &out, const DyadicSqrt2Scalar &v);

/// An element sum_j c_j zeta^j / 2^k of Z[1/2, zeta] with zeta = exp(i pi / 8), zeta^8 = -1.
class Cyclotomic16Scalar {
   public:
    using Coefficients = std::array<BigInt, 8>;

    Cyclotomic16Scalar() = default;
    Cyclotomic16Scalar(Coefficients c, uint32_t k = 0);
    static Cyclotomic16Scalar from_int(int64_t v);
    /// zeta^power for any integer power.
    static Cyclotomic16Scalar zeta(int power);
    static Cyclotomic16Scalar one() {
        return from_int(1);
    }
    static Cyclotomic16Scalar i() {
        return zeta(4);
    }
    static Cyclotomic16Scalar sqrt2();

    const Coefficients &c() const {
        return c_;
    }
    uint32_t k() const {
        return k_;
    }

    bool is_zero() const;
    Cyclotomic16Scalar operator-() const;
    Cyclotomic16Scalar operator+(const Cyclotomic16Scalar &other) const;
    Cyclotomic16Scalar operator-(const Cyclotomic16Scalar &other) const;
    Cyclotomic16Scalar operator*(const Cyclotomic16Scalar &other) const;
    Cyclotomic16Scalar &operator+=(const Cyclotomic16Scalar &other);
    Cyclotomic16Scalar div_pow2(uint32_t e) const;
    /// Complex conjugation: zeta^j -> -zeta^(8-j) for j >= 1.
    Cyclotomic16Scalar conj() const;

    bool operator==(const Cyclotomic16Scalar &other) const = default;

    /// Inverse of the embedding; empty when the value is not in Z[1/2, sqrt2].
    std::optional<DyadicSqrt2Scalar> to_dyadic() const;
    std::string str() const;

   private:
    void normalize();

    Coefficients c_{};
    uint32_t k_ = 0;
};

std::ostream &operator<<(std::ostream &out, const Cyclotomic16Scalar &v);

/// Ring homomorphism using sqrt2 = zeta^2 - zeta^6.
Cyclotomic16Scalar embed_dyadic_in_cyclotomic(const DyadicSqrt2Scalar &x);

}  // namespace tdepth

#endif
