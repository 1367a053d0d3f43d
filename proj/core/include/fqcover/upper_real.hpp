// Copyright 2026 The fqcover Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FQCOVER_UPPER_REAL_HPP
#define FQCOVER_UPPER_REAL_HPP

#include "fqcover/rational.hpp"

namespace fqcover {

/// An exact rational certified to dominate a targeted real quantity.
/// Every constructor and combinator preserves the upper-bound property:
/// sums and products of nonnegative upper bounds are upper bounds of the
/// corresponding sums and products, exp_upper(x) >= e^x for any rational
/// upper bound x of the exponent of an increasing exponential, and so on.
///
/// There is deliberately no subtraction and no division by an UpperReal:
/// both would flip the bound direction.
struct UpperReal {
    Rat value;

    UpperReal() = default;
    explicit UpperReal(Rat v) : value(std::move(v)) {}

    /// An exact quantity is its own upper bound.
    static UpperReal exact(Rat v) { return UpperReal(std::move(v)); }

    friend UpperReal operator+(const UpperReal& a, const UpperReal& b) {
        return UpperReal(a.value + b.value);
    }
    /// Product of upper bounds of nonnegative quantities.
    friend UpperReal operator*(const UpperReal& a, const UpperReal& b) {
        return UpperReal(a.value * b.value);
    }
    friend bool operator<=(const UpperReal& a, const Rat& r) { return a.value <= r; }
};

/// Scales by an exact nonnegative rational.
UpperReal scale_nonneg(const UpperReal& a, const Rat& factor);

/// Certified upper bound on e^x for rational x >= 0, with relative error
/// at most 2^-30. Evaluates K >= 2x+40 terms of the Taylor series plus
/// the geometric envelope of the remainder, all in integer fixed point
/// with every rounding directed upward.
UpperReal exp_upper(const Rat& x);

/// Floor of the integer square root (delegates to the bignum backend).
BigInt isqrt_floor(const BigInt& n);

/// Rational upper bound on sqrt(n) for integer n >= 0 with relative
/// error at most 2^-40, via a scaled integer square root rounded up.
Rat sqrt_upper_of_int(const BigInt& n);

/// Upper bound on the sum of a geometric-dominated tail: given an upper
/// bound on the first term and an upper bound ratio < 1 valid for every
/// consecutive pair, returns first/(1-ratio).
/// Throws TailNotContractive when ratio >= 1.
UpperReal geometric_tail(const UpperReal& first, const UpperReal& ratio);

}  // namespace fqcover

#endif  // FQCOVER_UPPER_REAL_HPP
