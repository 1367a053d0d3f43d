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

#include "fqcover/upper_real.hpp"

#include "fqcover/errors.hpp"

namespace fqcover {

UpperReal scale_nonneg(const UpperReal& a, const Rat& factor) {
    if (factor < 0) throw DomainError("scale_nonneg requires a nonnegative factor");
    return UpperReal(a.value * factor);
}

UpperReal exp_upper(const Rat& x) {
    if (x < 0) throw DomainError("exp_upper is defined for x >= 0");
    if (x > 1000000) throw DomainError("exponent too large for certified evaluation");
    if (x == 0) return UpperReal(Rat(1));

    const BigInt num = numerator(x);
    const BigInt den = denominator(x);

    // K >= 2x + 40 keeps the truncated remainder far below the 2^-30
    // relative-error budget.
    BigInt k_big = ceil_div(2 * num, den) + 40;
    const unsigned K = static_cast<unsigned>(k_big);

    // Fixed-point accumulation at scale 2^96. Each u_k is an integer
    // upper bound of x^k/k! * 2^96, maintained by rounding every
    // division upward, so the final sum dominates the true series.
    const BigInt scale = BigInt(1) << 96;
    BigInt u = scale;
    BigInt acc = scale;
    for (unsigned k = 1; k < K; ++k) {
        u = ceil_div(u * num, den * k);
        acc += u;
    }
    // Remainder: sum_{k>=K} x^k/k! <= (x^K/K!) / (1 - x/K).
    BigInt u_last = ceil_div(u * num, den * K);
    BigInt tail = ceil_div(u_last * K * den, K * den - num);
    return UpperReal(Rat(acc + tail, scale));
}

BigInt isqrt_floor(const BigInt& n) {
    if (n < 0) throw DomainError("square root of a negative integer");
    return boost::multiprecision::sqrt(n);
}

Rat sqrt_upper_of_int(const BigInt& n) {
    if (n < 0) throw DomainError("square root of a negative integer");
    if (n == 0) return Rat(0);
    // floor(sqrt(n * 4^40)) + 1 over 2^40 exceeds sqrt(n) by at most
    // 2^-40, i.e. relative error <= 2^-40 for n >= 1.
    BigInt r = isqrt_floor(n << 80);
    return Rat(r + 1, BigInt(1) << 40);
}

UpperReal geometric_tail(const UpperReal& first, const UpperReal& ratio) {
    if (ratio.value >= 1)
        throw TailNotContractive("series tail ratio " + decimal_string(ratio.value, 6) +
                                 " is not below 1; raise the truncation point");
    if (ratio.value < 0) throw DomainError("tail ratio must be nonnegative");
    return UpperReal(first.value / (Rat(1) - ratio.value));
}

}  // namespace fqcover
