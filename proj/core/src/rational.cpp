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

#include "fqcover/rational.hpp"

#include <algorithm>
#include <cctype>

#include "fqcover/errors.hpp"

namespace fqcover {

BigInt ipow(const BigInt& base, unsigned exp) {
    BigInt result(1);
    BigInt b = base;
    while (exp != 0) {
        if (exp & 1u) result *= b;
        exp >>= 1u;
        if (exp != 0) b *= b;
    }
    return result;
}

std::uint64_t checked_pow_u64(std::uint64_t base, unsigned exp, std::uint64_t limit) {
    std::uint64_t result = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && result > limit / base) return 0;
        result *= base;
        if (result > limit) return 0;
    }
    return result;
}

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

// The bignum string constructor treats a leading '0' as an octal
// prefix; decimal digit strings must be stripped first.
BigInt from_decimal_digits(const std::string& s) {
    auto pos = s.find_first_not_of('0');
    if (pos == std::string::npos) return BigInt(0);
    return BigInt(s.substr(pos));
}

}  // namespace

Rat parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ParseError("empty rational literal");
    bool negative = false;
    if (s[0] == '-' || s[0] == '+') {
        negative = s[0] == '-';
        s.erase(s.begin());
    }
    Rat value;
    if (auto slash = s.find('/'); slash != std::string::npos) {
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw ParseError("malformed rational literal: '" + text + "'");
        BigInt d = from_decimal_digits(den);
        if (d == 0) throw ParseError("zero denominator in '" + text + "'");
        value = Rat(from_decimal_digits(num), d);
    } else if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string head = s.substr(0, dot), frac = s.substr(dot + 1);
        if (head.empty()) head = "0";
        if (!all_digits(head) || (!frac.empty() && !all_digits(frac)))
            throw ParseError("malformed decimal literal: '" + text + "'");
        value = Rat(from_decimal_digits(head + frac), ipow(BigInt(10), static_cast<unsigned>(frac.size())));
    } else {
        if (!all_digits(s)) throw ParseError("malformed integer literal: '" + text + "'");
        value = Rat(from_decimal_digits(s));
    }
    return negative ? Rat(-value) : value;
}

std::string decimal_string(const Rat& value, int digits) {
    if (value == 0) return "0";
    BigInt num = numerator(value);
    BigInt den = denominator(value);
    std::string sign;
    if (num < 0) {
        sign = "-";
        num = -num;
    }
    BigInt integral = num / den;
    // Significant digits already used by the integral part.
    int int_digits = integral == 0 ? 0 : static_cast<int>(integral.str().size());
    int frac_digits = std::max(0, digits - int_digits);
    if (integral == 0) {
        // Leading fractional zeros do not count as significant.
        BigInt rem = num % den;
        while (rem != 0 && rem * 10 < den) {
            rem *= 10;
            ++frac_digits;
        }
    }
    BigInt scaled = (num * ipow(BigInt(10), static_cast<unsigned>(frac_digits))) / den;
    std::string s = scaled.str();
    if (frac_digits == 0) return sign + s;
    if (static_cast<int>(s.size()) <= frac_digits)
        s.insert(0, static_cast<std::size_t>(frac_digits + 1) - s.size(), '0');
    s.insert(s.size() - static_cast<std::size_t>(frac_digits), ".");
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
    return sign + s;
}

BigInt floor_div(const BigInt& num, const BigInt& den) {
    BigInt q = num / den;
    if ((num % den) != 0 && ((num < 0) != (den < 0))) --q;
    return q;
}

BigInt ceil_div(const BigInt& num, const BigInt& den) {
    BigInt q = num / den;
    if ((num % den) != 0 && ((num < 0) == (den < 0))) ++q;
    return q;
}

}  // namespace fqcover
