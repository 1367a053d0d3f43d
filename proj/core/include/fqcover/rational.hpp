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

#ifndef FQCOVER_RATIONAL_HPP
#define FQCOVER_RATIONAL_HPP

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace fqcover {

// All certified computations run on exact rationals; no binary floating
// point is used anywhere on a certificate path.
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// base^exp as an exact integer.
BigInt ipow(const BigInt& base, unsigned exp);

/// q^exp as a uint64, or 0 if the result would not fit below `limit`.
std::uint64_t checked_pow_u64(std::uint64_t base, unsigned exp, std::uint64_t limit);

/// Parses "17/100", "0.17", "3" into an exact rational.
/// Throws ParseError on malformed input.
Rat parse_rational(const std::string& text);

/// Decimal rendering with `digits` significant digits, truncated toward
/// zero. Informative only; certificates always carry num/den exactly.
std::string decimal_string(const Rat& value, int digits = 12);

/// floor(num/den) for den > 0.
BigInt floor_div(const BigInt& num, const BigInt& den);

/// ceil(num/den) for den > 0.
BigInt ceil_div(const BigInt& num, const BigInt& den);

}  // namespace fqcover

#endif  // FQCOVER_RATIONAL_HPP
