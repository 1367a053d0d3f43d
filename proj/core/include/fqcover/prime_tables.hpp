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

#ifndef FQCOVER_PRIME_TABLES_HPP
#define FQCOVER_PRIME_TABLES_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "fqcover/rational.hpp"
#include "fqcover/upper_real.hpp"

namespace fqcover {

/// Moebius function, in {-1, 0, 1}.
int mobius(std::uint64_t n);

/// Sorted list of divisors of n.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Exact number of monic irreducible polynomials of degree n over F_q:
/// (1/n) * sum_{d|n} mu(d) q^{n/d}. Requires n >= 1 (DegreeOutOfRange).
BigInt count_irreducibles_exact(std::uint64_t q, std::uint32_t n);

/// Genus-parameterized upper bound on the number of degree-n primes:
/// a rational certified >= (q^n + 1 + 2g q^{n/2}) / n. Exact for even n
/// (and whenever g = 0); for odd n the square root is replaced by a
/// certified rational upper bound with relative error <= 2^-40.
UpperReal pi_upper_bound(std::uint64_t q, std::uint32_t genus, std::uint32_t n);

/// Table of exact counts for degrees 1..max_n, satisfying the exact
/// identity sum_{d|n} d * counts[d] = q^n for every tabulated n.
struct PrimeCountTable {
    std::uint64_t q = 0;
    std::map<std::uint32_t, BigInt> counts;

    static PrimeCountTable build(std::uint64_t q, std::uint32_t max_n);
};

}  // namespace fqcover

#endif  // FQCOVER_PRIME_TABLES_HPP
