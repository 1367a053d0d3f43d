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

#include "fqcover/prime_tables.hpp"

#include <algorithm>

#include "fqcover/errors.hpp"

namespace fqcover {

int mobius(std::uint64_t n) {
    if (n == 0) throw DomainError("mobius(0) is undefined");
    int factors = 0;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;  // squared factor
        ++factors;
    }
    if (n > 1) ++factors;
    return factors % 2 == 0 ? 1 : -1;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    if (n == 0) throw DomainError("divisors(0) is undefined");
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        if (d != n / d) out.push_back(n / d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

BigInt count_irreducibles_exact(std::uint64_t q, std::uint32_t n) {
    if (n < 1) throw DegreeOutOfRange("irreducible counts are defined for degree >= 1");
    if (q < 2) throw DomainError("field size must be at least 2");
    BigInt sum = 0;
    for (std::uint64_t d : divisors(n)) {
        int mu = mobius(d);
        if (mu == 0) continue;
        BigInt term = ipow(BigInt(q), n / static_cast<std::uint32_t>(d));
        sum += mu > 0 ? term : -term;
    }
    // The Moebius-inverted sum is always divisible by n.
    BigInt count = sum / n;
    if (count * n != sum) throw DomainError("internal error: inexact irreducible count");
    return count;
}

UpperReal pi_upper_bound(std::uint64_t q, std::uint32_t genus, std::uint32_t n) {
    if (n < 1) throw DegreeOutOfRange("prime-count bounds are defined for degree >= 1");
    if (q < 2) throw DomainError("field size must be at least 2");
    Rat base(ipow(BigInt(q), n) + 1, BigInt(n));
    if (genus == 0) return UpperReal(base);
    Rat half_power;  // certified upper bound on q^{n/2}
    if (n % 2 == 0) {
        half_power = Rat(ipow(BigInt(q), n / 2));
    } else {
        half_power = sqrt_upper_of_int(ipow(BigInt(q), n));
    }
    return UpperReal(base + Rat(2 * BigInt(genus), BigInt(n)) * half_power);
}

PrimeCountTable PrimeCountTable::build(std::uint64_t q, std::uint32_t max_n) {
    PrimeCountTable table;
    table.q = q;
    for (std::uint32_t n = 1; n <= max_n; ++n) table.counts[n] = count_irreducibles_exact(q, n);
    return table;
}

}  // namespace fqcover
