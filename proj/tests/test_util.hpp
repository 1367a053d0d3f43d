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

#ifndef FQCOVER_TESTS_TEST_UTIL_HPP
#define FQCOVER_TESTS_TEST_UTIL_HPP

#include <random>
#include <vector>

#include "fqcover/covering.hpp"
#include "fqcover/poly.hpp"
#include "fqcover/poly_text.hpp"
#include "fqcover/rational.hpp"

namespace fqcover::test {

inline Field f2() {
    static Field f = field_make(2, 1);
    return f;
}
inline Field f3() {
    static Field f = field_make(3, 1);
    return f;
}
inline Field f4() {
    static Field f = field_make(2, 2);
    return f;
}
inline Field f5() {
    static Field f = field_make(5, 1);
    return f;
}

inline FqPoly pp(const Field& field, const char* text) { return parse_poly(field, text); }

inline Congruence cong(const Field& field, const char* residue, const char* modulus) {
    return make_congruence(pp(field, residue), pp(field, modulus));
}

inline bool instances_equal(const CoveringInstance& a, const CoveringInstance& b) {
    if (!same_field(*a.field, *b.field)) return false;
    if (a.congruences.size() != b.congruences.size()) return false;
    for (std::size_t i = 0; i < a.congruences.size(); ++i) {
        if (a.congruences[i].residue != b.congruences[i].residue) return false;
        if (a.congruences[i].modulus != b.congruences[i].modulus) return false;
    }
    return true;
}

/// Independent exponential oracle: plain exact Taylor partial sums.
/// lower <= e^x <= upper, with the gap below x^terms/terms!.
struct ExpBracket {
    Rat lower;
    Rat upper;
};

inline ExpBracket exp_bracket(const Rat& x, unsigned terms = 160) {
    Rat term(1), sum(1);
    for (unsigned k = 1; k < terms; ++k) {
        term = term * x / k;
        sum += term;
    }
    // Remainder of the positive series after `terms` entries.
    Rat next = term * x / terms;
    Rat remainder = next / (Rat(1) - x / (terms + 1));
    return ExpBracket{sum, sum + remainder};
}

/// Every instance over F_2 built from 1..4 congruences with moduli of
/// degree <= 2 (as an unordered multiset) whose common modulus has
/// degree <= 4. Exhaustive within that envelope.
inline std::vector<CoveringInstance> exhaustive_family_f2() {
    Field field = f2();
    std::vector<Congruence> pairs;
    for (int d = 1; d <= 2; ++d) {
        std::uint64_t lead = std::uint64_t{1} << d;
        for (std::uint64_t low = 0; low < lead; ++low) {
            FqPoly m = add(poly_from_index(field, low), poly_from_index(field, lead));
            for (std::uint64_t r = 0; r < lead; ++r)
                pairs.push_back(Congruence{poly_from_index(field, r), m});
        }
    }
    std::vector<CoveringInstance> family;
    const std::size_t n = pairs.size();
    auto push = [&](std::vector<Congruence> congs) {
        CoveringInstance instance{field, std::move(congs)};
        FqPoly q_poly = lcm_modulus(instance);
        if (degree_nonzero(q_poly) <= 4) family.push_back(std::move(instance));
    };
    for (std::size_t a = 0; a < n; ++a) {
        push({pairs[a]});
        for (std::size_t b = a; b < n; ++b) {
            push({pairs[a], pairs[b]});
            for (std::size_t c = b; c < n; ++c) {
                push({pairs[a], pairs[b], pairs[c]});
                for (std::size_t d = c; d < n; ++d) push({pairs[a], pairs[b], pairs[c], pairs[d]});
            }
        }
    }
    return family;
}

/// Deterministic random instances with moduli of degree <= 3 and a
/// common modulus of degree <= max_lcm_deg.
inline std::vector<CoveringInstance> random_family(const Field& field, std::size_t count,
                                                   std::uint64_t seed, int max_lcm_deg = 6) {
    std::mt19937_64 rng(seed);
    std::vector<CoveringInstance> family;
    while (family.size() < count) {
        std::size_t congs = 1 + rng() % 4;
        std::vector<Congruence> list;
        for (std::size_t i = 0; i < congs; ++i) {
            int d = 1 + static_cast<int>(rng() % 3);
            std::uint64_t lead = 1;
            for (int j = 0; j < d; ++j) lead *= field->q;
            FqPoly m = add(poly_from_index(field, rng() % lead), poly_from_index(field, lead));
            FqPoly r = poly_from_index(field, rng() % lead);
            list.push_back(make_congruence(r, m));
        }
        CoveringInstance instance{field, std::move(list)};
        if (degree_nonzero(lcm_modulus(instance)) <= max_lcm_deg) family.push_back(std::move(instance));
    }
    return family;
}

}  // namespace fqcover::test

#endif  // FQCOVER_TESTS_TEST_UTIL_HPP
