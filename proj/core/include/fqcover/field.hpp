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

#ifndef FQCOVER_FIELD_HPP
#define FQCOVER_FIELD_HPP

#include <cstdint>
#include <memory>
#include <vector>

namespace fqcover {

/// An element of F_q, stored as its base-p digit value: for coefficients
/// (c_0, ..., c_{k-1}) over F_p the packed value is sum c_i * p^i < q.
/// For prime fields (k = 1) this is just the residue in [0, p).
using FqElem = std::uint64_t;

/// Immutable description of a finite field F_q with q = p^k.
///
/// Extension fields carry the first monic irreducible of degree k over
/// F_p in the canonical graded order, plus lookup tables when q is small.
/// Instances are shared via shared_ptr and never mutated after
/// construction, so they are safe to use from any number of threads.
struct FieldConfig {
    std::uint64_t p = 0;  // prime characteristic
    std::uint32_t k = 1;  // extension degree
    std::uint64_t q = 0;  // p^k

    // Coefficients of the defining polynomial over F_p, ascending,
    // length k+1, monic. Empty when k == 1.
    std::vector<std::uint64_t> defining;

    // q*q multiplication/addition tables plus q-entry negation and
    // inverse tables, present whenever q <= table_limit. They keep the
    // trial-division kernels free of integer division.
    std::vector<std::uint32_t> mul_tab;
    std::vector<std::uint32_t> add_tab;
    std::vector<std::uint32_t> neg_tab;
    std::vector<std::uint32_t> inv_tab;
    bool has_tables = false;

    static constexpr std::uint64_t table_limit = 512;
};

using Field = std::shared_ptr<const FieldConfig>;

/// Deterministic prime test by trial division (intended for n <= ~10^12).
bool is_prime_u64(std::uint64_t n);

/// Builds the field F_{p^k}. For k > 1 the defining polynomial is the
/// first monic irreducible of degree k over F_p in the canonical graded
/// order, so the construction is deterministic.
///
/// Throws NonPrimeBase if p is composite and DegreeOutOfRange if k < 1
/// or p^k does not fit the native integer range.
Field field_make(std::uint64_t p, std::uint32_t k);

/// Two configs describe the same field iff (p, k) match; the defining
/// polynomial is then identical by construction.
inline bool same_field(const FieldConfig& a, const FieldConfig& b) {
    return a.p == b.p && a.k == b.k;
}

// Extension-field fallbacks (generic, allocation-free); the inline
// front-ends below dispatch to tables or prime-field arithmetic first.
FqElem fq_mul_ext(const FieldConfig& f, FqElem a, FqElem b);
FqElem fq_add_ext(const FieldConfig& f, FqElem a, FqElem b);
FqElem fq_sub_ext(const FieldConfig& f, FqElem a, FqElem b);
FqElem fq_inv_ext(const FieldConfig& f, FqElem a);

inline FqElem fq_add(const FieldConfig& f, FqElem a, FqElem b) {
    if (f.has_tables) return f.add_tab[a * f.q + b];
    if (f.k == 1) {
        FqElem s = a + b;
        return s >= f.p ? s - f.p : s;
    }
    return fq_add_ext(f, a, b);
}

inline FqElem fq_sub(const FieldConfig& f, FqElem a, FqElem b) {
    if (f.has_tables) return f.add_tab[a * f.q + f.neg_tab[b]];
    if (f.k == 1) return a >= b ? a - b : a + f.p - b;
    return fq_sub_ext(f, a, b);
}

inline FqElem fq_neg(const FieldConfig& f, FqElem a) {
    if (f.has_tables) return f.neg_tab[a];
    return fq_sub(f, 0, a);
}

inline FqElem fq_mul(const FieldConfig& f, FqElem a, FqElem b) {
    if (f.has_tables) return f.mul_tab[a * f.q + b];
    if (f.k == 1) return (a * b) % f.p;
    return fq_mul_ext(f, a, b);
}

/// Multiplicative inverse; a must be nonzero.
FqElem fq_inv(const FieldConfig& f, FqElem a);

/// Embedding of an integer via F_p: returns (n mod p) as an element.
inline FqElem fq_from_int(const FieldConfig& f, std::uint64_t n) { return n % f.p; }

/// Base-p digits (c_0, ..., c_{k-1}) of an element.
std::vector<std::uint64_t> fq_coeffs(const FieldConfig& f, FqElem a);

/// Packs base-p digits into an element; digits beyond index k-1 must be
/// absent and every digit must be < p.
FqElem fq_from_coeffs(const FieldConfig& f, const std::vector<std::uint64_t>& coeffs);

}  // namespace fqcover

#endif  // FQCOVER_FIELD_HPP
