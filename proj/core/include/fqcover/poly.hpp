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

#ifndef FQCOVER_POLY_HPP
#define FQCOVER_POLY_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "fqcover/field.hpp"

namespace fqcover {

/// A polynomial over F_q in canonical form: coefficients ascending by
/// degree with no stored trailing zeros. The zero polynomial has an
/// empty coefficient vector and no degree (degree() is disengaged), so
/// it cannot slip into degree arithmetic unnoticed.
///
/// Values are immutable after construction; all arithmetic returns new
/// polynomials. Operands must belong to the same field.
class FqPoly {
  public:
    FqPoly() = default;

    static FqPoly zero(Field field) { return FqPoly(std::move(field), {}); }
    static FqPoly one(Field field);
    static FqPoly x(Field field);
    static FqPoly constant(Field field, FqElem value);
    /// Builds from ascending coefficients (trailing zeros trimmed).
    static FqPoly from_coeffs(Field field, std::vector<FqElem> coeffs);

    const Field& field() const { return field_; }
    const std::vector<FqElem>& coeffs() const { return c_; }

    bool is_zero() const { return c_.empty(); }
    std::optional<int> degree() const {
        if (c_.empty()) return std::nullopt;
        return static_cast<int>(c_.size()) - 1;
    }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

    /// Coefficient of x^i (0 beyond the stored degree).
    FqElem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }

    friend bool operator==(const FqPoly& a, const FqPoly& b) {
        return a.c_ == b.c_ && (a.c_.empty() || same_field(*a.field_, *b.field_));
    }
    friend bool operator!=(const FqPoly& a, const FqPoly& b) { return !(a == b); }

  private:
    FqPoly(Field field, std::vector<FqElem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {}

    Field field_;
    std::vector<FqElem> c_;
};

/// Degree of a polynomial known to be nonzero; throws otherwise.
int degree_nonzero(const FqPoly& f);

FqPoly add(const FqPoly& a, const FqPoly& b);
FqPoly sub(const FqPoly& a, const FqPoly& b);
FqPoly mul(const FqPoly& a, const FqPoly& b);
FqPoly scale(const FqPoly& a, FqElem c);

/// Quotient and remainder with deg(remainder) < deg(divisor).
/// Throws DivisionByZeroPoly if the divisor is zero.
std::pair<FqPoly, FqPoly> divmod(const FqPoly& a, const FqPoly& b);
FqPoly rem(const FqPoly& a, const FqPoly& b);
bool divides(const FqPoly& divisor, const FqPoly& f);

/// Monic normalization: f scaled by the inverse of its leading
/// coefficient. Throws on zero input.
FqPoly monic(const FqPoly& f);

/// Monic greatest common divisor; gcd(0, 0) is zero.
FqPoly gcd_monic(const FqPoly& a, const FqPoly& b);

/// Monic least common multiple.
FqPoly lcm_monic(const FqPoly& a, const FqPoly& b);

/// Total order: graded by degree, then by the canonical residue index
/// (coefficient of highest degree most significant). The zero
/// polynomial sorts first.
bool graded_less(const FqPoly& a, const FqPoly& b);

/// Canonical residue index sum_i c_i q^i. The value must fit uint64;
/// intended for residues modulo small enumeration moduli.
std::uint64_t poly_index(const FqPoly& f);

/// Inverse of poly_index.
FqPoly poly_from_index(const Field& field, std::uint64_t index);

/// Exact irreducibility test over F_q by trial division against every
/// monic polynomial of degree <= deg(f)/2 in graded order.
/// Requires f monic of degree >= 1 (NotMonic / ConstantPolynomial).
bool is_irreducible(const FqPoly& f);

/// Complete factorization of a monic polynomial of degree >= 1 into
/// monic irreducibles with multiplicities, sorted by (degree, graded
/// coefficient order). The product of the factors reconstructs f.
std::vector<std::pair<FqPoly, int>> factor_monic(const FqPoly& f);

/// All residues modulo m (every polynomial of degree < deg m), in
/// canonical index order. Throws BudgetExceeded if q^{deg m} > budget.
std::vector<FqPoly> enumerate_residues(const FqPoly& m, std::uint64_t budget);

/// q^{deg m} as the residue count, checked against the budget.
std::uint64_t residue_count(const FqPoly& m, std::uint64_t budget);

}  // namespace fqcover

#endif  // FQCOVER_POLY_HPP
