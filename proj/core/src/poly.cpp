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

#include "fqcover/poly.hpp"

#include <algorithm>
#include <string>

#include "fqcover/errors.hpp"
#include "fqcover/rational.hpp"

namespace fqcover {

namespace {

void require_same_field(const FqPoly& a, const FqPoly& b) {
    if (a.field() && b.field() && !same_field(*a.field(), *b.field()))
        throw DomainError("polynomial operands belong to different fields");
}

std::vector<FqElem> trimmed(std::vector<FqElem> c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
    return c;
}

// Allocation-free divisibility kernel used by the irreducibility and
// factorization loops. Buffers hold ascending coefficients.
constexpr int kKernelMaxDeg = 64;

bool divides_buffers(const FieldConfig& fc, const FqElem* div, int dd, const FqElem* f, int df) {
    FqElem r[kKernelMaxDeg + 1];
    std::copy(f, f + df + 1, r);
    for (int i = df - dd; i >= 0; --i) {
        FqElem c = r[i + dd];
        if (c == 0) continue;
        r[i + dd] = 0;
        for (int j = 0; j < dd; ++j) {
            if (div[j] == 0) continue;
            r[i + j] = fq_sub(fc, r[i + j], fq_mul(fc, c, div[j]));
        }
    }
    for (int i = 0; i < dd; ++i)
        if (r[i] != 0) return false;
    return true;
}

// Advances a monic candidate divisor of degree d (low digits form a
// base-q counter). Returns false when the enumeration wraps.
bool next_candidate(const FieldConfig& fc, FqElem* cand, int d) {
    for (int pos = 0; pos < d; ++pos) {
        if (cand[pos] + 1 < fc.q) {
            ++cand[pos];
            return true;
        }
        cand[pos] = 0;
    }
    return false;
}

}  // namespace

FqPoly FqPoly::one(Field field) { return constant(std::move(field), 1); }

FqPoly FqPoly::x(Field field) { return FqPoly(std::move(field), {0, 1}); }

FqPoly FqPoly::constant(Field field, FqElem value) {
    if (value == 0) return zero(std::move(field));
    return FqPoly(std::move(field), {value});
}

FqPoly FqPoly::from_coeffs(Field field, std::vector<FqElem> coeffs) {
    for (FqElem c : coeffs)
        if (c >= field->q) throw DomainError("polynomial coefficient out of field range");
    return FqPoly(std::move(field), trimmed(std::move(coeffs)));
}

int degree_nonzero(const FqPoly& f) {
    auto d = f.degree();
    if (!d) throw DomainError("degree of the zero polynomial requested");
    return *d;
}

FqPoly add(const FqPoly& a, const FqPoly& b) {
    require_same_field(a, b);
    const auto& fc = *a.field();
    std::vector<FqElem> out(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = fq_add(fc, a.coeff(i), b.coeff(i));
    return FqPoly::from_coeffs(a.field(), std::move(out));
}

FqPoly sub(const FqPoly& a, const FqPoly& b) {
    require_same_field(a, b);
    const auto& fc = *(a.field() ? a.field() : b.field());
    std::vector<FqElem> out(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = fq_sub(fc, a.coeff(i), b.coeff(i));
    return FqPoly::from_coeffs(a.field() ? a.field() : b.field(), std::move(out));
}

FqPoly mul(const FqPoly& a, const FqPoly& b) {
    require_same_field(a, b);
    if (a.is_zero() || b.is_zero()) return FqPoly::zero(a.field() ? a.field() : b.field());
    const auto& fc = *a.field();
    std::vector<FqElem> out(a.coeffs().size() + b.coeffs().size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        FqElem ai = a.coeffs()[i];
        if (ai == 0) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
            out[i + j] = fq_add(fc, out[i + j], fq_mul(fc, ai, b.coeffs()[j]));
        }
    }
    return FqPoly::from_coeffs(a.field(), std::move(out));
}

FqPoly scale(const FqPoly& a, FqElem c) {
    if (c == 0 || a.is_zero()) return FqPoly::zero(a.field());
    const auto& fc = *a.field();
    std::vector<FqElem> out(a.coeffs());
    for (auto& x : out) x = fq_mul(fc, x, c);
    return FqPoly::from_coeffs(a.field(), std::move(out));
}

std::pair<FqPoly, FqPoly> divmod(const FqPoly& a, const FqPoly& b) {
    require_same_field(a, b);
    if (b.is_zero()) throw DivisionByZeroPoly("polynomial division by zero");
    const auto& fc = *b.field();
    int db = degree_nonzero(b);
    if (a.is_zero() || degree_nonzero(a) < db) return {FqPoly::zero(b.field()), a};
    int da = degree_nonzero(a);
    FqElem lead_inv = fq_inv(fc, b.coeffs().back());
    std::vector<FqElem> r(a.coeffs());
    std::vector<FqElem> q(static_cast<std::size_t>(da - db) + 1, 0);
    for (int i = da - db; i >= 0; --i) {
        FqElem c = r[static_cast<std::size_t>(i + db)];
        if (c == 0) continue;
        FqElem factor = fq_mul(fc, c, lead_inv);
        q[static_cast<std::size_t>(i)] = factor;
        for (int j = 0; j <= db; ++j) {
            auto idx = static_cast<std::size_t>(i + j);
            r[idx] = fq_sub(fc, r[idx], fq_mul(fc, factor, b.coeffs()[static_cast<std::size_t>(j)]));
        }
    }
    return {FqPoly::from_coeffs(b.field(), std::move(q)), FqPoly::from_coeffs(b.field(), std::move(r))};
}

FqPoly rem(const FqPoly& a, const FqPoly& b) { return divmod(a, b).second; }

bool divides(const FqPoly& divisor, const FqPoly& f) {
    if (divisor.is_zero()) return f.is_zero();
    return rem(f, divisor).is_zero();
}

FqPoly monic(const FqPoly& f) {
    if (f.is_zero()) throw DivisionByZeroPoly("cannot normalize the zero polynomial");
    if (f.is_monic()) return f;
    return scale(f, fq_inv(*f.field(), f.coeffs().back()));
}

FqPoly gcd_monic(const FqPoly& a, const FqPoly& b) {
    require_same_field(a, b);
    FqPoly x = a, y = b;
    while (!y.is_zero()) {
        FqPoly r = rem(x, y);
        x = y;
        y = r;
    }
    if (x.is_zero()) return x;
    return monic(x);
}

FqPoly lcm_monic(const FqPoly& a, const FqPoly& b) {
    if (a.is_zero() || b.is_zero()) return FqPoly::zero(a.field() ? a.field() : b.field());
    FqPoly g = gcd_monic(a, b);
    return monic(divmod(mul(a, b), g).first);
}

bool graded_less(const FqPoly& a, const FqPoly& b) {
    if (a.coeffs().size() != b.coeffs().size()) return a.coeffs().size() < b.coeffs().size();
    for (std::size_t i = a.coeffs().size(); i-- > 0;) {
        if (a.coeffs()[i] != b.coeffs()[i]) return a.coeffs()[i] < b.coeffs()[i];
    }
    return false;
}

std::uint64_t poly_index(const FqPoly& f) {
    const std::uint64_t q = f.field()->q;
    std::uint64_t idx = 0;
    for (std::size_t i = f.coeffs().size(); i-- > 0;) idx = idx * q + f.coeffs()[i];
    return idx;
}

FqPoly poly_from_index(const Field& field, std::uint64_t index) {
    std::vector<FqElem> c;
    while (index != 0) {
        c.push_back(index % field->q);
        index /= field->q;
    }
    return FqPoly::from_coeffs(field, std::move(c));
}

bool is_irreducible(const FqPoly& f) {
    if (f.is_zero() || degree_nonzero(f) < 1)
        throw ConstantPolynomial("irreducibility is defined for degree >= 1");
    if (!f.is_monic()) throw NotMonic("irreducibility test requires a monic polynomial");
    const auto& fc = *f.field();
    int n = degree_nonzero(f);
    if (n > kKernelMaxDeg) throw DegreeOutOfRange("irreducibility test capped at degree 64");
    FqElem fbuf[kKernelMaxDeg + 1];
    std::copy(f.coeffs().begin(), f.coeffs().end(), fbuf);
    FqElem cand[kKernelMaxDeg + 1];
    for (int d = 1; 2 * d <= n; ++d) {
        std::fill(cand, cand + d, 0);
        cand[d] = 1;
        do {
            if (divides_buffers(fc, cand, d, fbuf, n)) return false;
        } while (next_candidate(fc, cand, d));
    }
    return true;
}

std::vector<std::pair<FqPoly, int>> factor_monic(const FqPoly& f) {
    if (f.is_zero() || degree_nonzero(f) < 1)
        throw ConstantPolynomial("factorization is defined for degree >= 1");
    if (!f.is_monic()) throw NotMonic("factorization requires a monic polynomial");

    // Trial division in graded order. The first nontrivial divisor found
    // has minimal degree among all factors of the current cofactor, so it
    // is automatically irreducible.
    std::vector<std::pair<FqPoly, int>> factors;
    FqPoly current = f;
    const auto& fc = *f.field();
    FqElem cand[kKernelMaxDeg + 1];
    int d = 1;
    while (true) {
        int dc = degree_nonzero(current);
        if (2 * d > dc) break;
        std::fill(cand, cand + d, 0);
        cand[d] = 1;
        do {
            FqPoly divisor = FqPoly::from_coeffs(f.field(), std::vector<FqElem>(cand, cand + d + 1));
            int count = 0;
            while (true) {
                auto [quot, r] = divmod(current, divisor);
                if (!r.is_zero()) break;
                current = quot;
                ++count;
            }
            if (count > 0) {
                factors.emplace_back(divisor, count);
                if (current.is_one() || 2 * d > degree_nonzero(current)) break;
            }
        } while (next_candidate(fc, cand, d));
        if (current.is_one()) break;
        ++d;
    }
    if (!current.is_one()) factors.emplace_back(current, 1);
    return factors;
}

std::uint64_t residue_count(const FqPoly& m, std::uint64_t budget) {
    if (m.is_zero() || degree_nonzero(m) < 1)
        throw ConstantPolynomial("residue enumeration needs a modulus of degree >= 1");
    const std::uint64_t q = m.field()->q;
    int d = degree_nonzero(m);
    std::uint64_t count = 1;
    bool overflow = false;
    for (int i = 0; i < d; ++i) {
        if (count > budget / q) {
            overflow = true;
            break;
        }
        count *= q;
    }
    if (overflow || count > budget) {
        throw BudgetExceeded("residue enumeration modulo a degree-" + std::to_string(d) +
                             " polynomial needs " + ipow(BigInt(q), static_cast<unsigned>(d)).str() +
                             " residues, exceeding the budget of " + std::to_string(budget));
    }
    return count;
}

std::vector<FqPoly> enumerate_residues(const FqPoly& m, std::uint64_t budget) {
    std::uint64_t count = residue_count(m, budget);
    std::vector<FqPoly> out;
    out.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) out.push_back(poly_from_index(m.field(), i));
    return out;
}

}  // namespace fqcover
