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

#include "fqcover/field.hpp"

#include <array>
#include <string>

#include "fqcover/errors.hpp"

namespace fqcover {

namespace {

constexpr std::uint32_t kMaxExtensionDegree = 16;

// Scratch-sized polynomial arrays over F_p used only during field
// construction and the generic extension arithmetic. Coefficients are
// ascending; degree is tracked explicitly.
using Coeffs = std::array<std::uint64_t, 2 * kMaxExtensionDegree + 2>;

int trim_degree(const Coeffs& c, int upper) {
    int d = upper;
    while (d >= 0 && c[static_cast<std::size_t>(d)] == 0) --d;
    return d;
}

// In-place remainder of f (degree df) by the monic divisor d (degree dd).
void fp_mod_monic(Coeffs& f, int df, const Coeffs& d, int dd, std::uint64_t p) {
    for (int i = df - dd; i >= 0; --i) {
        std::uint64_t c = f[static_cast<std::size_t>(i + dd)];
        if (c == 0) continue;
        f[static_cast<std::size_t>(i + dd)] = 0;
        for (int j = 0; j < dd; ++j) {
            std::uint64_t& slot = f[static_cast<std::size_t>(i + j)];
            std::uint64_t sub = (c * d[static_cast<std::size_t>(j)]) % p;
            slot = slot >= sub ? slot - sub : slot + p - sub;
        }
    }
}

bool fp_divides(const Coeffs& divisor, int dd, const Coeffs& f, int df, std::uint64_t p) {
    Coeffs r = f;
    fp_mod_monic(r, df, divisor, dd, p);
    return trim_degree(r, dd - 1) < 0;
}

// Irreducibility of a monic polynomial over F_p by trial division
// against every monic polynomial of degree <= deg/2, in graded order.
bool fp_irreducible(const Coeffs& f, int deg, std::uint64_t p) {
    Coeffs cand{};
    for (int d = 1; 2 * d <= deg; ++d) {
        cand.fill(0);
        cand[static_cast<std::size_t>(d)] = 1;
        // Enumerate the p^d low coefficient vectors as a base-p counter.
        while (true) {
            if (fp_divides(cand, d, f, deg, p)) return false;
            int pos = 0;
            while (pos < d && cand[static_cast<std::size_t>(pos)] == p - 1) {
                cand[static_cast<std::size_t>(pos)] = 0;
                ++pos;
            }
            if (pos == d) break;
            ++cand[static_cast<std::size_t>(pos)];
        }
    }
    return true;
}

void unpack(const FieldConfig& f, FqElem a, Coeffs& out) {
    out.fill(0);
    for (std::uint32_t i = 0; i < f.k; ++i) {
        out[i] = a % f.p;
        a /= f.p;
    }
}

FqElem pack(const FieldConfig& f, const Coeffs& c) {
    FqElem v = 0;
    for (std::uint32_t i = f.k; i-- > 0;) v = v * f.p + c[i];
    return v;
}

Coeffs defining_coeffs(const FieldConfig& f) {
    Coeffs d{};
    for (std::uint32_t i = 0; i <= f.k; ++i) d[i] = f.defining[i];
    return d;
}

std::uint64_t fp_inv(std::uint64_t a, std::uint64_t p) {
    // Extended Euclid on (a, p); p prime, a nonzero.
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
        std::int64_t quot = r / new_r;
        t -= quot * new_t;
        std::swap(t, new_t);
        r -= quot * new_r;
        std::swap(r, new_r);
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (std::uint64_t d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

FqElem fq_add_ext(const FieldConfig& f, FqElem a, FqElem b) {
    Coeffs ca, cb;
    unpack(f, a, ca);
    unpack(f, b, cb);
    for (std::uint32_t i = 0; i < f.k; ++i) {
        ca[i] += cb[i];
        if (ca[i] >= f.p) ca[i] -= f.p;
    }
    return pack(f, ca);
}

FqElem fq_sub_ext(const FieldConfig& f, FqElem a, FqElem b) {
    Coeffs ca, cb;
    unpack(f, a, ca);
    unpack(f, b, cb);
    for (std::uint32_t i = 0; i < f.k; ++i) {
        ca[i] = ca[i] >= cb[i] ? ca[i] - cb[i] : ca[i] + f.p - cb[i];
    }
    return pack(f, ca);
}

FqElem fq_mul_ext(const FieldConfig& f, FqElem a, FqElem b) {
    Coeffs ca, cb, prod{};
    unpack(f, a, ca);
    unpack(f, b, cb);
    prod.fill(0);
    for (std::uint32_t i = 0; i < f.k; ++i) {
        if (ca[i] == 0) continue;
        for (std::uint32_t j = 0; j < f.k; ++j) {
            prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % f.p;
        }
    }
    Coeffs def = defining_coeffs(f);
    fp_mod_monic(prod, static_cast<int>(2 * f.k - 2), def, static_cast<int>(f.k), f.p);
    return pack(f, prod);
}

FqElem fq_inv_ext(const FieldConfig& f, FqElem a) {
    // Extended Euclid in F_p[x] between the defining polynomial and a.
    Coeffs r0 = defining_coeffs(f);
    Coeffs r1;
    unpack(f, a, r1);
    int d0 = static_cast<int>(f.k);
    int d1 = trim_degree(r1, static_cast<int>(f.k) - 1);
    Coeffs t0{}, t1{};
    t1[0] = 1;
    int td0 = -1, td1 = 0;
    while (d1 > 0) {
        // r0 = q*r1 + r2 by repeated leading-term elimination.
        std::uint64_t lead_inv = fp_inv(r1[static_cast<std::size_t>(d1)], f.p);
        for (int i = d0 - d1; i >= 0; --i) {
            std::uint64_t c = r0[static_cast<std::size_t>(i + d1)];
            if (c == 0) continue;
            std::uint64_t scale = (c * lead_inv) % f.p;
            for (int j = 0; j <= d1; ++j) {
                std::uint64_t& slot = r0[static_cast<std::size_t>(i + j)];
                std::uint64_t sub = (scale * r1[static_cast<std::size_t>(j)]) % f.p;
                slot = slot >= sub ? slot - sub : slot + f.p - sub;
            }
            for (int j = 0; j <= td1; ++j) {
                std::uint64_t& slot = t0[static_cast<std::size_t>(i + j)];
                std::uint64_t sub = (scale * t1[static_cast<std::size_t>(j)]) % f.p;
                slot = slot >= sub ? slot - sub : slot + f.p - sub;
            }
        }
        td0 = trim_degree(t0, static_cast<int>(2 * f.k));
        d0 = trim_degree(r0, d0);
        std::swap(r0, r1);
        std::swap(d0, d1);
        std::swap(t0, t1);
        std::swap(td0, td1);
    }
    // r1 is now a nonzero constant gcd; scale t1 by its inverse.
    std::uint64_t scale = fp_inv(r1[0], f.p);
    Coeffs out{};
    for (int j = 0; j <= td1; ++j) out[static_cast<std::size_t>(j)] = (t1[static_cast<std::size_t>(j)] * scale) % f.p;
    return pack(f, out);
}

FqElem fq_inv(const FieldConfig& f, FqElem a) {
    if (a == 0) throw DomainError("inverse of zero field element");
    if (f.has_tables) return f.inv_tab[a];
    if (f.k == 1) return fp_inv(a, f.p);
    return fq_inv_ext(f, a);
}

std::vector<std::uint64_t> fq_coeffs(const FieldConfig& f, FqElem a) {
    std::vector<std::uint64_t> out(f.k);
    for (std::uint32_t i = 0; i < f.k; ++i) {
        out[i] = a % f.p;
        a /= f.p;
    }
    return out;
}

FqElem fq_from_coeffs(const FieldConfig& f, const std::vector<std::uint64_t>& coeffs) {
    if (coeffs.size() > f.k) throw DomainError("too many coefficients for field element");
    FqElem v = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        if (coeffs[i] >= f.p) throw DomainError("field element coefficient out of range");
        v = v * f.p + coeffs[i];
    }
    return v;
}

Field field_make(std::uint64_t p, std::uint32_t k) {
    if (k < 1 || k > kMaxExtensionDegree)
        throw DegreeOutOfRange("extension degree must be in [1, " + std::to_string(kMaxExtensionDegree) + "], got " + std::to_string(k));
    if (p >= (std::uint64_t{1} << 31) || !is_prime_u64(p))
        throw NonPrimeBase("field characteristic must be a prime below 2^31, got " + std::to_string(p));

    auto cfg = std::make_shared<FieldConfig>();
    cfg->p = p;
    cfg->k = k;
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        if (q > (std::uint64_t{1} << 62) / p)
            throw DegreeOutOfRange("field size p^k exceeds the native integer range");
        q *= p;
    }
    cfg->q = q;

    if (k > 1) {
        // First monic irreducible of degree k in graded order.
        Coeffs cand{};
        cand[k] = 1;
        while (true) {
            if (fp_irreducible(cand, static_cast<int>(k), p)) break;
            std::uint32_t pos = 0;
            while (pos < k && cand[pos] == p - 1) {
                cand[pos] = 0;
                ++pos;
            }
            if (pos == k) throw DomainError("no irreducible polynomial found");  // unreachable
            ++cand[pos];
        }
        cfg->defining.assign(cand.begin(), cand.begin() + k + 1);
    }

    if (q <= FieldConfig::table_limit) {
        auto mul = [&](std::uint64_t a, std::uint64_t b) {
            return k == 1 ? (a * b) % p : fq_mul_ext(*cfg, a, b);
        };
        auto add = [&](std::uint64_t a, std::uint64_t b) {
            if (k > 1) return fq_add_ext(*cfg, a, b);
            std::uint64_t s = a + b;
            return s >= p ? s - p : s;
        };
        cfg->mul_tab.resize(q * q);
        cfg->add_tab.resize(q * q);
        cfg->neg_tab.assign(q, 0);
        cfg->inv_tab.assign(q, 0);
        for (std::uint64_t a = 0; a < q; ++a) {
            for (std::uint64_t b = 0; b < q; ++b) {
                cfg->mul_tab[a * q + b] = static_cast<std::uint32_t>(mul(a, b));
                cfg->add_tab[a * q + b] = static_cast<std::uint32_t>(add(a, b));
            }
        }
        for (std::uint64_t a = 0; a < q; ++a)
            cfg->neg_tab[a] = static_cast<std::uint32_t>(
                k == 1 ? (a == 0 ? 0 : p - a) : fq_sub_ext(*cfg, 0, a));
        for (std::uint64_t a = 1; a < q; ++a)
            cfg->inv_tab[a] = static_cast<std::uint32_t>(k == 1 ? fp_inv(a, p) : fq_inv_ext(*cfg, a));
        cfg->has_tables = true;
    }
    return cfg;
}

}  // namespace fqcover
