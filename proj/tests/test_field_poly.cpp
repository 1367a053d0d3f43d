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

#include <doctest.h>

#include <random>

#include "fqcover/errors.hpp"
#include "test_util.hpp"

using namespace fqcover;
using namespace fqcover::test;

TEST_CASE("field_make basics") {
    Field f = field_make(2, 1);
    CHECK(f->q == 2);
    CHECK(f->defining.empty());

    Field e = field_make(2, 2);
    CHECK(e->q == 4);
    // Coefficients of x^2+x+1, ascending.
    CHECK(e->defining == std::vector<std::uint64_t>{1, 1, 1});

    CHECK_THROWS_AS(field_make(4, 1), NonPrimeBase);
    CHECK_THROWS_AS(field_make(2, 0), DegreeOutOfRange);
}

TEST_CASE("defining polynomial is the unique irreducible quadratic over F_2") {
    // Enumerate all four monic quadratics and keep the irreducible ones.
    Field base = f2();
    std::vector<FqPoly> irreducible;
    for (std::uint64_t low = 0; low < 4; ++low) {
        FqPoly cand = add(poly_from_index(base, low), poly_from_index(base, 4));
        if (is_irreducible(cand)) irreducible.push_back(cand);
    }
    REQUIRE(irreducible.size() == 1);
    CHECK(irreducible[0] == pp(base, "x^2+x+1"));
}

TEST_CASE("defining polynomials are irreducible and deterministic") {
    // The first monic irreducible in graded order, checked with the
    // module's own test over the base field.
    struct Expect {
        std::uint64_t p;
        std::uint32_t k;
        const char* defining;
    };
    for (const Expect& e : {Expect{2, 3, "x^3+x+1"}, Expect{3, 2, "x^2+1"}, Expect{5, 2, "x^2+2"}}) {
        Field ext = field_make(e.p, e.k);
        Field base = field_make(e.p, 1);
        FqPoly defining = FqPoly::from_coeffs(base, ext->defining);
        CHECK(defining.is_monic());
        CHECK(degree_nonzero(defining) == static_cast<int>(e.k));
        CHECK(is_irreducible(defining));
        CHECK(defining == pp(base, e.defining));
        // No monic polynomial of smaller index is irreducible.
        std::uint64_t lead = 1;
        for (std::uint32_t i = 0; i < e.k; ++i) lead *= e.p;
        for (std::uint64_t low = 0; low < poly_index(defining) - lead; ++low) {
            FqPoly cand = add(poly_from_index(base, low), poly_from_index(base, lead));
            CHECK_FALSE(is_irreducible(cand));
        }
    }
}

TEST_CASE("extension field arithmetic in F_4") {
    Field e = f4();
    // w = the class of x; with x^2+x+1 = 0, w*w = w+1.
    FqElem w = fq_from_coeffs(*e, {0, 1});
    CHECK(fq_mul(*e, w, w) == fq_from_coeffs(*e, {1, 1}));
    CHECK(fq_add(*e, w, w) == 0);
    CHECK(fq_mul(*e, w, fq_inv(*e, w)) == 1);
}

TEST_CASE("large extension fields fall back to generic arithmetic") {
    Field e = field_make(5, 4);  // q = 625, beyond the table limit
    CHECK_FALSE(e->has_tables);
    CHECK(e->q == 625);
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        FqElem a = rng() % e->q;
        FqElem b = rng() % e->q;
        FqElem c = rng() % e->q;
        CHECK(fq_add(*e, a, b) == fq_add(*e, b, a));
        CHECK(fq_mul(*e, a, b) == fq_mul(*e, b, a));
        CHECK(fq_sub(*e, fq_add(*e, a, b), b) == a);
        CHECK(fq_mul(*e, a, fq_add(*e, b, c)) == fq_add(*e, fq_mul(*e, a, b), fq_mul(*e, a, c)));
        if (a != 0) CHECK(fq_mul(*e, a, fq_inv(*e, a)) == 1);
    }
}

TEST_CASE("polynomial arithmetic examples") {
    Field f = f2();
    CHECK(gcd_monic(pp(f, "x^2+1"), pp(f, "x+1")) == pp(f, "x+1"));

    auto [q, r] = divmod(pp(f, "x^2+x"), pp(f, "x"));
    CHECK(q == pp(f, "x+1"));
    CHECK(r.is_zero());

    Field g = f3();
    CHECK(mul(pp(g, "x^2+2*x+1"), pp(g, "x+1")) == pp(g, "x^3+1"));

    CHECK_THROWS_AS(divmod(pp(f, "x"), FqPoly::zero(f)), DivisionByZeroPoly);
}

TEST_CASE("irreducibility examples") {
    Field f = f2();
    CHECK(is_irreducible(pp(f, "x^2+x+1")));
    CHECK_FALSE(is_irreducible(pp(f, "x^2+1")));
    CHECK(is_irreducible(pp(f, "x^3+x+1")));
    CHECK_THROWS_AS(is_irreducible(pp(f, "1")), ConstantPolynomial);
    CHECK_THROWS_AS(is_irreducible(FqPoly::from_coeffs(f3(), {1, 2})), NotMonic);
}

TEST_CASE("irreducibility matches an independent trial-division oracle") {
    // Oracle: divide by every monic polynomial of degree <= deg/2,
    // written directly against divmod.
    auto oracle = [](const FqPoly& poly) {
        const Field& field = poly.field();
        int n = degree_nonzero(poly);
        for (int d = 1; 2 * d <= n; ++d) {
            std::uint64_t lead = 1;
            for (int i = 0; i < d; ++i) lead *= field->q;
            for (std::uint64_t low = 0; low < lead; ++low) {
                FqPoly cand = add(poly_from_index(field, low), poly_from_index(field, lead));
                if (rem(poly, cand).is_zero()) return false;
            }
        }
        return true;
    };
    for (const Field& field : {f2(), f3()}) {
        for (int n = 1; n <= 8; ++n) {
            std::uint64_t lead = 1;
            for (int i = 0; i < n; ++i) lead *= field->q;
            // Exhaustive for F_2; strided sample for F_3 to stay quick.
            std::uint64_t stride = field->q == 2 ? 1 : 7;
            for (std::uint64_t low = 0; low < lead; low += stride) {
                FqPoly cand = add(poly_from_index(field, low), poly_from_index(field, lead));
                CHECK(is_irreducible(cand) == oracle(cand));
            }
        }
    }
}

TEST_CASE("factorization examples") {
    Field f = f2();
    auto fs = factor_monic(pp(f, "x^2+x"));
    REQUIRE(fs.size() == 2);
    CHECK(fs[0].first == pp(f, "x"));
    CHECK(fs[0].second == 1);
    CHECK(fs[1].first == pp(f, "x+1"));
    CHECK(fs[1].second == 1);

    fs = factor_monic(pp(f, "x^4+x^2"));
    REQUIRE(fs.size() == 2);
    CHECK(fs[0].first == pp(f, "x"));
    CHECK(fs[0].second == 2);
    CHECK(fs[1].first == pp(f, "x+1"));
    CHECK(fs[1].second == 2);

    fs = factor_monic(pp(f, "x^2+x+1"));
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].first == pp(f, "x^2+x+1"));
    CHECK(fs[0].second == 1);
}

TEST_CASE("factorization reconstructs and yields irreducibles, exhaustively to degree 6") {
    for (const Field& field : {f2(), f3(), f4(), f5()}) {
        for (int n = 1; n <= 6; ++n) {
            std::uint64_t lead = 1;
            for (int i = 0; i < n; ++i) lead *= field->q;
            if (lead > 100000) break;
            for (std::uint64_t low = 0; low < lead; ++low) {
                FqPoly poly = add(poly_from_index(field, low), poly_from_index(field, lead));
                auto factors = factor_monic(poly);
                FqPoly product = FqPoly::one(field);
                for (const auto& [p, e] : factors) {
                    CHECK(is_irreducible(p));
                    for (int i = 0; i < e; ++i) product = mul(product, p);
                }
                CHECK(product == poly);
                // Sorted by (degree, graded order).
                for (std::size_t i = 1; i < factors.size(); ++i)
                    CHECK(graded_less(factors[i - 1].first, factors[i].first));
            }
        }
    }
}

TEST_CASE("residue enumeration") {
    Field f = f2();
    auto rs = enumerate_residues(pp(f, "x"), 1 << 20);
    REQUIRE(rs.size() == 2);
    CHECK(rs[0].is_zero());
    CHECK(rs[1] == pp(f, "1"));

    rs = enumerate_residues(pp(f, "x^2"), 1 << 20);
    REQUIRE(rs.size() == 4);
    CHECK(rs[2] == pp(f, "x"));
    CHECK(rs[3] == pp(f, "x+1"));
    // Index round trip, all entries of degree < deg m.
    for (std::uint64_t i = 0; i < rs.size(); ++i) {
        CHECK(poly_index(rs[i]) == i);
        if (!rs[i].is_zero()) CHECK(degree_nonzero(rs[i]) < 2);
    }

    Field g = f3();
    rs = enumerate_residues(pp(g, "x"), 1 << 20);
    REQUIRE(rs.size() == 3);
    CHECK(rs[2] == pp(g, "2"));

    CHECK_THROWS_AS(enumerate_residues(pp(f, "x^8"), 100), BudgetExceeded);
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937_64 rng(20260808);
    for (const Field& field : {f2(), f3(), f4()}) {
        for (int trial = 0; trial < 120; ++trial) {
            auto random_poly = [&]() {
                std::uint64_t bound = 1;
                for (int i = 0; i < 5; ++i) bound *= field->q;
                return poly_from_index(field, rng() % bound);
            };
            FqPoly a = random_poly(), b = random_poly(), c = random_poly();
            CHECK(add(a, b) == add(b, a));
            CHECK(mul(a, b) == mul(b, a));
            CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
            CHECK(mul(add(a, b), c) == add(mul(a, c), mul(b, c)));
            CHECK(add(sub(a, b), b) == a);
            if (!b.is_zero()) {
                auto [q, r] = divmod(a, b);
                CHECK(add(mul(q, b), r) == a);
                if (!r.is_zero()) CHECK(degree_nonzero(r) < degree_nonzero(b));
            }
        }
    }
}

TEST_CASE("polynomial text round trips") {
    Field f = f2();
    CHECK(to_text(pp(f, "x^2+x+1")) == "x^2+x+1");
    CHECK(pp(f, "  x^2 + x + 1 ") == pp(f, "x^2+x+1"));
    CHECK(to_text(FqPoly::zero(f)) == "0");
    CHECK(pp(f, "0").is_zero());

    Field g = f3();
    CHECK(to_text(pp(g, "2*x^3+1")) == "2*x^3+1");
    CHECK(pp(g, "4*x") == pp(g, "x"));  // coefficients reduce mod p

    Field e = f4();
    FqPoly ext = pp(e, "[1,1]*x^2+[0,1]");
    CHECK(ext.coeff(2) == fq_from_coeffs(*e, {1, 1}));
    CHECK(ext.coeff(0) == fq_from_coeffs(*e, {0, 1}));
    CHECK(parse_poly(e, to_text(ext)) == ext);

    CHECK_THROWS_AS(parse_poly(f, "x^2++1"), ParseError);
    CHECK_THROWS_AS(parse_poly(f, ""), ParseError);
    CHECK_THROWS_AS(parse_poly(f, "y+1"), ParseError);

    std::mt19937_64 rng(7);
    for (const Field& field : {f2(), f3(), f4()}) {
        for (int trial = 0; trial < 200; ++trial) {
            std::uint64_t bound = 1;
            for (int i = 0; i < 6; ++i) bound *= field->q;
            FqPoly poly = poly_from_index(field, rng() % bound);
            CHECK(parse_poly(field, to_text(poly)) == poly);
        }
    }
}
