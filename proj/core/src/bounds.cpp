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

#include "fqcover/bounds.hpp"

#include <string>

#include "fqcover/errors.hpp"
#include "fqcover/field.hpp"
#include "fqcover/prime_tables.hpp"

namespace fqcover {

namespace {

void require_schedule(const DeltaByDegree& d) {
    for (const Rat* t : {&d.deg1, &d.deg2, &d.rest}) {
        if (*t <= 0 || *t > Rat(1, 2))
            throw InvalidDelta("degree schedule values must lie in (0, 1/2]");
    }
}

void require_params(const BoundParams& p) {
    if (p.q < 2) throw DomainError("field size must be at least 2");
    if (p.multiplicity < 1) throw DomainError("multiplicity must be at least 1");
    if (p.truncation < 2) throw DegreeOutOfRange("series truncation must be at least 2");
    if (p.mode == PiMode::ExactPolynomialCounts && p.genus != 0)
        throw DomainError("exact polynomial counts apply only at genus 0");
    require_schedule(p.deltas);
}

UpperReal pi_count_upper(const BoundParams& p, std::uint32_t n) {
    if (p.mode == PiMode::ExactPolynomialCounts)
        return UpperReal::exact(Rat(count_irreducibles_exact(p.q, n)));
    return pi_upper_bound(p.q, p.genus, n);
}

/// (3/q^k + h(q^k)) as an exact rational.
Rat prime_norm_weight(const BigInt& q_pow_k) {
    return Rat(3, q_pow_k) + h_factor(Rat(q_pow_k));
}

/// One series term given the cumulative exponent bound for its index.
UpperReal series_term(const BoundParams& p, std::uint32_t n, const BigInt& q_pow_n,
                      const UpperReal& pi_n, const Rat& exponent_upper) {
    const Rat& t_n = p.deltas.at(n);
    Rat outer = Rat(1) / (Rat(4) * t_n * (Rat(1) - t_n));
    outer *= Rat(p.q) * pi_n.value / Rat((q_pow_n - 1) * (q_pow_n - 1));
    return scale_nonneg(exp_upper(exponent_upper), outer);
}

}  // namespace

Rat h_factor(const Rat& t) {
    if (t < 2) throw DomainError("h_factor is defined for t >= 2");
    return (Rat(5) * t - 3) / (t * (t - 1) * (t - 1));
}

UpperReal second_moment_envelope(const std::vector<std::uint64_t>& prior_norms,
                                 const std::vector<Rat>& prior_deltas,
                                 std::uint64_t multiplicity, std::uint64_t norm_pj) {
    if (prior_norms.size() != prior_deltas.size())
        throw DomainError("second_moment_envelope needs one delta per prior norm");
    if (norm_pj < 2) throw DomainError("prime norms are at least 2");
    Rat exponent(0);
    for (std::size_t i = 0; i < prior_norms.size(); ++i) {
        if (prior_norms[i] < 2) throw DomainError("prime norms are at least 2");
        if (prior_deltas[i] <= 0 || prior_deltas[i] > Rat(1, 2))
            throw InvalidDelta("envelope deltas must lie in (0, 1/2]");
        Rat norm(BigInt(prior_norms[i]));
        exponent += (Rat(3) / norm + h_factor(norm)) / (Rat(1) - prior_deltas[i]);
    }
    Rat scale = Rat(BigInt(multiplicity) * BigInt(multiplicity),
                    (BigInt(norm_pj) - 1) * (BigInt(norm_pj) - 1));
    return scale_nonneg(exp_upper(exponent), scale);
}

DeltaByDegree reference_delta_schedule() {
    return DeltaByDegree{Rat(17, 100), Rat(1, 4), Rat(1, 4)};
}

UpperReal series_tail_upper(const BoundParams& params, int truncation) {
    require_params(params);
    if (truncation < 2) throw DegreeOutOfRange("series truncation must be at least 2");
    const auto n_first = static_cast<std::uint32_t>(truncation + 1);
    const BigInt q(params.q);

    // Upper bound on the term at n = N+1, using the genus bound for the
    // counts (it dominates the exact counts as well) and the cumulative
    // exponent evaluated the same way.
    Rat exponent(0);
    BigInt q_pow(1);
    for (std::uint32_t k = 1; k <= n_first; ++k) {
        q_pow *= q;
        exponent += pi_upper_bound(params.q, params.genus, k).value *
                    prime_norm_weight(q_pow) / (Rat(1) - params.deltas.at(k));
    }
    UpperReal first = series_term(params, n_first, q_pow,
                                  pi_upper_bound(params.q, params.genus, n_first), exponent);

    // Ratio envelope valid for every n >= N+1: consecutive counts grow
    // by at most q, the 1/(q^n-1)^2 factor shrinks by at least q^2, and
    // the exponential picks up at most exp(c_bar), where c_bar bounds
    // the per-degree exponent increment from degree N+2 on (both of its
    // factors are decreasing in the degree).
    const BigInt u0 = ipow(q, n_first + 1);  // q^{N+2}
    Rat inv_sqrt_u0 = Rat(1, isqrt_floor(u0));
    Rat poly_part = Rat(1) + Rat(1, u0) + Rat(2 * BigInt(params.genus)) * inv_sqrt_u0;
    Rat norm_part = Rat(3) + Rat(5 * u0 - 3, (u0 - 1) * (u0 - 1));
    Rat c_bar = poly_part * norm_part /
                (Rat(BigInt(n_first) + 1) * (Rat(1) - params.deltas.rest));
    UpperReal rho = scale_nonneg(exp_upper(c_bar), Rat(1, q));

    return geometric_tail(first, rho);
}

BoundCertificate weighted_sum_upper(const BoundParams& params) {
    require_params(params);
    BoundCertificate cert;
    cert.params = params;

    const BigInt q(params.q);
    Rat exponent(0);
    BigInt q_pow(1);
    UpperReal head(Rat(0));
    for (std::uint32_t n = 1; n <= static_cast<std::uint32_t>(params.truncation); ++n) {
        q_pow *= q;
        UpperReal pi_n = pi_count_upper(params, n);
        exponent += pi_n.value * prime_norm_weight(q_pow) / (Rat(1) - params.deltas.at(n));
        UpperReal term = series_term(params, n, q_pow, pi_n, exponent);
        if (n == 1) {
            cert.first_term = term;
        } else {
            head = head + term;
        }
    }
    cert.head = head;
    cert.tail = series_tail_upper(params, params.truncation);
    cert.total = cert.first_term + cert.head + cert.tail;

    BigInt s(params.multiplicity);
    cert.passes = cert.total.value * Rat(s * s) < Rat(BigInt(params.q));
    return cert;
}

bool verify_term_envelopes(std::uint64_t q, int max_n) {
    if (q < 2 || max_n < 2) throw DomainError("envelope check needs q >= 2 and max_n >= 2");
    BigInt u(q);
    u *= u;  // start at n = 2
    for (int n = 2; n <= max_n; ++n) {
        BigInt um1_sq = (u - 1) * (u - 1);
        if (1000 * u * u > 1001 * um1_sq) return false;
        if (1000 * u * (5 * u - 3) > 5002 * um1_sq) return false;
        u *= q;
    }
    return true;
}

OptimizeResult minimize_first_term_objective(const UpperReal& objective_scale,
                                             const UpperReal& exponent_scale) {
    if (objective_scale.value <= 0) throw DomainError("objective scale must be positive");
    if (exponent_scale.value < 0) throw DomainError("exponent scale must be nonnegative");

    auto evaluate = [&](const Rat& t) {
        Rat outer = objective_scale.value / (t * (Rat(1) - t));
        return scale_nonneg(exp_upper(exponent_scale.value / (Rat(1) - t)), outer);
    };

    Rat lo(1, 100), hi(1, 2);
    const Rat inv_phi(2584, 4181);
    const Rat width_goal(1, 10000);
    while (hi - lo > width_goal) {
        Rat x1 = hi - inv_phi * (hi - lo);
        Rat x2 = lo + inv_phi * (hi - lo);
        if (evaluate(x1).value < evaluate(x2).value) {
            hi = x2;
        } else {
            lo = x1;
        }
    }
    Rat mid = (lo + hi) / 2;
    return OptimizeResult{mid, evaluate(mid)};
}

OptimizeResult optimize_t1(std::uint64_t q, std::uint32_t genus, PiMode mode) {
    if (q < 2) throw DomainError("field size must be at least 2");
    const BigInt qb(q);
    Rat denom((qb - 1) * (qb - 1) * 4);
    UpperReal scale{Rat(0)}, expo{Rat(0)};
    if (mode == PiMode::ExactPolynomialCounts) {
        if (genus != 0) throw DomainError("exact polynomial counts apply only at genus 0");
        scale = UpperReal(Rat(qb * qb) / denom);
        expo = UpperReal(Rat(3) + Rat(qb) * h_factor(Rat(qb)));
    } else {
        Rat pi1 = pi_upper_bound(q, genus, 1).value;
        scale = UpperReal(Rat(qb) * pi1 / denom);
        expo = UpperReal(pi1 * (Rat(3, qb) + h_factor(Rat(qb))));
    }
    return minimize_first_term_objective(scale, expo);
}

ThresholdCertificate certify_multiplicity_threshold(std::uint32_t genus, std::uint32_t s) {
    if (s < 1) throw DomainError("multiplicity must be at least 1");
    BoundParams params;
    params.q = 70;  // anchor: the series is non-increasing in q from here on
    params.genus = genus;
    params.multiplicity = s;
    params.mode = PiMode::GenusUpperBound;
    ThresholdCertificate out;
    out.certificate = weighted_sum_upper(params);
    Rat s_sq(BigInt(s) * BigInt(s));
    out.threshold = scale_nonneg(out.certificate.total, s_sq);
    out.reference = (Rat(8226, 100) + Rat(1888, 100) * genus) *
                    exp_upper(Rat(19 * BigInt(genus), 20)).value * s_sq;
    out.within_reference = out.threshold.value <= out.reference;
    return out;
}

DistinctModuliCertificate certify_distinct_moduli() {
    BoundParams params;
    params.q = 70;
    params.genus = 0;
    params.multiplicity = 1;
    params.mode = PiMode::ExactPolynomialCounts;
    DistinctModuliCertificate out;
    out.computed_total = weighted_sum_upper(params).total;

    // The published constant is itself an upper bound on the series
    // value at the anchor; revalidate it against the sharper computed
    // total, then derive the integer threshold from it.
    out.certified_constant = Rat(7779, 100);
    out.constant_verified = out.computed_total.value <= out.certified_constant;

    BigInt q_min = floor_div(numerator(out.certified_constant), denominator(out.certified_constant)) + 1;
    out.q_min = static_cast<std::uint64_t>(q_min);
    std::uint64_t candidate = out.q_min - 1;
    while (candidate >= 2 && !is_prime_power(candidate)) --candidate;
    out.q_final = candidate;
    out.gap_scan = prime_powers_in(out.q_final + 1, out.q_min - 1);
    return out;
}

bool is_prime_power(std::uint64_t n) {
    if (n < 2) return false;
    std::uint64_t p = 0;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) return true;  // prime
    while (n % p == 0) n /= p;
    return n == 1;
}

std::vector<std::uint64_t> prime_powers_in(std::uint64_t lo, std::uint64_t hi) {
    if (lo < 2) lo = 2;
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = lo; n <= hi; ++n)
        if (is_prime_power(n)) out.push_back(n);
    return out;
}

}  // namespace fqcover
