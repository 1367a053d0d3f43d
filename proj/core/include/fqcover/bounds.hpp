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

#ifndef FQCOVER_BOUNDS_HPP
#define FQCOVER_BOUNDS_HPP

#include <cstdint>
#include <vector>

#include "fqcover/rational.hpp"
#include "fqcover/upper_real.hpp"

namespace fqcover {

// Certified evaluation of the weighted second-moment series
//
//   sum_{n>=1} 1/(4 t_n (1-t_n)) * q pi(n)/(q^n-1)^2
//             * exp( sum_{k<=n} pi(k)/(1-t_k) * (3/q^k + h(q^k)) )
//
// whose value, scaled by s^2/q, dominates the weighted second-moment
// sum of any covering instance with multiplicity s over F_q (degree
// schedule t_n). Everything is computed as exact rationals combined
// through certified upper bounds; no floating point touches any
// certificate.

/// h(t) = (5t-3) / (t (t-1)^2): the remainder of the divisor-weight
/// series sum_{v>=1} (2v+1) t^-v after its 3/t head. Domain t >= 2.
Rat h_factor(const Rat& t);

/// Envelope for a single step's second moment: with s the instance
/// multiplicity and P_j the step's prime,
///   s^2/(|P_j|-1)^2 * exp( sum_{i<j} (3/|P_i| + h(|P_i|)) / (1-delta_i) ).
UpperReal second_moment_envelope(const std::vector<std::uint64_t>& prior_norms,
                                 const std::vector<Rat>& prior_deltas,
                                 std::uint64_t multiplicity, std::uint64_t norm_pj);

/// Source of the per-degree prime counts pi(n).
enum class PiMode {
    GenusUpperBound,        // (q^n + 1 + 2g q^{n/2}) / n, certified
    ExactPolynomialCounts,  // exact monic-irreducible counts (genus 0)
};

/// Degree schedule t_n: one value for degree 1, one for degree 2, and
/// one for every higher degree. All must lie in (0, 1/2].
struct DeltaByDegree {
    Rat deg1;
    Rat deg2;
    Rat rest;

    const Rat& at(std::uint32_t degree) const {
        return degree == 1 ? deg1 : degree == 2 ? deg2 : rest;
    }
};

/// The schedule used by every certified threshold: 17/100 at degree 1
/// and 1/4 everywhere above.
DeltaByDegree reference_delta_schedule();

struct BoundParams {
    std::uint64_t q = 0;
    std::uint32_t genus = 0;
    std::uint32_t multiplicity = 1;
    DeltaByDegree deltas = reference_delta_schedule();
    int truncation = 12;  // N: last series index summed explicitly
    PiMode mode = PiMode::GenusUpperBound;
};

struct BoundCertificate {
    UpperReal first_term;  // n = 1
    UpperReal head;        // n = 2 .. N
    UpperReal tail;        // certified bound on everything past N
    UpperReal total;       // first_term + head + tail
    BoundParams params;
    bool passes = false;   // total * s^2 / q < 1
};

/// Certified upper bound on the whole series: the first truncation
/// terms evaluated exactly (modulo certified exp/sqrt) plus a
/// geometric tail. Throws TailNotContractive when the tail ratio test
/// fails at the given truncation.
BoundCertificate weighted_sum_upper(const BoundParams& params);

/// The tail component alone: an upper bound on the term at n = N+1
/// divided by (1 - rho), where rho < 1 certifiably dominates every
/// consecutive term ratio past N.
UpperReal series_tail_upper(const BoundParams& params, int truncation);

/// Checks the classical term envelopes 1/(q^n-1)^2 <= 1.001/q^{2n} and
/// h(q^n) <= 5.002/q^{2n} for all n in [2, max_n]; exact comparisons.
bool verify_term_envelopes(std::uint64_t q, int max_n);

struct OptimizeResult {
    Rat t_star;
    UpperReal value;
};

/// Minimizes A/(t(1-t)) * exp(B/(1-t)) over t in [1/100, 1/2] by
/// golden-section search on the certified objective, to interval width
/// <= 10^-4. The golden ratio is fixed at the rational 2584/4181, so
/// the search is fully deterministic.
OptimizeResult minimize_first_term_objective(const UpperReal& objective_scale,
                                             const UpperReal& exponent_scale);

/// Derives the degree-1 objective for (q, genus, mode) and minimizes it.
OptimizeResult optimize_t1(std::uint64_t q, std::uint32_t genus, PiMode mode);

/// Threshold certificate for multiplicity-s covering systems over a
/// genus-g function field: the series total at the q = 70 anchor times
/// s^2, checked against the reference constant
/// (82.26 + 18.88 g) e^{0.95 g} s^2.
struct ThresholdCertificate {
    UpperReal threshold;
    Rat reference;
    bool within_reference = false;
    BoundCertificate certificate;
};
ThresholdCertificate certify_multiplicity_threshold(std::uint32_t genus, std::uint32_t s);

/// End-to-end certificate for the distinct-moduli question over F_q[x]:
/// recomputes the exact-count certificate at the anchor, revalidates
/// the published constant 77.79 against it, derives the first q where
/// constant/q < 1, and walks down the prime-power gap below it.
struct DistinctModuliCertificate {
    UpperReal computed_total;            // exact-head series value at q = 70
    Rat certified_constant;              // 77.79, revalidated each run
    bool constant_verified = false;      // computed_total <= certified_constant
    std::uint64_t q_min = 0;             // smallest q with certified_constant/q < 1
    std::uint64_t q_final = 0;           // largest prime power below q_min
    std::vector<std::uint64_t> gap_scan; // prime powers strictly between them (expected none)
};
DistinctModuliCertificate certify_distinct_moduli();

/// True iff n = p^e for a prime p and e >= 1.
bool is_prime_power(std::uint64_t n);

/// All prime powers in the closed interval [lo, hi], by trial division.
std::vector<std::uint64_t> prime_powers_in(std::uint64_t lo, std::uint64_t hi);

}  // namespace fqcover

#endif  // FQCOVER_BOUNDS_HPP
