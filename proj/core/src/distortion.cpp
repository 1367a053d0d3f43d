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

#include "fqcover/distortion.hpp"

#include <algorithm>
#include <string>

#include "fqcover/errors.hpp"

namespace fqcover {

namespace {

void require_delta(const Rat& delta) {
    if (delta <= 0 || delta > Rat(1, 2))
        throw InvalidDelta("distortion parameter must lie in (0, 1/2], got " + decimal_string(delta, 6));
}

std::uint64_t norm_of(const FqPoly& p) {
    std::uint64_t n = 1;
    for (int i = 0; i < degree_nonzero(p); ++i) n *= p.field()->q;
    return n;
}

}  // namespace

PrimePowerChain decompose(const FqPoly& q_poly) {
    if (q_poly.is_zero() || degree_nonzero(q_poly) < 1)
        throw ConstantPolynomial("prime-power decomposition needs degree >= 1");
    // factor_monic sorts by (degree, graded order), which coincides with
    // the ascending-norm order with the canonical tie-break.
    auto factors = factor_monic(monic(q_poly));
    PrimePowerChain chain;
    chain.partials.push_back(FqPoly::one(q_poly.field()));
    for (const auto& [prime, exponent] : factors) {
        chain.primes.push_back(prime);
        chain.exponents.push_back(exponent);
        FqPoly power = chain.partials.back();
        for (int i = 0; i < exponent; ++i) power = mul(power, prime);
        chain.partials.push_back(power);
    }
    return chain;
}

std::uint64_t CoveredSet::size() const {
    return static_cast<std::uint64_t>(std::count(members.begin(), members.end(), true));
}

DistortionEngine::DistortionEngine(CoveringInstance instance, std::uint64_t budget)
    : instance_(std::move(instance)), lcm_(lcm_modulus(instance_)) {
    chain_ = decompose(lcm_);
    count_ = residue_count(lcm_, budget);
}

DistortionEngine::DistortionEngine(CoveringInstance instance, PrimePowerChain chain, std::uint64_t budget)
    : instance_(std::move(instance)), lcm_(lcm_modulus(instance_)), chain_(std::move(chain)) {
    if (chain_.partials.empty() || chain_.partials.back() != lcm_)
        throw DomainError("supplied chain does not multiply out to the instance's common modulus");
    count_ = residue_count(lcm_, budget);
}

CoveredSet DistortionEngine::covered_entering(int step) const {
    if (step < 1 || step > steps()) throw DomainError("chain step out of range");
    CoveredSet set;
    set.step = step;
    set.members.assign(count_, false);
    const FqPoly& q_j = chain_.partials[static_cast<std::size_t>(step)];
    const FqPoly& q_prev = chain_.partials[static_cast<std::size_t>(step - 1)];
    for (const auto& c : instance_.congruences) {
        if (!divides(c.modulus, q_j) || divides(c.modulus, q_prev)) continue;
        int free_deg = degree_nonzero(lcm_) - degree_nonzero(c.modulus);
        std::uint64_t t_count = 1;
        for (int i = 0; i < free_deg; ++i) t_count *= instance_.field->q;
        for (std::uint64_t t_idx = 0; t_idx < t_count; ++t_idx) {
            FqPoly r = add(c.residue, mul(poly_from_index(instance_.field, t_idx), c.modulus));
            set.members[poly_index(r)] = true;
        }
    }
    return set;
}

MeasureState DistortionEngine::initial_measure() const {
    MeasureState state;
    state.step = 0;
    state.weights.assign(count_, Rat(BigInt(1), BigInt(count_)));
    return state;
}

AlphaProfile DistortionEngine::alpha(const MeasureState& prev, const CoveredSet& covered) const {
    if (covered.step != prev.step + 1)
        throw DomainError("covered set and measure state are out of phase");
    AlphaProfile profile;
    profile.step = covered.step;
    const FqPoly& q_prev = chain_.partials[static_cast<std::size_t>(covered.step - 1)];
    int prev_deg = q_prev.is_one() ? 0 : degree_nonzero(q_prev);
    std::uint64_t fibers = 1;
    for (int i = 0; i < prev_deg; ++i) fibers *= instance_.field->q;
    profile.fiber_count = fibers;
    profile.fiber_size = count_ / fibers;
    profile.fiber_of.resize(count_);
    std::vector<std::uint64_t> hits(fibers, 0);
    for (std::uint64_t i = 0; i < count_; ++i) {
        FqPoly r = poly_from_index(instance_.field, i);
        std::uint64_t fid = q_prev.is_one() ? 0 : poly_index(rem(r, q_prev));
        profile.fiber_of[i] = static_cast<std::uint32_t>(fid);
        if (covered.members[i]) ++hits[fid];
    }
    profile.fiber_alpha.reserve(fibers);
    for (std::uint64_t f = 0; f < fibers; ++f)
        profile.fiber_alpha.emplace_back(BigInt(hits[f]), BigInt(profile.fiber_size));
    return profile;
}

Rat DistortionEngine::moment(const MeasureState& prev, const AlphaProfile& profile, int k) const {
    if (profile.step != prev.step + 1)
        throw DomainError("alpha profile and measure state are out of phase");
    if (k < 1) throw DomainError("moment order must be >= 1");
    // The fraction is constant on fibers, so aggregate fiber masses first.
    std::vector<Rat> mass(profile.fiber_count, Rat(0));
    for (std::uint64_t i = 0; i < count_; ++i) mass[profile.fiber_of[i]] += prev.weights[i];
    Rat total(0);
    for (std::uint64_t f = 0; f < profile.fiber_count; ++f) {
        if (mass[f] == 0 || profile.fiber_alpha[f] == 0) continue;
        Rat power = profile.fiber_alpha[f];
        for (int i = 1; i < k; ++i) power *= profile.fiber_alpha[f];
        total += power * mass[f];
    }
    return total;
}

MeasureState DistortionEngine::apply_step(const MeasureState& prev, const CoveredSet& covered,
                                          const AlphaProfile& profile, const Rat& delta) const {
    require_delta(delta);
    if (covered.step != prev.step + 1 || profile.step != covered.step)
        throw DomainError("distortion step inputs are out of phase");
    MeasureState next;
    next.step = covered.step;
    next.weights.assign(count_, Rat(0));
    const Rat one(1);
    for (std::uint64_t i = 0; i < count_; ++i) {
        const Rat& w = prev.weights[i];
        if (w == 0) continue;
        const Rat& a = profile.fiber_alpha[profile.fiber_of[i]];
        if (a < delta) {
            // Light fibers: evict the covered part, renormalize the rest.
            if (!covered.members[i]) next.weights[i] = w / (one - a);
        } else {
            // Heavy fibers: shave a delta-fraction off the covered part.
            if (covered.members[i]) {
                next.weights[i] = w * (a - delta) / (a * (one - delta));
            } else {
                next.weights[i] = w / (one - delta);
            }
        }
    }
    return next;
}

DeltaSchedule DeltaSchedule::uniform(Rat delta) {
    return DeltaSchedule{Kind::Uniform, {std::move(delta)}};
}

DeltaSchedule DeltaSchedule::by_degree(std::vector<Rat> values) {
    if (values.empty()) throw InvalidDelta("a by-degree schedule needs at least one value");
    return DeltaSchedule{Kind::ByDegree, std::move(values)};
}

DeltaSchedule DeltaSchedule::explicit_steps(std::vector<Rat> values) {
    if (values.empty()) throw InvalidDelta("an explicit schedule needs at least one value");
    return DeltaSchedule{Kind::Explicit, std::move(values)};
}

std::vector<Rat> DeltaSchedule::resolve(const PrimePowerChain& chain) const {
    std::vector<Rat> out;
    const int j_count = chain.length();
    switch (kind) {
        case Kind::Uniform:
            out.assign(static_cast<std::size_t>(j_count), values[0]);
            break;
        case Kind::ByDegree:
            for (int j = 0; j < j_count; ++j) {
                auto deg = static_cast<std::size_t>(degree_nonzero(chain.primes[static_cast<std::size_t>(j)]));
                out.push_back(values[std::min(deg, values.size()) - 1]);
            }
            break;
        case Kind::Explicit:
            if (values.size() != static_cast<std::size_t>(j_count))
                throw InvalidDelta("explicit schedule has " + std::to_string(values.size()) +
                                   " entries but the chain has " + std::to_string(j_count) + " steps");
            out = values;
            break;
    }
    for (const Rat& d : out) require_delta(d);
    return out;
}

DistortionReport DistortionEngine::run(const DeltaSchedule& schedule, bool keep_trace) const {
    DistortionReport report;
    report.lcm = lcm_;
    std::vector<Rat> deltas = schedule.resolve(chain_);

    MeasureState state = initial_measure();
    std::vector<bool> ever_covered(count_, false);
    Rat weighted_sum(0);
    if (keep_trace) report.trace.push_back(state);

    for (int j = 1; j <= steps(); ++j) {
        CoveredSet covered = covered_entering(j);
        AlphaProfile profile = alpha(state, covered);
        const Rat& delta = deltas[static_cast<std::size_t>(j - 1)];

        StepReport step;
        step.step = j;
        step.prime = chain_.primes[static_cast<std::size_t>(j - 1)];
        step.exponent = chain_.exponents[static_cast<std::size_t>(j - 1)];
        step.norm = norm_of(step.prime);
        step.delta = delta;
        step.first_moment = moment(state, profile, 1);
        step.second_moment = moment(state, profile, 2);
        step.weight = step.second_moment / (Rat(4) * delta * (Rat(1) - delta));
        weighted_sum += step.weight;
        report.steps.push_back(std::move(step));

        for (std::uint64_t i = 0; i < count_; ++i)
            if (covered.members[i]) ever_covered[i] = true;

        state = apply_step(state, covered, profile, delta);
        if (keep_trace) report.trace.push_back(state);
    }

    report.weighted_sum = weighted_sum;
    report.certified_noncover = weighted_sum < 1;
    Rat uncovered_mass(0);
    std::optional<std::uint64_t> first_uncovered;
    for (std::uint64_t i = 0; i < count_; ++i) {
        if (ever_covered[i]) continue;
        if (!first_uncovered) first_uncovered = i;
        uncovered_mass += state.weights[i];
    }
    report.uncovered_mass = uncovered_mass;
    if (first_uncovered) report.witness = poly_from_index(instance_.field, *first_uncovered);
    return report;
}

}  // namespace fqcover
