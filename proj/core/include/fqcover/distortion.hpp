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

#ifndef FQCOVER_DISTORTION_HPP
#define FQCOVER_DISTORTION_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "fqcover/covering.hpp"
#include "fqcover/poly.hpp"
#include "fqcover/rational.hpp"

namespace fqcover {

/// Prime-power decomposition Q = prod P_i^{nu_i} with the primes sorted
/// by ascending norm q^{deg P}, ties broken by the canonical graded
/// order. partials[j] = prod_{i<=j} P_i^{nu_i}, with partials[0] = 1.
struct PrimePowerChain {
    std::vector<FqPoly> primes;
    std::vector<int> exponents;
    std::vector<FqPoly> partials;

    int length() const { return static_cast<int>(primes.size()); }
};

/// Decomposes a monic polynomial of degree >= 1 into its canonical
/// prime-power chain.
PrimePowerChain decompose(const FqPoly& q_poly);

/// The residues (mod Q) newly covered at step j: the union of the
/// congruence classes whose modulus divides partials[j] but not
/// partials[j-1]. Always a union of full residue classes mod partials[j].
struct CoveredSet {
    int step = 0;
    std::vector<bool> members;  // indexed by canonical residue index mod Q

    std::uint64_t size() const;
};

/// Exact probability measure on residues mod Q after `step` reweighting
/// rounds. Weights are nonnegative, sum to 1 exactly, and are constant
/// on residue classes mod partials[step].
struct MeasureState {
    int step = 0;
    std::vector<Rat> weights;
};

/// The covered fraction of each fiber of the projection mod
/// partials[step-1], evaluated for the step's covered set.
struct AlphaProfile {
    int step = 0;
    std::uint64_t fiber_count = 0;
    std::uint64_t fiber_size = 0;
    std::vector<std::uint32_t> fiber_of;  // residue index -> fiber index
    std::vector<Rat> fiber_alpha;         // fiber index -> covered fraction
};

/// Per-step moment summary of a full run.
struct StepReport {
    int step = 0;
    FqPoly prime;
    int exponent = 0;
    std::uint64_t norm = 0;
    Rat delta;
    Rat first_moment;
    Rat second_moment;
    Rat weight;  // second_moment / (4 delta (1 - delta))
};

struct DistortionReport {
    FqPoly lcm;
    std::vector<StepReport> steps;
    Rat weighted_sum;
    bool certified_noncover = false;
    Rat uncovered_mass;
    std::optional<FqPoly> witness;       // first residue left outside every covered set
    std::vector<MeasureState> trace;     // populated only on request
};

/// Choice of the per-step parameters delta_j, all required in (0, 1/2].
struct DeltaSchedule {
    enum class Kind { Uniform, ByDegree, Explicit };
    Kind kind = Kind::Uniform;
    std::vector<Rat> values;

    static DeltaSchedule uniform(Rat delta);
    /// values[n-1] applies to primes of degree n; degrees beyond the
    /// list reuse the last entry.
    static DeltaSchedule by_degree(std::vector<Rat> values);
    /// One delta per chain step, length-checked at resolution.
    static DeltaSchedule explicit_steps(std::vector<Rat> values);

    /// Per-step deltas for a concrete chain; validates the (0, 1/2] range.
    std::vector<Rat> resolve(const PrimePowerChain& chain) const;
};

/// Runs the measure-distortion pipeline for one covering instance:
/// decomposition, per-step covered sets, fiber fractions, moments and
/// reweighting. The instance certifiably fails to cover when the
/// weighted second-moment sum stays below 1.
class DistortionEngine {
  public:
    explicit DistortionEngine(CoveringInstance instance,
                              std::uint64_t budget = kDefaultResidueBudget);

    /// Runs against a caller-supplied chain (must multiply out to the
    /// instance's common modulus); used to probe order robustness.
    DistortionEngine(CoveringInstance instance, PrimePowerChain chain,
                     std::uint64_t budget = kDefaultResidueBudget);

    const CoveringInstance& instance() const { return instance_; }
    const PrimePowerChain& chain() const { return chain_; }
    const FqPoly& common_modulus() const { return lcm_; }
    std::uint64_t residues() const { return count_; }
    int steps() const { return chain_.length(); }

    CoveredSet covered_entering(int step) const;
    MeasureState initial_measure() const;
    AlphaProfile alpha(const MeasureState& prev, const CoveredSet& covered) const;
    Rat moment(const MeasureState& prev, const AlphaProfile& profile, int k) const;
    /// One reweighting round; throws InvalidDelta for delta outside (0, 1/2].
    MeasureState apply_step(const MeasureState& prev, const CoveredSet& covered,
                            const AlphaProfile& profile, const Rat& delta) const;

    DistortionReport run(const DeltaSchedule& schedule, bool keep_trace = false) const;

  private:
    CoveringInstance instance_;
    FqPoly lcm_;
    PrimePowerChain chain_;
    std::uint64_t count_ = 0;
};

}  // namespace fqcover

#endif  // FQCOVER_DISTORTION_HPP
