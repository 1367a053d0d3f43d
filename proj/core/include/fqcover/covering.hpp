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

#ifndef FQCOVER_COVERING_HPP
#define FQCOVER_COVERING_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fqcover/poly.hpp"
#include "fqcover/rational.hpp"

namespace fqcover {

/// Default cap on the number of residues an exhaustive operation may
/// enumerate; overridable per call (and by CLI flag).
inline constexpr std::uint64_t kDefaultResidueBudget = std::uint64_t{1} << 24;

/// One congruence class a + (m): a residue and a monic modulus of
/// degree >= 1. Canonical form keeps deg(residue) < deg(modulus).
struct Congruence {
    FqPoly residue;
    FqPoly modulus;
};

/// Canonicalizes: the modulus is scaled monic (same ideal) and the
/// residue is reduced modulo it. Rejects constant moduli — a unit
/// modulus covers everything trivially and is not accepted.
Congruence make_congruence(const FqPoly& residue, const FqPoly& modulus);

/// A finite list of congruences over one field. The list order is part
/// of the instance identity (reports are reproducible under it).
struct CoveringInstance {
    Field field;
    std::vector<Congruence> congruences;
};

/// Validates field consistency and non-emptiness.
CoveringInstance make_instance(Field field, std::vector<Congruence> congruences);

/// Verdict of the exhaustive coverage check modulo Q.
struct CoverReport {
    bool covers = false;
    std::optional<FqPoly> witness;  // first uncovered residue in canonical order
    int multiplicity = 0;
    Rat covered_fraction;
    FqPoly lcm;  // the common modulus Q
};

/// Monic least common multiple of all moduli (the intersection of the
/// corresponding ideals).
FqPoly lcm_modulus(const CoveringInstance& instance);

/// Largest number of congruences sharing one modulus.
int multiplicity(const CoveringInstance& instance);

/// Decides coverage by enumerating every residue modulo Q = lcm of the
/// moduli. covers is true iff every residue satisfies some congruence;
/// covered_fraction is exact. Throws BudgetExceeded when q^{deg Q}
/// exceeds the budget.
CoverReport check_cover_exhaustive(const CoveringInstance& instance,
                                   std::uint64_t budget = kDefaultResidueBudget);

/// Fraction of residues mod Q left uncovered by a (possibly empty)
/// partial congruence list; 1 for the empty list. Used as a search
/// heuristic.
Rat uncovered_density(const Field& field, const std::vector<Congruence>& congruences,
                      std::uint64_t budget = kDefaultResidueBudget);

// --- instance file format ------------------------------------------------
//
// Header line "q=<int> k=<int>" (q the field size p^k), then one
// congruence per line as "residue % modulus" in the polynomial text
// format. Lines starting with '#' are comments.

/// Parses an instance from text. Errors cite 1-based line numbers.
CoveringInstance parse_instance(const std::string& text);

/// Canonical text form; parse_instance(format_instance(i)) == i.
std::string format_instance(const CoveringInstance& instance);

}  // namespace fqcover

#endif  // FQCOVER_COVERING_HPP
