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

#ifndef FQCOVER_SEARCH_HPP
#define FQCOVER_SEARCH_HPP

#include <cstdint>
#include <optional>

#include "fqcover/covering.hpp"

namespace fqcover {

enum class SearchStrategy {
    GreedyDensity,  // repeatedly take the congruence covering the most new residues
    DfsBacktrack,   // complete within budget, canonical branch order
};

struct SearchConfig {
    Field field;
    int max_degree = 2;                 // cap on modulus degrees
    std::uint64_t node_budget = 200000; // backtracking node limit
    SearchStrategy strategy = SearchStrategy::DfsBacktrack;
};

/// Outcome of a budgeted search. Absence of an instance is evidence,
/// not proof: with budget_exhausted set, branches remained unexplored.
struct SearchOutcome {
    std::optional<CoveringInstance> instance;
    bool budget_exhausted = false;
    std::uint64_t nodes_visited = 0;
};

/// Searches for a covering system with pairwise distinct monic moduli
/// of degree <= max_degree. A returned instance is always verified:
/// it covers and has multiplicity 1. Deterministic for a fixed config.
SearchOutcome search_distinct_cover(const SearchConfig& config);

}  // namespace fqcover

#endif  // FQCOVER_SEARCH_HPP
