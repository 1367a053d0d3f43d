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

#include "fqcover/search.hpp"

#include <algorithm>

#include "fqcover/errors.hpp"

namespace fqcover {

namespace {

// The search decides coverage on residues modulo W = lcm of every
// candidate modulus: a subset of congruences covers the ring iff it
// covers all residues mod W.
class Searcher {
  public:
    explicit Searcher(const SearchConfig& config) : config_(config) {
        if (config_.max_degree < 1) throw DegreeOutOfRange("max_degree must be at least 1");
        if (config_.node_budget < 1) throw DomainError("node budget must be at least 1");
        const Field& field = config_.field;
        FqPoly w = FqPoly::one(field);
        for (int d = 1; d <= config_.max_degree; ++d) {
            std::uint64_t lead = 1;
            for (int i = 0; i < d; ++i) lead *= field->q;
            for (std::uint64_t low = 0; low < lead; ++low) {
                FqPoly m = add(poly_from_index(field, low),
                               poly_from_index(field, lead));  // monic of degree d
                moduli_.push_back(m);
                w = lcm_monic(w, m);
            }
        }
        w_ = w;
        count_ = residue_count(w_, kDefaultResidueBudget);
        cover_count_.assign(count_, 0);
        uncovered_ = count_;

        // Suffix union-bound densities for pruning: the residues still
        // coverable by moduli from index i on.
        suffix_density_.assign(moduli_.size() + 1, Rat(0));
        for (std::size_t i = moduli_.size(); i-- > 0;) {
            int d = degree_nonzero(moduli_[i]);
            BigInt md(1);
            for (int j = 0; j < d; ++j) md *= field->q;
            suffix_density_[i] = suffix_density_[i + 1] + Rat(BigInt(1), md);
        }
    }

    SearchOutcome run() {
        SearchOutcome outcome;
        if (config_.strategy == SearchStrategy::DfsBacktrack) {
            dfs(0);
        } else {
            greedy();
        }
        outcome.budget_exhausted = exhausted_;
        outcome.nodes_visited = nodes_;
        if (found_) {
            CoveringInstance instance = make_instance(config_.field, chosen_);
            // Post-condition of the search: verified cover, distinct moduli.
            CoverReport report = check_cover_exhaustive(instance);
            if (!report.covers || report.multiplicity != 1)
                throw DomainError("internal error: search produced an unverified instance");
            outcome.instance = std::move(instance);
        }
        return outcome;
    }

  private:
    template <typename Fn>
    void for_each_residue_of(const Congruence& c, Fn&& fn) const {
        const Field& field = config_.field;
        int free_deg = degree_nonzero(w_) - degree_nonzero(c.modulus);
        std::uint64_t t_count = 1;
        for (int i = 0; i < free_deg; ++i) t_count *= field->q;
        for (std::uint64_t t = 0; t < t_count; ++t) {
            FqPoly r = add(c.residue, mul(poly_from_index(field, t), c.modulus));
            fn(poly_index(r));
        }
    }

    std::uint64_t gain_of(const Congruence& c) const {
        std::uint64_t gain = 0;
        for_each_residue_of(c, [&](std::uint64_t idx) {
            if (cover_count_[idx] == 0) ++gain;
        });
        return gain;
    }

    void mark(const Congruence& c) {
        for_each_residue_of(c, [&](std::uint64_t idx) {
            if (cover_count_[idx]++ == 0) --uncovered_;
        });
    }

    void unmark(const Congruence& c) {
        for_each_residue_of(c, [&](std::uint64_t idx) {
            if (--cover_count_[idx] == 0) ++uncovered_;
        });
    }

    bool spend_node() {
        if (nodes_ >= config_.node_budget) {
            exhausted_ = true;
            return false;
        }
        ++nodes_;
        return true;
    }

    bool dfs(std::size_t idx) {
        if (!spend_node()) return false;
        if (uncovered_ == 0) {
            found_ = true;
            return true;
        }
        if (idx == moduli_.size()) return false;
        // Union bound: the remaining moduli cannot close the gap.
        if (suffix_density_[idx] < Rat(BigInt(uncovered_), BigInt(count_))) return false;

        const FqPoly& m = moduli_[idx];
        std::uint64_t residues = 1;
        for (int i = 0; i < degree_nonzero(m); ++i) residues *= config_.field->q;
        for (std::uint64_t r = 0; r < residues; ++r) {
            Congruence c{poly_from_index(config_.field, r), m};
            std::uint64_t gain = gain_of(c);
            if (gain == 0) continue;  // a cover using it works without it too
            mark(c);
            chosen_.push_back(c);
            if (dfs(idx + 1)) return true;
            chosen_.pop_back();
            unmark(c);
            if (exhausted_) return false;
        }
        return dfs(idx + 1);
    }

    void greedy() {
        std::vector<bool> used(moduli_.size(), false);
        while (uncovered_ > 0) {
            std::uint64_t best_gain = 0;
            std::size_t best_idx = 0;
            std::uint64_t best_res = 0;
            for (std::size_t i = 0; i < moduli_.size(); ++i) {
                if (used[i]) continue;
                std::uint64_t residues = 1;
                for (int d = 0; d < degree_nonzero(moduli_[i]); ++d) residues *= config_.field->q;
                for (std::uint64_t r = 0; r < residues; ++r) {
                    if (!spend_node()) return;
                    std::uint64_t gain = gain_of({poly_from_index(config_.field, r), moduli_[i]});
                    if (gain > best_gain) {
                        best_gain = gain;
                        best_idx = i;
                        best_res = r;
                    }
                }
            }
            if (best_gain == 0) return;  // stuck: no congruence makes progress
            Congruence c{poly_from_index(config_.field, best_res), moduli_[best_idx]};
            mark(c);
            chosen_.push_back(c);
            used[best_idx] = true;
        }
        found_ = true;
    }

    SearchConfig config_;
    std::vector<FqPoly> moduli_;
    FqPoly w_;
    std::uint64_t count_ = 0;
    std::vector<int> cover_count_;
    std::uint64_t uncovered_ = 0;
    std::vector<Rat> suffix_density_;
    std::vector<Congruence> chosen_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
    bool found_ = false;
};

}  // namespace

SearchOutcome search_distinct_cover(const SearchConfig& config) {
    return Searcher(config).run();
}

}  // namespace fqcover
