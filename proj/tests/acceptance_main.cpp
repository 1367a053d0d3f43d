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

// Acceptance suite: one independently timed pass/fail line per
// criterion, exercising the CLI surface where a criterion names one.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fqcover/bounds.hpp"
#include "fqcover/cli.hpp"
#include "fqcover/distortion.hpp"
#include "fqcover/prime_tables.hpp"
#include "fqcover/search.hpp"
#include "test_util.hpp"

using namespace fqcover;
using namespace fqcover::test;
using nlohmann::json;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct SharedFamilyResults {
    long long soundness_violations = -1;
    long long conservation_violations = -1;
    long long envelope_violations = -1;
    std::size_t instances = 0;
    double seconds = 0;
};
SharedFamilyResults family_results;

json run_cli_json(const std::vector<std::string>& args, int& exit_code) {
    std::ostringstream out, err;
    exit_code = cli::run(args, out, err);
    return json::parse(out.str());
}

Rat json_rat(const json& j) {
    return Rat(BigInt(j["num"].get<std::string>()), BigInt(j["den"].get<std::string>()));
}

// 1. Exact irreducible counts match brute-force enumeration.
Outcome criterion_counts() {
    for (const Field& field : {f2(), f3(), f4(), f5()}) {
        for (int n = 1; n <= 8; ++n) {
            std::uint64_t lead = 1;
            for (int i = 0; i < n; ++i) lead *= field->q;
            BigInt enumerated = 0;
            for (std::uint64_t low = 0; low < lead; ++low) {
                if (is_irreducible(add(poly_from_index(field, low), poly_from_index(field, lead))))
                    ++enumerated;
            }
            BigInt formula = count_irreducibles_exact(field->q, static_cast<std::uint32_t>(n));
            if (formula != enumerated) {
                return {false, "mismatch at q=" + std::to_string(field->q) + " n=" + std::to_string(n)};
            }
        }
    }
    return {true, "q in {2,3,4,5}, n <= 8, exact agreement"};
}

// 2. Anchored genus-mode total lands in [79.0, 82.26], via the CLI.
Outcome criterion_gff_constant() {
    int code = 0;
    json j = run_cli_json({"bound", "--q", "70", "--genus", "0", "--s", "1", "--mode", "gff", "--json"},
                          code);
    if (code != 0) return {false, "CLI exit code " + std::to_string(code)};
    Rat total = json_rat(j["total"]);
    bool pass = total >= Rat(790, 10) && total <= Rat(8226, 100);
    return {pass, "total = " + decimal_string(total, 8) + " in [79.0, 82.26]"};
}

// 3. Genus scaling: totals stay under (82.26 + 18.88g) e^{0.95g}.
Outcome criterion_genus_scaling() {
    std::string detail;
    for (std::uint32_t genus : {1u, 2u, 3u}) {
        BoundParams params;
        params.q = 70;
        params.genus = genus;
        Rat total = weighted_sum_upper(params).total.value;
        Rat reference = (Rat(8226, 100) + Rat(1888, 100) * genus) *
                        exp_upper(Rat(19 * BigInt(genus), 20)).value;
        if (total > reference) {
            return {false, "g=" + std::to_string(genus) + ": " + decimal_string(total, 8) + " > " +
                               decimal_string(reference, 8)};
        }
        detail += (detail.empty() ? "" : ", ") + std::string("g=") + std::to_string(genus) + ": " +
                  decimal_string(total, 6) + " <= " + decimal_string(reference, 6);
    }
    return {true, detail};
}

// 4. Distinct-moduli pipeline through the CLI: constant, q_min, q_final.
Outcome criterion_distinct_moduli() {
    int code = 0;
    json j = run_cli_json({"certify-paper", "--json"}, code);
    if (code != 0) return {false, "certify-paper exit code " + std::to_string(code)};
    bool constant_ok = false, qmin_ok = false, qfinal_ok = false;
    for (const auto& row : j["rows"]) {
        if (row["name"] == "distinct-moduli series total") constant_ok = row["pass"] == true;
        if (row["name"] == "distinct-moduli q_min") qmin_ok = row["computed"] == "78";
        if (row["name"] == "distinct-moduli q_final") qfinal_ok = row["computed"] == "73";
    }
    bool pass = constant_ok && qmin_ok && qfinal_ok && j["overall_pass"] == true;
    return {pass, "constant <= 77.79, q_min = 78, q_final = 73, overall pass"};
}

// 5. The first-term optimizer hits both reference minima within 0.001.
Outcome criterion_optimizer() {
    OptimizeResult a = minimize_first_term_objective(UpperReal(Rat(261, 1000)), UpperReal(Rat(3117, 1000)));
    OptimizeResult b = minimize_first_term_objective(UpperReal(Rat(1)), UpperReal(Rat(3, 2)));
    bool pass_a = boost::multiprecision::abs(a.t_star - Rat(1732, 10000)) <= Rat(1, 1000);
    bool pass_b = boost::multiprecision::abs(b.t_star - Rat(1, 4)) <= Rat(1, 1000);
    return {pass_a && pass_b, "t1* = " + decimal_string(a.t_star, 6) + " (ref 0.1732), t2* = " +
                                  decimal_string(b.t_star, 6) + " (ref 0.25)"};
}

// 6-8 share one pass over the instance family.
void run_family_checks() {
    auto start = std::chrono::steady_clock::now();
    long long unsound = 0, nonconserved = 0, envelope_broken = 0;

    std::vector<CoveringInstance> family = exhaustive_family_f2();
    std::size_t exhaustive_count = family.size();
    for (const auto& instance : random_family(f2(), 500, 2026)) family.push_back(instance);
    for (const auto& instance : random_family(f3(), 500, 8088)) family.push_back(instance);

    const std::vector<DeltaSchedule> schedules = {
        DeltaSchedule::uniform(Rat(1, 2)),
        DeltaSchedule::by_degree({Rat(17, 100), Rat(1, 4)}),
    };

    for (const auto& instance : family) {
        CoverReport exhaustive = check_cover_exhaustive(instance);
        std::uint64_t s = static_cast<std::uint64_t>(exhaustive.multiplicity);
        for (const auto& schedule : schedules) {
            DistortionEngine engine(instance);
            std::vector<Rat> deltas = schedule.resolve(engine.chain());
            MeasureState state = engine.initial_measure();
            Rat weighted_sum(0);
            std::vector<std::uint64_t> norms;
            std::vector<Rat> prior_deltas;
            for (int j = 1; j <= engine.steps(); ++j) {
                CoveredSet covered = engine.covered_entering(j);
                AlphaProfile profile = engine.alpha(state, covered);
                Rat m2 = engine.moment(state, profile, 2);
                const Rat& delta = deltas[static_cast<std::size_t>(j - 1)];
                weighted_sum += m2 / (Rat(4) * delta * (Rat(1) - delta));

                std::uint64_t norm = 1;
                for (int i = 0; i < degree_nonzero(engine.chain().primes[static_cast<std::size_t>(j - 1)]); ++i)
                    norm *= instance.field->q;
                if (m2 > second_moment_envelope(norms, prior_deltas, s, norm).value) ++envelope_broken;
                norms.push_back(norm);
                prior_deltas.push_back(delta);

                state = engine.apply_step(state, covered, profile, delta);

                Rat sum(0);
                bool constant_on_fibers = true;
                const FqPoly& q_j = engine.chain().partials[static_cast<std::size_t>(j)];
                for (std::uint64_t i = 0; i < engine.residues(); ++i) {
                    sum += state.weights[i];
                    FqPoly r = poly_from_index(instance.field, i);
                    if (state.weights[i] != state.weights[poly_index(rem(r, q_j))])
                        constant_on_fibers = false;
                }
                if (sum != 1 || !constant_on_fibers) ++nonconserved;
            }
            if (weighted_sum < 1 && exhaustive.covers) ++unsound;
        }
    }

    family_results.soundness_violations = unsound;
    family_results.conservation_violations = nonconserved;
    family_results.envelope_violations = envelope_broken;
    family_results.instances = family.size();
    family_results.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    (void)exhaustive_count;
}

Outcome criterion_soundness() {
    if (family_results.soundness_violations < 0) run_family_checks();
    bool pass = family_results.soundness_violations == 0;
    return {pass, std::to_string(family_results.instances) + " instances x 2 schedules, " +
                      std::to_string(family_results.soundness_violations) + " counterexamples"};
}

Outcome criterion_conservation() {
    if (family_results.conservation_violations < 0) run_family_checks();
    bool pass = family_results.conservation_violations == 0;
    return {pass, std::to_string(family_results.conservation_violations) +
                      " mass/fiber violations (exact rational checks)"};
}

Outcome criterion_envelope() {
    if (family_results.envelope_violations < 0) run_family_checks();
    bool pass = family_results.envelope_violations == 0;
    return {pass,
            std::to_string(family_results.envelope_violations) + " second-moment envelope violations"};
}

// 9. The search oracle produces a verified positive instance.
Outcome criterion_search() {
    SearchConfig config;
    config.field = f2();
    config.max_degree = 2;
    SearchOutcome outcome = search_distinct_cover(config);
    if (!outcome.instance) return {false, "no instance found"};
    CoverReport report = check_cover_exhaustive(*outcome.instance);
    if (!report.covers || report.multiplicity != 1)
        return {false, "returned instance failed verification"};
    for (const DeltaSchedule& schedule :
         {DeltaSchedule::uniform(Rat(1, 2)), DeltaSchedule::by_degree({Rat(17, 100), Rat(1, 4)})}) {
        DistortionReport d = DistortionEngine(*outcome.instance).run(schedule);
        if (d.certified_noncover) return {false, "a true cover was certified non-covering"};
    }
    return {true, std::to_string(outcome.instance->congruences.size()) +
                      " congruences, verified cover, never falsely certified"};
}

// 10. Certified exponential against an independent oracle.
Outcome criterion_exp() {
    std::mt19937_64 rng(424242);
    const Rat budget = Rat(1) + Rat(1, BigInt(1) << 30);
    for (int trial = 0; trial < 50; ++trial) {
        Rat x(BigInt(rng() % 200001), BigInt(10000));  // [0, 20]
        Rat value = exp_upper(x).value;
        ExpBracket oracle = exp_bracket(x);
        if (value < oracle.lower) return {false, "undershot e^x at x = " + decimal_string(x, 6)};
        if (value > oracle.upper * budget)
            return {false, "relative error above 2^-30 at x = " + decimal_string(x, 6)};
    }
    return {true, "50 random points in [0, 20], oracle <= value <= oracle * (1 + 2^-30)"};
}

struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<Outcome()> check;
};

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "exact irreducible counts vs enumeration", 10.0, criterion_counts},
        {2, "genus-mode constant at the anchor", 5.0, criterion_gff_constant},
        {3, "genus scaling of the threshold", 15.0, criterion_genus_scaling},
        {4, "distinct-moduli pipeline (certify-paper)", 10.0, criterion_distinct_moduli},
        {5, "first-term optimizer minima", 2.0, criterion_optimizer},
        {6, "distortion soundness vs exhaustive checking", 300.0, criterion_soundness},
        {7, "mass conservation and fiber constancy", 300.0, criterion_conservation},
        {8, "per-step second-moment envelope", 300.0, criterion_envelope},
        {9, "search oracle produces verified covers", 1.0, criterion_search},
        {10, "certified exponential vs independent oracle", 5.0, criterion_exp},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = criterion.check();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        // Criteria 6-8 share one timed family pass.
        if (criterion.id >= 6 && criterion.id <= 8) seconds = family_results.seconds;
        bool in_time = seconds <= criterion.limit_seconds;
        bool pass = outcome.pass && in_time;
        if (!pass) ++failures;
        std::printf("%s  criterion %2d: %s (%s; %.2fs, limit %.0fs)\n", pass ? "PASS" : "FAIL",
                    criterion.id, criterion.name, outcome.detail.c_str(), seconds,
                    criterion.limit_seconds);
    }
    if (failures == 0) {
        std::printf("acceptance: all %zu criteria passed\n", criteria.size());
    } else {
        std::printf("acceptance: %d criteria FAILED\n", failures);
    }
    return failures == 0 ? 0 : 1;
}
