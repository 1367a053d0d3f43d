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

#include "fqcover/distortion.hpp"
#include "fqcover/search.hpp"
#include "test_util.hpp"

using namespace fqcover;
using namespace fqcover::test;

TEST_CASE("dfs finds a distinct-moduli cover over F_2 with degree cap 2") {
    SearchConfig config;
    config.field = f2();
    config.max_degree = 2;
    SearchOutcome outcome = search_distinct_cover(config);
    REQUIRE(outcome.instance.has_value());
    CoverReport report = check_cover_exhaustive(*outcome.instance);
    CHECK(report.covers);
    CHECK(report.multiplicity == 1);

    // A verified cover can never be certified non-covering.
    for (const DeltaSchedule& schedule :
         {DeltaSchedule::uniform(Rat(1, 2)), DeltaSchedule::by_degree({Rat(17, 100), Rat(1, 4)})}) {
        DistortionReport d = DistortionEngine(*outcome.instance).run(schedule);
        CHECK_FALSE(d.certified_noncover);
        CHECK(d.weighted_sum >= 1);
    }
}

TEST_CASE("greedy also succeeds on the same configuration") {
    SearchConfig config;
    config.field = f2();
    config.max_degree = 2;
    config.strategy = SearchStrategy::GreedyDensity;
    SearchOutcome outcome = search_distinct_cover(config);
    REQUIRE(outcome.instance.has_value());
    CHECK(check_cover_exhaustive(*outcome.instance).covers);
    CHECK(multiplicity(*outcome.instance) == 1);
}

TEST_CASE("degree cap 1 admits no distinct-moduli cover over F_2") {
    SearchConfig config;
    config.field = f2();
    config.max_degree = 1;
    SearchOutcome outcome = search_distinct_cover(config);
    CHECK_FALSE(outcome.instance.has_value());
    CHECK_FALSE(outcome.budget_exhausted);  // the space was fully explored
}

TEST_CASE("tiny node budgets report exhaustion, not failure") {
    SearchConfig config;
    config.field = f2();
    config.max_degree = 2;
    config.node_budget = 2;
    SearchOutcome outcome = search_distinct_cover(config);
    CHECK_FALSE(outcome.instance.has_value());
    CHECK(outcome.budget_exhausted);
}

TEST_CASE("search is deterministic") {
    SearchConfig config;
    config.field = f2();
    config.max_degree = 2;
    SearchOutcome a = search_distinct_cover(config);
    SearchOutcome b = search_distinct_cover(config);
    REQUIRE(a.instance.has_value());
    REQUIRE(b.instance.has_value());
    CHECK(instances_equal(*a.instance, *b.instance));
    CHECK(a.nodes_visited == b.nodes_visited);
}

TEST_CASE("found instances survive a file round trip") {
    SearchConfig config;
    config.field = f2();
    config.max_degree = 2;
    SearchOutcome outcome = search_distinct_cover(config);
    REQUIRE(outcome.instance.has_value());
    CHECK(instances_equal(parse_instance(format_instance(*outcome.instance)), *outcome.instance));
}
