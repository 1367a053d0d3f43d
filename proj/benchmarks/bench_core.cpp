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

#include <benchmark/benchmark.h>

#include "fqcover/bounds.hpp"
#include "fqcover/covering.hpp"
#include "fqcover/distortion.hpp"
#include "fqcover/poly_text.hpp"
#include "fqcover/prime_tables.hpp"
#include "fqcover/search.hpp"
#include "fqcover/upper_real.hpp"

namespace {

using namespace fqcover;

void BM_PolyMul(benchmark::State& state) {
    Field f = field_make(5, 1);
    FqPoly a = parse_poly(f, "3*x^7+2*x^5+x^2+4");
    FqPoly b = parse_poly(f, "x^6+4*x^3+2*x+1");
    for (auto _ : state) benchmark::DoNotOptimize(mul(a, b));
}
BENCHMARK(BM_PolyMul);

void BM_IsIrreducibleDeg8(benchmark::State& state) {
    Field f = field_make(5, 1);
    FqPoly poly = parse_poly(f, "x^8+x^2+2");
    for (auto _ : state) benchmark::DoNotOptimize(is_irreducible(poly));
}
BENCHMARK(BM_IsIrreducibleDeg8);

void BM_FactorDeg8(benchmark::State& state) {
    Field f = field_make(2, 1);
    FqPoly poly = parse_poly(f, "x^8+x^6+x^2+1");
    for (auto _ : state) benchmark::DoNotOptimize(factor_monic(poly));
}
BENCHMARK(BM_FactorDeg8);

void BM_CountIrreducibles(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(count_irreducibles_exact(70, 16));
}
BENCHMARK(BM_CountIrreducibles);

void BM_CheckCover(benchmark::State& state) {
    Field f = field_make(2, 1);
    CoveringInstance instance = parse_instance(
        "q=2 k=1\n0 % x\n1 % x+1\nx %"
        " x^2+x+1\nx^3+1 % x^4+x\n");
    for (auto _ : state) benchmark::DoNotOptimize(check_cover_exhaustive(instance));
}
BENCHMARK(BM_CheckCover);

void BM_DistortionVerdict(benchmark::State& state) {
    Field f = field_make(3, 1);
    CoveringInstance instance = parse_instance(
        "q=3 k=1\n0 % x\n1 % x+1\n2 % x^2+1\nx % x^3+2*x+1\n");
    DeltaSchedule schedule = DeltaSchedule::by_degree({Rat(17, 100), Rat(1, 4)});
    for (auto _ : state) benchmark::DoNotOptimize(DistortionEngine(instance).run(schedule));
}
BENCHMARK(BM_DistortionVerdict);

void BM_ExpUpper(benchmark::State& state) {
    Rat x(37023, 10000);
    for (auto _ : state) benchmark::DoNotOptimize(exp_upper(x));
}
BENCHMARK(BM_ExpUpper);

void BM_WeightedSumUpper(benchmark::State& state) {
    BoundParams params;
    params.q = 70;
    for (auto _ : state) benchmark::DoNotOptimize(weighted_sum_upper(params));
}
BENCHMARK(BM_WeightedSumUpper);

void BM_SearchDistinctCover(benchmark::State& state) {
    SearchConfig config;
    config.field = field_make(2, 1);
    config.max_degree = 2;
    for (auto _ : state) benchmark::DoNotOptimize(search_distinct_cover(config));
}
BENCHMARK(BM_SearchDistinctCover);

}  // namespace

BENCHMARK_MAIN();
