/*
 * Copyright 2026 The vstlab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#include <benchmark/benchmark.h>

#include <vector>

#include "vstlab/irreducibility.hpp"
#include "vstlab/presentations.hpp"
#include "vstlab/reps.hpp"
#include "vstlab/search.hpp"

using namespace vstlab;

namespace {

void BM_LaurentMultiply(benchmark::State& state) {
  const auto k = static_cast<int>(state.range(0));
  LaurentPoly a, b;
  for (int e = -k; e <= k; ++e) {
    a = a + LaurentPoly::monomial(e % 7 - 3, e);
    b = b + LaurentPoly::monomial(2 * e + 1, e);
  }
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LaurentMultiply)->RangeMultiplier(2)->Range(4, 64)->Complexity();

void BM_CheckRelationsEta1Prime(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PolyRep rep = rep_eta1_prime(n, {LaurentPoly::parse("-t^3")});
  const Presentation vst = presentation_catalog("vst", n);
  for (auto _ : state) benchmark::DoNotOptimize(check_relations(rep, vst));
}
BENCHMARK(BM_CheckRelationsEta1Prime)->DenseRange(3, 7);

void BM_CheckRelationsEta2Prime(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Eta2PrimeParams p{LaurentPoly::parse("t"), LaurentPoly::parse("2 - t^2"), LaurentPoly::parse("t^-1 + 3"),
                          LaurentPoly::parse("-t^2")};
  const PolyRep rep = rep_eta2_prime(n, p, Mode::Monoid);
  const Presentation vstm = presentation_catalog("vstm", n);
  for (auto _ : state) benchmark::DoNotOptimize(check_relations(rep, vstm));
}
BENCHMARK(BM_CheckRelationsEta2Prime)->DenseRange(3, 7);

void BM_BurnsideDimension(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const std::vector<FieldMatrix> gens =
      specialize(rep_eta1_prime(n, {LaurentPoly::t()}), Gaussian(3)).generator_images();
  for (auto _ : state) benchmark::DoNotOptimize(burnside_dimension(gens));
}
BENCHMARK(BM_BurnsideDimension)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_SearchTauBraid(benchmark::State& state) {
  const Presentation vstm = presentation_catalog("vstm", 3);
  const Word u = vstm.word("t1 s2 s1"), w = vstm.word("s2 s1 t2");
  for (auto _ : state) benchmark::DoNotOptimize(search_equiv(u, w, vstm, SearchBounds{}));
}
BENCHMARK(BM_SearchTauBraid);

void BM_SearchReducedRelation(benchmark::State& state) {
  const Presentation vstm = presentation_catalog("vstm", 4);
  const Presentation reduced = presentation_catalog("reduced-vstm", 4);
  const Relation* r = vstm.instance("eq21[1]");
  const Word u = to_reduced(r->lhs), w = to_reduced(r->rhs);
  for (auto _ : state) benchmark::DoNotOptimize(search_equiv(u, w, reduced, SearchBounds{}));
}
BENCHMARK(BM_SearchReducedRelation)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
