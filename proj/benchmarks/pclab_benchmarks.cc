// Copyright 2026 The pclab Authors
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


#include <algorithm>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "pclab/constructions.h"
#include "pclab/degree_lab.h"
#include "pclab/formulas.h"
#include "pclab/polynomial.h"
#include "pclab/proofs.h"
#include "pclab/random.h"
#include "pclab/transforms.h"

namespace pclab {
namespace {

void BM_PolynomialMul(benchmark::State& state) {
  const PrimeField f;
  Rng rng(1);
  std::vector<Monomial> a, b;
  for (int k = 0; k < state.range(0); ++k) {
    std::vector<VarId> vars;
    for (int v = 1; v <= 12; ++v) {
      if (rng.Coin()) vars.push_back(VarId::Plain("v" + std::to_string(v)));
    }
    a.push_back({Term(vars), FieldElement(rng.Below(f.prime()))});
    std::reverse(vars.begin(), vars.end());
    b.push_back({Term(vars), FieldElement(rng.Below(f.prime()))});
  }
  const Polynomial p = Polynomial::FromMonomials(Basis::kFourier, f, a);
  const Polynomial q = Polynomial::FromMonomials(Basis::kFourier, f, b);
  for (auto _ : state) benchmark::DoNotOptimize(Mul(p, q));
}
BENCHMARK(BM_PolynomialMul)->Arg(8)->Arg(32)->Arg(128);

void BM_CheckPcrUpperBound(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PcProof proof = PcrUpperBound(n, 1);
  const AxiomSystem axioms = CnfToAxioms(GenerateBopLifted(n, 1), Basis::kBoolean);
  for (auto _ : state) benchmark::DoNotOptimize(CheckPcProof(proof, axioms));
  state.SetComplexityN(n);
}
BENCHMARK(BM_CheckPcrUpperBound)->DenseRange(4, 12, 4)->Complexity();

void BM_BuildLopRefutation(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(LopResolutionRefutation(n));
  state.SetComplexityN(n);
}
BENCHMARK(BM_BuildLopRefutation)->RangeMultiplier(2)->Range(4, 32)->Complexity();

void BM_CheckResolution(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ResolutionProof proof = LopResolutionRefutation(n);
  const Cnf cnf = GenerateLop(n);
  for (auto _ : state) benchmark::DoNotOptimize(CheckResolution(proof, cnf));
}
BENCHMARK(BM_CheckResolution)->Arg(10)->Arg(20);

void BM_Split(benchmark::State& state) {
  const AxiomSystem sys = CnfToAxioms(GenerateBopLifted(3, 2), Basis::kFourier);
  RandomDerivationOptions options;
  options.steps = static_cast<int>(state.range(0));
  options.extra_vars = {VarId::Plain("s")};
  const PcProof proof = RandomDerivation(sys, options, 3);
  for (auto _ : state) benchmark::DoNotOptimize(Split(proof, sys, VarId::Plain("s")));
}
BENCHMARK(BM_Split)->Arg(16)->Arg(64);

void BM_QdegToDeg(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PcProof proof = TseitinFourierRefutation(n);
  const AxiomSystem sys = GenerateCycleTseitin(n);
  for (auto _ : state) benchmark::DoNotOptimize(QdegToDeg(proof, sys));
}
BENCHMARK(BM_QdegToDeg)->Arg(10)->Arg(50);

void BM_ClusterRetention(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(ClusterRetentionFrequency(20, 10, 1000, 7));
  }
}
BENCHMARK(BM_ClusterRetention);

void BM_SpanBasis(benchmark::State& state) {
  const AxiomSystem bop = CnfToAxioms(GenerateBop(3), Basis::kBoolean, PrimeField(),
                                      BooleanEncoding::kTwinFree);
  const std::vector<Polynomial> part(bop.axioms.begin(),
                                     bop.axioms.begin() + state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(SpanBasis(part, bop.universe).zero_count());
  }
}
BENCHMARK(BM_SpanBasis)->Arg(4)->Arg(12);

void BM_ResidueOracleR(benchmark::State& state) {
  const ResidueOracle oracle(3, 1);
  const std::vector<Term> terms = EnumerateTerms(oracle.universe(), 2);
  for (const Term& t : terms) oracle.R(t);  // warm the cache
  for (auto _ : state) {
    for (const Term& t : terms) benchmark::DoNotOptimize(oracle.R(t));
  }
}
BENCHMARK(BM_ResidueOracleR);

}  // namespace
}  // namespace pclab

BENCHMARK_MAIN();
