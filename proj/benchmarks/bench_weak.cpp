// Copyright 2026 The weakgeom Authors
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

#include <vector>

#include <benchmark/benchmark.h>

#include "weakgeom/extremal.hpp"
#include "weakgeom/noise.hpp"
#include "weakgeom/qunit.hpp"
#include "weakgeom/sampling.hpp"
#include "weakgeom/weak.hpp"

namespace {

using namespace weakgeom;

struct Inputs {
  std::vector<PPSEnsemble> ensembles;
  std::vector<HermitianOp> ops;
};

const Inputs& inputs() {
  static const Inputs in = [] {
    Inputs x;
    Rng rng = make_rng(5);
    while (x.ensembles.size() < 256) {
      try {
        x.ensembles.push_back(PPSEnsemble::make(random_ket(rng), random_ket(rng)));
        x.ops.push_back(random_hermitian(rng));
      } catch (const Error&) {
      }
    }
    return x;
  }();
  return in;
}

void BM_MakeEnsemble(benchmark::State& state) {
  const Inputs& in = inputs();
  std::size_t i = 0;
  for (auto _ : state) {
    const PPSEnsemble& e = in.ensembles[i++ % in.ensembles.size()];
    benchmark::DoNotOptimize(PPSEnsemble::make(e.pre(), e.post()));
  }
}
BENCHMARK(BM_MakeEnsemble);

void BM_WeakValue(benchmark::State& state) {
  const Inputs& in = inputs();
  std::size_t i = 0;
  for (auto _ : state) {
    const std::size_t k = i++ % in.ensembles.size();
    benchmark::DoNotOptimize(weak_value(in.ensembles[k], in.ops[k]));
  }
}
BENCHMARK(BM_WeakValue);

void BM_DecomposeWeak(benchmark::State& state) {
  const Inputs& in = inputs();
  std::size_t i = 0;
  for (auto _ : state) {
    const std::size_t k = i++ % in.ensembles.size();
    benchmark::DoNotOptimize(decompose_weak(in.ensembles[k], in.ops[k]));
  }
}
BENCHMARK(BM_DecomposeWeak);

void BM_ExtremalReal(benchmark::State& state) {
  const Inputs& in = inputs();
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(extremal_real_projectors(in.ensembles[i++ % in.ensembles.size()]));
  }
}
BENCHMARK(BM_ExtremalReal);

void BM_InferP(benchmark::State& state) {
  const Inputs& in = inputs();
  std::size_t i = 0;
  for (auto _ : state) {
    const PPSEnsemble& e = in.ensembles[i++ % in.ensembles.size()];
    const HermitianOp gamma = projector(e.gamma());
    const Complex observed = expected_noisy_weak(NoiseChannel::make(NoiseKind::Depolarizing, 0.1), e.pre(), e.post(), gamma);
    benchmark::DoNotOptimize(infer_p(NoiseKind::Depolarizing, e.pre(), e.post(), gamma, observed, WeakComponent::Imag));
  }
}
BENCHMARK(BM_InferP);

void BM_ConjectureScan(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng = make_rng(6);
  const QunitFrame f = build_frame(random_ket(rng, n), random_ket(rng, n), n);
  for (auto _ : state) benchmark::DoNotOptimize(conjecture_scan(f, 1000, 42));
  state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_ConjectureScan)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
