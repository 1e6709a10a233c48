// Copyright 2026 The gbsec Authors.
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

#include "gbsec/gbs.hpp"
#include "gbsec/statevector.hpp"

namespace {

using namespace gbsec;

void BM_ApplyH(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  StateVector sv = basis_state(n, 0);
  for (auto _ : state) {
    sv.apply_h(1);
    benchmark::DoNotOptimize(sv);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(sv.dim()));
}
BENCHMARK(BM_ApplyH)->Arg(8)->Arg(12)->Arg(16)->Arg(20);

void BM_ApplyCnot(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  StateVector sv = build(GbsLabel{n, 0, Sign::plus});
  for (auto _ : state) {
    sv.apply_cnot(1, n);
    benchmark::DoNotOptimize(sv);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(sv.dim()));
}
BENCHMARK(BM_ApplyCnot)->Arg(8)->Arg(12)->Arg(16)->Arg(20);

void BM_Fidelity(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const StateVector a = build(GbsLabel{n, 0, Sign::plus});
  const StateVector b = build(GbsLabel{n, 1, Sign::minus});
  for (auto _ : state) {
    benchmark::DoNotOptimize(fidelity(a, b));
  }
}
BENCHMARK(BM_Fidelity)->Arg(8)->Arg(12)->Arg(16)->Arg(20);

void BM_AttachDetach(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const StateVector sv = build(GbsLabel{n, 0, Sign::plus});
  for (auto _ : state) {
    StateVector reg = attach_ancilla(sv, 1);
    benchmark::DoNotOptimize(detach_qubit(reg, n + 1));
  }
}
BENCHMARK(BM_AttachDetach)->Arg(8)->Arg(12)->Arg(16);

}  // namespace
