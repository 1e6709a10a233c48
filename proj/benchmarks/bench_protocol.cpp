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

#include "gbsec/correct.hpp"
#include "gbsec/discriminate.hpp"
#include "gbsec/errors.hpp"
#include "gbsec/gbs.hpp"

namespace {

using namespace gbsec;

void BM_SignatureOf(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const StateVector sv = build(GbsLabel{n, 1, Sign::minus});
  for (auto _ : state) {
    benchmark::DoNotOptimize(signature_of(sv));
  }
}
BENCHMARK(BM_SignatureOf)->Arg(4)->Arg(8)->Arg(10)->Arg(12);

void BM_Step1StripPhase(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  StateVector damaged = apply_error(build(GbsLabel{n, 0, Sign::plus}),
                                    ErrorSpec{{phase_rot(2, 0.7)}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(step1_strip_phase(damaged));
  }
}
BENCHMARK(BM_Step1StripPhase)->Arg(4)->Arg(8)->Arg(10)->Arg(12);

void BM_RunProtocolFull(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const GbsLabel label{n, 3 % (std::uint64_t{1} << (n - 1)), Sign::minus};
  const ErrorSpec spec{{bit_flip(2), phase_rot(1, 1.1), bit_flip(n)}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_protocol(label, spec, CorrectionMode::full, 7));
  }
}
BENCHMARK(BM_RunProtocolFull)->Arg(4)->Arg(8)->Arg(10)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
