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

#pragma once

#include <cstdint>
#include <vector>

#include "report.hpp"

namespace gbsec::cli {

// Exhaustive sweeps cap at this n; 2^n flip subsets per label beyond it are
// not worth enumerating.
inline constexpr int kMaxExhaustiveN = 12;

struct SweepConfig {
  int n_lo = 2;
  int n_hi = 4;
  bool exhaustive = true;
  int samples = 0;  // used when exhaustive is false
  std::vector<double> deltas;  // empty = default set
  CorrectionMode mode = CorrectionMode::full;
  ParityOrder order = ParityOrder::sequential;
  std::uint64_t seed = 0;
  double tolerance = 1e-10;
  int threads = 0;  // 0 = hardware concurrency
};

// Identity, one generic angle, a second generic angle, and the phase flip.
std::vector<double> default_delta_set();

void validate_config(const SweepConfig& config);

struct SweepCase {
  GbsLabel label;
  ErrorSpec error;
  std::uint64_t rng_seed;
};

// Deterministic case list: exhaustive mode walks labels x flip subsets x
// deltas (delta on the first flipped qubit, or qubit 1 when no flip); sampled
// mode draws `samples` random (label, error) pairs per n from the seed.
std::vector<SweepCase> sweep_cases(const SweepConfig& config);

struct SweepResult {
  std::vector<RunReport> reports;  // in sweep_cases order
  int total = 0;
  int passed = 0;
  int failed = 0;
  double worst_fidelity = 1;
};

// Runs every case across a worker pool; reports come back merged in case
// order no matter how the workers are scheduled. Per-case wall_ms is zeroed
// so repeated runs of the same sweep are byte-identical.
SweepResult run_sweep(const SweepConfig& config);

}  // namespace gbsec::cli
