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
#include <string>
#include <vector>

#include "gbsec/gbs.hpp"
#include "gbsec/statevector.hpp"

namespace gbsec {

// One element of the restricted error channel: X on a qubit, or the phase
// rotation diag(1, e^{i delta}) on a qubit. delta = pi is a phase flip
// (Z up to global phase).
struct ElementaryError {
  enum class Kind { bit_flip, phase_rot };

  Kind kind = Kind::bit_flip;
  int qubit = 1;
  double delta = 0;  // phase_rot only

  bool operator==(const ElementaryError&) const = default;
};

inline ElementaryError bit_flip(int qubit) {
  return ElementaryError{ElementaryError::Kind::bit_flip, qubit, 0};
}
inline ElementaryError phase_rot(int qubit, double delta) {
  return ElementaryError{ElementaryError::Kind::phase_rot, qubit, delta};
}

// Ordered list of elementary errors, applied left to right. Empty = identity.
struct ErrorSpec {
  std::vector<ElementaryError> ops;

  bool operator==(const ErrorSpec&) const = default;
};

StateVector apply_error(StateVector state, const ErrorSpec& spec);

// What the restricted channel does to a GBS, computed without touching a
// statevector: the damaged state is e^{i global_phase} (|support> +
// e^{i theta} |support-bar>)/sqrt(2) with support canonical (< its complement).
struct PredictedEffect {
  std::uint64_t support = 0;
  double theta = 0;         // in (-pi, pi]
  double global_phase = 0;  // in (-pi, pi]
};

// Algebraic oracle: tracks the two amplitude branches as (index, phase) pairs
// through the op list. Independent of the simulator path by construction.
PredictedEffect predict_effect(const GbsLabel& label, const ErrorSpec& spec);

struct RandomErrorConfig {
  int max_flips = -1;               // -1 = up to n
  std::vector<double> phase_modes;  // empty = uniform (-pi, pi]
};

// Reproducible pseudo-random ErrorSpec: a flip subset drawn without
// replacement plus zero or more phase rotations, shuffled into one op list.
ErrorSpec random_error(int n, std::uint64_t rng_seed, const RandomErrorConfig& config = {});

// Compact rendering for reports, e.g. "X2 P1(0.785398)"; "-" for identity.
std::string to_string(const ErrorSpec& spec);

}  // namespace gbsec
