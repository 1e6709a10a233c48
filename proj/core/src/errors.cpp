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

#include "gbsec/errors.hpp"

#include <algorithm>
#include <cstdio>
#include <numbers>
#include <random>

namespace gbsec {

StateVector apply_error(StateVector state, const ErrorSpec& spec) {
  for (const auto& op : spec.ops) {
    switch (op.kind) {
      case ElementaryError::Kind::bit_flip:
        state.apply_x(op.qubit);
        break;
      case ElementaryError::Kind::phase_rot:
        state.apply_phase(op.qubit, op.delta);
        break;
    }
  }
  return state;
}

PredictedEffect predict_effect(const GbsLabel& label, const ErrorSpec& spec) {
  validate_label(label);
  const int n = label.n;

  // Two branches as (basis index, accumulated phase) pairs.
  std::uint64_t idx0 = label.x;
  std::uint64_t idx1 = complement_index(n, label.x);
  double ph0 = 0;
  double ph1 = label.sign == Sign::plus ? 0 : std::numbers::pi;

  for (const auto& op : spec.ops) {
    if (op.qubit < 1 || op.qubit > n) {
      throw std::invalid_argument("predict_effect: qubit id out of range");
    }
    const std::uint64_t mask = std::uint64_t{1} << (n - op.qubit);
    switch (op.kind) {
      case ElementaryError::Kind::bit_flip:
        idx0 ^= mask;
        idx1 ^= mask;
        break;
      case ElementaryError::Kind::phase_rot:
        if (idx0 & mask) ph0 += op.delta;
        if (idx1 & mask) ph1 += op.delta;
        break;
    }
  }

  if (idx0 > idx1) {
    std::swap(idx0, idx1);
    std::swap(ph0, ph1);
  }
  return PredictedEffect{idx0, wrap_phase(ph1 - ph0), wrap_phase(ph0)};
}

ErrorSpec random_error(int n, std::uint64_t rng_seed, const RandomErrorConfig& config) {
  std::mt19937_64 rng(rng_seed);
  auto uniform_int = [&](int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };

  const int max_flips = config.max_flips < 0 ? n : std::min(config.max_flips, n);
  const int num_flips = max_flips == 0 ? 0 : uniform_int(0, max_flips);

  std::vector<int> qubits(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) qubits[static_cast<std::size_t>(j)] = j + 1;
  std::shuffle(qubits.begin(), qubits.end(), rng);

  std::vector<ElementaryError> ops;
  for (int k = 0; k < num_flips; ++k) {
    ops.push_back(bit_flip(qubits[static_cast<std::size_t>(k)]));
  }

  const int num_rots = uniform_int(0, 2);
  for (int k = 0; k < num_rots; ++k) {
    double delta;
    if (config.phase_modes.empty()) {
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      delta = wrap_phase((2.0 * u - 1.0) * std::numbers::pi);
    } else {
      delta = config.phase_modes[rng() % config.phase_modes.size()];
    }
    if (delta == 0) continue;
    ops.push_back(phase_rot(uniform_int(1, n), delta));
  }

  std::shuffle(ops.begin(), ops.end(), rng);
  return ErrorSpec{std::move(ops)};
}

std::string to_string(const ErrorSpec& spec) {
  if (spec.ops.empty()) return "-";
  std::string out;
  for (const auto& op : spec.ops) {
    if (!out.empty()) out += ' ';
    if (op.kind == ElementaryError::Kind::bit_flip) {
      out += 'X' + std::to_string(op.qubit);
    } else {
      char buf[48];
      std::snprintf(buf, sizeof buf, "P%d(%.6g)", op.qubit, op.delta);
      out += buf;
    }
  }
  return out;
}

}  // namespace gbsec
