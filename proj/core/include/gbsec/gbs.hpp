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
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gbsec/statevector.hpp"

namespace gbsec {

class NotGbsError : public std::runtime_error {
 public:
  explicit NotGbsError(const std::string& what) : std::runtime_error(what) {}
};

enum class Sign { plus, minus };

// Canonical label of the n-qubit state (|x> + sign * |xbar>)/sqrt(2), where
// xbar = x XOR (2^n - 1). Canonical means 0 <= x < 2^(n-1), i.e. the most
// significant bit of x is 0 and hence x < xbar.
struct GbsLabel {
  int n = 2;
  std::uint64_t x = 0;
  Sign sign = Sign::plus;

  bool operator==(const GbsLabel&) const = default;
};

enum class GbsKind { exact_plus, exact_minus, dephased };

// Result of recognizing a state of the form
//   e^{i gamma} (|y> + e^{i theta} |ybar>) / sqrt(2).
// label.x = min(y, ybar); theta in (-pi, pi]; label.sign mirrors kind for the
// exact kinds and is reported as plus for dephased states.
struct GbsClassification {
  GbsLabel label;
  double theta = 0;
  double global_phase = 0;
  GbsKind kind = GbsKind::exact_plus;
};

std::uint64_t complement_index(int n, std::uint64_t x);

void validate_label(const GbsLabel& label);

// (|x> + sign |xbar>)/sqrt(2); exactly two nonzero amplitudes of 1/sqrt(2).
StateVector build(const GbsLabel& label);

// Recognition oracle. Succeeds iff exactly two amplitudes exceed tol, they sit
// at complementary indices, and both have magnitude 1/sqrt(2) within tol.
std::optional<GbsClassification> classify(const StateVector& state, double tol = kClassifyTol);

// All 2^n canonical labels for n qubits: x ascending, + before - per x.
std::vector<GbsLabel> enumerate_labels(int n);

// True iff the two labels describe the same physical state (same n, same
// canonical x, same sign).
bool same_state(const GbsLabel& a, const GbsLabel& b);

// Textual form "n:x:+" / "n:x:-", e.g. "3:0:+" for the GHZ state.
std::string to_string(const GbsLabel& label);
std::optional<GbsLabel> parse_label(std::string_view text);

// "(|000> + |111>)/sqrt(2)" rendering for reports.
std::string ket_string(const GbsLabel& label);

}  // namespace gbsec
