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

#include "gbsec/gbs.hpp"
#include "gbsec/statevector.hpp"

namespace gbsec {

// Classical record of a non-destructive discrimination: the phase bit and the
// n-1 adjacent-pair parity bits. Together they identify one GBS out of 2^n.
struct Signature {
  int n = 2;
  int phi = 0;
  std::vector<int> parity;  // parity[i-1] = p_i for i in [1, n-1]

  bool operator==(const Signature&) const = default;
};

// Result of one ancilla-assisted readout. `state` is the system register
// after the ancilla has been measured and detached.
struct AncillaReadout {
  StateVector state;
  int bit;
  double probability;
};

// Phase readout circuit on an n-qubit register with ancilla id n+1:
// H(a); CNOT(a -> j) for j = 1..n; H(a); measure a.
// For an exact GBS the measured bit is ancilla_init XOR sign_bit and the
// system is unchanged. On dephased input the outcome is probabilistic.
std::vector<GateRecord> phase_circuit_gates(int n);
AncillaReadout phase_circuit(StateVector state, int ancilla_init, std::uint64_t rng_seed = 0);

// Pairwise parity readout for qubits (i, i+1), ancilla id n+1:
// CNOT(i -> a); CNOT(i+1 -> a); measure a.
// The measured bit is ancilla_init XOR y_i XOR y_{i+1} for support index y;
// deterministic because complementary branches share every pairwise XOR.
std::vector<GateRecord> parity_circuit_gates(int n, int i);
AncillaReadout parity_circuit(StateVector state, int i, int ancilla_init,
                              std::uint64_t rng_seed = 0);

struct SignatureReadout {
  StateVector state;
  Signature signature;
  double min_outcome_probability;  // worst-case over all ancilla measurements
};

// Full part-1 discrimination: one phase readout plus n-1 parity readouts, all
// with ancilla_init = 0. Throws NotGbsError when the input does not classify.
SignatureReadout signature_of(StateVector state, std::uint64_t rng_seed = 0);

// Gate list of the whole part-1 sequence (phase circuit, then parity circuits
// i = 1..n-1), for trace export. Measurements are implicit.
std::vector<GateRecord> part1_gates(int n);

}  // namespace gbsec
