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

#include "gbsec/discriminate.hpp"

#include <algorithm>

namespace gbsec {

std::vector<GateRecord> phase_circuit_gates(int n) {
  const int a = n + 1;
  std::vector<GateRecord> gates;
  gates.reserve(static_cast<std::size_t>(n) + 2);
  gates.push_back(make_h(a));
  for (int j = 1; j <= n; ++j) {
    gates.push_back(make_cnot(a, j));
  }
  gates.push_back(make_h(a));
  return gates;
}

std::vector<GateRecord> parity_circuit_gates(int n, int i) {
  if (i < 1 || i >= n) {
    throw std::invalid_argument("parity_circuit_gates: pair index out of range");
  }
  const int a = n + 1;
  return {make_cnot(i, a), make_cnot(i + 1, a)};
}

namespace {

AncillaReadout run_readout(StateVector state, const std::vector<GateRecord>& gates,
                           int ancilla_init, std::uint64_t rng_seed) {
  const int n = state.num_qubits();
  StateVector reg = attach_ancilla(state, ancilla_init);
  for (const auto& g : gates) reg.apply(g);
  const MeasureResult m = measure_qubit(reg, n + 1, rng_seed);
  DetachResult split = detach_qubit(reg, n + 1);
  return AncillaReadout{std::move(split.rest), m.bit, m.probability};
}

}  // namespace

AncillaReadout phase_circuit(StateVector state, int ancilla_init, std::uint64_t rng_seed) {
  const int n = state.num_qubits();
  return run_readout(std::move(state), phase_circuit_gates(n), ancilla_init, rng_seed);
}

AncillaReadout parity_circuit(StateVector state, int i, int ancilla_init,
                              std::uint64_t rng_seed) {
  const int n = state.num_qubits();
  return run_readout(std::move(state), parity_circuit_gates(n, i), ancilla_init, rng_seed);
}

SignatureReadout signature_of(StateVector state, std::uint64_t rng_seed) {
  if (!classify(state)) {
    throw NotGbsError("signature_of: input state is not in the GBS family");
  }
  const int n = state.num_qubits();

  Signature sig;
  sig.n = n;
  sig.parity.reserve(static_cast<std::size_t>(n) - 1);

  AncillaReadout phase = phase_circuit(std::move(state), 0, rng_seed);
  sig.phi = phase.bit;
  double min_prob = phase.probability;

  StateVector current = std::move(phase.state);
  for (int i = 1; i <= n - 1; ++i) {
    AncillaReadout par = parity_circuit(std::move(current), i, 0, rng_seed + static_cast<std::uint64_t>(i));
    sig.parity.push_back(par.bit);
    min_prob = std::min(min_prob, par.probability);
    current = std::move(par.state);
  }
  return SignatureReadout{std::move(current), std::move(sig), min_prob};
}

std::vector<GateRecord> part1_gates(int n) {
  std::vector<GateRecord> gates = phase_circuit_gates(n);
  for (int i = 1; i <= n - 1; ++i) {
    const auto pg = parity_circuit_gates(n, i);
    gates.insert(gates.end(), pg.begin(), pg.end());
  }
  return gates;
}

}  // namespace gbsec
