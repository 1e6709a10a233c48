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

#include "gbsec/correct.hpp"

namespace gbsec {

std::vector<GateRecord> step1_gates(int n) {
  const int a = n + 1;
  std::vector<GateRecord> gates;
  gates.reserve(static_cast<std::size_t>(n) + 2);
  gates.push_back(make_h(a));
  for (int j = 1; j <= n; ++j) {
    gates.push_back(make_cnot(a, j));
  }
  gates.push_back(make_cnot(n, a));
  return gates;
}

std::vector<GateRecord> step2_gates(int n) {
  std::vector<GateRecord> gates = phase_circuit_gates(n);
  gates.push_back(make_cz(n + 1, n));
  return gates;
}

std::vector<GateRecord> step3_gates(int n, int i) {
  if (i < 1 || i >= n) {
    throw std::invalid_argument("step3_gates: pair index out of range");
  }
  const int a = n + 1;
  return {make_cnot(i, a), make_cnot(i + 1, a), make_cnot(a, i + 1)};
}

Step1Result step1_strip_phase(const StateVector& state) {
  const int n = state.num_qubits();
  StateVector reg = attach_ancilla(state, 0);
  for (const auto& g : step1_gates(n)) reg.apply(g);
  DetachResult split = detach_qubit(reg, n + 1);
  return Step1Result{std::move(split.rest), split.qubit, split.purity};
}

std::pair<StateVector, int> step2_fix_phase(StateVector state, int stored_phi,
                                            std::uint64_t rng_seed) {
  const int n = state.num_qubits();
  StateVector reg = attach_ancilla(state, stored_phi);
  for (const auto& g : step2_gates(n)) reg.apply(g);
  const MeasureResult m = measure_qubit(reg, n + 1, rng_seed);
  DetachResult split = detach_qubit(reg, n + 1);
  return {std::move(split.rest), m.bit};
}

std::pair<StateVector, std::vector<int>> step3_fix_bits(StateVector state,
                                                        const std::vector<int>& stored_p,
                                                        std::uint64_t rng_seed) {
  const int n = state.num_qubits();
  if (stored_p.size() != static_cast<std::size_t>(n) - 1) {
    throw std::invalid_argument("step3_fix_bits: parity record length must be n - 1");
  }
  std::vector<int> p_f;
  p_f.reserve(stored_p.size());
  for (int i = 1; i <= n - 1; ++i) {
    StateVector reg = attach_ancilla(state, stored_p[static_cast<std::size_t>(i) - 1]);
    for (const auto& g : step3_gates(n, i)) reg.apply(g);
    const MeasureResult m = measure_qubit(reg, n + 1, rng_seed + static_cast<std::uint64_t>(i));
    p_f.push_back(m.bit);
    state = detach_qubit(reg, n + 1).rest;
  }
  return {std::move(state), std::move(p_f)};
}

std::pair<StateVector, std::vector<int>> step3_fix_bits_batch(StateVector state,
                                                              const std::vector<int>& stored_p,
                                                              std::uint64_t rng_seed) {
  const int n = state.num_qubits();
  if (stored_p.size() != static_cast<std::size_t>(n) - 1) {
    throw std::invalid_argument("step3_fix_bits_batch: parity record length must be n - 1");
  }

  // All reads first, against the uncorrected register.
  std::vector<int> p_f;
  p_f.reserve(stored_p.size());
  for (int i = 1; i <= n - 1; ++i) {
    StateVector reg = attach_ancilla(state, stored_p[static_cast<std::size_t>(i) - 1]);
    reg.apply_cnot(i, n + 1);
    reg.apply_cnot(i + 1, n + 1);
    const MeasureResult m = measure_qubit(reg, n + 1, rng_seed + static_cast<std::uint64_t>(i));
    p_f.push_back(m.bit);
    state = detach_qubit(reg, n + 1).rest;
  }

  // Then all flips, driven by the already-classical ancilla bits.
  for (int i = 1; i <= n - 1; ++i) {
    StateVector reg = attach_ancilla(state, p_f[static_cast<std::size_t>(i) - 1]);
    reg.apply_cnot(n + 1, i + 1);
    state = detach_qubit(reg, n + 1).rest;
  }
  return {std::move(state), std::move(p_f)};
}

std::pair<StateVector, CorrectionReport> correct_full(StateVector state,
                                                      const StoredReference& ref,
                                                      CorrectionMode mode, ParityOrder order,
                                                      std::uint64_t rng_seed) {
  const int n = state.num_qubits();
  if (ref.signature.n != n) {
    throw NotGbsError("correct_full: stored reference is for " +
                      std::to_string(ref.signature.n) + " qubits, state has " +
                      std::to_string(n));
  }

  if (mode == CorrectionMode::full) {
    Step1Result s1 = step1_strip_phase(state);
    state = std::move(s1.system);
  }

  auto [after_phase, phi_f] = step2_fix_phase(std::move(state), ref.signature.phi, rng_seed);

  auto [corrected, p_f] =
      order == ParityOrder::sequential
          ? step3_fix_bits(std::move(after_phase), ref.signature.parity, rng_seed + 101)
          : step3_fix_bits_batch(std::move(after_phase), ref.signature.parity, rng_seed + 101);

  CorrectionReport report;
  report.phi_f = phi_f;
  report.p_f = std::move(p_f);
  report.restored_sign = ref.signature.phi ? Sign::minus : Sign::plus;
  report.relative_flip_pattern = flip_pattern_from_parity(n, report.p_f);
  return {std::move(corrected), std::move(report)};
}

std::vector<GateRecord> part2_gates(int n, CorrectionMode mode) {
  std::vector<GateRecord> gates;
  if (mode == CorrectionMode::full) {
    const auto s1 = step1_gates(n);
    gates.insert(gates.end(), s1.begin(), s1.end());
  }
  const auto s2 = step2_gates(n);
  gates.insert(gates.end(), s2.begin(), s2.end());
  for (int i = 1; i <= n - 1; ++i) {
    const auto s3 = step3_gates(n, i);
    gates.insert(gates.end(), s3.begin(), s3.end());
  }
  return gates;
}

ProtocolOutcome run_protocol(const GbsLabel& label, const ErrorSpec& spec, CorrectionMode mode,
                             std::uint64_t rng_seed, ParityOrder order) {
  const StateVector reference = build(label);

  ProtocolOutcome outcome;
  outcome.stages.push_back({"prepared", classify(reference)});

  SignatureReadout part1 = signature_of(reference, rng_seed);
  outcome.signature = part1.signature;

  StateVector damaged = apply_error(std::move(part1.state), spec);
  outcome.stages.push_back({"damaged", classify(damaged)});

  auto [restored, report] = correct_full(std::move(damaged), StoredReference{part1.signature},
                                         mode, order, rng_seed + 1000);
  outcome.report = std::move(report);
  outcome.stages.push_back({"corrected", classify(restored)});
  outcome.fidelity = fidelity(reference, restored);
  return outcome;
}

std::uint64_t flip_pattern_from_parity(int n, const std::vector<int>& p_f) {
  if (p_f.size() != static_cast<std::size_t>(n) - 1) {
    throw std::invalid_argument("flip_pattern_from_parity: need n - 1 bits");
  }
  std::uint64_t pattern = 0;
  for (int i = 1; i <= n - 1; ++i) {
    if (p_f[static_cast<std::size_t>(i) - 1]) {
      pattern |= std::uint64_t{1} << (n - (i + 1));
    }
  }
  return pattern;
}

std::string flip_pattern_to_string(int n, std::uint64_t pattern) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int j = 1; j <= n; ++j) {
    if (pattern & (std::uint64_t{1} << (n - j))) s[static_cast<std::size_t>(j) - 1] = '1';
  }
  return s;
}

}  // namespace gbsec
