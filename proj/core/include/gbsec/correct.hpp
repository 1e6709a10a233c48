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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gbsec/discriminate.hpp"
#include "gbsec/errors.hpp"
#include "gbsec/gbs.hpp"
#include "gbsec/statevector.hpp"

namespace gbsec {

// Classical bits remembered from part 1; the correction pipeline consumes
// these to re-prepare its ancillas.
struct StoredReference {
  Signature signature;
};

enum class CorrectionMode { full, discrete };

// Parity-stage scheduling. `sequential` interleaves each parity read with its
// conditional flip (the mandated order); `batch` performs all reads first and
// is provided only to demonstrate that the interleaving matters.
enum class ParityOrder { sequential, batch };

struct Step1Result {
  StateVector system;                  // exact_plus GBS on success
  std::array<complex_t, 2> ancilla_m;  // detached carrier of the stripped phase
  double ancilla_purity;
};

// Syndrome read out by part 2. relative_flip_pattern is a bitmask over qubits
// 1..n (qubit j <-> bit n-j) with bit 1 normalized to 0: the flip pattern is
// only defined up to global complement, mirroring x <-> xbar.
struct CorrectionReport {
  int phi_f = 0;
  std::vector<int> p_f;
  Sign restored_sign = Sign::plus;
  std::uint64_t relative_flip_pattern = 0;

  bool operator==(const CorrectionReport&) const = default;
};

// Step 1: phase sponge. Attach |0>; H(a); CNOT(a -> j) for j = 1..n;
// CNOT(n -> a); detach. The arbitrary relative phase moves onto the ancilla,
// leaving the system an exact + GBS on the same support pair.
std::vector<GateRecord> step1_gates(int n);
Step1Result step1_strip_phase(const StateVector& state);

// Step 2: sign restore. Attach |stored_phi>; H(a); CNOT(a -> j) for j = 1..n;
// H(a); CZ(a -> n); measure a -> phi_f; detach. The controlled Z fires exactly
// when the current phase bit disagrees with the stored one.
std::vector<GateRecord> step2_gates(int n);
std::pair<StateVector, int> step2_fix_phase(StateVector state, int stored_phi,
                                            std::uint64_t rng_seed = 0);

// Step 3, stage i: attach |stored_p_i>; CNOT(i -> a); CNOT(i+1 -> a);
// CNOT(a -> i+1); measure a -> p_f[i]; detach. Stages run strictly in order
// i = 1..n-1 so each read sees the partially corrected register; the induction
// drives every qubit to qubit 1's flip status.
std::vector<GateRecord> step3_gates(int n, int i);
std::pair<StateVector, std::vector<int>> step3_fix_bits(StateVector state,
                                                        const std::vector<int>& stored_p,
                                                        std::uint64_t rng_seed = 0);

// Deliberately wrong scheduling: every parity is read against the uncorrected
// register before any flip is applied. Restores only when the per-qubit flip
// bits f_1..f_{n-1} all agree; kept as the counterexample for the sequencing
// requirement.
std::pair<StateVector, std::vector<int>> step3_fix_bits_batch(StateVector state,
                                                              const std::vector<int>& stored_p,
                                                              std::uint64_t rng_seed = 0);

// Whole part-2 pipeline. full mode runs steps 1-3; discrete mode (errors
// restricted to bit/phase flips, state already exact) skips step 1.
std::pair<StateVector, CorrectionReport> correct_full(StateVector state,
                                                      const StoredReference& ref,
                                                      CorrectionMode mode,
                                                      ParityOrder order = ParityOrder::sequential,
                                                      std::uint64_t rng_seed = 0);

// Static gate list of part 2 (sequential order), for trace export. Fresh
// ancilla preparation between sub-circuits is implicit; the list contains only
// H / CNOT / CZ entries, never classical control.
std::vector<GateRecord> part2_gates(int n, CorrectionMode mode);

struct StageClassification {
  std::string stage;
  std::optional<GbsClassification> classification;
};

struct ProtocolOutcome {
  double fidelity = 0;        // against build(label)
  Signature signature;        // part-1 readout
  CorrectionReport report;
  std::vector<StageClassification> stages;
};

// End-to-end harness: build the labeled GBS, read and store its signature,
// inject the error, run part 2, compare with the original.
ProtocolOutcome run_protocol(const GbsLabel& label, const ErrorSpec& spec, CorrectionMode mode,
                             std::uint64_t rng_seed, ParityOrder order = ParityOrder::sequential);

// Relative flip pattern reconstruction: bit_{i+1} = p_f[i], bit 1 forced 0.
std::uint64_t flip_pattern_from_parity(int n, const std::vector<int>& p_f);

// "0110"-style rendering, qubit 1 leftmost.
std::string flip_pattern_to_string(int n, std::uint64_t pattern);

}  // namespace gbsec
