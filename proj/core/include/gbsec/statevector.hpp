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
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gbsec {

using complex_t = std::complex<double>;

// Default numeric tolerances. Unitarity / product-form checks use the tight
// bound; state classification uses the looser one because gate roundoff
// accumulates over a pipeline.
inline constexpr double kUnitaryTol = 1e-12;
inline constexpr double kClassifyTol = 1e-9;

// Thrown by detach_qubit when the requested qubit is entangled with the rest
// of the register beyond tolerance. In the correction pipeline this signals a
// protocol violation, not a numerical hiccup.
class EntangledDetachError : public std::runtime_error {
 public:
  explicit EntangledDetachError(const std::string& what) : std::runtime_error(what) {}
};

enum class GateKind { H, X, Z, Phase, CNOT, CZ };

// One gate application. `target` and `control` are 1-based qubit ids; qubit 1
// is the most significant bit of the basis index, so an n-qubit basis state
// |b_1 b_2 ... b_n> has index b_1*2^(n-1) + ... + b_n.
struct GateRecord {
  GateKind kind = GateKind::H;
  int target = 0;
  int control = 0;   // CNOT/CZ only
  double angle = 0;  // Phase only, radians

  bool operator==(const GateRecord&) const = default;
};

inline GateRecord make_h(int q) { return {GateKind::H, q, 0, 0}; }
inline GateRecord make_x(int q) { return {GateKind::X, q, 0, 0}; }
inline GateRecord make_z(int q) { return {GateKind::Z, q, 0, 0}; }
inline GateRecord make_phase(int q, double angle) { return {GateKind::Phase, q, 0, angle}; }
inline GateRecord make_cnot(int control, int target) { return {GateKind::CNOT, target, control, 0}; }
inline GateRecord make_cz(int control, int target) { return {GateKind::CZ, target, control, 0}; }

/**
 * @brief Dense complex amplitude register over qubits 1..n (qubit 1 = MSB).
 *
 * Gates mutate in place and preserve the L2 norm. The register is a plain
 * value type; copies are independent and may move freely between threads.
 */
class StateVector {
 public:
  explicit StateVector(int num_qubits);

  static StateVector from_amplitudes(std::vector<complex_t> amps);

  int num_qubits() const { return num_qubits_; }
  std::uint64_t dim() const { return std::uint64_t{1} << num_qubits_; }
  const std::vector<complex_t>& amplitudes() const { return amps_; }
  complex_t amplitude(std::uint64_t index) const { return amps_.at(index); }

  // Bit position of 1-based qubit q inside a basis index.
  int bit_position(int q) const { return num_qubits_ - q; }

  void apply(const GateRecord& gate);
  void apply_h(int q);
  void apply_x(int q);
  void apply_z(int q);
  void apply_phase(int q, double angle);
  void apply_cnot(int control, int target);
  void apply_cz(int control, int target);

  double norm() const;
  void normalize();

 private:
  friend StateVector attach_ancilla(const StateVector&, int);

  void check_qubit(int q) const;
  std::uint64_t mask_of(int q) const { return std::uint64_t{1} << bit_position(q); }

  int num_qubits_;
  std::vector<complex_t> amps_;
};

// |label> with the basis-index convention above.
StateVector basis_state(int num_qubits, std::uint64_t label);

// Appends a fresh qubit (new highest index, least significant bit) in |bit>.
StateVector attach_ancilla(const StateVector& state, int bit);

struct DetachResult {
  StateVector rest;                   // remaining n-1 qubits, renormalized
  std::array<complex_t, 2> qubit;     // detached qubit, normalized, phase up to convention
  double purity;                      // purity of the qubit's reduced density matrix
};

// Splits off qubit q when the state factorizes as rest (x) qubit. The check is
// purity of the 2x2 reduced density matrix >= 1 - tol; failure throws
// EntangledDetachError.
DetachResult detach_qubit(const StateVector& state, int q, double tol = kUnitaryTol);

// Purity of the reduced density matrix of qubit q (1/2 = maximally mixed,
// 1 = product state).
double reduced_purity(const StateVector& state, int q);

struct MeasureResult {
  int bit;
  double probability;  // Born probability of the reported outcome
};

// Projective measurement of qubit q in the computational basis. The state is
// collapsed and renormalized. When one outcome has probability 1 within 1e-12
// the result is deterministic regardless of seed.
MeasureResult measure_qubit(StateVector& state, int q, std::uint64_t rng_seed);

// |<a|b>|, i.e. overlap magnitude, insensitive to global phase.
double fidelity(const StateVector& a, const StateVector& b);

// Wraps an angle to (-pi, pi], with ties at -pi mapped to +pi.
double wrap_phase(double angle);

}  // namespace gbsec
