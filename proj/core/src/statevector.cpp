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

#include "gbsec/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace gbsec {

namespace {
constexpr double kInvSqrt2 = 0.7071067811865475244008443621048490;
}

StateVector::StateVector(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 1 || num_qubits > 30) {
    throw std::invalid_argument("StateVector: num_qubits must be in [1, 30]");
  }
  amps_.assign(std::uint64_t{1} << num_qubits, complex_t{0, 0});
  amps_[0] = complex_t{1, 0};
}

StateVector StateVector::from_amplitudes(std::vector<complex_t> amps) {
  if (amps.empty() || (amps.size() & (amps.size() - 1)) != 0) {
    throw std::invalid_argument("from_amplitudes: length must be a power of two");
  }
  int n = 0;
  while ((std::size_t{1} << n) < amps.size()) ++n;
  if (n < 1) {
    throw std::invalid_argument("from_amplitudes: need at least one qubit");
  }
  StateVector sv(n);
  sv.amps_ = std::move(amps);
  sv.normalize();
  return sv;
}

void StateVector::check_qubit(int q) const {
  if (q < 1 || q > num_qubits_) {
    throw std::invalid_argument("qubit id " + std::to_string(q) + " out of range [1, " +
                                std::to_string(num_qubits_) + "]");
  }
}

void StateVector::apply(const GateRecord& gate) {
  switch (gate.kind) {
    case GateKind::H: apply_h(gate.target); break;
    case GateKind::X: apply_x(gate.target); break;
    case GateKind::Z: apply_z(gate.target); break;
    case GateKind::Phase: apply_phase(gate.target, gate.angle); break;
    case GateKind::CNOT: apply_cnot(gate.control, gate.target); break;
    case GateKind::CZ: apply_cz(gate.control, gate.target); break;
  }
}

void StateVector::apply_h(int q) {
  check_qubit(q);
  const std::uint64_t mask = mask_of(q);
  const std::uint64_t d = dim();
  for (std::uint64_t i = 0; i < d; ++i) {
    if (i & mask) continue;
    const complex_t a0 = amps_[i];
    const complex_t a1 = amps_[i | mask];
    amps_[i] = (a0 + a1) * kInvSqrt2;
    amps_[i | mask] = (a0 - a1) * kInvSqrt2;
  }
}

void StateVector::apply_x(int q) {
  check_qubit(q);
  const std::uint64_t mask = mask_of(q);
  const std::uint64_t d = dim();
  for (std::uint64_t i = 0; i < d; ++i) {
    if (i & mask) continue;
    std::swap(amps_[i], amps_[i | mask]);
  }
}

void StateVector::apply_z(int q) {
  check_qubit(q);
  const std::uint64_t mask = mask_of(q);
  const std::uint64_t d = dim();
  for (std::uint64_t i = 0; i < d; ++i) {
    if (i & mask) amps_[i] = -amps_[i];
  }
}

void StateVector::apply_phase(int q, double angle) {
  check_qubit(q);
  const complex_t w = std::polar(1.0, angle);
  const std::uint64_t mask = mask_of(q);
  const std::uint64_t d = dim();
  for (std::uint64_t i = 0; i < d; ++i) {
    if (i & mask) amps_[i] *= w;
  }
}

void StateVector::apply_cnot(int control, int target) {
  check_qubit(control);
  check_qubit(target);
  if (control == target) {
    throw std::invalid_argument("CNOT: control equals target");
  }
  const std::uint64_t cmask = mask_of(control);
  const std::uint64_t tmask = mask_of(target);
  const std::uint64_t d = dim();
  for (std::uint64_t i = 0; i < d; ++i) {
    if ((i & cmask) && !(i & tmask)) {
      std::swap(amps_[i], amps_[i | tmask]);
    }
  }
}

void StateVector::apply_cz(int control, int target) {
  check_qubit(control);
  check_qubit(target);
  if (control == target) {
    throw std::invalid_argument("CZ: control equals target");
  }
  const std::uint64_t cmask = mask_of(control);
  const std::uint64_t tmask = mask_of(target);
  const std::uint64_t d = dim();
  for (std::uint64_t i = 0; i < d; ++i) {
    if ((i & cmask) && (i & tmask)) amps_[i] = -amps_[i];
  }
}

double StateVector::norm() const {
  double s = 0;
  for (const auto& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

void StateVector::normalize() {
  const double n = norm();
  if (n <= 0) {
    throw std::invalid_argument("normalize: zero vector");
  }
  for (auto& a : amps_) a /= n;
}

StateVector basis_state(int num_qubits, std::uint64_t label) {
  StateVector sv(num_qubits);
  if (label >= sv.dim()) {
    throw std::invalid_argument("basis_state: label out of range");
  }
  std::vector<complex_t> amps(sv.dim(), complex_t{0, 0});
  amps[label] = complex_t{1, 0};
  return StateVector::from_amplitudes(std::move(amps));
}

StateVector attach_ancilla(const StateVector& state, int bit) {
  if (bit != 0 && bit != 1) {
    throw std::invalid_argument("attach_ancilla: bit must be 0 or 1");
  }
  StateVector out(state.num_qubits() + 1);
  const std::uint64_t d = state.dim();
  std::vector<complex_t> amps(d * 2, complex_t{0, 0});
  for (std::uint64_t i = 0; i < d; ++i) {
    amps[(i << 1) | static_cast<std::uint64_t>(bit)] = state.amplitudes()[i];
  }
  out.amps_ = std::move(amps);
  return out;
}

namespace {

// 2x2 reduced density matrix entries of qubit q: rho00, rho11 real,
// rho01 = <row with q=0 | row with q=1> summed over the other qubits.
struct Reduced {
  double rho00 = 0;
  double rho11 = 0;
  complex_t rho01{0, 0};
};

Reduced reduce(const StateVector& state, int q) {
  const std::uint64_t mask = std::uint64_t{1} << state.bit_position(q);
  const std::uint64_t d = state.dim();
  Reduced r;
  for (std::uint64_t i = 0; i < d; ++i) {
    if (i & mask) continue;
    const complex_t a0 = state.amplitudes()[i];
    const complex_t a1 = state.amplitudes()[i | mask];
    r.rho00 += std::norm(a0);
    r.rho11 += std::norm(a1);
    r.rho01 += a0 * std::conj(a1);
  }
  return r;
}

}  // namespace

double reduced_purity(const StateVector& state, int q) {
  const Reduced r = reduce(state, q);
  return r.rho00 * r.rho00 + r.rho11 * r.rho11 + 2.0 * std::norm(r.rho01);
}

DetachResult detach_qubit(const StateVector& state, int q, double tol) {
  if (state.num_qubits() < 2) {
    throw std::invalid_argument("detach_qubit: need at least two qubits");
  }
  if (q < 1 || q > state.num_qubits()) {
    throw std::invalid_argument("detach_qubit: qubit id out of range");
  }
  const double purity = reduced_purity(state, q);
  if (purity < 1.0 - tol) {
    throw EntangledDetachError("detach_qubit: qubit " + std::to_string(q) +
                               " is entangled with the rest (purity " +
                               std::to_string(purity) + ")");
  }

  const int bp = state.bit_position(q);
  const std::uint64_t mask = std::uint64_t{1} << bp;
  const std::uint64_t low = mask - 1;
  const std::uint64_t d = state.dim();
  const std::uint64_t rest_dim = d >> 1;

  // Index r of the remainder register <-> full index with qubit q's bit cleared.
  auto embed = [&](std::uint64_t r) {
    return ((r & ~low) << 1) | (r & low);
  };

  // Pick the remainder row with the most weight; it carries a clean copy of
  // the qubit's amplitude pair.
  std::uint64_t best = 0;
  double best_w = -1;
  for (std::uint64_t r = 0; r < rest_dim; ++r) {
    const std::uint64_t i = embed(r);
    const double w = std::norm(state.amplitudes()[i]) + std::norm(state.amplitudes()[i | mask]);
    if (w > best_w) {
      best_w = w;
      best = r;
    }
  }

  std::array<complex_t, 2> qubit{state.amplitudes()[embed(best)],
                                 state.amplitudes()[embed(best) | mask]};
  const double qn = std::sqrt(std::norm(qubit[0]) + std::norm(qubit[1]));
  qubit[0] /= qn;
  qubit[1] /= qn;

  // Project onto the extracted qubit state; for a product state this recovers
  // the remainder factor with phases consistent with qubit (x) rest = state.
  std::vector<complex_t> rest(rest_dim);
  for (std::uint64_t r = 0; r < rest_dim; ++r) {
    const std::uint64_t i = embed(r);
    rest[r] = std::conj(qubit[0]) * state.amplitudes()[i] +
              std::conj(qubit[1]) * state.amplitudes()[i | mask];
  }
  return DetachResult{StateVector::from_amplitudes(std::move(rest)), qubit, purity};
}

MeasureResult measure_qubit(StateVector& state, int q, std::uint64_t rng_seed) {
  if (q < 1 || q > state.num_qubits()) {
    throw std::invalid_argument("measure_qubit: qubit id out of range");
  }
  const std::uint64_t mask = std::uint64_t{1} << state.bit_position(q);
  const std::uint64_t d = state.dim();
  double p1 = 0;
  for (std::uint64_t i = 0; i < d; ++i) {
    if (i & mask) p1 += std::norm(state.amplitudes()[i]);
  }

  int bit;
  if (p1 <= kUnitaryTol) {
    bit = 0;
  } else if (p1 >= 1.0 - kUnitaryTol) {
    bit = 1;
  } else {
    std::mt19937_64 rng(rng_seed);
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    bit = u < p1 ? 1 : 0;
  }
  const double prob = bit ? p1 : 1.0 - p1;

  std::vector<complex_t> amps(state.amplitudes());
  const double scale = 1.0 / std::sqrt(prob);
  for (std::uint64_t i = 0; i < d; ++i) {
    const bool keep = ((i & mask) != 0) == (bit == 1);
    amps[i] = keep ? amps[i] * scale : complex_t{0, 0};
  }
  state = StateVector::from_amplitudes(std::move(amps));
  return MeasureResult{bit, prob};
}

double fidelity(const StateVector& a, const StateVector& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw std::invalid_argument("fidelity: dimension mismatch");
  }
  complex_t ov{0, 0};
  const std::uint64_t d = a.dim();
  for (std::uint64_t i = 0; i < d; ++i) {
    ov += std::conj(a.amplitudes()[i]) * b.amplitudes()[i];
  }
  return std::min(std::abs(ov), 1.0);
}

double wrap_phase(double angle) {
  double w = std::remainder(angle, 2.0 * std::numbers::pi);
  if (w <= -std::numbers::pi) w = std::numbers::pi;
  return w;
}

}  // namespace gbsec
