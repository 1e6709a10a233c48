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

// Shared test helpers: a closed-form signature oracle, generators for
// dephased and random states, and a runner that spawns the CLI binary.

#pragma once

#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "gbsec/discriminate.hpp"
#include "gbsec/gbs.hpp"
#include "gbsec/statevector.hpp"

namespace testutil {

// Signature predicted from the label alone: the phase bit is the sign bit and
// each parity bit compares adjacent bits of x. Independent of any circuit.
inline gbsec::Signature expected_signature(const gbsec::GbsLabel& label) {
  gbsec::Signature sig;
  sig.n = label.n;
  sig.phi = label.sign == gbsec::Sign::minus ? 1 : 0;
  sig.parity.resize(static_cast<std::size_t>(label.n) - 1);
  for (int i = 1; i < label.n; ++i) {
    const int bi = static_cast<int>((label.x >> (label.n - i)) & 1u);
    const int bj = static_cast<int>((label.x >> (label.n - i - 1)) & 1u);
    sig.parity[static_cast<std::size_t>(i) - 1] = bi ^ bj;
  }
  return sig;
}

// e^{i gamma} (|y> + e^{i theta} |y xor 11..1>) / sqrt(2)
inline gbsec::StateVector make_dephased(int n, std::uint64_t y, double theta,
                                        double gamma = 0.0) {
  std::vector<gbsec::complex_t> amps(std::size_t{1} << n, {0, 0});
  const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
  const double s = 1.0 / std::sqrt(2.0);
  amps[y] = std::polar(s, gamma);
  amps[y ^ mask] = std::polar(s, gamma + theta);
  return gbsec::StateVector::from_amplitudes(amps);
}

inline gbsec::StateVector random_state(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<gbsec::complex_t> amps(std::size_t{1} << n);
  for (auto& a : amps) a = {gauss(rng), gauss(rng)};
  return gbsec::StateVector::from_amplitudes(amps);
}

struct CliResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr interleaved
};

// Runs the CLI binary with the given argument string. `env` may hold
// variable assignments to prefix, e.g. "GBSEC_TOLERANCE=1e-3".
inline CliResult run_cli(const std::string& args, const std::string& env = "") {
  const std::string cmd =
      (env.empty() ? "" : env + " ") + std::string(GBSEC_CLI_PATH) + " " + args + " 2>&1";
  CliResult res;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return res;
  char buf[4096];
  std::size_t got = 0;
  while ((got = std::fread(buf, 1, sizeof(buf), pipe)) > 0) res.output.append(buf, got);
  const int status = ::pclose(pipe);
  res.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  return res;
}

}  // namespace testutil
