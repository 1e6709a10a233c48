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

#include "sweep.hpp"

#include <algorithm>
#include <atomic>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>

namespace gbsec::cli {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::uint64_t case_seed(std::uint64_t seed, int n, std::uint64_t k) {
  return splitmix(splitmix(seed ^ (static_cast<std::uint64_t>(n) << 32)) ^ k);
}

}  // namespace

std::vector<double> default_delta_set() {
  return {0.0, std::numbers::pi / 7.0, 2.0 * std::numbers::pi / 3.0, std::numbers::pi};
}

void validate_config(const SweepConfig& config) {
  if (config.n_lo < 2 || config.n_hi < config.n_lo) {
    throw std::invalid_argument("sweep: need 2 <= n_lo <= n_hi");
  }
  if (config.n_hi > 24) {
    throw std::invalid_argument("sweep: n above 24 is not supported");
  }
  if (config.exhaustive && config.n_hi > kMaxExhaustiveN) {
    throw std::invalid_argument("sweep: exhaustive mode is limited to n <= " +
                                std::to_string(kMaxExhaustiveN));
  }
  if (!config.exhaustive && config.samples < 1) {
    throw std::invalid_argument("sweep: sampled mode needs a positive case count");
  }
  if (!(config.tolerance > 0)) {
    throw std::invalid_argument("sweep: tolerance must be positive");
  }
}

std::vector<SweepCase> sweep_cases(const SweepConfig& config) {
  validate_config(config);
  const std::vector<double> deltas =
      config.deltas.empty() ? default_delta_set() : config.deltas;

  std::vector<SweepCase> cases;
  for (int n = config.n_lo; n <= config.n_hi; ++n) {
    const auto labels = enumerate_labels(n);
    if (config.exhaustive) {
      const std::uint64_t subsets = std::uint64_t{1} << n;
      std::uint64_t k = 0;
      for (const auto& label : labels) {
        for (std::uint64_t mask = 0; mask < subsets; ++mask) {
          for (const double delta : deltas) {
            ErrorSpec spec;
            int first_flipped = 0;
            for (int j = 1; j <= n; ++j) {
              if (mask & (std::uint64_t{1} << (n - j))) {
                spec.ops.push_back(bit_flip(j));
                if (first_flipped == 0) first_flipped = j;
              }
            }
            if (delta != 0) {
              spec.ops.push_back(phase_rot(first_flipped == 0 ? 1 : first_flipped, delta));
            }
            cases.push_back(SweepCase{label, std::move(spec), case_seed(config.seed, n, k)});
            ++k;
          }
        }
      }
    } else {
      for (int k = 0; k < config.samples; ++k) {
        const std::uint64_t cs = case_seed(config.seed, n, static_cast<std::uint64_t>(k));
        std::mt19937_64 rng(splitmix(cs));
        const GbsLabel label = labels[rng() % labels.size()];
        cases.push_back(SweepCase{label, random_error(n, cs), cs});
      }
    }
  }
  return cases;
}

SweepResult run_sweep(const SweepConfig& config) {
  const std::vector<SweepCase> cases = sweep_cases(config);

  SweepResult result;
  result.reports.resize(cases.size());
  result.total = static_cast<int>(cases.size());

  const unsigned hw = std::thread::hardware_concurrency();
  const int threads = config.threads > 0
                          ? config.threads
                          : static_cast<int>(std::max(1u, hw));

  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= cases.size()) break;
      const SweepCase& c = cases[i];
      RunReport r;
      r.label = c.label;
      r.error = c.error;
      r.mode = config.mode;
      r.order = config.order;
      try {
        const ProtocolOutcome outcome =
            run_protocol(c.label, c.error, config.mode, c.rng_seed, config.order);
        r.fidelity = outcome.fidelity;
        r.correction = outcome.report;
      } catch (const std::exception&) {
        r.fidelity = 0;
      }
      r.pass = r.fidelity >= 1.0 - config.tolerance;
      r.wall_ms = 0;
      result.reports[i] = std::move(r);
    }
  };

  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  for (const auto& r : result.reports) {
    if (r.pass) {
      ++result.passed;
    } else {
      ++result.failed;
    }
    result.worst_fidelity = std::min(result.worst_fidelity, r.fidelity);
  }
  return result;
}

}  // namespace gbsec::cli
