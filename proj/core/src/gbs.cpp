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

#include "gbsec/gbs.hpp"

#include <cmath>
#include <complex>
#include <numbers>

namespace gbsec {

std::uint64_t complement_index(int n, std::uint64_t x) {
  const std::uint64_t ones = (n >= 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  return x ^ ones;
}

void validate_label(const GbsLabel& label) {
  if (label.n < 2 || label.n > 30) {
    throw std::invalid_argument("GbsLabel: n must be in [2, 30]");
  }
  const std::uint64_t half = std::uint64_t{1} << (label.n - 1);
  if (label.x >= half) {
    throw std::invalid_argument("GbsLabel: x must be in [0, 2^(n-1) - 1]");
  }
}

StateVector build(const GbsLabel& label) {
  validate_label(label);
  const std::uint64_t d = std::uint64_t{1} << label.n;
  std::vector<complex_t> amps(d, complex_t{0, 0});
  const double a = 1.0 / std::sqrt(2.0);
  amps[label.x] = complex_t{a, 0};
  amps[complement_index(label.n, label.x)] =
      label.sign == Sign::plus ? complex_t{a, 0} : complex_t{-a, 0};
  return StateVector::from_amplitudes(std::move(amps));
}

std::optional<GbsClassification> classify(const StateVector& state, double tol) {
  const int n = state.num_qubits();
  if (n < 2) return std::nullopt;
  const std::uint64_t d = state.dim();

  // Locate the significant support and reject anything but two equal-weight
  // amplitudes at complementary indices.
  std::uint64_t y = d;
  std::uint64_t ybar = d;
  for (std::uint64_t i = 0; i < d; ++i) {
    if (std::abs(state.amplitudes()[i]) <= tol) continue;
    if (y == d) {
      y = i;
    } else if (ybar == d) {
      ybar = i;
    } else {
      return std::nullopt;
    }
  }
  if (y == d || ybar == d) return std::nullopt;
  if (ybar != complement_index(n, y)) return std::nullopt;

  if (y > ybar) std::swap(y, ybar);
  const complex_t ay = state.amplitudes()[y];
  const complex_t aybar = state.amplitudes()[ybar];
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  if (std::abs(std::abs(ay) - inv_sqrt2) > tol) return std::nullopt;
  if (std::abs(std::abs(aybar) - inv_sqrt2) > tol) return std::nullopt;

  const double gamma = std::arg(ay);
  const double theta = wrap_phase(std::arg(aybar) - gamma);

  GbsClassification c;
  c.label.n = n;
  c.label.x = y;
  c.global_phase = gamma;
  c.theta = theta;
  if (std::abs(theta) <= tol) {
    c.kind = GbsKind::exact_plus;
    c.label.sign = Sign::plus;
  } else if (std::abs(theta - std::numbers::pi) <= tol ||
             std::abs(theta + std::numbers::pi) <= tol) {
    c.kind = GbsKind::exact_minus;
    c.label.sign = Sign::minus;
  } else {
    c.kind = GbsKind::dephased;
    c.label.sign = Sign::plus;
  }
  return c;
}

std::vector<GbsLabel> enumerate_labels(int n) {
  if (n < 2) {
    throw std::invalid_argument("enumerate_labels: n must be >= 2");
  }
  std::vector<GbsLabel> out;
  const std::uint64_t half = std::uint64_t{1} << (n - 1);
  out.reserve(half * 2);
  for (std::uint64_t x = 0; x < half; ++x) {
    out.push_back(GbsLabel{n, x, Sign::plus});
    out.push_back(GbsLabel{n, x, Sign::minus});
  }
  return out;
}

bool same_state(const GbsLabel& a, const GbsLabel& b) {
  if (a.n != b.n) {
    throw std::invalid_argument("same_state: qubit counts differ");
  }
  auto canon = [](const GbsLabel& l) {
    GbsLabel c = l;
    const std::uint64_t xbar = complement_index(l.n, l.x);
    if (xbar < c.x) c.x = xbar;
    return c;
  };
  return canon(a) == canon(b);
}

std::string to_string(const GbsLabel& label) {
  return std::to_string(label.n) + ":" + std::to_string(label.x) + ":" +
         (label.sign == Sign::plus ? "+" : "-");
}

std::optional<GbsLabel> parse_label(std::string_view text) {
  const auto c1 = text.find(':');
  if (c1 == std::string_view::npos) return std::nullopt;
  const auto c2 = text.find(':', c1 + 1);
  if (c2 == std::string_view::npos) return std::nullopt;

  const std::string n_part(text.substr(0, c1));
  const std::string x_part(text.substr(c1 + 1, c2 - c1 - 1));
  const std::string s_part(text.substr(c2 + 1));
  if (n_part.empty() || x_part.empty()) return std::nullopt;

  GbsLabel label;
  try {
    std::size_t used = 0;
    label.n = std::stoi(n_part, &used);
    if (used != n_part.size()) return std::nullopt;
    label.x = std::stoull(x_part, &used);
    if (used != x_part.size()) return std::nullopt;
  } catch (const std::exception&) {
    return std::nullopt;
  }
  if (s_part == "+") {
    label.sign = Sign::plus;
  } else if (s_part == "-") {
    label.sign = Sign::minus;
  } else {
    return std::nullopt;
  }
  try {
    validate_label(label);
  } catch (const std::exception&) {
    return std::nullopt;
  }
  return label;
}

std::string ket_string(const GbsLabel& label) {
  auto bits = [&](std::uint64_t v) {
    std::string s(static_cast<std::size_t>(label.n), '0');
    for (int j = 0; j < label.n; ++j) {
      if (v & (std::uint64_t{1} << (label.n - 1 - j))) s[static_cast<std::size_t>(j)] = '1';
    }
    return s;
  };
  const std::string op = label.sign == Sign::plus ? " + " : " - ";
  return "(|" + bits(label.x) + ">" + op + "|" + bits(complement_index(label.n, label.x)) +
         ">)/sqrt(2)";
}

}  // namespace gbsec
