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

#include <cmath>
#include <doctest.h>

#include "gbsec/gbs.hpp"
#include "support.hpp"

using namespace gbsec;

namespace {
constexpr double kPi = 3.14159265358979323846;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
}  // namespace

TEST_CASE("build places two equal amplitudes on complementary indices") {
  auto bell = build({2, 0, Sign::plus});
  CHECK(std::abs(bell.amplitude(0) - complex_t{kInvSqrt2, 0}) < 1e-15);
  CHECK(std::abs(bell.amplitude(3) - complex_t{kInvSqrt2, 0}) < 1e-15);
  CHECK(std::abs(bell.amplitude(1)) == 0.0);

  auto singlet = build({2, 1, Sign::minus});
  CHECK(std::abs(singlet.amplitude(1) - complex_t{kInvSqrt2, 0}) < 1e-15);
  CHECK(std::abs(singlet.amplitude(2) - complex_t{-kInvSqrt2, 0}) < 1e-15);

  auto ghz = build({3, 0, Sign::plus});
  CHECK(std::abs(ghz.amplitude(0) - complex_t{kInvSqrt2, 0}) < 1e-15);
  CHECK(std::abs(ghz.amplitude(7) - complex_t{kInvSqrt2, 0}) < 1e-15);
}

TEST_CASE("complement_index flips every bit") {
  CHECK(complement_index(3, 2) == 5);
  CHECK(complement_index(2, 0) == 3);
  CHECK(complement_index(5, 9) == 22);
}

TEST_CASE("validate_label enforces the canonical range") {
  CHECK_NOTHROW(validate_label({2, 1, Sign::plus}));
  CHECK_THROWS_AS(validate_label({2, 2, Sign::plus}), std::invalid_argument);
  CHECK_THROWS_AS(validate_label({1, 0, Sign::plus}), std::invalid_argument);
  CHECK_THROWS_AS(validate_label({4, 8, Sign::minus}), std::invalid_argument);
  CHECK_THROWS_AS(build({3, 7, Sign::plus}), std::invalid_argument);
}

TEST_CASE("classify inverts build for every label up to n = 6") {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& label : enumerate_labels(n)) {
      auto c = classify(build(label));
      REQUIRE(c.has_value());
      CHECK(c->label == label);
      CHECK(std::abs(c->global_phase) < 1e-12);
      if (label.sign == Sign::plus) {
        CHECK(c->kind == GbsKind::exact_plus);
        CHECK(std::abs(c->theta) < 1e-12);
      } else {
        CHECK(c->kind == GbsKind::exact_minus);
        CHECK(std::abs(std::abs(c->theta) - kPi) < 1e-12);
      }
    }
  }
}

TEST_CASE("classify reports dephased states with their relative phase") {
  auto c = classify(testutil::make_dephased(2, 0, kPi / 3));
  REQUIRE(c.has_value());
  CHECK(c->kind == GbsKind::dephased);
  CHECK(c->label == GbsLabel{2, 0, Sign::plus});
  CHECK(c->theta == doctest::Approx(1.0471975511965976).epsilon(1e-12));
  CHECK(std::abs(c->global_phase) < 1e-12);

  // Support given by the larger index: phases fold onto the canonical branch.
  auto d = classify(testutil::make_dephased(3, 6, 0.5));
  REQUIRE(d.has_value());
  CHECK(d->label.x == 1);
  CHECK(d->theta == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(d->global_phase == doctest::Approx(0.5).epsilon(1e-12));

  auto e = classify(testutil::make_dephased(3, 1, -2.0, 0.8));
  REQUIRE(e.has_value());
  CHECK(e->label.x == 1);
  CHECK(e->theta == doctest::Approx(-2.0).epsilon(1e-12));
  CHECK(e->global_phase == doctest::Approx(0.8).epsilon(1e-12));
}

TEST_CASE("classify rejects states outside the family") {
  CHECK_FALSE(classify(basis_state(2, 0)).has_value());

  auto adjacent = StateVector::from_amplitudes(
      {{kInvSqrt2, 0}, {kInvSqrt2, 0}, {0, 0}, {0, 0}});
  CHECK_FALSE(classify(adjacent).has_value());

  auto three = StateVector::from_amplitudes({{0.6, 0}, {0.5, 0}, {0, 0}, {0.624499799839840, 0}});
  CHECK_FALSE(classify(three).has_value());

  auto skew = StateVector::from_amplitudes({{0.6, 0}, {0, 0}, {0, 0}, {0.8, 0}});
  CHECK_FALSE(classify(skew).has_value());

  CHECK_FALSE(classify(testutil::random_state(3, 11)).has_value());
}

TEST_CASE("enumerate_labels walks x ascending with + before -") {
  const auto labels = enumerate_labels(2);
  REQUIRE(labels.size() == 4);
  CHECK(labels[0] == GbsLabel{2, 0, Sign::plus});
  CHECK(labels[1] == GbsLabel{2, 0, Sign::minus});
  CHECK(labels[2] == GbsLabel{2, 1, Sign::plus});
  CHECK(labels[3] == GbsLabel{2, 1, Sign::minus});

  CHECK(enumerate_labels(3).size() == 8);
  CHECK(enumerate_labels(6).size() == 64);
}

TEST_CASE("the labeled family is orthonormal") {
  const int n = 5;
  const auto labels = enumerate_labels(n);
  std::vector<StateVector> states;
  states.reserve(labels.size());
  for (const auto& l : labels) states.push_back(build(l));
  for (std::size_t a = 0; a < states.size(); ++a)
    for (std::size_t b = a; b < states.size(); ++b) {
      const double f = fidelity(states[a], states[b]);
      if (a == b)
        CHECK(f == doctest::Approx(1.0).epsilon(1e-12));
      else
        CHECK(f < 1e-12);
    }
}

TEST_CASE("flipping every qubit maps a GBS to itself") {
  for (const auto& label : enumerate_labels(3)) {
    auto s = build(label);
    auto t = s;
    for (int q = 1; q <= 3; ++q) t.apply_x(q);
    CHECK(fidelity(s, t) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("same_state compares canonical labels") {
  CHECK(same_state({3, 1, Sign::plus}, {3, 1, Sign::plus}));
  CHECK_FALSE(same_state({3, 1, Sign::plus}, {3, 1, Sign::minus}));
  CHECK_FALSE(same_state({3, 1, Sign::plus}, {3, 2, Sign::plus}));
  CHECK_THROWS_AS(same_state({2, 0, Sign::plus}, {3, 0, Sign::plus}), std::invalid_argument);
}

TEST_CASE("label text round trip") {
  CHECK(to_string({3, 0, Sign::plus}) == "3:0:+");
  CHECK(to_string({4, 5, Sign::minus}) == "4:5:-");

  auto p = parse_label("3:0:+");
  REQUIRE(p.has_value());
  CHECK(*p == GbsLabel{3, 0, Sign::plus});

  auto q = parse_label("2:1:-");
  REQUIRE(q.has_value());
  CHECK(*q == GbsLabel{2, 1, Sign::minus});

  for (int n = 2; n <= 8; ++n)
    for (const auto& label : enumerate_labels(n)) {
      auto r = parse_label(to_string(label));
      REQUIRE(r.has_value());
      CHECK(*r == label);
    }
}

TEST_CASE("parse_label rejects malformed or out-of-range text") {
  CHECK_FALSE(parse_label("").has_value());
  CHECK_FALSE(parse_label("abc").has_value());
  CHECK_FALSE(parse_label("2:0").has_value());
  CHECK_FALSE(parse_label("2:0:*").has_value());
  CHECK_FALSE(parse_label("3:4:+").has_value());
  CHECK_FALSE(parse_label("1:0:+").has_value());
  CHECK_FALSE(parse_label("2:-1:+").has_value());
  CHECK_FALSE(parse_label("2:0:+ ").has_value());
  CHECK_FALSE(parse_label("2:0:+junk").has_value());
}

TEST_CASE("ket_string renders zero-padded kets") {
  CHECK(ket_string({3, 0, Sign::plus}) == "(|000> + |111>)/sqrt(2)");
  CHECK(ket_string({2, 1, Sign::minus}) == "(|01> - |10>)/sqrt(2)");
  CHECK(ket_string({4, 5, Sign::plus}) == "(|0101> + |1010>)/sqrt(2)");
}
