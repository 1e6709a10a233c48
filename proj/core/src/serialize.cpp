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

#include "gbsec/serialize.hpp"

#include <json.hpp>

namespace gbsec {

namespace {
using ordered_json = nlohmann::ordered_json;
}

std::string to_string(GateKind kind) {
  switch (kind) {
    case GateKind::H: return "H";
    case GateKind::X: return "X";
    case GateKind::Z: return "Z";
    case GateKind::Phase: return "PHASE";
    case GateKind::CNOT: return "CNOT";
    case GateKind::CZ: return "CZ";
  }
  throw std::logic_error("to_string: unknown gate kind");
}

std::string to_json_string(const Signature& sig) {
  ordered_json j;
  j["phi"] = sig.phi;
  j["parity"] = sig.parity;
  return j.dump();
}

Signature signature_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  Signature sig;
  sig.phi = j.at("phi").get<int>();
  sig.parity = j.at("parity").get<std::vector<int>>();
  sig.n = static_cast<int>(sig.parity.size()) + 1;
  if (sig.n < 2 || (sig.phi != 0 && sig.phi != 1)) {
    throw std::invalid_argument("signature_from_json: malformed signature");
  }
  return sig;
}

std::string to_json_string(const CorrectionReport& report) {
  const int n = static_cast<int>(report.p_f.size()) + 1;
  ordered_json j;
  j["phi_f"] = report.phi_f;
  j["p_f"] = report.p_f;
  j["restored_sign"] = report.restored_sign == Sign::plus ? "+" : "-";
  j["flip_pattern"] = flip_pattern_to_string(n, report.relative_flip_pattern);
  return j.dump();
}

CorrectionReport correction_report_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  CorrectionReport report;
  report.phi_f = j.at("phi_f").get<int>();
  report.p_f = j.at("p_f").get<std::vector<int>>();
  const auto sign = j.at("restored_sign").get<std::string>();
  if (sign != "+" && sign != "-") {
    throw std::invalid_argument("correction_report_from_json: bad sign");
  }
  report.restored_sign = sign == "+" ? Sign::plus : Sign::minus;

  const auto pattern = j.at("flip_pattern").get<std::string>();
  const int n = static_cast<int>(report.p_f.size()) + 1;
  if (pattern.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("correction_report_from_json: flip pattern length mismatch");
  }
  report.relative_flip_pattern = 0;
  for (int jbit = 1; jbit <= n; ++jbit) {
    const char c = pattern[static_cast<std::size_t>(jbit) - 1];
    if (c != '0' && c != '1') {
      throw std::invalid_argument("correction_report_from_json: flip pattern must be binary");
    }
    if (c == '1') report.relative_flip_pattern |= std::uint64_t{1} << (n - jbit);
  }
  return report;
}

std::string gates_to_json(const std::vector<GateRecord>& gates) {
  ordered_json arr = ordered_json::array();
  for (const auto& g : gates) {
    ordered_json e;
    e["gate"] = to_string(g.kind);
    switch (g.kind) {
      case GateKind::H:
      case GateKind::X:
      case GateKind::Z:
        e["q"] = g.target;
        break;
      case GateKind::Phase:
        e["q"] = g.target;
        e["delta"] = g.angle;
        break;
      case GateKind::CNOT:
      case GateKind::CZ:
        e["c"] = g.control;
        e["t"] = g.target;
        break;
    }
    arr.push_back(std::move(e));
  }
  return arr.dump();
}

std::vector<GateRecord> gates_from_json(const std::string& text) {
  const auto arr = nlohmann::json::parse(text);
  if (!arr.is_array()) {
    throw std::invalid_argument("gates_from_json: expected an array");
  }
  std::vector<GateRecord> gates;
  gates.reserve(arr.size());
  for (const auto& e : arr) {
    const auto name = e.at("gate").get<std::string>();
    if (name == "H") {
      gates.push_back(make_h(e.at("q").get<int>()));
    } else if (name == "X") {
      gates.push_back(make_x(e.at("q").get<int>()));
    } else if (name == "Z") {
      gates.push_back(make_z(e.at("q").get<int>()));
    } else if (name == "PHASE") {
      gates.push_back(make_phase(e.at("q").get<int>(), e.at("delta").get<double>()));
    } else if (name == "CNOT") {
      gates.push_back(make_cnot(e.at("c").get<int>(), e.at("t").get<int>()));
    } else if (name == "CZ") {
      gates.push_back(make_cz(e.at("c").get<int>(), e.at("t").get<int>()));
    } else {
      throw std::invalid_argument("gates_from_json: unknown gate " + name);
    }
  }
  return gates;
}

}  // namespace gbsec
