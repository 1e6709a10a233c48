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

#include "report.hpp"

#include <cstdio>
#include <stdexcept>

#include "gbsec/serialize.hpp"

namespace gbsec::cli {

std::string to_string(CorrectionMode mode) {
  return mode == CorrectionMode::full ? "full" : "discrete";
}

std::string to_string(ParityOrder order) {
  return order == ParityOrder::sequential ? "sequential" : "batch";
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

nlohmann::ordered_json error_to_json(const ErrorSpec& spec) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& op : spec.ops) {
    nlohmann::ordered_json e;
    if (op.kind == ElementaryError::Kind::bit_flip) {
      e["kind"] = "flip";
      e["q"] = op.qubit;
    } else {
      e["kind"] = "rot";
      e["q"] = op.qubit;
      e["delta"] = op.delta;
    }
    arr.push_back(std::move(e));
  }
  return arr;
}

ErrorSpec error_from_json(const nlohmann::json& j) {
  if (!j.is_array()) {
    throw std::invalid_argument("error_from_json: expected an array");
  }
  ErrorSpec spec;
  for (const auto& e : j) {
    const auto kind = e.at("kind").get<std::string>();
    if (kind == "flip") {
      spec.ops.push_back(bit_flip(e.at("q").get<int>()));
    } else if (kind == "rot") {
      spec.ops.push_back(phase_rot(e.at("q").get<int>(), e.at("delta").get<double>()));
    } else {
      throw std::invalid_argument("error_from_json: unknown kind " + kind);
    }
  }
  return spec;
}

nlohmann::ordered_json run_report_to_json(const RunReport& report) {
  nlohmann::ordered_json j;
  j["label"] = gbsec::to_string(report.label);
  j["error"] = error_to_json(report.error);
  j["mode"] = to_string(report.mode);
  j["order"] = to_string(report.order);
  j["fidelity"] = report.fidelity;
  j["phi_f"] = report.correction.phi_f;
  j["p_f"] = report.correction.p_f;
  j["restored_sign"] = report.correction.restored_sign == Sign::plus ? "+" : "-";
  j["flip_pattern"] =
      flip_pattern_to_string(report.label.n, report.correction.relative_flip_pattern);
  j["pass"] = report.pass;
  j["wall_ms"] = report.wall_ms;
  return j;
}

RunReport run_report_from_json(const nlohmann::json& j) {
  RunReport report;
  const auto label = parse_label(j.at("label").get<std::string>());
  if (!label) {
    throw std::invalid_argument("run_report_from_json: bad label");
  }
  report.label = *label;
  report.error = error_from_json(j.at("error"));
  report.mode =
      j.at("mode").get<std::string>() == "full" ? CorrectionMode::full : CorrectionMode::discrete;
  report.order = j.at("order").get<std::string>() == "batch" ? ParityOrder::batch
                                                             : ParityOrder::sequential;
  report.fidelity = j.at("fidelity").get<double>();
  report.correction.phi_f = j.at("phi_f").get<int>();
  report.correction.p_f = j.at("p_f").get<std::vector<int>>();
  report.correction.restored_sign =
      j.at("restored_sign").get<std::string>() == "+" ? Sign::plus : Sign::minus;
  const auto pattern = j.at("flip_pattern").get<std::string>();
  report.correction.relative_flip_pattern = 0;
  for (int q = 1; q <= report.label.n && q <= static_cast<int>(pattern.size()); ++q) {
    if (pattern[static_cast<std::size_t>(q) - 1] == '1') {
      report.correction.relative_flip_pattern |= std::uint64_t{1} << (report.label.n - q);
    }
  }
  report.pass = j.at("pass").get<bool>();
  report.wall_ms = j.at("wall_ms").get<double>();
  return report;
}

std::string run_report_csv_header() {
  return "label,mode,order,error,fidelity,phi_f,p_f,restored_sign,flip_pattern,pass,wall_ms";
}

std::string run_report_csv_row(const RunReport& report) {
  std::string p_f;
  for (const int b : report.correction.p_f) p_f += b ? '1' : '0';
  std::string row;
  row += gbsec::to_string(report.label);
  row += ',';
  row += to_string(report.mode);
  row += ',';
  row += to_string(report.order);
  row += ',';
  row += gbsec::to_string(report.error);
  row += ',';
  row += format_double(report.fidelity);
  row += ',';
  row += std::to_string(report.correction.phi_f);
  row += ',';
  row += p_f;
  row += ',';
  row += report.correction.restored_sign == Sign::plus ? '+' : '-';
  row += ',';
  row += flip_pattern_to_string(report.label.n, report.correction.relative_flip_pattern);
  row += ',';
  row += report.pass ? "true" : "false";
  row += ',';
  row += format_double(report.wall_ms);
  return row;
}

}  // namespace gbsec::cli
