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

#include <string>

#include <json.hpp>

#include "gbsec/correct.hpp"
#include "gbsec/errors.hpp"
#include "gbsec/gbs.hpp"

namespace gbsec::cli {

enum class OutputFormat { text, json, csv };

// One protocol run, as reported by `correct` and per sweep case.
struct RunReport {
  GbsLabel label;
  ErrorSpec error;
  CorrectionMode mode = CorrectionMode::full;
  ParityOrder order = ParityOrder::sequential;
  double fidelity = 0;
  CorrectionReport correction;
  bool pass = false;
  double wall_ms = 0;

  bool operator==(const RunReport&) const = default;
};

std::string to_string(CorrectionMode mode);
std::string to_string(ParityOrder order);

nlohmann::ordered_json error_to_json(const ErrorSpec& spec);
ErrorSpec error_from_json(const nlohmann::json& j);

nlohmann::ordered_json run_report_to_json(const RunReport& report);
RunReport run_report_from_json(const nlohmann::json& j);

// Shared CSV schema for `correct` and `sweep` rows.
std::string run_report_csv_header();
std::string run_report_csv_row(const RunReport& report);

// Deterministic shortest-round-trip double rendering for CSV cells.
std::string format_double(double v);

}  // namespace gbsec::cli
