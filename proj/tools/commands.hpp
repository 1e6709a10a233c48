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

#include <iosfwd>
#include <string>

#include "sweep.hpp"

namespace gbsec::cli {

// Shared exit codes: 0 = all checks passed, 1 = at least one correction
// failure, 2 = usage or validation error.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

struct TableOptions {
  int n = 2;
  OutputFormat format = OutputFormat::text;
};

struct CorrectOptions {
  std::string label;
  ErrorSpec error;
  CorrectionMode mode = CorrectionMode::full;
  ParityOrder order = ParityOrder::sequential;
  std::uint64_t seed = 0;
  double tolerance = 1e-10;
  OutputFormat format = OutputFormat::text;
};

struct SweepOptions {
  SweepConfig config;
  OutputFormat format = OutputFormat::text;
};

struct TraceOptions {
  std::string label;
  int part = 0;  // 0 = both parts
  int step = 0;  // 0 = all of part 2
  CorrectionMode mode = CorrectionMode::full;
};

int cmd_table(const TableOptions& opt, std::ostream& out, std::ostream& err);
int cmd_correct(const CorrectOptions& opt, std::ostream& out, std::ostream& err);
int cmd_sweep(const SweepOptions& opt, std::ostream& out, std::ostream& err);
int cmd_trace(const TraceOptions& opt, std::ostream& out, std::ostream& err);

}  // namespace gbsec::cli
