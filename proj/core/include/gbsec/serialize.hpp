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
#include <vector>

#include "gbsec/correct.hpp"
#include "gbsec/discriminate.hpp"
#include "gbsec/statevector.hpp"

namespace gbsec {

// JSON wire formats. Kept behind plain strings so the public headers carry no
// third-party types.

// {"phi": 0, "parity": [1, 0, 1]} ; n is implied by the parity length.
std::string to_json_string(const Signature& sig);
Signature signature_from_json(const std::string& text);

// {"phi_f": 0, "p_f": [1, 0], "restored_sign": "+", "flip_pattern": "010"}
std::string to_json_string(const CorrectionReport& report);
CorrectionReport correction_report_from_json(const std::string& text);

// [{"gate": "H", "q": 4}, {"gate": "CNOT", "c": 4, "t": 1}, ...]
std::string gates_to_json(const std::vector<GateRecord>& gates);
std::vector<GateRecord> gates_from_json(const std::string& text);

std::string to_string(GateKind kind);

}  // namespace gbsec
