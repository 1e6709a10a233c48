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

#include "commands.hpp"

#include <chrono>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "gbsec/serialize.hpp"

namespace gbsec::cli {

namespace {

std::string kind_name(GbsKind kind) {
  switch (kind) {
    case GbsKind::exact_plus: return "exact_plus";
    case GbsKind::exact_minus: return "exact_minus";
    case GbsKind::dephased: return "dephased";
  }
  return "?";
}

std::string bits_string(const std::vector<int>& bits) {
  std::string s;
  for (const int b : bits) s += b ? '1' : '0';
  return s;
}

}  // namespace

int cmd_table(const TableOptions& opt, std::ostream& out, std::ostream& err) {
  if (opt.n < 2 || opt.n > 10) {
    err << "table: --n must be in [2, 10]\n";
    return kExitUsage;
  }

  struct Row {
    std::string name;
    GbsLabel label;
    Signature signature;
  };
  std::vector<Row> rows;
  int k = 1;
  for (const auto& label : enumerate_labels(opt.n)) {
    const SignatureReadout readout = signature_of(build(label));
    rows.push_back(Row{"psi_" + std::to_string(k), label, readout.signature});
    ++k;
  }

  switch (opt.format) {
    case OutputFormat::text: {
      std::size_t ket_w = 0;
      for (const auto& r : rows) ket_w = std::max(ket_w, ket_string(r.label).size());
      out << std::left << std::setw(8) << "state" << std::setw(static_cast<int>(ket_w) + 2)
          << "ket" << std::setw(static_cast<int>(rows[0].signature.parity.size()) + 2) << "p"
          << "phi\n";
      for (const auto& r : rows) {
        out << std::left << std::setw(8) << r.name << std::setw(static_cast<int>(ket_w) + 2)
            << ket_string(r.label) << std::setw(static_cast<int>(r.signature.parity.size()) + 2)
            << bits_string(r.signature.parity) << r.signature.phi << "\n";
      }
      break;
    }
    case OutputFormat::json: {
      auto arr = nlohmann::ordered_json::array();
      for (const auto& r : rows) {
        nlohmann::ordered_json e;
        e["state"] = r.name;
        e["label"] = gbsec::to_string(r.label);
        e["ket"] = ket_string(r.label);
        e["p"] = r.signature.parity;
        e["phi"] = r.signature.phi;
        arr.push_back(std::move(e));
      }
      out << arr.dump(2) << "\n";
      break;
    }
    case OutputFormat::csv: {
      out << "state,label,ket,p,phi\n";
      for (const auto& r : rows) {
        out << r.name << ',' << gbsec::to_string(r.label) << ',' << ket_string(r.label) << ','
            << bits_string(r.signature.parity) << ',' << r.signature.phi << "\n";
      }
      break;
    }
  }
  return kExitPass;
}

int cmd_correct(const CorrectOptions& opt, std::ostream& out, std::ostream& err) {
  const auto label = parse_label(opt.label);
  if (!label) {
    err << "correct: bad label '" << opt.label << "', expected n:x:+ or n:x:-\n";
    return kExitUsage;
  }
  for (const auto& op : opt.error.ops) {
    if (op.qubit < 1 || op.qubit > label->n) {
      err << "correct: qubit " << op.qubit << " out of range for n=" << label->n << "\n";
      return kExitUsage;
    }
  }

  const auto t0 = std::chrono::steady_clock::now();
  const ProtocolOutcome outcome = run_protocol(*label, opt.error, opt.mode, opt.seed, opt.order);
  const auto t1 = std::chrono::steady_clock::now();

  RunReport report;
  report.label = *label;
  report.error = opt.error;
  report.mode = opt.mode;
  report.order = opt.order;
  report.fidelity = outcome.fidelity;
  report.correction = outcome.report;
  report.pass = outcome.fidelity >= 1.0 - opt.tolerance;
  report.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

  switch (opt.format) {
    case OutputFormat::text: {
      out << "label:      " << gbsec::to_string(*label) << "\n";
      out << "state:      " << ket_string(*label) << "\n";
      out << "mode:       " << to_string(opt.mode);
      if (opt.order == ParityOrder::batch) out << " (batch parity)";
      out << "\n";
      out << "error:      " << gbsec::to_string(opt.error) << "\n";
      out << "signature:  phi=" << outcome.signature.phi
          << " p=" << bits_string(outcome.signature.parity) << "\n";
      for (const auto& stage : outcome.stages) {
        out << "stage " << std::left << std::setw(11) << (stage.stage + ":");
        if (stage.classification) {
          const auto& c = *stage.classification;
          out << gbsec::to_string(c.label) << " kind=" << kind_name(c.kind)
              << " theta=" << format_double(c.theta) << "\n";
        } else {
          out << "outside the GBS family\n";
        }
      }
      out << "syndrome:   phi_f=" << report.correction.phi_f
          << " p_f=" << bits_string(report.correction.p_f) << " flip_pattern="
          << flip_pattern_to_string(label->n, report.correction.relative_flip_pattern)
          << " restored_sign="
          << (report.correction.restored_sign == Sign::plus ? "+" : "-") << "\n";
      out << "fidelity:   " << format_double(report.fidelity) << "\n";
      out << "wall_ms:    " << format_double(report.wall_ms) << "\n";
      out << "result:     " << (report.pass ? "PASS" : "FAIL") << "\n";
      break;
    }
    case OutputFormat::json:
      out << run_report_to_json(report).dump(2) << "\n";
      break;
    case OutputFormat::csv:
      out << run_report_csv_header() << "\n" << run_report_csv_row(report) << "\n";
      break;
  }
  return report.pass ? kExitPass : kExitFail;
}

int cmd_sweep(const SweepOptions& opt, std::ostream& out, std::ostream& err) {
  try {
    validate_config(opt.config);
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  const SweepResult result = run_sweep(opt.config);
  const auto& cfg = opt.config;

  switch (opt.format) {
    case OutputFormat::text: {
      out << "sweep: n=" << cfg.n_lo << ".." << cfg.n_hi << " "
          << (cfg.exhaustive ? "exhaustive" : "sampled " + std::to_string(cfg.samples))
          << " mode=" << to_string(cfg.mode) << " order=" << to_string(cfg.order)
          << " seed=" << cfg.seed << " tolerance=" << format_double(cfg.tolerance) << "\n";
      out << "deltas:";
      for (const double d : cfg.deltas.empty() ? default_delta_set() : cfg.deltas) {
        out << " " << format_double(d);
      }
      out << "\n";
      out << "cases: " << result.total << "  passed: " << result.passed
          << "  failed: " << result.failed
          << "  worst_fidelity: " << format_double(result.worst_fidelity) << "\n";
      int shown = 0;
      for (const auto& r : result.reports) {
        if (r.pass) continue;
        if (shown == 20) {
          out << "  ... more failures omitted\n";
          break;
        }
        out << "  FAIL " << gbsec::to_string(r.label) << " error=" << gbsec::to_string(r.error)
            << " fidelity=" << format_double(r.fidelity) << "\n";
        ++shown;
      }
      out << (result.failed == 0 ? "PASS" : "FAIL") << "\n";
      break;
    }
    case OutputFormat::json: {
      nlohmann::ordered_json j;
      j["config"]["n_lo"] = cfg.n_lo;
      j["config"]["n_hi"] = cfg.n_hi;
      j["config"]["exhaustive"] = cfg.exhaustive;
      j["config"]["samples"] = cfg.samples;
      j["config"]["deltas"] = cfg.deltas.empty() ? default_delta_set() : cfg.deltas;
      j["config"]["mode"] = to_string(cfg.mode);
      j["config"]["order"] = to_string(cfg.order);
      j["config"]["seed"] = cfg.seed;
      j["config"]["tolerance"] = cfg.tolerance;
      j["summary"]["total"] = result.total;
      j["summary"]["passed"] = result.passed;
      j["summary"]["failed"] = result.failed;
      j["summary"]["worst_fidelity"] = result.worst_fidelity;
      auto arr = nlohmann::ordered_json::array();
      for (const auto& r : result.reports) arr.push_back(run_report_to_json(r));
      j["cases"] = std::move(arr);
      out << j.dump(2) << "\n";
      break;
    }
    case OutputFormat::csv: {
      out << run_report_csv_header() << "\n";
      for (const auto& r : result.reports) out << run_report_csv_row(r) << "\n";
      break;
    }
  }
  return result.failed == 0 ? kExitPass : kExitFail;
}

int cmd_trace(const TraceOptions& opt, std::ostream& out, std::ostream& err) {
  const auto label = parse_label(opt.label);
  if (!label) {
    err << "trace: bad label '" << opt.label << "', expected n:x:+ or n:x:-\n";
    return kExitUsage;
  }
  if (opt.part != 0 && opt.part != 1 && opt.part != 2) {
    err << "trace: --part must be 1 or 2\n";
    return kExitUsage;
  }
  if (opt.step != 0 && opt.part != 2) {
    err << "trace: --step requires --part 2\n";
    return kExitUsage;
  }
  if (opt.step < 0 || opt.step > 3) {
    err << "trace: --step must be 1, 2 or 3\n";
    return kExitUsage;
  }
  if (opt.step == 1 && opt.mode == CorrectionMode::discrete) {
    err << "trace: discrete mode has no step 1\n";
    return kExitUsage;
  }

  const int n = label->n;
  std::vector<GateRecord> gates;
  if (opt.part == 0 || opt.part == 1) {
    const auto g = part1_gates(n);
    gates.insert(gates.end(), g.begin(), g.end());
  }
  if (opt.part == 0 || opt.part == 2) {
    std::vector<GateRecord> g;
    switch (opt.step) {
      case 0: g = part2_gates(n, opt.mode); break;
      case 1: g = step1_gates(n); break;
      case 2: g = step2_gates(n); break;
      case 3:
        for (int i = 1; i <= n - 1; ++i) {
          const auto s = step3_gates(n, i);
          g.insert(g.end(), s.begin(), s.end());
        }
        break;
    }
    gates.insert(gates.end(), g.begin(), g.end());
  }
  out << gates_to_json(gates) << "\n";
  return kExitPass;
}

}  // namespace gbsec::cli
