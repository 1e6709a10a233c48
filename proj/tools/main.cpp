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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

using namespace gbsec;
using namespace gbsec::cli;

double default_tolerance() {
  const char* env = std::getenv("GBSEC_TOLERANCE");
  if (env == nullptr || *env == '\0') return 1e-10;
  char* end = nullptr;
  const double v = std::strtod(env, &end);
  if (end == nullptr || *end != '\0' || !(v > 0)) {
    std::cerr << "warning: ignoring invalid GBSEC_TOLERANCE '" << env << "'\n";
    return 1e-10;
  }
  return v;
}

bool parse_int(const std::string& s, int& out) {
  try {
    std::size_t used = 0;
    out = std::stoi(s, &used);
    return used == s.size();
  } catch (const std::exception&) {
    return false;
  }
}

bool parse_double(const std::string& s, double& out) {
  try {
    std::size_t used = 0;
    out = std::stod(s, &used);
    return used == s.size();
  } catch (const std::exception&) {
    return false;
  }
}

// "A..B" or a single "N".
bool parse_n_range(const std::string& s, int& lo, int& hi) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    if (!parse_int(s, lo)) return false;
    hi = lo;
    return true;
  }
  return parse_int(s.substr(0, dots), lo) && parse_int(s.substr(dots + 2), hi);
}

bool parse_deltas(const std::string& s, std::vector<double>& out) {
  out.clear();
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto comma = s.find(',', start);
    const std::string piece =
        s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    double v = 0;
    if (!parse_double(piece, v)) return false;
    out.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return !out.empty();
}

bool parse_format(const std::string& s, OutputFormat& out) {
  if (s == "text") {
    out = OutputFormat::text;
  } else if (s == "json") {
    out = OutputFormat::json;
  } else if (s == "csv") {
    out = OutputFormat::csv;
  } else {
    return false;
  }
  return true;
}

// Pulls the ordered --flip / --rot occurrences out of the raw argument list so
// the error channel is applied in exact command-line order; the remaining
// tokens go to the regular parser.
bool extract_error_flags(std::vector<std::string>& args, ErrorSpec& spec, std::string& err) {
  std::vector<std::string> kept;
  kept.reserve(args.size());
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    std::string name;
    std::string value;
    bool have_value = false;
    if (a == "--flip" || a == "--rot") {
      name = a;
      if (i + 1 < args.size()) {
        value = args[++i];
        have_value = true;
      }
    } else if (a.rfind("--flip=", 0) == 0) {
      name = "--flip";
      value = a.substr(7);
      have_value = true;
    } else if (a.rfind("--rot=", 0) == 0) {
      name = "--rot";
      value = a.substr(6);
      have_value = true;
    } else {
      kept.push_back(a);
      continue;
    }

    if (!have_value) {
      err = name + " requires a value";
      return false;
    }
    if (name == "--flip") {
      int q = 0;
      if (!parse_int(value, q)) {
        err = "--flip expects a qubit id, got '" + value + "'";
        return false;
      }
      spec.ops.push_back(bit_flip(q));
    } else {
      const auto colon = value.find(':');
      int q = 0;
      double delta = 0;
      if (colon == std::string::npos || !parse_int(value.substr(0, colon), q) ||
          !parse_double(value.substr(colon + 1), delta)) {
        err = "--rot expects qubit:radians, got '" + value + "'";
        return false;
      }
      spec.ops.push_back(phase_rot(q, delta));
    }
  }
  args = std::move(kept);
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);

  // Ordered error flags are handled outside the parser (see above); the
  // options are still declared below so they appear in --help.
  ErrorSpec cli_error;
  const bool is_correct = !args.empty() && args.front() == "correct";
  if (is_correct) {
    std::string err;
    if (!extract_error_flags(args, cli_error, err)) {
      std::cerr << "correct: " << err << "\n";
      return kExitUsage;
    }
  }

  CLI::App app{"Ancilla-based discrimination and automated correction of "
               "generalized Bell states (bit flips + arbitrary phase errors)"};
  app.set_version_flag("--version", "gbsec 1.0.0");
  app.require_subcommand(1);
  const double tol_default = default_tolerance();

  std::string out_path;
  std::string format_name = "text";
  std::string mode_name = "full";

  // table
  auto* table = app.add_subcommand("table", "Signature table computed by live simulation");
  TableOptions table_opt;
  table->add_option("--n", table_opt.n, "Qubit count")->default_val(2);
  table->add_option("--format", format_name, "text|json|csv")->default_val("text");
  table->add_option("--out", out_path, "Write the report to a file instead of stdout");

  // correct
  auto* correct = app.add_subcommand("correct", "Run one full protocol cycle on a labeled GBS");
  CorrectOptions correct_opt;
  correct->add_option("label", correct_opt.label, "State label n:x:+ or n:x:-")->required();
  correct->add_option("--flip", "Inject a bit flip on the given qubit (repeatable, ordered)");
  correct->add_option("--rot", "Inject a phase rotation qubit:radians (repeatable, ordered)");
  correct->add_option("--mode", mode_name, "full|discrete")->default_val("full");
  correct->add_flag("--batch-parity", "Debug: read all parities before any flip (breaks cases)");
  correct->add_option("--seed", correct_opt.seed, "Measurement RNG seed")->default_val(0);
  correct->add_option("--tolerance", correct_opt.tolerance, "Pass threshold on 1 - fidelity")
      ->default_val(tol_default);
  correct->add_option("--format", format_name, "text|json|csv")->default_val("text");
  correct->add_option("--out", out_path, "Write the report to a file instead of stdout");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Verification sweep over labels and error patterns");
  SweepOptions sweep_opt;
  std::string n_range = "2..4";
  std::string deltas_text;
  int sampled = 0;
  sweep->add_option("--n", n_range, "Qubit range A..B or single N")->default_val("2..4");
  auto* exhaustive = sweep->add_flag("--exhaustive", "All flip subsets per label (n <= 12)");
  auto* sampled_opt =
      sweep->add_option("--sampled", sampled, "Random cases per n instead of exhaustive");
  exhaustive->excludes(sampled_opt);
  sweep->add_option("--deltas", deltas_text,
                    "Comma-separated phase angles (default 0, pi/7, 2pi/3, pi)");
  sweep->add_option("--mode", mode_name, "full|discrete")->default_val("full");
  sweep->add_flag("--batch-parity", "Debug: read all parities before any flip (breaks cases)");
  sweep->add_option("--seed", sweep_opt.config.seed, "Sweep RNG seed")->default_val(0);
  sweep->add_option("--tolerance", sweep_opt.config.tolerance, "Pass threshold on 1 - fidelity")
      ->default_val(tol_default);
  sweep->add_option("--threads", sweep_opt.config.threads, "Worker count (0 = hardware)")
      ->default_val(0);
  sweep->add_option("--format", format_name, "text|json|csv")->default_val("text");
  sweep->add_option("--out", out_path, "Write the report to a file instead of stdout");

  // trace
  auto* trace = app.add_subcommand("trace", "Export the protocol circuits as a JSON gate list");
  TraceOptions trace_opt;
  trace->add_option("label", trace_opt.label, "State label n:x:+ or n:x:-")->required();
  trace->add_option("--part", trace_opt.part, "1 = discrimination, 2 = correction (default both)")
      ->default_val(0);
  trace->add_option("--step", trace_opt.step, "Restrict part 2 to one step (1, 2 or 3)")
      ->default_val(0);
  trace->add_option("--mode", mode_name, "full|discrete")->default_val("full");
  trace->add_option("--out", out_path, "Write the gate list to a file instead of stdout");

  // Rebuild an argv view for CLI11.
  std::vector<const char*> cargs;
  cargs.push_back("gbsec");
  for (const auto& a : args) cargs.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(cargs.size()), cargs.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\nRun with --help for usage.\n";
    return kExitUsage;
  }

  std::ofstream out_file;
  std::ostream* out = &std::cout;
  if (!out_path.empty()) {
    out_file.open(out_path);
    if (!out_file) {
      std::cerr << "cannot open --out file '" << out_path << "'\n";
      return kExitUsage;
    }
    out = &out_file;
  }

  OutputFormat format = OutputFormat::text;
  if (!parse_format(format_name, format)) {
    std::cerr << "--format must be text, json or csv\n";
    return kExitUsage;
  }
  CorrectionMode mode = CorrectionMode::full;
  if (mode_name == "discrete") {
    mode = CorrectionMode::discrete;
  } else if (mode_name != "full") {
    std::cerr << "--mode must be full or discrete\n";
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(table)) {
      table_opt.format = format;
      return cmd_table(table_opt, *out, std::cerr);
    }
    if (app.got_subcommand(correct)) {
      correct_opt.error = cli_error;
      correct_opt.mode = mode;
      correct_opt.format = format;
      correct_opt.order = correct->count("--batch-parity") > 0 ? ParityOrder::batch
                                                               : ParityOrder::sequential;
      return cmd_correct(correct_opt, *out, std::cerr);
    }
    if (app.got_subcommand(sweep)) {
      if (!parse_n_range(n_range, sweep_opt.config.n_lo, sweep_opt.config.n_hi)) {
        std::cerr << "sweep: bad --n range '" << n_range << "'\n";
        return kExitUsage;
      }
      if (!deltas_text.empty() && !parse_deltas(deltas_text, sweep_opt.config.deltas)) {
        std::cerr << "sweep: bad --deltas list '" << deltas_text << "'\n";
        return kExitUsage;
      }
      sweep_opt.config.exhaustive = sampled_opt->count() == 0;
      sweep_opt.config.samples = sampled;
      sweep_opt.config.mode = mode;
      sweep_opt.config.order = sweep->count("--batch-parity") > 0 ? ParityOrder::batch
                                                                  : ParityOrder::sequential;
      sweep_opt.format = format;
      return cmd_sweep(sweep_opt, *out, std::cerr);
    }
    if (app.got_subcommand(trace)) {
      trace_opt.mode = mode;
      return cmd_trace(trace_opt, *out, std::cerr);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
