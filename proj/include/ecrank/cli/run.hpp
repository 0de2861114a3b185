// Copyright 2026 The ecrank Authors
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

#include <optional>
#include <string>
#include <vector>

#include "ecrank/arith/bigfloat.hpp"
#include "ecrank/io/json.hpp"

namespace ecrank {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kReportSchema = "ecrank.report/1";

enum ExitCode { kExitOk = 0, kExitError = 1, kExitNotFound = 2 };

/// Parameters shared by all subcommands; each command reads the ones it needs.
struct RunConfig {
  std::string command;
  /// "a=<p/q>,b=<p/q>".
  std::string curve;
  long precision = kDefaultPrecision;
  unsigned torsion_bound = kTorsionBoundQuadratic;
  std::size_t count = 5;
  /// Empty: the least positive integer above the largest real root.
  std::string start;
  std::string stride = "1";
  std::size_t regulator_points = 6;
  int n = 8;
  /// Largest n tried by the pencil command; 0 disables escalation.
  int escalate_n = 0;
  int height_bound = 50;
  /// "x,y" rational point for pencil and monodromy.
  std::string point;
  /// Comma-separated integer vector: a pencil solution, for monodromy.
  std::string solution;
  /// Comma-separated rational coefficients of f = u(x) + v(x) y.
  std::string u;
  std::string v;
  /// "x1,y1;x2,y2;..." for symmetrize.
  std::string points;
  bool exhaustive = false;
  std::string out;
  /// Report file for verify.
  std::string report;
};

/// Checks ranges and the fields the command needs; throws InvalidArgument.
void validate(const RunConfig& c);

struct Report {
  Json body;
  int exit_code = kExitOk;
  /// Human-readable lines.
  std::string summary;
};

/// Runs one command. Errors inside the pipeline become exit code 1 with an
/// "error" object in the report; "not found" outcomes exit with 2.
Report run(const RunConfig& config);

struct VerifyOutcome {
  bool pass = false;
  /// First violated layer, empty on pass.
  std::string layer;
  std::string detail;
};

/// Re-derives every layer of a report produced by run().
VerifyOutcome verify_report(const Json& report);
VerifyOutcome verify_file(const std::string& path);

/// Command-line entry: parses flags (and an optional --config key=value file
/// with the same keys; flags win), runs, writes JSON to --out or stdout and
/// the summary to stderr.
int cli_main(int argc, char** argv);

}  // namespace ecrank
