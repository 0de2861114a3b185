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

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "ecrank/cli/run.hpp"

namespace ecrank {

int cli_main(int argc, char** argv) {
  CLI::App app{"Independent points on elliptic curves over quadratic fields", "ecrank"};
  app.set_version_flag("--version", kToolVersion);
  app.set_config("--config", "", "key=value file with the same keys as the flags; flags win");
  app.allow_config_extras(CLI::config_extras_mode::error);
  // Values such as a=0,b=2 are scalars, not arrays.
  app.get_config_formatter_base()->arrayDelimiter(';');
  app.require_subcommand(1);

  RunConfig c;
  app.add_option("--curve", c.curve, "y^2 = x^3 + a x + b as a=<p/q>,b=<p/q>");
  app.add_option("--precision", c.precision, "working precision in bits")->capture_default_str();
  app.add_option("--torsion-bound", c.torsion_bound, "largest torsion order excluded")->capture_default_str();
  app.add_option("--count", c.count, "x-candidates to scan")->capture_default_str();
  app.add_option("--start", c.start, "first x-candidate (default: above the largest real root)");
  app.add_option("--stride", c.stride, "step between x-candidates")->capture_default_str();
  app.add_option("--regulator-points", c.regulator_points, "points in the regulator check")->capture_default_str();
  app.add_option("--n", c.n, "degree")->capture_default_str();
  app.add_option("--escalate-n", c.escalate_n, "largest n tried by pencil");
  app.add_option("--height-bound", c.height_bound, "max-norm bound of the isotropic search")->capture_default_str();
  app.add_option("--point", c.point, "rational point x,y");
  app.add_option("--solution", c.solution, "pencil solution vector, comma-separated");
  app.add_option("--u", c.u, "coefficients of u(x), low degree first");
  app.add_option("--v", c.v, "coefficients of v(x), low degree first");
  app.add_option("--points", c.points, "points x1,y1;x2,y2;...");
  app.add_flag("--exhaustive", c.exhaustive, "group: every subgroup, not one per conjugacy class");
  app.add_option("--out", c.out, "write the JSON report here instead of stdout");

  const std::pair<const char*, const char*> commands[] = {
      {"points", "scan x-candidates and certify independence"},
      {"group", "transitive subgroups of S_n with a transposition"},
      {"pencil", "search the quadratic pencil for a degree-n function"},
      {"monodromy", "monodromy of f = u + v y by path lifting"},
      {"symmetrize", "function with a given divisor of poles and its symmetrized point"},
      {"verify", "re-check a report"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help)->fallthrough();
    sub->callback([&c, n = std::string(name)] { c.command = n; });
    if (std::string(name) == "verify") sub->add_option("report", c.report, "report file")->required();
  }

  if (argc <= 1) {
    std::cerr << app.help();
    return kExitError;
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  Report rep = run(c);
  std::string text = rep.body.dump(2) + "\n";
  if (c.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(c.out);
    if (!(out << text)) {
      std::cerr << "error: cannot write " << c.out << "\n";
      return kExitError;
    }
  }
  std::cerr << rep.summary;
  return rep.exit_code;
}

}  // namespace ecrank
