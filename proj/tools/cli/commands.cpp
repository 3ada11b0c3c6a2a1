// Copyright 2026 The coopgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "cli/numfmt.hpp"
#include "cli/svg_plot.hpp"
#include "coopgame/models.hpp"
#include "coopgame/version.hpp"

namespace coopgame::cli {
namespace {

constexpr double kStrictMargin = 1e-12;

double parse_number(const std::string& text, const char* what) {
  char* end = nullptr;
  const double x = std::strtod(text.c_str(), &end);
  if (end != text.c_str() + text.size() || text.empty() || !std::isfinite(x)) {
    throw DomainError(std::string(what) + ": expected a finite number, got '" +
                      text + "'");
  }
  return x;
}

std::pair<double, double> parse_pair(const std::string& text, char sep,
                                     const char* what) {
  const auto pos = text.find(sep);
  if (pos == std::string::npos) {
    throw DomainError(std::string(what) + ": expected two values separated by '" +
                      std::string(1, sep) + "'");
  }
  return {parse_number(text.substr(0, pos), what),
          parse_number(text.substr(pos + 1), what)};
}

std::vector<std::string> policy_labels() {
  return {models::kPolicyLabels.begin(), models::kPolicyLabels.end()};
}

void write_output(const std::string& content, const std::string& path,
                  std::ostream& fallback) {
  if (path.empty()) {
    fallback << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot open output file '" + path + "'");
  out << content;
}

void check_sweep_range(const SweepRange& r, const char* name) {
  if (!(r.lo <= r.hi)) {
    throw DomainError(std::string(name) + " range: lo must not exceed hi");
  }
  if (!(1.0 + kStrictMargin < r.lo) || !(r.hi + kStrictMargin < 2.0)) {
    throw DomainError(std::string(name) +
                      " range must lie strictly inside (1, 2)");
  }
}

}  // namespace

SolveReport solve_game(const GameSpec& spec, const SolveOptions& options) {
  const Bimatrix game = spec.to_bimatrix();
  SolveReport report;
  report.version = std::string(kVersion);
  report.method = options.method;
  report.game = spec;

  const bool all = options.method == "all";
  if (all || options.method == "nash") report.nash = pure_nash(game);
  if (all || options.method == "tu") report.tu = tu_solution(game);
  if (all || options.method == "ntu-nash") {
    std::optional<PayoffPoint> threat = options.threat;
    if (!threat && spec.threat) {
      threat = PayoffPoint{(*spec.threat)[0], (*spec.threat)[1]};
    }
    report.ntu = ntu_nash(game, threat);
  }
  if (all || options.method == "ntu-lambda") {
    report.lambda = lambda_transfer(game, options.lambda);
  }
  return report;
}

void run_sweep(const SweepRange& alpha, const SweepRange& beta, int steps,
               std::ostream& out) {
  if (steps < 1) throw DomainError("sweep: steps must be at least 1");
  check_sweep_range(alpha, "alpha");
  check_sweep_range(beta, "beta");

  out << "alpha,beta,case_tag,solution_u,solution_v,disagreement_u,"
         "lambda_star,max_abs_deviation\n";
  auto grid_value = [&](const SweepRange& r, int k) {
    return steps == 1 ? r.lo : r.lo + (r.hi - r.lo) * k / (steps - 1);
  };
  for (int i = 0; i < steps; ++i) {
    for (int j = 0; j < steps; ++j) {
      const models::NormalizedParams params{grid_value(alpha, i),
                                            grid_value(beta, j)};
      const models::ClosedFormPrediction expected = models::closed_form(params);
      const Bimatrix game = models::normalized_game(params);
      const TuSolution tu = tu_solution(game);
      const NtuSolution ntu = ntu_nash(game);
      const LambdaSolution lam = lambda_transfer(game);

      double dev = 0.0;
      auto track = [&dev](double a, double b) {
        dev = std::max(dev, std::abs(a - b));
      };
      track(tu.phi.u, expected.tu_phi.u);
      track(tu.phi.v, expected.tu_phi.v);
      track(ntu.point.u, expected.ntu_point.u);
      track(ntu.point.v, expected.ntu_point.v);
      track(lam.point.u, expected.lambda_point.u);
      track(lam.point.v, expected.lambda_point.v);
      track(tu.disagreement.u, expected.disagreement.u);
      track(tu.disagreement.v, expected.disagreement.v);
      track(tu.sigma, expected.sigma);
      track(tu.delta, expected.delta);
      track(lam.lambda_star, expected.lambda_star);

      out << fmt_sig(params.alpha) << ',' << fmt_sig(params.beta) << ','
          << models::to_string(expected.case_tag) << ','
          << fmt_sig(ntu.point.u) << ',' << fmt_sig(ntu.point.v) << ','
          << fmt_sig(tu.disagreement.u) << ',' << fmt_sig(lam.lambda_star)
          << ',' << fmt_sig(dev) << '\n';
    }
  }
}

std::string render_game_svg(const GameSpec& spec) {
  const Bimatrix game = spec.to_bimatrix();
  const FeasibleSet fs = feasible_set_of(game);
  const TuSolution tu = tu_solution(game);
  std::optional<PayoffPoint> threat;
  if (spec.threat) threat = PayoffPoint{(*spec.threat)[0], (*spec.threat)[1]};
  const NtuSolution ntu = ntu_nash(game, threat);
  const LambdaSolution lam = lambda_transfer(game);
  return render_svg(make_scene(spec.name, fs, tu, ntu, lam));
}

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"Non-cooperative and cooperative solutions of two-player "
               "bimatrix games"};
  app.require_subcommand(1);

  // solve
  std::string solve_path;
  std::string method = "all";
  std::string threat_text;
  std::string bracket_text;
  double tol = 1e-9;
  CLI::App* solve = app.add_subcommand("solve", "Solve a game file, JSON report to stdout");
  solve->add_option("file", solve_path, "GameSpec JSON file")->required();
  solve->add_option("--method", method, "nash|tu|ntu-nash|ntu-lambda|all")
      ->check(CLI::IsMember({"nash", "tu", "ntu-nash", "ntu-lambda", "all"}));
  solve->add_option("--threat", threat_text, "Bargaining threat point u,v");
  solve->add_option("--lambda-bracket", bracket_text, "Lambda bracket lo,hi");
  solve->add_option("--tol", tol, "Lambda transfer tolerance");

  // model
  std::string kind;
  std::string model_out;
  double opt_B = 0, opt_c = 0, opt_b = 0, opt_C = 0, opt_alpha = 0, opt_beta = 0;
  CLI::App* model = app.add_subcommand("model", "Emit a bundled game as a GameSpec file");
  model->add_option("kind", kind, "basic|general|normalized")
      ->required()
      ->check(CLI::IsMember({"basic", "general", "normalized"}));
  CLI::Option* oB = model->add_option("--B", opt_B, "Public benefit of preemption");
  CLI::Option* oc = model->add_option("--c", opt_c, "Private cost of preemption");
  CLI::Option* ob = model->add_option("--b", opt_b, "Private benefit of deterrence");
  CLI::Option* oC = model->add_option("--C", opt_C, "Public cost of deterrence");
  CLI::Option* oalpha = model->add_option("--alpha", opt_alpha, "Normalized preemption cost");
  CLI::Option* obeta = model->add_option("--beta", opt_beta, "Normalized deterrence benefit");
  model->add_option("-o,--output", model_out, "Output file (default stdout)");

  // sweep
  std::string alpha_text, beta_text;
  int steps = 0;
  CLI::App* sweep = app.add_subcommand("sweep", "Grid-check the normalized family, CSV to stdout");
  sweep->add_option("--alpha", alpha_text, "alpha range lo:hi")->required();
  sweep->add_option("--beta", beta_text, "beta range lo:hi")->required();
  sweep->add_option("--steps", steps, "Grid points per axis")->required();

  // plot
  std::string plot_path, plot_out;
  CLI::App* plot = app.add_subcommand("plot", "Render a game file as an SVG chart");
  plot->add_option("file", plot_path, "GameSpec JSON file")->required();
  plot->add_option("-o,--output", plot_out, "Output SVG file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (solve->parsed()) {
      SolveOptions options;
      options.method = method;
      if (!threat_text.empty()) {
        const auto [u, v] = parse_pair(threat_text, ',', "--threat");
        options.threat = PayoffPoint{u, v};
      }
      if (!bracket_text.empty()) {
        const auto [lo, hi] = parse_pair(bracket_text, ',', "--lambda-bracket");
        options.lambda.bracket_lo = lo;
        options.lambda.bracket_hi = hi;
      }
      options.lambda.tol = tol;
      const GameSpec spec = load_game_spec(solve_path);
      std::cout << render_report(solve_game(spec, options));
    } else if (model->parsed()) {
      GameSpec spec;
      if (kind == "basic") {
        spec = game_spec_from_bimatrix("counterterrorism-basic",
                                       models::basic_game(), policy_labels(),
                                       policy_labels());
      } else if (kind == "general") {
        if (!*oB || !*oc || !*ob || !*oC) {
          throw DomainError("model general requires --B, --c, --b and --C");
        }
        spec = game_spec_from_bimatrix(
            "counterterrorism-general",
            models::general_game({opt_B, opt_c, opt_b, opt_C}),
            policy_labels(), policy_labels());
      } else {
        if (!*oalpha || !*obeta) {
          throw DomainError("model normalized requires --alpha and --beta");
        }
        spec = game_spec_from_bimatrix(
            "counterterrorism-normalized",
            models::normalized_game({opt_alpha, opt_beta}), policy_labels(),
            policy_labels());
      }
      write_output(to_json(spec).dump(2) + "\n", model_out, std::cout);
    } else if (sweep->parsed()) {
      const auto [alo, ahi] = parse_pair(alpha_text, ':', "--alpha");
      const auto [blo, bhi] = parse_pair(beta_text, ':', "--beta");
      run_sweep(SweepRange{alo, ahi}, SweepRange{blo, bhi}, steps, std::cout);
    } else if (plot->parsed()) {
      const GameSpec spec = load_game_spec(plot_path);
      write_output(render_game_svg(spec), plot_out, std::cout);
    }
    return kExitOk;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const ConstraintError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConstraint;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConstraint;
  } catch (const ConvergenceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNoConvergence;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace coopgame::cli
