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

#ifndef COOPGAME_CLI_COMMANDS_HPP_
#define COOPGAME_CLI_COMMANDS_HPP_

#include <optional>
#include <ostream>
#include <string>

#include "cli/gamespec.hpp"
#include "cli/report.hpp"

namespace coopgame::cli {

// Exit-code contract: 0 success, 2 parse error, 3 constraint/domain error,
// 4 solver non-convergence.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitConstraint = 3;
inline constexpr int kExitNoConvergence = 4;

struct SolveOptions {
  std::string method = "all";  // nash | tu | ntu-nash | ntu-lambda | all
  std::optional<PayoffPoint> threat;  // overrides any threat in the file
  LambdaOptions lambda;
};

// Core of `solve`: runs the requested methods on a parsed game.
SolveReport solve_game(const GameSpec& spec, const SolveOptions& options);

struct SweepRange {
  double lo = 0.0;
  double hi = 0.0;
};

// Core of `sweep`: CSV over an (alpha, beta) grid of normalized games, one
// row per grid point with the deviation from the closed-form prediction.
void run_sweep(const SweepRange& alpha, const SweepRange& beta, int steps,
               std::ostream& out);

// Core of `plot`: SVG of the feasible set, frontier, threat point, the three
// solutions and the Nash-product level curve.
std::string render_game_svg(const GameSpec& spec);

// Full command-line entry point; maps thrown errors onto the exit codes.
int run_cli(int argc, const char* const* argv);

}  // namespace coopgame::cli

#endif  // COOPGAME_CLI_COMMANDS_HPP_
