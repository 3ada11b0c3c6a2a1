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

#ifndef COOPGAME_CLI_REPORT_HPP_
#define COOPGAME_CLI_REPORT_HPP_

#include <optional>
#include <string>
#include <vector>

#include "cli/gamespec.hpp"
#include "coopgame/coop.hpp"
#include "json.hpp"

namespace coopgame::cli {

// Machine-readable result of a solve run; round-trips losslessly through its
// JSON form (the emitted text re-parses and re-emits byte-identically).
struct SolveReport {
  std::string version;
  std::string method;
  GameSpec game;
  std::optional<std::vector<PureEquilibrium>> nash;
  std::optional<TuSolution> tu;
  std::optional<NtuSolution> ntu;
  std::optional<LambdaSolution> lambda;
};

nlohmann::json to_json(const SolveReport& report);
SolveReport report_from_json(const nlohmann::json& j);

// Pretty-printed JSON with sorted keys and a trailing newline.
std::string render_report(const SolveReport& report);

}  // namespace coopgame::cli

#endif  // COOPGAME_CLI_REPORT_HPP_
